#pragma once

#include <string>

#include "qadd/gates.hpp"

namespace qadd::qct {

// Circuit text format (.qc):
//   QUBITS <n>            — required header, first statement
//   INDEXING <0|1>        — optional, before any gate; default 1
//   <GATE>[(<angles>)] <operand>...
// Operands are qubit indices; a `!` prefix marks a negated control and is
// only valid on control positions. Angles are decimal radians or `pi`,
// `-pi`, `pi/<int>`, `-pi/<int>`. `#` starts a comment. Lines are LF
// (CR tolerated on input).
//
// Example (the basis adder):
//   QUBITS 3
//   CNOT 1 2
//   CH 2 3
//   CNOT 1 2
//   CNOT !1 2
//   CNOT !1 3
//   CCNOT 2 !3 1
//   CNOT !1 3
//   CNOT !1 2

// Throws qadd::parse_error (with 1-based line/column) on malformed input.
gates::Circuit parse(const std::string& text);
gates::Circuit parse_file(const std::string& path);

// Canonical form: `QUBITS n` header, one statement per line, 1-based
// indices, angles printed with 12 significant digits (never pi forms),
// LF endings. Deterministic byte-for-byte for equal circuits. Throws
// serialization_error for gates outside the text vocabulary.
std::string serialize(const gates::Circuit& c);
void write_file(const std::string& path, const gates::Circuit& c,
                const std::string& leading_comment = "");

// Structural equality: same qubit count, same gate sequence (ids, operand
// order, polarities), parameters equal within param_tol (0 = bitwise).
bool structural_equal(const gates::Circuit& a, const gates::Circuit& b,
                      double param_tol = 0.0);

// Angle grammar shared with the CLI: decimal, `pi`, `-pi`, `pi/<int>`,
// `-pi/<int>`. Throws qadd::error on anything else.
double parse_angle(const std::string& token);

}  // namespace qadd::qct
