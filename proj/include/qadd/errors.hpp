#pragma once

#include <stdexcept>
#include <string>

namespace qadd {

// Base class for every error this library throws on purpose. CLI maps these
// to exit code 3 (bad input) except internal_error, which maps to 4.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A dimension, qubit count, or register size is out of the supported range.
class size_error : public error {
 public:
  explicit size_error(const std::string& msg) : error(msg) {}
};

// A qubit index is out of range, duplicated, or otherwise malformed.
class index_error : public error {
 public:
  explicit index_error(const std::string& msg) : error(msg) {}
};

// A matrix expected to be unitary is not (U†U deviates from I).
class unitarity_error : public error {
 public:
  explicit unitarity_error(const std::string& msg) : error(msg) {}
};

// A Kraus operator set does not satisfy the completeness relation.
class completeness_error : public error {
 public:
  explicit completeness_error(const std::string& msg) : error(msg) {}
};

// Two states sum to (numerically) zero, so the normalized sum is undefined.
class degenerate_sum_error : public error {
 public:
  explicit degenerate_sum_error(const std::string& msg) : error(msg) {}
};

// Circuit-text input failed to parse; carries 1-based line/column.
class parse_error : public error {
 public:
  parse_error(int line, int column, const std::string& msg)
      : error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A circuit contains a gate the canonical text form cannot express.
class serialization_error : public error {
 public:
  explicit serialization_error(const std::string& msg) : error(msg) {}
};

// A configuration file or value is invalid.
class config_error : public error {
 public:
  explicit config_error(const std::string& msg) : error(msg) {}
};

// A structural constraint was violated (e.g. genome CNOT budget).
class constraint_error : public error {
 public:
  explicit constraint_error(const std::string& msg) : error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad user input.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace qadd
