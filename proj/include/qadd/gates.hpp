#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qadd/errors.hpp"

namespace qadd::gates {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Gate vocabulary. Single-qubit gates take one target; controlled gates store
// their controls separately so polarity (normal vs negated) stays explicit.
enum class GateId {
  I,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  RX,
  RY,
  RZ,
  U1,
  U3,
  CNOT,
  CZ,
  CH,
  CU1,
  CCNOT,
  SWAP,
};

struct ControlSpec {
  int qubit = 0;
  bool negated = false;  // negated controls trigger on |0> instead of |1>

  bool operator==(const ControlSpec&) const = default;
};

// One gate instance inside a circuit. Qubit indices are 1-based throughout
// (qubit 1 is the most significant bit of a basis index). `params` holds the
// gate's angles in radians; its length must match params_required(id).
struct GateApplication {
  GateId id = GateId::I;
  std::vector<double> params;
  std::vector<ControlSpec> controls;
  std::vector<int> targets;

  bool operator==(const GateApplication&) const = default;
};

// Ordered gate list; gates[0] acts on the state first.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateApplication> gates;
  std::string name;
};

enum class Axis { x, y, z };

// How CNOTs are tallied. `nominal` uses the fixed per-gate costs the bundled
// reference tables assume (CNOT 1, CCNOT 6, CZ/CU1 2, SWAP 3, CH 0, negated
// controls free); `transpiled` counts actual CNOTs in the lowered circuit.
enum class CnotConvention { nominal, transpiled };

// --- gate-name metadata -----------------------------------------------------

const std::string& gate_name(GateId id);
std::optional<GateId> gate_id_from_name(const std::string& name);
int params_required(GateId id);
int control_count(GateId id);
int target_count(GateId id);

// --- matrix constructors ----------------------------------------------------

// Generic single-qubit gate with three angles:
//   [[cos(θ/2), -e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(λ+φ)} cos(θ/2)]].
Mat u3(double theta, double phi, double lambda);

// Phase gate diag(1, e^{iθ}) = u3(0, 0, θ).
Mat u1(double theta);

// Rotation about a Pauli axis in the u3/u1 parametrization:
// x -> u3(θ,-π/2,π/2), y -> u3(θ,0,0), z -> u1(θ). The z case matches the
// standard R_z only up to a global phase e^{iθ/2}.
Mat rotation(Axis axis, double theta);

// Standard matrix for a fixed (non-parametrized) gate name; 2x2 for
// single-qubit gates, 4x4 for CNOT/CZ/CH/SWAP, 8x8 for CCNOT.
// Throws qadd::error for parametrized ids (use u1/u3/rotation) and unknown
// names in the string overload.
Mat named_gate(GateId id);
Mat named_gate(const std::string& name);

// Block 4x4 controlled gate from a single-qubit unitary: I⊕u for a normal
// control (triggers on |1>), u⊕I for a negated one. Control qubit is the
// more significant of the two.
Mat controlled(const Mat& u, bool negated = false);

// The 2^k x 2^k matrix of a gate over its target qubits only (controls
// excluded), with params substituted.
Mat base_matrix(const GateApplication& g);

// The full matrix of a gate over its operand list controls+targets (controls
// first, in stored order, as the most significant bits). Negated controls are
// folded in. This is what simulators apply.
Mat operand_matrix(const GateApplication& g);

// Operand list in the order operand_matrix uses: controls then targets.
std::vector<int> operand_qubits(const GateApplication& g);

// Validates index ranges, distinctness, arity, and param count for a gate
// inside an n-qubit register; throws index_error / qadd::error.
void validate_gate(const GateApplication& g, int n_qubits);

// --- circuit operations -----------------------------------------------------

// Reverses gate order and replaces each gate by its adjoint. Parametrized
// gates negate angles (u3(θ,φ,λ)† = u3(-θ,-λ,-φ)); S/T map to their named
// daggers; self-adjoint gates are unchanged.
Circuit dagger_circuit(const Circuit& c);
GateApplication dagger_gate(const GateApplication& g);

// Toffoli over {H, T, T†, CNOT}: the standard 15-gate, 6-CNOT network, equal
// to the 8x8 CCNOT matrix exactly (global phase +1). The free-standing
// overload uses controls 1,2 and target 3.
Circuit decompose_toffoli();
std::vector<GateApplication> lower_ccnot(const GateApplication& g);

// Controlled-Hadamard as RY(π/4)·CNOT·RY(-π/4) on the target: one CNOT,
// exact (phase +1).
Circuit decompose_ch();
std::vector<GateApplication> lower_ch(const GateApplication& g);

// Controlled-U1(θ) with two CNOTs:
// U1(θ/2) on control; CNOT; U1(-θ/2) on target; CNOT; U1(θ/2) on target.
// Exact (phase +1).
Circuit decompose_cu1(double theta);
std::vector<GateApplication> lower_cu1(const GateApplication& g);

// Lowers every gate to the {U1, U3, CNOT} basis with normal-polarity
// controls only. Negated controls are removed by conjugating with X (written
// as U3(π,0,π)). The result's unitary equals the input's up to global phase.
Circuit transpile(const Circuit& c);

// Expands composite gates (CCNOT, CH) into their decompositions but keeps
// all other gates (including negated-control CNOTs) as stored. This is the
// "physical gate sequence" noise attaches to under per-gate-lowered
// insertion.
std::vector<GateApplication> lower_composites(const Circuit& c);

// Dense 2^n x 2^n unitary of a circuit (product of embedded gate matrices).
// Only supported for n_qubits <= 8.
Mat circuit_unitary(const Circuit& c);

int cnot_count(const Circuit& c, CnotConvention convention);

// Distance between two equal-sized matrices after aligning global phase on
// the largest-magnitude entry of `a`; max |entry difference|.
double phase_aligned_distance(const Mat& a, const Mat& b);

// U†U deviation from the identity; used by unitarity checks.
double unitarity_defect(const Mat& u);

// --- convenience constructors (1-based qubit indices) -----------------------

GateApplication g1(GateId id, int target);
GateApplication g1p(GateId id, double angle, int target);
GateApplication gu3(double theta, double phi, double lambda, int target);
GateApplication gcnot(int control, int target, bool negated = false);
GateApplication gch(int control, int target);
GateApplication gcz(int control, int target);
GateApplication gcu1(double theta, int control, int target);
GateApplication gccnot(int c1, int c2, int target, bool neg1 = false,
                       bool neg2 = false);
GateApplication gswap(int a, int b);

}  // namespace qadd::gates
