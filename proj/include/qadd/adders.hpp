#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qadd/gates.hpp"
#include "qadd/noise.hpp"
#include "qadd/sim.hpp"

namespace qadd::adders {

using gates::Circuit;
using gates::Mat;
using gates::Vec;

// A 3-qubit adding circuit: qubits 1,2 carry the addends, qubit 3 starts in
// |0> and carries the output.
struct AdderSpec {
  Circuit circuit;
  std::string label;
};

// Result of trying to push a controlled-U gate through encode/decode onto a
// single-qubit gate on the output qubit.
struct GateEncodingResult {
  bool solvable = false;
  Mat u_tilde;          // diag(1, a) when solvable
  sim::cx a = 1.0;      // unit-modulus phase when solvable
  std::string reason;   // why not, when unsolvable
};

struct RoundtripResult {
  sim::DensityMatrix state;  // full 3-qubit state after decode
  double fidelity = 0.0;     // data-register overlap with the ideal output
};

struct GridFidelity {
  double average = 0.0;
  double minimum = 1.0;
  std::pair<double, double> min_input{0.0, 0.0};
};

enum class ExperimentArm { direct, encoded };

enum class PauliBasis { X, Y, Z };

// The exact basis adder: execution order
// CNOT(1,2), CH(2,3), CNOT(1,2), CNOT(!1,2), CNOT(!1,3), CCNOT(2,!3 -> 1),
// CNOT(!1,3), CNOT(!1,2).
// Adds all computational basis inputs perfectly: |000>->|000>, |010>->|01+>,
// |100>->|10+>, |110>->|001>, |001>->|110>, |011>->|01->, |101>->|10->,
// |111>->|111>, all with phase +1.
AdderSpec basis_adder();

// Normalized sum (ψ1+ψ2)/N of two single-qubit states; throws
// degenerate_sum_error when the sum is numerically zero.
sim::StateVector ideal_sum(const sim::StateVector& psi1,
                           const sim::StateVector& psi2);

// Overlap of the adder's output qubit with the ideal sum state:
// F = <Ψ_id| Tr_12(U ρ_in U†) |Ψ_id>, ρ_in = |ψ1 ψ2 0><...|, where
// ψ_i = (cos θ_i, sin θ_i). With a noise model, execution uses noisy_run.
double adder_fidelity(const AdderSpec& adder, double theta1, double theta2,
                      const noise::NoiseModel* model = nullptr);

// Mean/min of adder_fidelity over a grid of (θ1, θ2) pairs. This is also the
// genetic-search fitness of a candidate circuit.
GridFidelity grid_average_fidelity(
    const Circuit& circuit, const std::vector<std::pair<double, double>>& grid,
    const noise::NoiseModel* model = nullptr);

// encode -> optional middle gate on qubit 3 -> decode (dagger of encode).
// Reported fidelity compares the data-register (qubits 1,2) reduced state
// with the ideal output: the input itself without a middle gate, otherwise
// controlled-middle (control qubit 1, target qubit 2) applied to the input.
RoundtripResult autoencode_roundtrip(const AdderSpec& adder,
                                     const sim::StateVector& input2q,
                                     const Mat* middle = nullptr,
                                     const noise::NoiseModel* model = nullptr);

// Decides whether controlled-u (u acting on qubit 2, control qubit 1) can be
// replaced exactly by a single-qubit gate on the output qubit between encode
// and decode. Solvable iff u is diagonal with u[0][0] = 1 after global-phase
// normalization; the candidate is verified against the four defining
// identities on |000> and |110> to 1e-9.
GateEncodingResult encode_gate(const Mat& u);

// Same decision for a full 4x4 two-qubit gate: must have the controlled
// block form I⊕u (up to global phase), then u is tested as above.
GateEncodingResult encode_gate_controlled(const Mat& cu);

// Parses a gate spec for the encoder: a named single-qubit gate ("Z", "T"),
// a named controlled gate ("CZ", "CS", "CSDG", "CT", "CTDG", "CNOT", "CH"),
// "SWAP", or "U1(<angle>)" / "CU1(<angle>)".
GateEncodingResult encode_gate_named(const std::string& spec);

struct ExperimentOptions {
  const noise::NoiseModel* model = nullptr;
  std::uint64_t shots = 0;  // 0 = exact distribution
  std::uint64_t seed = 0;
};

// Runs encode -> middle -> decode with the middle being either the lowered
// two-qubit CZ on the data register (direct) or Z on the output qubit
// (encoded); measures qubits 1,2 in the given Pauli bases and returns the
// Bhattacharyya fidelity against the ideal distribution of CZ|input>.
double gate_encoding_experiment(const AdderSpec& adder, ExperimentArm arm,
                                const sim::StateVector& input2q,
                                PauliBasis basis1, PauliBasis basis2,
                                const ExperimentOptions& opts = {});

// Pauli-basis change applied to one qubit before computational readout:
// X -> H, Y -> S† then H, Z -> nothing.
std::vector<gates::GateApplication> basis_change_gates(PauliBasis basis,
                                                       int qubit);

}  // namespace qadd::adders
