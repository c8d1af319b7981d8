#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qadd/errors.hpp"
#include "qadd/gates.hpp"

namespace qadd::sim {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Hard cap on register width for dense simulation.
inline constexpr int kMaxQubits = 12;

// Pure n-qubit state. Basis index convention: qubit 1 is the most significant
// bit, so |b1 b2 b3> lives at index 4*b1 + 2*b2 + b3.
struct StateVector {
  int n_qubits = 0;
  Vec amps;

  std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }
};

// Mixed n-qubit state as a dense Hermitian matrix with unit trace.
struct DensityMatrix {
  int n_qubits = 0;
  Mat rho;

  std::size_t dim() const { return static_cast<std::size_t>(rho.rows()); }
};

// Probabilities over computational-basis outcomes of a list of measured
// qubits. Outcome index i encodes the measured qubits' bits in listed order,
// first qubit most significant; label(i) renders it as a bitstring.
struct Distribution {
  int n_bits = 0;
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  std::string label(std::size_t index) const;
};

// Counted measurement outcomes; bin indexing matches Distribution.
struct ShotHistogram {
  int n_bits = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_shots = 0;

  std::string label(std::size_t index) const;
  Distribution frequencies() const;
};

// A set of Kraus operators {K_k}, all of dimension 2^k for k target qubits,
// satisfying the completeness relation sum_k K†K = I.
struct KrausChannel {
  std::vector<Mat> operators;

  std::size_t dim() const {
    return operators.empty() ? 0
                             : static_cast<std::size_t>(operators[0].rows());
  }
};

// Deterministic 53-bit uniform and Box-Muller gaussian on top of
// std::mt19937_64. The engine is standardized, but the standard library's
// distributions are implementation-defined; rolling them here keeps seeded
// outputs byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  double uniform();                      // in [0, 1)
  double gaussian(double sigma);         // mean 0
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stable mixing of seed material into a child-stream seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// --- state construction ------------------------------------------------------

// |0...0> on n qubits; 1 <= n <= 12.
StateVector zero_state(int n_qubits);

// Tensor product of (cos θ_i, sin θ_i) single-qubit states, in given order.
StateVector product_state(const std::vector<double>& angles);

// Wraps raw amplitudes (must be normalized within 1e-10).
StateVector make_state(int n_qubits, Vec amplitudes);

// --- evolution ---------------------------------------------------------------

// Applies a 2^k x 2^k unitary to k target qubits (1-based, first target =
// most significant bit of the matrix index). Throws unitarity_error if
// U†U != I within 1e-10, index_error for bad targets.
StateVector apply_gate(const StateVector& state, const Mat& unitary,
                       const std::vector<int>& targets);

// Runs a circuit front to back (gates[0] first).
StateVector run_circuit(const gates::Circuit& c, const StateVector& input);

DensityMatrix to_density(const StateVector& state);

// ρ -> U ρ U† on the given targets (no unitarity requirement; also used for
// Kraus terms internally).
DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& unitary,
                            const std::vector<int>& targets);

DensityMatrix run_circuit_density(const gates::Circuit& c,
                                  const DensityMatrix& input);

// ρ -> Σ_k K ρ K† on the given targets; validates completeness (1e-10).
DensityMatrix apply_channel(const DensityMatrix& rho,
                            const KrausChannel& channel,
                            const std::vector<int>& targets);

// Reduced state over `keep` (order preserved: keep[0] becomes the most
// significant bit of the result).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

// --- measurement ---------------------------------------------------------------

Distribution measurement_distribution(const StateVector& state,
                                      const std::vector<int>& qubits);
Distribution measurement_distribution(const DensityMatrix& rho,
                                      const std::vector<int>& qubits);

// Multinomial sampling, deterministic for a fixed seed.
ShotHistogram sample_shots(const Distribution& dist, std::uint64_t shots,
                           std::uint64_t seed);

// --- validation helpers -------------------------------------------------------

void check_state(const StateVector& state);        // norm within 1e-10
void check_density(const DensityMatrix& rho);      // Hermitian/trace/PSD
void check_channel(const KrausChannel& channel);   // completeness 1e-10

}  // namespace qadd::sim
