#include "qadd/fid.hpp"

#include <algorithm>
#include <cmath>

namespace qadd::fid {

double quantum_fidelity(const sim::DensityMatrix& rho,
                        const sim::StateVector& target) {
  if (rho.n_qubits != target.n_qubits) {
    throw size_error("quantum_fidelity: " + std::to_string(rho.n_qubits) +
                     "-qubit state vs " + std::to_string(target.n_qubits) +
                     "-qubit target");
  }
  const std::complex<double> overlap =
      (target.amps.adjoint() * rho.rho * target.amps)(0, 0);
  // The quadratic form of a Hermitian matrix is real up to roundoff.
  return std::max(0.0, overlap.real());
}

double classical_fidelity(const sim::Distribution& p,
                          const sim::Distribution& q) {
  if (p.n_bits != q.n_bits || p.probs.size() != q.probs.size()) {
    throw size_error(
        "classical_fidelity: distributions cover different outcome spaces");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double a = std::max(0.0, p.probs[i]);
    const double b = std::max(0.0, q.probs[i]);
    sum += std::sqrt(a * b);
  }
  return sum;
}

FidelityReport shot_fidelity(const sim::Distribution& p_ideal,
                             const sim::ShotHistogram& hist,
                             std::optional<std::uint64_t> seed) {
  FidelityReport report;
  report.value = classical_fidelity(p_ideal, hist.frequencies());
  report.method = Method::classical_shots;
  report.shots = hist.total_shots;
  report.seed = seed;
  return report;
}

}  // namespace qadd::fid
