#pragma once

#include <cstdint>
#include <optional>

#include "qadd/sim.hpp"

namespace qadd::fid {

enum class Method { quantum_exact, classical_exact, classical_shots };

struct FidelityReport {
  double value = 0.0;
  Method method = Method::classical_exact;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
};

// <target| rho |target>; overlap of a mixed state with a pure target.
double quantum_fidelity(const sim::DensityMatrix& rho,
                        const sim::StateVector& target);

// Bhattacharyya coefficient sum_i sqrt(p_i q_i). Distributions must cover the
// same outcome space (equal n_bits); zero-probability bins contribute zero.
double classical_fidelity(const sim::Distribution& p,
                          const sim::Distribution& q);

// classical_fidelity of the ideal distribution against the histogram's
// empirical frequencies, with provenance recorded.
FidelityReport shot_fidelity(const sim::Distribution& p_ideal,
                             const sim::ShotHistogram& hist,
                             std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace qadd::fid
