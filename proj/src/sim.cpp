#include "qadd/sim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qadd::sim {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr double kCompletenessTol = 1e-10;

std::size_t dim_for(int n_qubits) { return std::size_t{1} << n_qubits; }

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw size_error("qubit count must be in [1, " +
                     std::to_string(kMaxQubits) + "], got " +
                     std::to_string(n_qubits));
  }
}

// Bit position (from the least significant end) of 1-based qubit q in an
// n-qubit basis index; qubit 1 is the most significant bit.
int bit_pos(int qubit, int n_qubits) { return n_qubits - qubit; }

void check_targets(const std::vector<int>& targets, int n_qubits) {
  if (targets.empty()) throw index_error("empty target list");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 1 || targets[i] > n_qubits) {
      throw index_error("qubit index " + std::to_string(targets[i]) +
                        " out of range 1.." + std::to_string(n_qubits));
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw index_error("duplicate qubit index " +
                          std::to_string(targets[i]));
      }
    }
  }
}

// Applies an arbitrary 2^k x 2^k matrix to the target qubits of a raw
// amplitude vector. Gather/scatter over every assignment of the non-target
// bits; works for non-unitary matrices too (Kraus terms).
void apply_matrix_inplace(Vec& amps, const Mat& m,
                          const std::vector<int>& targets, int n_qubits) {
  const int k = static_cast<int>(targets.size());
  const std::size_t sub = std::size_t{1} << k;
  std::vector<std::size_t> masks(k);
  for (int i = 0; i < k; ++i) {
    // targets[0] is the most significant bit of the matrix index
    masks[i] = std::size_t{1} << bit_pos(targets[i], n_qubits);
  }
  std::size_t target_union = 0;
  for (const auto mask : masks) target_union |= mask;

  Vec gathered(sub), transformed(sub);
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_union) continue;  // enumerate non-target patterns once
    for (std::size_t j = 0; j < sub; ++j) {
      std::size_t idx = base;
      for (int b = 0; b < k; ++b) {
        if (j & (sub >> 1 >> b)) idx |= masks[b];
      }
      gathered[static_cast<Eigen::Index>(j)] =
          amps[static_cast<Eigen::Index>(idx)];
    }
    transformed.noalias() = m * gathered;
    for (std::size_t j = 0; j < sub; ++j) {
      std::size_t idx = base;
      for (int b = 0; b < k; ++b) {
        if (j & (sub >> 1 >> b)) idx |= masks[b];
      }
      amps[static_cast<Eigen::Index>(idx)] =
          transformed[static_cast<Eigen::Index>(j)];
    }
  }
}

// ρ -> M ρ M† without materializing the embedded operator: M acts on every
// column (over row indices), then conj(M) acts on every row.
void two_sided_apply(Mat& rho, const Mat& m, const std::vector<int>& targets,
                     int n_qubits) {
  const Eigen::Index dim = rho.rows();
  Vec work;
  for (Eigen::Index col = 0; col < dim; ++col) {
    work = rho.col(col);
    apply_matrix_inplace(work, m, targets, n_qubits);
    rho.col(col) = work;
  }
  const Mat m_conj = m.conjugate();
  for (Eigen::Index row = 0; row < dim; ++row) {
    work = rho.row(row).transpose();
    apply_matrix_inplace(work, m_conj, targets, n_qubits);
    rho.row(row) = work.transpose();
  }
}

void check_matrix_dim(const Mat& m, std::size_t targets) {
  const auto expect = static_cast<Eigen::Index>(std::size_t{1} << targets);
  if (m.rows() != expect || m.cols() != expect) {
    throw size_error("matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " +
                     std::to_string(expect) + "x" + std::to_string(expect) +
                     " for " + std::to_string(targets) + " target(s)");
  }
}

}  // namespace

std::string Distribution::label(std::size_t index) const {
  std::string bits(static_cast<std::size_t>(n_bits), '0');
  for (int b = 0; b < n_bits; ++b) {
    if (index & (std::size_t{1} << (n_bits - 1 - b))) bits[b] = '1';
  }
  return bits;
}

std::string ShotHistogram::label(std::size_t index) const {
  Distribution d;
  d.n_bits = n_bits;
  return d.label(index);
}

Distribution ShotHistogram::frequencies() const {
  Distribution d;
  d.n_bits = n_bits;
  d.probs.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.probs[i] = static_cast<double>(counts[i]) /
                 static_cast<double>(total_shots);
  }
  return d;
}

double Rng::uniform() {
  // 53-bit mantissa uniform in [0, 1)
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian(double sigma) {
  if (has_spare_) {
    has_spare_ = false;
    return spare_ * sigma;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a) * sigma;
}

std::uint64_t Rng::below(std::uint64_t n) {
  // modulo-rejection to avoid bias
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw = eng_();
  while (draw >= limit) draw = eng_();
  return draw % n;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  // splitmix64 finalizer over the combined words; stable across platforms
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(a) ^ b) ^ c);
}

StateVector zero_state(int n_qubits) {
  check_qubit_count(n_qubits);
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps = Vec::Zero(static_cast<Eigen::Index>(dim_for(n_qubits)));
  s.amps[0] = 1.0;
  return s;
}

StateVector product_state(const std::vector<double>& angles) {
  if (angles.empty()) throw size_error("product_state: empty angle list");
  check_qubit_count(static_cast<int>(angles.size()));
  Vec amps = Vec::Ones(1);
  for (const double theta : angles) {
    Vec qubit(2);
    qubit << std::cos(theta), std::sin(theta);
    Vec next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * qubit[0];
      next[2 * i + 1] = amps[i] * qubit[1];
    }
    amps.swap(next);
  }
  StateVector s;
  s.n_qubits = static_cast<int>(angles.size());
  s.amps = std::move(amps);
  return s;
}

StateVector make_state(int n_qubits, Vec amplitudes) {
  check_qubit_count(n_qubits);
  if (static_cast<std::size_t>(amplitudes.size()) != dim_for(n_qubits)) {
    throw size_error("amplitude count " + std::to_string(amplitudes.size()) +
                     " does not match 2^" + std::to_string(n_qubits));
  }
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps = std::move(amplitudes);
  check_state(s);
  return s;
}

void check_state(const StateVector& state) {
  const double norm = state.amps.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw size_error("state norm " + std::to_string(norm) +
                     " deviates from 1");
  }
}

StateVector apply_gate(const StateVector& state, const Mat& unitary,
                       const std::vector<int>& targets) {
  check_targets(targets, state.n_qubits);
  check_matrix_dim(unitary, targets.size());
  const Mat defect =
      unitary.adjoint() * unitary -
      Mat::Identity(unitary.rows(), unitary.cols());
  if (defect.cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw unitarity_error("matrix is not unitary (U†U deviates by " +
                          std::to_string(defect.cwiseAbs().maxCoeff()) + ")");
  }
  StateVector out = state;
  apply_matrix_inplace(out.amps, unitary, targets, state.n_qubits);
  return out;
}

StateVector run_circuit(const gates::Circuit& c, const StateVector& input) {
  if (c.n_qubits != input.n_qubits) {
    throw size_error("circuit is over " + std::to_string(c.n_qubits) +
                     " qubits but the state has " +
                     std::to_string(input.n_qubits));
  }
  StateVector out = input;
  for (const auto& g : c.gates) {
    gates::validate_gate(g, c.n_qubits);
    apply_matrix_inplace(out.amps, gates::operand_matrix(g),
                         gates::operand_qubits(g), c.n_qubits);
  }
  return out;
}

DensityMatrix to_density(const StateVector& state) {
  check_state(state);
  DensityMatrix rho;
  rho.n_qubits = state.n_qubits;
  rho.rho = state.amps * state.amps.adjoint();
  return rho;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& unitary,
                            const std::vector<int>& targets) {
  check_targets(targets, rho.n_qubits);
  check_matrix_dim(unitary, targets.size());
  DensityMatrix out = rho;
  two_sided_apply(out.rho, unitary, targets, rho.n_qubits);
  return out;
}

DensityMatrix run_circuit_density(const gates::Circuit& c,
                                  const DensityMatrix& input) {
  if (c.n_qubits != input.n_qubits) {
    throw size_error("circuit is over " + std::to_string(c.n_qubits) +
                     " qubits but the density matrix has " +
                     std::to_string(input.n_qubits));
  }
  DensityMatrix out = input;
  for (const auto& g : c.gates) {
    gates::validate_gate(g, c.n_qubits);
    two_sided_apply(out.rho, gates::operand_matrix(g),
                    gates::operand_qubits(g), c.n_qubits);
  }
  return out;
}

void check_channel(const KrausChannel& channel) {
  if (channel.operators.empty()) {
    throw completeness_error("Kraus channel has no operators");
  }
  const Eigen::Index dim = channel.operators[0].rows();
  Mat sum = Mat::Zero(dim, dim);
  for (const auto& k : channel.operators) {
    if (k.rows() != dim || k.cols() != dim) {
      throw completeness_error("Kraus operators have mixed dimensions");
    }
    sum += k.adjoint() * k;
  }
  const double defect =
      (sum - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTol) {
    throw completeness_error("Kraus completeness defect " +
                             std::to_string(defect));
  }
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const KrausChannel& channel,
                            const std::vector<int>& targets) {
  check_targets(targets, rho.n_qubits);
  check_channel(channel);
  check_matrix_dim(channel.operators[0], targets.size());
  DensityMatrix out = rho;
  out.rho.setZero();
  Mat term(rho.rho.rows(), rho.rho.cols());
  for (const auto& k : channel.operators) {
    term = rho.rho;
    two_sided_apply(term, k, targets, rho.n_qubits);
    out.rho += term;
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  check_targets(keep, rho.n_qubits);  // non-empty, distinct, in range
  const int n = rho.n_qubits;
  const int k = static_cast<int>(keep.size());
  const std::size_t kept_dim = std::size_t{1} << k;

  std::vector<int> kept_pos(k);
  for (int i = 0; i < k; ++i) kept_pos[i] = bit_pos(keep[i], n);
  std::vector<int> traced_pos;
  for (int q = 1; q <= n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
      traced_pos.push_back(bit_pos(q, n));
    }
  }
  const std::size_t traced_dim = std::size_t{1} << traced_pos.size();

  auto full_index = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) {
      if (kept_bits & (kept_dim >> 1 >> i)) {
        idx |= std::size_t{1} << kept_pos[i];
      }
    }
    for (std::size_t i = 0; i < traced_pos.size(); ++i) {
      if (traced_bits & (traced_dim >> 1 >> i)) {
        idx |= std::size_t{1} << traced_pos[i];
      }
    }
    return static_cast<Eigen::Index>(idx);
  };

  DensityMatrix out;
  out.n_qubits = k;
  out.rho = Mat::Zero(static_cast<Eigen::Index>(kept_dim),
                      static_cast<Eigen::Index>(kept_dim));
  for (std::size_t r = 0; r < kept_dim; ++r) {
    for (std::size_t c = 0; c < kept_dim; ++c) {
      cx acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        acc += rho.rho(full_index(r, t), full_index(c, t));
      }
      out.rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          acc;
    }
  }
  return out;
}

void check_density(const DensityMatrix& rho) {
  const double herm =
      (rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw size_error("density matrix Hermiticity defect " +
                     std::to_string(herm));
  }
  const double trace_dev = std::abs(rho.rho.trace() - cx(1.0));
  if (trace_dev > kTraceTol) {
    throw size_error("density matrix trace deviates from 1 by " +
                     std::to_string(trace_dev));
  }
  Eigen::SelfAdjointEigenSolver<Mat> eigen(rho.rho,
                                           Eigen::EigenvaluesOnly);
  if (eigen.eigenvalues().minCoeff() < kPsdTol) {
    throw size_error("density matrix has eigenvalue " +
                     std::to_string(eigen.eigenvalues().minCoeff()));
  }
}

namespace {

template <typename DiagonalProb>
Distribution marginal(int n_qubits, std::size_t dim,
                      const std::vector<int>& qubits,
                      DiagonalProb&& prob_of) {
  Distribution out;
  out.n_bits = static_cast<int>(qubits.size());
  out.probs.assign(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t bin = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b) {
      if (idx & (std::size_t{1} << bit_pos(qubits[b], n_qubits))) {
        bin |= std::size_t{1} << (qubits.size() - 1 - b);
      }
    }
    out.probs[bin] += prob_of(idx);
  }
  for (auto& p : out.probs) p = std::max(p, 0.0);  // clamp round-off
  return out;
}

}  // namespace

Distribution measurement_distribution(const StateVector& state,
                                      const std::vector<int>& qubits) {
  check_targets(qubits, state.n_qubits);
  return marginal(state.n_qubits, state.dim(), qubits, [&](std::size_t i) {
    return std::norm(state.amps[static_cast<Eigen::Index>(i)]);
  });
}

Distribution measurement_distribution(const DensityMatrix& rho,
                                      const std::vector<int>& qubits) {
  check_targets(qubits, rho.n_qubits);
  return marginal(rho.n_qubits, rho.dim(), qubits, [&](std::size_t i) {
    const auto d = static_cast<Eigen::Index>(i);
    return std::real(rho.rho(d, d));
  });
}

ShotHistogram sample_shots(const Distribution& dist, std::uint64_t shots,
                           std::uint64_t seed) {
  if (shots < 1) throw size_error("shots must be >= 1");
  ShotHistogram hist;
  hist.n_bits = dist.n_bits;
  hist.counts.assign(dist.probs.size(), 0);
  hist.total_shots = shots;
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    double acc = 0.0;
    std::size_t pick = dist.probs.size() - 1;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
      acc += dist.probs[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    ++hist.counts[pick];
  }
  return hist;
}

}  // namespace qadd::sim
