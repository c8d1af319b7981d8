#include "qadd/adders.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "qadd/fid.hpp"
#include "qadd/qct.hpp"

namespace qadd::adders {

namespace {

using std::numbers::pi;

constexpr double kDiagTol = 1e-10;
constexpr double kIdentityTol = 1e-9;

// Fidelity of a candidate 3-qubit adding circuit on input angles (θ1, θ2):
// overlap of the output qubit's reduced state with the normalized sum state.
double circuit_fidelity(const Circuit& circuit, double theta1, double theta2,
                        const noise::NoiseModel* model) {
  if (circuit.n_qubits != 3) {
    throw size_error("adder circuits act on 3 qubits, got " +
                     std::to_string(circuit.n_qubits));
  }
  const sim::StateVector input = sim::product_state({theta1, theta2, 0.0});
  const sim::StateVector ideal =
      ideal_sum(sim::product_state({theta1}), sim::product_state({theta2}));
  sim::DensityMatrix out;
  if (model != nullptr) {
    out = noise::noisy_run(circuit, *model, sim::to_density(input));
  } else {
    out = sim::to_density(sim::run_circuit(circuit, input));
  }
  return fid::quantum_fidelity(sim::partial_trace(out, {3}), ideal);
}

// Embeds a 2-qubit data state as qubits 1,2 with the output qubit in |0>.
sim::StateVector embed_with_output_zero(const sim::StateVector& input2q) {
  if (input2q.n_qubits != 2) {
    throw size_error("expected a 2-qubit data state, got " +
                     std::to_string(input2q.n_qubits) + " qubits");
  }
  sim::Vec amps = sim::Vec::Zero(8);
  for (Eigen::Index i = 0; i < 4; ++i) amps(2 * i) = input2q.amps(i);
  return sim::make_state(3, amps);
}

// Recovers (θ, φ, λ) with u = e^{iα}·u3(θ, φ, λ) and returns the gate; the
// dropped global phase is unobservable in every pipeline that uses this.
gates::GateApplication gate_from_unitary(const Mat& u, int qubit) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw size_error("gate_from_unitary expects a 2x2 matrix");
  }
  if (gates::unitarity_defect(u) > kDiagTol) {
    throw unitarity_error("gate_from_unitary expects a unitary matrix");
  }
  const double m00 = std::abs(u(0, 0));
  const double m10 = std::abs(u(1, 0));
  const double theta = 2.0 * std::atan2(m10, m00);
  double phi = 0.0;
  double lambda = 0.0;
  if (m00 > 1e-12) {
    const double alpha = std::arg(u(0, 0));
    if (m10 > 1e-12) phi = std::arg(u(1, 0)) - alpha;
    if (std::abs(u(0, 1)) > 1e-12) {
      lambda = std::arg(-u(0, 1)) - alpha;
    } else {
      lambda = std::arg(u(1, 1)) - alpha - phi;
    }
  } else {
    const double alpha = std::arg(u(1, 0));  // θ = π column phase, with φ = 0
    lambda = std::arg(-u(0, 1)) - alpha;
  }
  if (gates::phase_aligned_distance(u, gates::u3(theta, phi, lambda)) >
      kIdentityTol) {
    throw internal_error("single-qubit angle recovery failed");
  }
  return gates::gu3(theta, phi, lambda, qubit);
}

double phase_aligned_vec(const Vec& a, const Vec& b) {
  return gates::phase_aligned_distance(a, b);
}

// Worst residual of the four defining identities for replacing controlled-u
// on the data register by `ut` on the output qubit, checked on the embedded
// pair states |000> and |110> (phase-insensitively per identity).
double encoding_residual(const Mat& cu, const Mat& ut) {
  const AdderSpec adder = basis_adder();
  const Circuit decode = gates::dagger_circuit(adder.circuit);
  double worst = 0.0;
  for (const Eigen::Index base : {Eigen::Index{0}, Eigen::Index{6}}) {
    sim::Vec e = sim::Vec::Zero(8);
    e(base) = 1.0;
    const sim::StateVector in = sim::make_state(3, e);

    const sim::StateVector lhs_enc =
        sim::apply_gate(sim::run_circuit(adder.circuit, in), cu, {1, 2});
    const sim::StateVector rhs_enc =
        sim::run_circuit(adder.circuit, sim::apply_gate(in, ut, {3}));
    worst = std::max(worst, phase_aligned_vec(lhs_enc.amps, rhs_enc.amps));

    const sim::StateVector lhs_dir = sim::apply_gate(in, cu, {1, 2});
    const sim::StateVector rhs_dir = sim::run_circuit(
        adder.circuit,
        sim::apply_gate(sim::run_circuit(decode, in), ut, {3}));
    worst = std::max(worst, phase_aligned_vec(lhs_dir.amps, rhs_dir.amps));
  }
  return worst;
}

std::string to_upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

}  // namespace

AdderSpec basis_adder() {
  AdderSpec spec;
  spec.label = "basis_adder";
  spec.circuit.n_qubits = 3;
  spec.circuit.name = "basis_adder";
  spec.circuit.gates = {
      gates::gcnot(1, 2),
      gates::gch(2, 3),
      gates::gcnot(1, 2),
      gates::gcnot(1, 2, true),
      gates::gcnot(1, 3, true),
      gates::gccnot(2, 3, 1, false, true),
      gates::gcnot(1, 3, true),
      gates::gcnot(1, 2, true),
  };
  return spec;
}

sim::StateVector ideal_sum(const sim::StateVector& psi1,
                           const sim::StateVector& psi2) {
  if (psi1.n_qubits != psi2.n_qubits) {
    throw size_error("ideal_sum: mismatched register sizes");
  }
  sim::Vec sum = psi1.amps + psi2.amps;
  const double norm = sum.norm();
  if (norm < 1e-12) {
    throw degenerate_sum_error(
        "the two input states cancel; their sum has no normalizable "
        "direction");
  }
  sim::StateVector out;
  out.n_qubits = psi1.n_qubits;
  out.amps = sum / norm;
  return out;
}

double adder_fidelity(const AdderSpec& adder, double theta1, double theta2,
                      const noise::NoiseModel* model) {
  return circuit_fidelity(adder.circuit, theta1, theta2, model);
}

GridFidelity grid_average_fidelity(
    const Circuit& circuit, const std::vector<std::pair<double, double>>& grid,
    const noise::NoiseModel* model) {
  if (grid.empty()) {
    throw error("grid_average_fidelity: empty evaluation grid");
  }
  GridFidelity result;
  result.minimum = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& [t1, t2] : grid) {
    const double f = circuit_fidelity(circuit, t1, t2, model);
    sum += f;
    if (f < result.minimum) {
      result.minimum = f;
      result.min_input = {t1, t2};
    }
  }
  result.average = sum / static_cast<double>(grid.size());
  return result;
}

RoundtripResult autoencode_roundtrip(const AdderSpec& adder,
                                     const sim::StateVector& input2q,
                                     const Mat* middle,
                                     const noise::NoiseModel* model) {
  if (adder.circuit.n_qubits != 3) {
    throw size_error("autoencode_roundtrip needs a 3-qubit adder circuit");
  }
  const sim::StateVector input3 = embed_with_output_zero(input2q);

  Circuit pipeline;
  pipeline.n_qubits = 3;
  pipeline.name = adder.label + "_roundtrip";
  pipeline.gates = adder.circuit.gates;
  if (middle != nullptr) {
    pipeline.gates.push_back(gate_from_unitary(*middle, 3));
  }
  const Circuit decode = gates::dagger_circuit(adder.circuit);
  pipeline.gates.insert(pipeline.gates.end(), decode.gates.begin(),
                        decode.gates.end());

  sim::DensityMatrix out;
  if (model != nullptr) {
    out = noise::noisy_run(pipeline, *model, sim::to_density(input3));
  } else {
    out = sim::to_density(sim::run_circuit(pipeline, input3));
  }

  sim::StateVector ideal2 = input2q;
  if (middle != nullptr) {
    ideal2 = sim::apply_gate(input2q, gates::controlled(*middle), {1, 2});
  }

  RoundtripResult result;
  result.state = out;
  result.fidelity =
      fid::quantum_fidelity(sim::partial_trace(out, {1, 2}), ideal2);
  return result;
}

GateEncodingResult encode_gate(const Mat& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw size_error("encode_gate expects a 2x2 matrix");
  }
  if (gates::unitarity_defect(u) > kDiagTol) {
    throw unitarity_error("encode_gate expects a unitary matrix");
  }
  GateEncodingResult result;
  if (std::abs(u(0, 1)) > kDiagTol || std::abs(u(1, 0)) > kDiagTol) {
    result.reason =
        "gate is not diagonal; off-diagonal terms move the embedded pair "
        "states out of span{|000>, |110>}";
    return result;
  }
  sim::cx a = u(1, 1) / u(0, 0);
  a /= std::abs(a);
  Mat ut = Mat::Identity(2, 2);
  ut(1, 1) = a;

  const double residual = encoding_residual(gates::controlled(u), ut);
  if (residual > kIdentityTol) {
    result.reason = "diagonal candidate fails the defining identities";
    return result;
  }
  result.solvable = true;
  result.u_tilde = ut;
  result.a = a;
  return result;
}

GateEncodingResult encode_gate_controlled(const Mat& cu) {
  if (cu.rows() != 4 || cu.cols() != 4) {
    throw size_error("encode_gate_controlled expects a 4x4 matrix");
  }
  if (gates::unitarity_defect(cu) > kDiagTol) {
    throw unitarity_error("encode_gate_controlled expects a unitary matrix");
  }
  const sim::cx g = cu(0, 0);
  const bool controlled_form =
      std::abs(g) > 0.5 && std::abs(cu(1, 1) - g) <= kDiagTol &&
      std::abs(cu(0, 1)) <= kDiagTol && std::abs(cu(1, 0)) <= kDiagTol &&
      cu.block<2, 2>(0, 2).cwiseAbs().maxCoeff() <= kDiagTol &&
      cu.block<2, 2>(2, 0).cwiseAbs().maxCoeff() <= kDiagTol;
  if (!controlled_form) {
    GateEncodingResult result;
    result.reason =
        "gate is not of the controlled block form identity-plus-u on the "
        "first qubit (up to global phase)";
    return result;
  }
  return encode_gate(cu.block<2, 2>(2, 2) / g);
}

GateEncodingResult encode_gate_named(const std::string& spec) {
  const std::string up = to_upper(spec);

  // Slice the angle out of the original spelling so pi-forms keep their case.
  const auto angle_arg = [&](std::size_t prefix_len) -> std::string {
    return spec.substr(prefix_len, spec.size() - prefix_len - 1);
  };
  if (up.rfind("U1(", 0) == 0 && up.back() == ')') {
    return encode_gate(gates::u1(qct::parse_angle(angle_arg(3))));
  }
  if (up.rfind("CU1(", 0) == 0 && up.back() == ')') {
    return encode_gate_controlled(
        gates::controlled(gates::u1(qct::parse_angle(angle_arg(4)))));
  }

  if (up == "CZ") return encode_gate_controlled(gates::named_gate("CZ"));
  if (up == "CS") {
    return encode_gate_controlled(gates::controlled(gates::named_gate("S")));
  }
  if (up == "CSDG") {
    return encode_gate_controlled(
        gates::controlled(gates::named_gate("SDG")));
  }
  if (up == "CT") {
    return encode_gate_controlled(gates::controlled(gates::named_gate("T")));
  }
  if (up == "CTDG") {
    return encode_gate_controlled(
        gates::controlled(gates::named_gate("TDG")));
  }
  if (up == "CNOT") return encode_gate_controlled(gates::named_gate("CNOT"));
  if (up == "CH") return encode_gate_controlled(gates::named_gate("CH"));
  if (up == "SWAP") return encode_gate_controlled(gates::named_gate("SWAP"));

  if (const auto id = gates::gate_id_from_name(up)) {
    if (gates::params_required(*id) == 0 && gates::control_count(*id) == 0 &&
        gates::target_count(*id) == 1) {
      return encode_gate(gates::named_gate(*id));
    }
  }
  throw config_error("unknown gate spec \"" + spec +
                     "\"; expected a fixed single-qubit gate, one of "
                     "CZ/CS/CSDG/CT/CTDG/CNOT/CH/SWAP, or U1(angle)/"
                     "CU1(angle)");
}

double gate_encoding_experiment(const AdderSpec& adder, ExperimentArm arm,
                                const sim::StateVector& input2q,
                                PauliBasis basis1, PauliBasis basis2,
                                const ExperimentOptions& opts) {
  if (adder.circuit.n_qubits != 3) {
    throw size_error("gate_encoding_experiment needs a 3-qubit adder");
  }
  const sim::StateVector input3 = embed_with_output_zero(input2q);

  Circuit pipeline;
  pipeline.n_qubits = 3;
  pipeline.name = adder.label + (arm == ExperimentArm::direct
                                     ? "_direct_cz"
                                     : "_encoded_z");
  pipeline.gates = adder.circuit.gates;
  if (arm == ExperimentArm::direct) {
    // The two-qubit gate pays its own way: CZ enters in lowered form, two
    // CNOTs and three phase gates on the data register.
    const auto cz = gates::lower_cu1(gates::gcu1(pi, 1, 2));
    pipeline.gates.insert(pipeline.gates.end(), cz.begin(), cz.end());
  } else {
    pipeline.gates.push_back(gates::g1(gates::GateId::Z, 3));
  }
  const Circuit decode = gates::dagger_circuit(adder.circuit);
  pipeline.gates.insert(pipeline.gates.end(), decode.gates.begin(),
                        decode.gates.end());
  for (const auto& g : basis_change_gates(basis1, 1)) pipeline.gates.push_back(g);
  for (const auto& g : basis_change_gates(basis2, 2)) pipeline.gates.push_back(g);

  // Ideal reference: CZ on the data register, same basis change, exact
  // readout.
  sim::StateVector ideal2 =
      sim::apply_gate(input2q, gates::named_gate("CZ"), {1, 2});
  for (const auto& g : basis_change_gates(basis1, 1)) {
    ideal2 = sim::apply_gate(ideal2, gates::operand_matrix(g),
                             gates::operand_qubits(g));
  }
  for (const auto& g : basis_change_gates(basis2, 2)) {
    ideal2 = sim::apply_gate(ideal2, gates::operand_matrix(g),
                             gates::operand_qubits(g));
  }
  const sim::Distribution ideal_dist =
      sim::measurement_distribution(ideal2, {1, 2});

  sim::Distribution dist;
  if (opts.model != nullptr) {
    sim::DensityMatrix rho =
        noise::noisy_run(pipeline, *opts.model, sim::to_density(input3));
    rho = noise::apply_t1_readout(rho, *opts.model, {1, 2});
    dist = sim::measurement_distribution(rho, {1, 2});
  } else {
    dist = sim::measurement_distribution(sim::run_circuit(pipeline, input3),
                                         {1, 2});
  }

  if (opts.shots > 0) {
    const sim::ShotHistogram hist =
        sim::sample_shots(dist, opts.shots, opts.seed);
    return fid::classical_fidelity(ideal_dist, hist.frequencies());
  }
  return fid::classical_fidelity(ideal_dist, dist);
}

std::vector<gates::GateApplication> basis_change_gates(PauliBasis basis,
                                                       int qubit) {
  switch (basis) {
    case PauliBasis::X:
      return {gates::g1(gates::GateId::H, qubit)};
    case PauliBasis::Y:
      return {gates::g1(gates::GateId::Sdg, qubit),
              gates::g1(gates::GateId::H, qubit)};
    case PauliBasis::Z:
      return {};
  }
  throw error("invalid Pauli basis");
}

}  // namespace qadd::adders
