#include "qadd/noise.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qadd/kvfile.hpp"

namespace qadd::noise {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw config_error(std::string(name) + " must lie in [0, 1], got " +
                       std::to_string(p));
  }
}

// Damping followed by dephasing on one qubit of a density matrix.
sim::DensityMatrix noise_pair(const sim::DensityMatrix& rho,
                              const NoiseModel& model, int qubit) {
  sim::DensityMatrix out = rho;
  if (model.p_damp > 0.0) {
    out = sim::apply_channel(out, amplitude_damping(model.p_damp), {qubit});
  }
  if (model.p_dephase > 0.0) {
    out = sim::apply_channel(out, dephasing(model.p_dephase), {qubit});
  }
  return out;
}

sim::DensityMatrix run_per_gate(const std::vector<gates::GateApplication>& seq,
                                const NoiseModel& model,
                                const sim::DensityMatrix& input) {
  sim::DensityMatrix rho = input;
  for (const auto& g : seq) {
    gates::validate_gate(g, rho.n_qubits);
    rho = sim::apply_unitary(rho, gates::operand_matrix(g),
                             gates::operand_qubits(g));
    for (const int q : gates::operand_qubits(g)) {
      rho = noise_pair(rho, model, q);
    }
  }
  return rho;
}

}  // namespace

void validate_model(const NoiseModel& model) {
  check_probability(model.p_damp, "p_damp");
  check_probability(model.p_dephase, "p_dephase");
  check_probability(model.f_cnot, "f_cnot");
  check_probability(model.f_flip, "f_flip");
}

sim::KrausChannel amplitude_damping(double p) {
  check_probability(p, "damping probability");
  sim::Mat k1(2, 2), k2(2, 2);
  k1 << 1, 0, 0, std::sqrt(1.0 - p);
  k2 << 0, std::sqrt(p), 0, 0;
  return sim::KrausChannel{{k1, k2}};
}

sim::KrausChannel dephasing(double p) {
  check_probability(p, "dephasing probability");
  sim::Mat k1 = std::sqrt(1.0 - p) * sim::Mat::Identity(2, 2);
  sim::Mat k2(2, 2);
  k2 << std::sqrt(p), 0, 0, -std::sqrt(p);
  return sim::KrausChannel{{k1, k2}};
}

sim::DensityMatrix noisy_run(const gates::Circuit& c, const NoiseModel& model,
                             const sim::DensityMatrix& input) {
  validate_model(model);
  if (c.n_qubits != input.n_qubits) {
    throw size_error("noisy_run: circuit is " + std::to_string(c.n_qubits) +
                     " qubits but the state is " +
                     std::to_string(input.n_qubits));
  }
  switch (model.insertion) {
    case Insertion::per_gate_lowered:
      return run_per_gate(gates::lower_composites(c), model, input);
    case Insertion::per_gate:
      return run_per_gate(c.gates, model, input);
    case Insertion::readout: {
      sim::DensityMatrix rho = sim::run_circuit_density(c, input);
      for (int q = 1; q <= rho.n_qubits; ++q) {
        rho = noise_pair(rho, model, q);
      }
      return rho;
    }
  }
  throw internal_error("noisy_run: unknown insertion policy");
}

sim::DensityMatrix apply_t1_readout(const sim::DensityMatrix& rho,
                                    const NoiseModel& model,
                                    const std::vector<int>& measured) {
  if (!model.t1_readout || model.insertion == Insertion::readout ||
      model.p_damp <= 0.0) {
    return rho;
  }
  sim::DensityMatrix out = rho;
  const auto channel = amplitude_damping(model.p_damp);
  for (const int q : measured) {
    out = sim::apply_channel(out, channel, {q});
  }
  return out;
}

sim::Distribution apply_readout_error(const sim::Distribution& dist,
                                      const NoiseModel& model) {
  check_probability(model.f_flip, "f_flip");
  if (model.f_flip == 1.0) return dist;

  sim::Distribution out;
  out.n_bits = dist.n_bits;
  out.probs.assign(dist.probs.size(), 0.0);
  const double keep = model.f_flip;
  const double flip = 1.0 - model.f_flip;
  for (std::size_t from = 0; from < dist.probs.size(); ++from) {
    const double p = dist.probs[from];
    if (p == 0.0) continue;
    for (std::size_t to = 0; to < out.probs.size(); ++to) {
      const int flips = std::popcount(from ^ to);
      out.probs[to] +=
          p * std::pow(flip, flips) * std::pow(keep, dist.n_bits - flips);
    }
  }
  return out;
}

double advanced_fidelity(double f_tilde, double f_cnot, int n_cnot,
                         double f_flip) {
  if (n_cnot < 0) {
    throw error("advanced_fidelity: negative CNOT count");
  }
  return f_tilde * std::pow(f_cnot, n_cnot) * f_flip;
}

NoiseModel load_noise_config(const std::string& path) {
  return parse_noise_config(kv::read_text_file(path));
}

NoiseModel parse_noise_config(const std::string& text) {
  auto entries = kv::parse(text);
  NoiseModel model;
  model.p_damp = kv::take_double(entries, "p_damp", model.p_damp);
  model.p_dephase = kv::take_double(entries, "p_dephase", model.p_dephase);
  model.f_cnot = kv::take_double(entries, "f_cnot", model.f_cnot);
  model.f_flip = kv::take_double(entries, "f_flip", model.f_flip);
  model.t1_readout = kv::take_bool(entries, "t1_readout", model.t1_readout);
  const std::string ins =
      kv::take_string(entries, "insertion", insertion_name(model.insertion));
  model.insertion = insertion_from_name(ins);
  kv::reject_unknown(entries, "noise config");
  validate_model(model);
  return model;
}

const std::string& insertion_name(Insertion ins) {
  static const std::string per_gate_lowered = "per_gate_lowered";
  static const std::string per_gate = "per_gate";
  static const std::string readout = "readout";
  switch (ins) {
    case Insertion::per_gate_lowered:
      return per_gate_lowered;
    case Insertion::per_gate:
      return per_gate;
    case Insertion::readout:
      return readout;
  }
  throw internal_error("unknown insertion policy");
}

Insertion insertion_from_name(const std::string& name) {
  if (name == "per_gate_lowered") return Insertion::per_gate_lowered;
  if (name == "per_gate") return Insertion::per_gate;
  if (name == "readout") return Insertion::readout;
  throw config_error(
      "insertion must be per_gate_lowered, per_gate, or readout; got \"" +
      name + "\"");
}

std::string describe_model(const NoiseModel& model) {
  std::ostringstream out;
  out.precision(12);
  out << "p_damp=" << model.p_damp << '\n'
      << "p_dephase=" << model.p_dephase << '\n'
      << "f_cnot=" << model.f_cnot << '\n'
      << "f_flip=" << model.f_flip << '\n'
      << "t1_readout=" << (model.t1_readout ? "true" : "false") << '\n'
      << "insertion=" << insertion_name(model.insertion) << '\n';
  return out.str();
}

}  // namespace qadd::noise
