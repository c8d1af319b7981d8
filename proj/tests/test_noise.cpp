#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qadd/errors.hpp"
#include "qadd/gates.hpp"
#include "qadd/noise.hpp"
#include "qadd/sim.hpp"

using namespace qadd;
using sim::cx;
using sim::Mat;

namespace {

sim::DensityMatrix plus_state_density() {
  const sim::StateVector plus = sim::apply_gate(
      sim::zero_state(1), gates::named_gate(gates::GateId::H), {1});
  return sim::to_density(plus);
}

noise::NoiseModel pair_model(double p_damp, double p_dephase,
                             noise::Insertion ins) {
  noise::NoiseModel m;
  m.p_damp = p_damp;
  m.p_dephase = p_dephase;
  m.insertion = ins;
  return m;
}

}  // namespace

TEST_CASE("amplitude damping operators and action") {
  const double p = 0.37;
  const sim::KrausChannel ch = noise::amplitude_damping(p);
  REQUIRE(ch.operators.size() == 2);
  CHECK(std::abs(ch.operators[0](0, 0) - cx(1, 0)) < 1e-15);
  CHECK(std::abs(ch.operators[0](1, 1) - cx(std::sqrt(1 - p), 0)) < 1e-15);
  CHECK(std::abs(ch.operators[1](0, 1) - cx(std::sqrt(p), 0)) < 1e-15);
  CHECK(std::abs(ch.operators[1](1, 0)) == 0.0);
  CHECK_NOTHROW(sim::check_channel(ch));

  // |1> decays toward |0> with probability p.
  const sim::StateVector one = sim::apply_gate(
      sim::zero_state(1), gates::named_gate(gates::GateId::X), {1});
  const sim::DensityMatrix out =
      sim::apply_channel(sim::to_density(one), ch, {1});
  CHECK(out.rho(0, 0).real() == doctest::Approx(p).epsilon(1e-12));
  CHECK(out.rho(1, 1).real() == doctest::Approx(1 - p).epsilon(1e-12));
}

TEST_CASE("dephasing operators scale coherences by 1-2p") {
  const double p = 0.21;
  const sim::KrausChannel ch = noise::dephasing(p);
  REQUIRE(ch.operators.size() == 2);
  CHECK(std::abs(ch.operators[0](0, 0) - cx(std::sqrt(1 - p), 0)) < 1e-15);
  CHECK(std::abs(ch.operators[1](0, 0) - cx(std::sqrt(p), 0)) < 1e-15);
  CHECK(std::abs(ch.operators[1](1, 1) - cx(-std::sqrt(p), 0)) < 1e-15);
  CHECK_NOTHROW(sim::check_channel(ch));

  const sim::DensityMatrix out =
      sim::apply_channel(plus_state_density(), ch, {1});
  CHECK(out.rho(0, 1).real() ==
        doctest::Approx(0.5 * (1 - 2 * p)).epsilon(1e-12));
  CHECK(out.rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("kraus completeness holds across the probability range") {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK_NOTHROW(sim::check_channel(noise::amplitude_damping(p)));
    CHECK_NOTHROW(sim::check_channel(noise::dephasing(p)));
  }
}

TEST_CASE("model validation rejects out-of-range probabilities") {
  noise::NoiseModel m;
  CHECK_NOTHROW(noise::validate_model(m));
  m.p_damp = -0.1;
  CHECK_THROWS_AS(noise::validate_model(m), config_error);
  m.p_damp = 0.0;
  m.f_flip = 1.5;
  CHECK_THROWS_AS(noise::validate_model(m), config_error);
}

TEST_CASE("per-gate insertion equals manual channel application") {
  // One H gate: noisy_run must equal H|0><0|H† followed by the two channels.
  gates::Circuit c;
  c.n_qubits = 1;
  c.gates.push_back(gates::g1(gates::GateId::H, 1));

  const noise::NoiseModel m =
      pair_model(0.1, 0.05, noise::Insertion::per_gate_lowered);
  const sim::DensityMatrix got =
      noise::noisy_run(c, m, sim::to_density(sim::zero_state(1)));

  sim::DensityMatrix expect = plus_state_density();
  expect = sim::apply_channel(expect, noise::amplitude_damping(0.1), {1});
  expect = sim::apply_channel(expect, noise::dephasing(0.05), {1});
  CHECK((got.rho - expect.rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("two-qubit gates get the pair on each operand qubit") {
  gates::Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(gates::gcnot(1, 2));

  const noise::NoiseModel m =
      pair_model(0.2, 0.0, noise::Insertion::per_gate_lowered);
  const sim::DensityMatrix got =
      noise::noisy_run(c, m, sim::to_density(sim::zero_state(2)));

  sim::DensityMatrix expect = sim::to_density(sim::zero_state(2));
  expect = sim::apply_unitary(expect, gates::named_gate("CNOT"), {1, 2});
  expect = sim::apply_channel(expect, noise::amplitude_damping(0.2), {1});
  expect = sim::apply_channel(expect, noise::amplitude_damping(0.2), {2});
  CHECK((got.rho - expect.rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("insertion policies differ as specified") {
  // CCNOT circuit: per_gate_lowered expands it (15 insertions points),
  // per_gate keeps it whole (one 3-qubit insertion), readout postpones the
  // pair to the end.
  gates::Circuit c;
  c.n_qubits = 3;
  c.gates.push_back(gates::g1(gates::GateId::H, 1));
  c.gates.push_back(gates::gccnot(1, 2, 3));

  const sim::DensityMatrix in = sim::to_density(sim::zero_state(3));
  const double p = 0.03;

  const sim::DensityMatrix lowered = noise::noisy_run(
      c, pair_model(p, p, noise::Insertion::per_gate_lowered), in);
  const sim::DensityMatrix composite =
      noise::noisy_run(c, pair_model(p, p, noise::Insertion::per_gate), in);
  const sim::DensityMatrix at_readout =
      noise::noisy_run(c, pair_model(p, p, noise::Insertion::readout), in);

  CHECK((lowered.rho - composite.rho).cwiseAbs().maxCoeff() > 1e-6);
  CHECK((lowered.rho - at_readout.rho).cwiseAbs().maxCoeff() > 1e-6);

  // Readout insertion is exactly: unitary run, then the pair per qubit.
  sim::DensityMatrix expect = sim::run_circuit_density(c, in);
  for (int q = 1; q <= 3; ++q) {
    expect = sim::apply_channel(expect, noise::amplitude_damping(p), {q});
    expect = sim::apply_channel(expect, noise::dephasing(p), {q});
  }
  CHECK((at_readout.rho - expect.rho).cwiseAbs().maxCoeff() < 1e-12);

  // Zero-probability model: all policies degrade to the unitary run.
  const sim::DensityMatrix clean = noise::noisy_run(
      c, pair_model(0.0, 0.0, noise::Insertion::per_gate_lowered), in);
  CHECK((clean.rho - sim::run_circuit_density(c, in).rho)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("pre-measurement damping hook") {
  noise::NoiseModel m;
  m.p_damp = 0.25;
  m.t1_readout = true;
  m.insertion = noise::Insertion::per_gate_lowered;

  const sim::StateVector one = sim::apply_gate(
      sim::zero_state(2), gates::named_gate(gates::GateId::X), {1});
  const sim::DensityMatrix rho = sim::to_density(one);

  // Active: measured qubit 1 decays.
  const sim::DensityMatrix hit = noise::apply_t1_readout(rho, m, {1});
  CHECK(hit.rho(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));

  // Untouched qubits keep their state.
  const sim::DensityMatrix partial = noise::apply_t1_readout(rho, m, {2});
  CHECK((partial.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-12);

  // No-ops: flag off, or the pair already struck at readout.
  noise::NoiseModel off = m;
  off.t1_readout = false;
  CHECK((noise::apply_t1_readout(rho, off, {1}).rho - rho.rho)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  noise::NoiseModel already = m;
  already.insertion = noise::Insertion::readout;
  CHECK((noise::apply_t1_readout(rho, already, {1}).rho - rho.rho)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("classical readout flips mix outcomes binomially") {
  sim::Distribution dist;
  dist.n_bits = 2;
  dist.probs = {1.0, 0.0, 0.0, 0.0};

  noise::NoiseModel m;
  m.f_flip = 0.9;
  const sim::Distribution out = noise::apply_readout_error(dist, m);
  CHECK(out.probs[0] == doctest::Approx(0.81).epsilon(1e-12));
  CHECK(out.probs[1] == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(out.probs[2] == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(out.probs[3] == doctest::Approx(0.01).epsilon(1e-12));

  double total = 0.0;
  for (double p : out.probs) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  noise::NoiseModel perfect;
  const sim::Distribution same = noise::apply_readout_error(dist, perfect);
  CHECK(same.probs == dist.probs);
}

TEST_CASE("forecast factor composition") {
  CHECK(noise::advanced_fidelity(1.0, 0.99, 12, 0.99) ==
        doctest::Approx(std::pow(0.99, 13)).epsilon(1e-15));
  CHECK(noise::advanced_fidelity(0.9, 1.0, 5, 1.0) ==
        doctest::Approx(0.9).epsilon(1e-15));
  CHECK(noise::advanced_fidelity(0.95, 0.99, 24, 0.99) ==
        doctest::Approx(0.95 * std::pow(0.99, 25)).epsilon(1e-12));
}

TEST_CASE("noise config parsing") {
  const noise::NoiseModel m = noise::parse_noise_config(
      "# advanced profile\n"
      "p_damp = 0.003\n"
      "p_dephase = 0.003\n"
      "f_cnot = 0.99\n"
      "f_flip = 0.99\n"
      "t1_readout = true\n"
      "insertion = readout\n");
  CHECK(m.p_damp == 0.003);
  CHECK(m.p_dephase == 0.003);
  CHECK(m.f_cnot == 0.99);
  CHECK(m.f_flip == 0.99);
  CHECK(m.t1_readout);
  CHECK(m.insertion == noise::Insertion::readout);

  // Defaults apply for omitted keys.
  const noise::NoiseModel d = noise::parse_noise_config("p_damp = 0.01\n");
  CHECK(d.p_dephase == 0.0);
  CHECK(d.f_cnot == 1.0);
  CHECK(d.insertion == noise::Insertion::per_gate_lowered);

  CHECK_THROWS_AS(noise::parse_noise_config("p_damp = 2\n"), config_error);
  CHECK_THROWS_AS(noise::parse_noise_config("mystery = 1\n"), config_error);
  CHECK_THROWS_AS(noise::parse_noise_config("insertion = sometimes\n"),
                  config_error);
  CHECK_THROWS_AS(noise::parse_noise_config("p_damp = 0.1\np_damp = 0.2\n"),
                  config_error);
  CHECK_THROWS_AS(noise::load_noise_config("missing_file.cfg"), qadd::error);
}

TEST_CASE("insertion names round trip and snapshots carry every key") {
  for (auto ins : {noise::Insertion::per_gate_lowered,
                   noise::Insertion::per_gate, noise::Insertion::readout}) {
    CHECK(noise::insertion_from_name(noise::insertion_name(ins)) == ins);
  }
  CHECK_THROWS_AS(noise::insertion_from_name("never"), config_error);

  noise::NoiseModel m;
  m.p_damp = 0.003;
  const std::string snap = noise::describe_model(m);
  for (const char* key : {"p_damp=", "p_dephase=", "f_cnot=", "f_flip=",
                          "t1_readout=", "insertion="}) {
    CHECK(snap.find(key) != std::string::npos);
  }
  // Snapshot text parses back to the same model.
  const noise::NoiseModel back = noise::parse_noise_config(snap);
  CHECK(back.p_damp == m.p_damp);
  CHECK(back.insertion == m.insertion);
}
