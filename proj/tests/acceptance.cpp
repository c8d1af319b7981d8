// End-to-end acceptance gate: ten criteria, one pass/fail line each.
// Every tolerance and runtime bound here is part of the shipped contract;
// loosening them is not a fix, it is a regression.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qadd/adders.hpp"
#include "qadd/cli.hpp"
#include "qadd/errors.hpp"
#include "qadd/fid.hpp"
#include "qadd/ga.hpp"
#include "qadd/gates.hpp"
#include "qadd/noise.hpp"
#include "qadd/qct.hpp"
#include "qadd/sim.hpp"
#include "qadd/tables.hpp"

using namespace qadd;
using gates::Circuit;
using gates::GateId;
using sim::cx;

namespace {

constexpr double kPi = 3.14159265358979323846;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

noise::NoiseModel advanced_model() {
  noise::NoiseModel m;
  m.p_damp = 0.003;
  m.p_dephase = 0.003;
  m.f_cnot = 0.99;
  m.f_flip = 0.99;
  m.t1_readout = true;
  m.insertion = noise::Insertion::readout;
  return m;
}

const std::vector<std::pair<double, double>>& six_inputs() {
  static const std::vector<std::pair<double, double>> inputs = {
      {0, 0},       {kPi / 2, kPi / 2}, {kPi / 2, 0},
      {0, kPi / 2}, {kPi / 4, kPi / 4}, {kPi / 8, kPi / 8}};
  return inputs;
}

// Independent closed form for the adder output fidelity at equal and
// unequal input angles (normalized-sum overlap of the output qubit).
double closed_form(double t1, double t2) {
  const double c1 = std::cos(t1), s1 = std::sin(t1);
  const double c2 = std::cos(t2), s2 = std::sin(t2);
  const double n = std::hypot(c1 + c2, s1 + s2);
  const double v0 = (c1 + c2) / n, v1 = (s1 + s2) / n;
  const double direct = v0 * c1 * c2 + v1 * s1 * s2;
  const double cross = (c1 * s2) * (c1 * s2) + (s1 * c2) * (s1 * c2);
  const double plus = (v0 + v1) / std::sqrt(2.0);
  return direct * direct + cross * plus * plus;
}

Circuit random_circuit(sim::Rng& rng, int n_qubits, int max_gates) {
  static const std::vector<GateId> pool = {
      GateId::I,  GateId::X,   GateId::Y,   GateId::Z,    GateId::H,
      GateId::S,  GateId::Sdg, GateId::T,   GateId::Tdg,  GateId::RX,
      GateId::RY, GateId::RZ,  GateId::U1,  GateId::U3,   GateId::CNOT,
      GateId::CZ, GateId::CH,  GateId::CU1, GateId::CCNOT, GateId::SWAP};
  Circuit c;
  c.n_qubits = n_qubits;
  const int count = 1 + static_cast<int>(rng.below(max_gates));
  for (int i = 0; i < count; ++i) {
    GateId id = pool[rng.below(pool.size())];
    if (gates::control_count(id) + gates::target_count(id) > n_qubits)
      id = GateId::U3;
    gates::GateApplication g;
    g.id = id;
    std::vector<int> operands;
    while (static_cast<int>(operands.size()) <
           gates::control_count(id) + gates::target_count(id)) {
      const int q = 1 + static_cast<int>(rng.below(n_qubits));
      bool seen = false;
      for (int o : operands) seen = seen || o == q;
      if (!seen) operands.push_back(q);
    }
    std::size_t next = 0;
    for (int k = 0; k < gates::control_count(id); ++k)
      g.controls.push_back({operands[next++], rng.uniform() < 0.3});
    for (int k = 0; k < gates::target_count(id); ++k)
      g.targets.push_back(operands[next++]);
    for (int k = 0; k < gates::params_required(id); ++k)
      g.params.push_back((rng.uniform() * 2.0 - 1.0) * kPi);
    c.gates.push_back(g);
  }
  return c;
}

struct CliRun {
  int exit_code = 0;
  std::string out;
};

CliRun run_cli_quiet(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  CliRun r;
  r.exit_code = cli::run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  r.out = out.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("criterion 1: adder fidelity over the six standard inputs") {
  Timer timer;
  const adders::AdderSpec adder = adders::basis_adder();
  bool ok = true;
  double worst_exact = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto& [t1, t2] = six_inputs()[i];
    const double f = adders::adder_fidelity(adder, t1, t2);
    worst_exact = std::max(worst_exact, std::abs(f - 1.0));
    CHECK(std::abs(f - 1.0) < 1e-9);
    ok = ok && std::abs(f - 1.0) < 1e-9;
  }

  const double f_last = adders::adder_fidelity(adder, kPi / 8, kPi / 8);
  CHECK(std::abs(f_last - 0.9268) < 5e-4);
  ok = ok && std::abs(f_last - 0.9268) < 5e-4;

  // Independent closed-form oracle: (c^3+s^3)^2 + 2 c^2 s^2 c^2 at pi/8,
  // and the general form everywhere else.
  const double c = std::cos(kPi / 8), s = std::sin(kPi / 8);
  const double oracle_pi8 =
      std::pow(c * c * c + s * s * s, 2) + 2 * c * c * s * s * c * c;
  CHECK(std::abs(f_last - oracle_pi8) < 1e-9);
  ok = ok && std::abs(f_last - oracle_pi8) < 1e-9;
  for (const auto& [t1, t2] : six_inputs()) {
    const double f = adders::adder_fidelity(adder, t1, t2);
    CHECK(std::abs(f - closed_form(t1, t2)) < 1e-9);
    ok = ok && std::abs(f - closed_form(t1, t2)) < 1e-9;
  }

  const double elapsed = timer.seconds();
  CHECK(elapsed < 1.0);
  ok = ok && elapsed < 1.0;
  report(1, ok,
         "six inputs -> (1, 1, 1, 1, 1, " + fmt(f_last) +
             "), closed-form oracle agrees to " +
             fmt(std::abs(f_last - oracle_pi8)) + ", " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 2: basis truth table, amplitude-exact with phase +1") {
  Timer timer;
  const adders::AdderSpec adder = adders::basis_adder();
  const double r = 1.0 / std::sqrt(2.0);

  std::vector<sim::Vec> expected(8, sim::Vec::Zero(8));
  expected[0](0) = 1.0;                        // |000> -> |000>
  expected[1](6) = 1.0;                        // |001> -> |110>
  expected[2](2) = r;  expected[2](3) = r;     // |010> -> |01+>
  expected[3](2) = r;  expected[3](3) = -r;    // |011> -> |01->
  expected[4](4) = r;  expected[4](5) = r;     // |100> -> |10+>
  expected[5](4) = r;  expected[5](5) = -r;    // |101> -> |10->
  expected[6](1) = 1.0;                        // |110> -> |001>
  expected[7](7) = 1.0;                        // |111> -> |111>

  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    sim::Vec amps = sim::Vec::Zero(8);
    amps(i) = 1.0;
    const sim::StateVector out =
        sim::run_circuit(adder.circuit, sim::make_state(3, amps));
    const double dev = (out.amps - expected[i]).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
    CHECK(dev < 1e-10);
    ok = ok && dev < 1e-10;
  }

  const double elapsed = timer.seconds();
  CHECK(elapsed < 1.0);
  ok = ok && elapsed < 1.0;
  report(2, ok,
         "all 8 basis inputs map exactly (worst amplitude deviation " +
             fmt(worst) + "), " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 3: encode/decode round trip is exact") {
  Timer timer;
  const adders::AdderSpec adder = adders::basis_adder();
  bool ok = true;
  double worst = 0.0;
  for (const auto& [t1, t2] : six_inputs()) {
    const adders::RoundtripResult r =
        adders::autoencode_roundtrip(adder, sim::product_state({t1, t2}));
    worst = std::max(worst, std::abs(r.fidelity - 1.0));
    CHECK(std::abs(r.fidelity - 1.0) < 1e-9);
    ok = ok && std::abs(r.fidelity - 1.0) < 1e-9;
  }
  const double elapsed = timer.seconds();
  CHECK(elapsed < 1.0);
  ok = ok && elapsed < 1.0;
  report(3, ok,
         "six round trips at fidelity 1 (worst deviation " + fmt(worst) +
             "), " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 4: both experiment arms are exact for |11>") {
  Timer timer;
  const adders::AdderSpec adder = adders::basis_adder();
  const sim::StateVector input11 = sim::product_state({kPi / 2, kPi / 2});
  bool ok = true;
  double worst = 0.0;
  for (adders::PauliBasis b1 : {adders::PauliBasis::X, adders::PauliBasis::Y,
                                adders::PauliBasis::Z}) {
    for (adders::PauliBasis b2 :
         {adders::PauliBasis::X, adders::PauliBasis::Y,
          adders::PauliBasis::Z}) {
      const double direct = adders::gate_encoding_experiment(
          adder, adders::ExperimentArm::direct, input11, b1, b2);
      const double encoded = adders::gate_encoding_experiment(
          adder, adders::ExperimentArm::encoded, input11, b1, b2);
      worst = std::max({worst, std::abs(direct - 1.0),
                        std::abs(encoded - 1.0)});
      CHECK(std::abs(direct - 1.0) < 1e-9);
      CHECK(std::abs(encoded - 1.0) < 1e-9);
      ok = ok && std::abs(direct - 1.0) < 1e-9 &&
           std::abs(encoded - 1.0) < 1e-9;
    }
  }
  const double elapsed = timer.seconds();
  CHECK(elapsed < 5.0);
  ok = ok && elapsed < 5.0;
  report(4, ok,
         "direct and encoded arms hit fidelity 1 in all nine bases (worst "
         "deviation " +
             fmt(worst) + "), " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 5: forecast model reproduces the adder column") {
  Timer timer;
  tables::TableRequest request;
  request.number = 1;
  request.profile = tables::Profile::advanced;
  request.model = advanced_model();
  const tables::TableDoc doc = tables::make_table(request);

  int forecast = -1, f_tilde = -1;
  for (std::size_t j = 0; j < doc.columns.size(); ++j) {
    if (doc.columns[j] == "forecast") forecast = static_cast<int>(j);
    if (doc.columns[j] == "f_tilde") f_tilde = static_cast<int>(j);
  }
  REQUIRE(forecast >= 0);
  REQUIRE(f_tilde >= 0);

  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double dev = *doc.rows[i].cells[forecast].deviation();
    worst = std::max(worst, dev);
    CHECK(dev < 0.03);
    ok = ok && dev < 0.03;
  }

  // Pure product check: 0.99^13 = 0.8775 within 1e-4, reproduced by the
  // (0,0) row where the noisy-execution factor is exactly 1.
  const double product = *doc.rows[0].cells[forecast].computed;
  CHECK(std::abs(product - 0.8775) < 1e-4);
  CHECK(std::abs(*doc.rows[0].cells[f_tilde].computed - 1.0) < 1e-9);
  ok = ok && std::abs(product - 0.8775) < 1e-4;

  // The systematic f_tilde < 1 gap must be reported in output.
  std::string gap_note;
  for (const auto& note : doc.footnotes)
    if (note.find("systematic gap") != std::string::npos) gap_note = note;
  CHECK(!gap_note.empty());
  ok = ok && !gap_note.empty();
  if (!gap_note.empty()) std::printf("  note: %s\n", gap_note.c_str());

  const double elapsed = timer.seconds();
  CHECK(elapsed < 10.0);
  ok = ok && elapsed < 10.0;
  report(5, ok,
         "forecast column within ±0.03 (worst deviation " + fmt(worst) +
             "), pure product " + fmt(product) + " within 1e-4 of 0.8775, " +
             fmt(elapsed) + " s");
}

TEST_CASE("criterion 6: forecast round-trip column at 24 CNOTs") {
  Timer timer;
  const adders::AdderSpec adder = adders::basis_adder();

  // The round trip costs 24 CNOTs under the fixed-cost tally.
  Circuit roundtrip = adder.circuit;
  const Circuit decode = gates::dagger_circuit(adder.circuit);
  roundtrip.gates.insert(roundtrip.gates.end(), decode.gates.begin(),
                         decode.gates.end());
  const int n_cnot =
      gates::cnot_count(roundtrip, gates::CnotConvention::nominal);
  CHECK(n_cnot == 24);

  tables::TableRequest request;
  request.number = 3;
  request.profile = tables::Profile::advanced;
  request.model = advanced_model();
  const tables::TableDoc doc = tables::make_table(request);

  int forecast = -1;
  for (std::size_t j = 0; j < doc.columns.size(); ++j)
    if (doc.columns[j] == "forecast") forecast = static_cast<int>(j);
  REQUIRE(forecast >= 0);

  bool ok = n_cnot == 24;
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double dev = std::abs(*doc.rows[i].cells[forecast].computed -
                                0.7700);
    worst = std::max(worst, dev);
    CHECK(dev < 0.03);
    ok = ok && dev < 0.03;
  }

  const double elapsed = timer.seconds();
  CHECK(elapsed < 10.0);
  ok = ok && elapsed < 10.0;
  report(6, ok,
         "n_cnot=" + std::to_string(n_cnot) +
             ", round-trip forecasts within ±0.03 of 0.7700 (worst " +
             fmt(worst) + "), " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 7: gate-encoding solver verdicts") {
  Timer timer;
  bool ok = true;

  const std::vector<std::pair<std::string, cx>> solvable = {
      {"CZ", cx(-1, 0)},
      {"CS", cx(0, 1)},
      {"CSDG", cx(0, -1)},
      {"CT", std::exp(cx(0, kPi / 4))},
      {"CTDG", std::exp(cx(0, -kPi / 4))}};
  for (const auto& [name, phase] : solvable) {
    const adders::GateEncodingResult r = adders::encode_gate_named(name);
    CHECK(r.solvable);
    ok = ok && r.solvable;
    if (!r.solvable) continue;
    const double dev =
        std::max({std::abs(r.u_tilde(0, 0) - cx(1, 0)),
                  std::abs(r.u_tilde(1, 1) - phase),
                  std::abs(r.u_tilde(0, 1)), std::abs(r.u_tilde(1, 0))});
    CHECK(dev < 1e-10);
    ok = ok && dev < 1e-10;
  }

  for (const char* name : {"CNOT", "CH", "SWAP"}) {
    const adders::GateEncodingResult r = adders::encode_gate_named(name);
    CHECK(!r.solvable);
    ok = ok && !r.solvable;
  }

  const double elapsed = timer.seconds();
  CHECK(elapsed < 1.0);
  ok = ok && elapsed < 1.0;
  report(7, ok,
         "CZ/CS/CSDG/CT/CTDG encode to their diagonal factors; "
         "CNOT/CH/SWAP rejected, " +
             fmt(elapsed) + " s");
}

TEST_CASE("criterion 8: genetic search clears the fidelity bar") {
  Timer timer;
  // Default configuration, documented seed 42.
  ga::GaConfig config;
  config.grid = ga::GaConfig::default_grid();
  REQUIRE(config.seed == 42);

  const ga::GaResult result = ga::evolve(config);
  const int gates_used = static_cast<int>(result.best_circuit.gates.size());
  const int cnots =
      gates::cnot_count(result.best_circuit, gates::CnotConvention::nominal);

  bool ok = true;
  CHECK(gates_used <= 20);
  CHECK(cnots <= 2);
  CHECK(result.average >= 0.88);
  ok = ok && gates_used <= 20 && cnots <= 2 && result.average >= 0.88;

  const double elapsed = timer.seconds();
  CHECK(elapsed < 600.0);
  ok = ok && elapsed < 600.0;
  report(8, ok,
         "seed 42: " + std::to_string(gates_used) + " gates, " +
             std::to_string(cnots) + " CNOTs, grid average " +
             fmt(result.average) + " >= 0.88, minimum " +
             fmt(result.minimum) + " at input (" +
             fmt(result.min_input.first) + ", " +
             fmt(result.min_input.second) + "), " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 9: property suites") {
  Timer timer;
  bool ok = true;
  sim::Rng rng(2026);

  // Gate unitarity, 500 random gate applications.
  double worst_unitarity = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Circuit c = random_circuit(rng, 3, 1);
    worst_unitarity = std::max(
        worst_unitarity, gates::unitarity_defect(
                             gates::operand_matrix(c.gates[0])));
  }
  CHECK(worst_unitarity < 1e-10);
  ok = ok && worst_unitarity < 1e-10;

  // Kraus completeness, 500 random probabilities across both channels.
  bool kraus_ok = true;
  for (int i = 0; i < 500; ++i) {
    const double p = rng.uniform();
    try {
      sim::check_channel(noise::amplitude_damping(p));  // 1e-10 internally
      sim::check_channel(noise::dephasing(p));
    } catch (const qadd::error&) {
      kraus_ok = false;
    }
  }
  CHECK(kraus_ok);
  ok = ok && kraus_ok;

  // circuit ∘ dagger = identity, 500 random circuits.
  double worst_dagger = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Circuit c = random_circuit(rng, n, 10);
    std::vector<double> angles;
    for (int q = 0; q < n; ++q)
      angles.push_back((rng.uniform() * 2.0 - 1.0) * kPi);
    const sim::StateVector in = sim::product_state(angles);
    const sim::StateVector back =
        sim::run_circuit(gates::dagger_circuit(c), sim::run_circuit(c, in));
    worst_dagger =
        std::max(worst_dagger, (back.amps - in.amps).cwiseAbs().maxCoeff());
  }
  CHECK(worst_dagger < 1e-9);
  ok = ok && worst_dagger < 1e-9;

  // Transpile equivalence up to global phase, 500 random circuits.
  double worst_transpile = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Circuit c = random_circuit(rng, n, 8);
    worst_transpile = std::max(
        worst_transpile,
        gates::phase_aligned_distance(gates::circuit_unitary(c),
                                      gates::circuit_unitary(
                                          gates::transpile(c))));
  }
  CHECK(worst_transpile < 1e-8);
  ok = ok && worst_transpile < 1e-8;

  // Parser round trip, 1000 random circuits.
  bool parser_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Circuit c = random_circuit(rng, n, 10);
    const std::string text = qct::serialize(c);
    const Circuit back = qct::parse(text);
    parser_ok = parser_ok && qct::structural_equal(c, back, 1e-9);
    // The canonical form is a fixed point of another round trip.
    parser_ok = parser_ok && qct::serialize(back) == text;
  }
  CHECK(parser_ok);
  ok = ok && parser_ok;

  // Shot-fidelity floor at 1e5 shots, 500 random measured states.
  double worst_shot = 1.0;
  for (int i = 0; i < 500; ++i) {
    const Circuit c = random_circuit(rng, 2, 6);
    const sim::Distribution ideal = sim::measurement_distribution(
        sim::run_circuit(c, sim::zero_state(2)), {1, 2});
    const sim::ShotHistogram hist =
        sim::sample_shots(ideal, 100000, rng.next_u64());
    worst_shot = std::min(worst_shot,
                          fid::shot_fidelity(ideal, hist).value);
  }
  CHECK(worst_shot >= 0.995);
  ok = ok && worst_shot >= 0.995;

  const double elapsed = timer.seconds();
  CHECK(elapsed < 120.0);
  ok = ok && elapsed < 120.0;
  report(9, ok,
         "unitarity " + fmt(worst_unitarity) + ", dagger " +
             fmt(worst_dagger) + ", transpile " + fmt(worst_transpile) +
             ", parser 1000/1000, worst shot fidelity " + fmt(worst_shot) +
             ", " + fmt(elapsed) + " s");
}

TEST_CASE("criterion 10: reruns produce byte-identical result files") {
  Timer timer;
  const std::string adder = std::string(std::getenv("QADD_DATA_DIR")
                                            ? std::getenv("QADD_DATA_DIR")
                                            : "data") +
                            "/basis_adder.qc";
  const std::string noise = std::string(std::getenv("QADD_DATA_DIR")
                                            ? std::getenv("QADD_DATA_DIR")
                                            : "data") +
                            "/noise_advanced.cfg";

  std::ofstream("acc_ga_tmp.cfg")
      << "population = 16\ngenerations = 8\nseed = 3\n";

  const std::vector<std::vector<std::string>> commands = {
      {"table", "1", "--profile", "advanced", "--out", "acc_t1.csv"},
      {"table", "2", "--shots", "2048", "--seed", "9", "--format", "json",
       "--out", "acc_t2.json"},
      {"simulate", adder, "--input", "pi/4,pi/8", "--shots", "4096",
       "--seed", "11", "--out", "acc_sim.csv"},
      {"simulate", adder, "--noise", noise, "--format", "json", "--out",
       "acc_noisy.json"},
      {"ga", "--config", "acc_ga_tmp.cfg", "--out", "acc_ga"},
      {"transpile", adder, "--out", "acc_low.qc"},
      {"encode-gate", "CU1(pi/8)", "--format", "json", "--out",
       "acc_enc.json"},
  };
  const std::vector<std::vector<std::string>> outputs = {
      {"acc_t1.csv"},   {"acc_t2.json"}, {"acc_sim.csv"},
      {"acc_noisy.json"}, {"acc_ga.qc", "acc_ga_history.csv"},
      {"acc_low.qc"},   {"acc_enc.json"},
  };

  bool ok = true;
  int files_checked = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const CliRun first = run_cli_quiet(commands[i]);
    CHECK(first.exit_code == cli::kExitOk);
    ok = ok && first.exit_code == cli::kExitOk;
    std::vector<std::string> before;
    for (const auto& path : outputs[i]) before.push_back(slurp(path));

    const CliRun second = run_cli_quiet(commands[i]);
    CHECK(second.exit_code == cli::kExitOk);
    CHECK(second.out == first.out);
    ok = ok && second.exit_code == cli::kExitOk && second.out == first.out;
    for (std::size_t f = 0; f < outputs[i].size(); ++f) {
      const std::string after = slurp(outputs[i][f]);
      CHECK(after == before[f]);
      ok = ok && after == before[f];
      ++files_checked;
    }
  }

  for (const auto& files : outputs)
    for (const auto& path : files) std::remove(path.c_str());
  std::remove("acc_ga_tmp.cfg");

  const double elapsed = timer.seconds();
  report(10, ok,
         std::to_string(files_checked) +
             " result files byte-identical across reruns of " +
             std::to_string(commands.size()) + " commands, " + fmt(elapsed) +
             " s");
}
