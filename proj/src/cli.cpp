#include "qadd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qadd/adders.hpp"
#include "qadd/errors.hpp"
#include "qadd/fid.hpp"
#include "qadd/ga.hpp"
#include "qadd/gates.hpp"
#include "qadd/kvfile.hpp"
#include "qadd/noise.hpp"
#include "qadd/qct.hpp"
#include "qadd/sim.hpp"
#include "qadd/tables.hpp"

namespace qadd::cli {
namespace {

using nlohmann::json;

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(sim::cx z) {
  const double re = z.real();
  const double im = z.imag();
  return fmt12(re) + (std::signbit(im) ? "-" : "+") + fmt12(std::abs(im)) +
         "i";
}

json complex_json(sim::cx z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n'))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string path_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

std::string quote_arg(const std::string& arg) {
  if (arg.find_first_of(" \t\"") == std::string::npos && !arg.empty())
    return arg;
  std::string quoted = "\"";
  for (char c : arg) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qadd::error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw qadd::error("failed while writing '" + path + "'");
}

// Every emitted result file starts with this snapshot: the exact invocation,
// tool version, timestamp (pinned by SOURCE_DATE_EPOCH for reproducible
// runs), seed, and the active config values.
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;

  Manifest(const std::vector<std::string>& args, std::uint64_t seed) {
    std::string command = "qadd";
    for (const auto& arg : args) command += " " + quote_arg(arg);
    entries.emplace_back("command", command);
    entries.emplace_back("version", kVersion);
    entries.emplace_back("timestamp", manifest_timestamp());
    entries.emplace_back("seed", std::to_string(seed));
  }

  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }

  // key=value lines from a describe_* block, prefixed with a namespace.
  void add_block(const std::string& prefix, const std::string& block) {
    for (const auto& line : nonempty_lines(block)) {
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      entries.emplace_back(prefix + "." + line.substr(0, eq),
                           line.substr(eq + 1));
    }
  }

  std::string comment_block() const {
    std::string out;
    for (const auto& [key, value] : entries) out += key + "=" + value + "\n";
    return out;
  }

  std::string csv_header() const {
    std::string out;
    for (const auto& [key, value] : entries)
      out += "# " + key + "=" + value + "\n";
    return out;
  }

  json to_json() const {
    json j = json::object();
    for (const auto& [key, value] : entries) j[key] = value;
    return j;
  }
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string noise_path;
  std::string format = "csv";
  std::string out_path;
};

noise::NoiseModel builtin_advanced_model() {
  noise::NoiseModel model;
  model.p_damp = 0.003;
  model.p_dephase = 0.003;
  model.f_cnot = 0.99;
  model.f_flip = 0.99;
  model.t1_readout = true;
  model.insertion = noise::Insertion::readout;
  return model;
}

// --- table rendering ---------------------------------------------------------

// Cells carrying both a computed and a reference value expand to three
// output columns (value, reference, absolute deviation); single-sided cells
// stay one column.
struct FlatTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

FlatTable flatten_table(const tables::TableDoc& doc, bool four_dp) {
  const auto fmt = four_dp ? fmt4 : fmt12;
  FlatTable flat;
  flat.header.push_back(doc.number == 2 || doc.number == 4 ? "measurement"
                                                           : "input");
  if (doc.rows.empty()) return flat;
  for (std::size_t j = 0; j < doc.columns.size(); ++j) {
    const auto& cell = doc.rows.front().cells[j];
    if (cell.computed && cell.reference) {
      flat.header.push_back(doc.columns[j]);
      flat.header.push_back(doc.columns[j] + "_ref");
      flat.header.push_back(doc.columns[j] + "_dev");
    } else {
      flat.header.push_back(doc.columns[j]);
    }
  }
  for (const auto& row : doc.rows) {
    std::vector<std::string> out;
    out.push_back(row.label);
    for (const auto& cell : row.cells) {
      if (cell.computed) out.push_back(fmt(*cell.computed));
      if (cell.reference) out.push_back(fmt(*cell.reference));
      if (auto dev = cell.deviation()) out.push_back(fmt(*dev));
    }
    flat.rows.push_back(std::move(out));
  }
  return flat;
}

std::string render_table_text(const tables::TableDoc& doc) {
  const FlatTable flat = flatten_table(doc, true);
  std::vector<std::size_t> widths(flat.header.size(), 0);
  for (std::size_t j = 0; j < flat.header.size(); ++j)
    widths[j] = flat.header[j].size();
  for (const auto& row : flat.rows)
    for (std::size_t j = 0; j < row.size(); ++j)
      widths[j] = std::max(widths[j], row[j].size());

  std::ostringstream out;
  out << "table " << doc.number << "  profile="
      << (doc.profile == tables::Profile::ideal ? "ideal" : "advanced")
      << "\n";
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << "  ";
      out << row[j];
      if (j + 1 < row.size())
        out << std::string(widths[j] - row[j].size(), ' ');
    }
    out << "\n";
  };
  emit_row(flat.header);
  for (const auto& row : flat.rows) emit_row(row);
  for (const auto& note : doc.footnotes) out << "note: " << note << "\n";
  return out.str();
}

std::string render_table_csv(const tables::TableDoc& doc,
                             const Manifest& manifest) {
  const FlatTable flat = flatten_table(doc, true);
  std::string out = manifest.csv_header();
  for (std::size_t j = 0; j < flat.header.size(); ++j) {
    if (j > 0) out += ',';
    out += csv_field(flat.header[j]);
  }
  out += '\n';
  for (const auto& row : flat.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += csv_field(row[j]);
    }
    out += '\n';
  }
  for (const auto& note : doc.footnotes) out += "# note: " + note + "\n";
  return out;
}

std::string render_table_json(const tables::TableDoc& doc,
                              const Manifest& manifest) {
  json j;
  j["manifest"] = manifest.to_json();
  j["table"] = doc.number;
  j["profile"] = doc.profile == tables::Profile::ideal ? "ideal" : "advanced";
  j["columns"] = doc.columns;
  j["rows"] = json::array();
  for (const auto& row : doc.rows) {
    json cells = json::array();
    for (const auto& cell : row.cells) {
      json c = json::object();
      if (cell.computed) c["computed"] = *cell.computed;
      if (cell.reference) c["reference"] = *cell.reference;
      if (auto dev = cell.deviation()) c["deviation"] = *dev;
      cells.push_back(std::move(c));
    }
    j["rows"].push_back(json{{"label", row.label}, {"cells", cells}});
  }
  j["footnotes"] = doc.footnotes;
  return j.dump(2) + "\n";
}

// --- argument parsing helpers ------------------------------------------------

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> angles;
  if (text.empty()) return angles;
  for (const auto& token : split(text, ',')) {
    try {
      angles.push_back(qct::parse_angle(token));
    } catch (const qadd::error& e) {
      throw config_error("bad angle '" + token + "': " + e.what());
    }
  }
  return angles;
}

std::vector<int> parse_qubit_list(const std::string& text, int n_qubits) {
  std::vector<int> qubits;
  for (const auto& token : split(text, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw config_error("bad qubit index '" + token + "'");
    }
    if (used != token.size())
      throw config_error("bad qubit index '" + token + "'");
    if (value < 1 || value > n_qubits)
      throw config_error("qubit index " + std::to_string(value) +
                         " outside register 1.." + std::to_string(n_qubits));
    qubits.push_back(value);
  }
  return qubits;
}

noise::NoiseModel load_model_or(const GlobalOptions& global,
                                const noise::NoiseModel& fallback) {
  if (global.noise_path.empty()) return fallback;
  return noise::load_noise_config(global.noise_path);
}

// --- commands ------------------------------------------------------------------

struct TableArgs {
  int number = 1;
  std::string profile = "ideal";
  std::string adder_path;
  std::uint64_t shots = 0;
};

int cmd_table(const TableArgs& args, const GlobalOptions& global,
              const std::vector<std::string>& raw_args) {
  tables::TableRequest request;
  request.number = args.number;
  request.shots = args.shots;
  request.seed = global.seed;

  Manifest manifest(raw_args, global.seed);
  manifest.add("table", std::to_string(args.number));
  manifest.add("profile", args.profile);

  if (args.profile == "advanced") {
    request.profile = tables::Profile::advanced;
    request.model = load_model_or(global, builtin_advanced_model());
    manifest.add_block("noise", noise::describe_model(request.model));
  } else {
    request.profile = tables::Profile::ideal;
    if (!global.noise_path.empty())
      throw config_error("--noise requires --profile advanced");
  }
  if (args.shots > 0) manifest.add("shots", std::to_string(args.shots));

  adders::AdderSpec adder;
  if (!args.adder_path.empty()) {
    adder.circuit = qct::parse_file(args.adder_path);
    adder.label = path_stem(args.adder_path);
    request.adder = &adder;
    manifest.add("adder", args.adder_path);
  }

  const tables::TableDoc doc = tables::make_table(request);
  std::cout << render_table_text(doc);
  if (!global.out_path.empty()) {
    const std::string payload = global.format == "json"
                                    ? render_table_json(doc, manifest)
                                    : render_table_csv(doc, manifest);
    write_text_file(global.out_path, payload);
    std::cout << "wrote " << global.out_path << "\n";
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string circuit_path;
  std::string input;
  std::string measure;
  std::uint64_t shots = 0;
};

int cmd_simulate(const SimulateArgs& args, const GlobalOptions& global,
                 const std::vector<std::string>& raw_args) {
  const gates::Circuit circuit = qct::parse_file(args.circuit_path);

  std::vector<double> angles = parse_angle_list(args.input);
  if (static_cast<int>(angles.size()) > circuit.n_qubits)
    throw config_error("--input lists " + std::to_string(angles.size()) +
                       " angles for a " + std::to_string(circuit.n_qubits) +
                       "-qubit circuit");
  angles.resize(static_cast<std::size_t>(circuit.n_qubits), 0.0);
  const sim::StateVector input = sim::product_state(angles);

  std::vector<int> measured;
  if (args.measure.empty()) {
    for (int q = 1; q <= circuit.n_qubits; ++q) measured.push_back(q);
  } else {
    measured = parse_qubit_list(args.measure, circuit.n_qubits);
  }

  Manifest manifest(raw_args, global.seed);
  manifest.add("circuit", args.circuit_path);

  sim::Distribution dist;
  if (!global.noise_path.empty()) {
    const noise::NoiseModel model =
        noise::load_noise_config(global.noise_path);
    sim::DensityMatrix rho =
        noise::noisy_run(circuit, model, sim::to_density(input));
    rho = noise::apply_t1_readout(rho, model, measured);
    dist = sim::measurement_distribution(rho, measured);
    dist = noise::apply_readout_error(dist, model);
    manifest.add_block("noise", noise::describe_model(model));
  } else {
    dist = sim::measurement_distribution(sim::run_circuit(circuit, input),
                                         measured);
  }

  std::string measured_list;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    if (i > 0) measured_list += ',';
    measured_list += std::to_string(measured[i]);
  }
  manifest.add("measured", measured_list);

  std::string csv = manifest.csv_header();
  json j;
  j["manifest"] = manifest.to_json();
  j["qubits"] = circuit.n_qubits;
  j["measured"] = measured;
  if (args.shots > 0) {
    const sim::ShotHistogram hist =
        sim::sample_shots(dist, args.shots, global.seed);
    const sim::Distribution freq = hist.frequencies();
    csv += "outcome,count,frequency\n";
    j["shots"] = args.shots;
    j["outcomes"] = json::array();
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
      csv += hist.label(i) + "," + std::to_string(hist.counts[i]) + "," +
             fmt12(freq.probs[i]) + "\n";
      j["outcomes"].push_back(json{{"outcome", hist.label(i)},
                                   {"count", hist.counts[i]},
                                   {"frequency", freq.probs[i]}});
    }
  } else {
    csv += "outcome,probability\n";
    j["outcomes"] = json::array();
    for (std::size_t i = 0; i < dist.size(); ++i) {
      csv += dist.label(i) + "," + fmt12(dist.probs[i]) + "\n";
      j["outcomes"].push_back(
          json{{"outcome", dist.label(i)}, {"probability", dist.probs[i]}});
    }
  }

  std::cout << csv;
  if (!global.out_path.empty()) {
    const std::string payload =
        global.format == "json" ? j.dump(2) + "\n" : csv;
    write_text_file(global.out_path, payload);
    std::cout << "wrote " << global.out_path << "\n";
  }
  return kExitOk;
}

struct GaArgs {
  std::string config_path;
  bool seed_overridden = false;
};

int cmd_ga(const GaArgs& args, const GlobalOptions& global,
           const std::vector<std::string>& raw_args) {
  ga::GaConfig config;
  if (!args.config_path.empty()) {
    config = ga::load_ga_config(args.config_path);
  } else {
    config.grid = ga::GaConfig::default_grid();
  }
  if (args.seed_overridden) config.seed = global.seed;
  ga::validate_config(config);

  std::optional<noise::NoiseModel> model;
  if (!global.noise_path.empty())
    model = noise::load_noise_config(global.noise_path);

  const ga::GaResult result =
      ga::evolve(config, model ? &*model : nullptr);

  const int nominal =
      gates::cnot_count(result.best_circuit, gates::CnotConvention::nominal);
  const int transpiled = gates::cnot_count(result.best_circuit,
                                           gates::CnotConvention::transpiled);

  const std::string prefix =
      global.out_path.empty() ? "evolved_adder" : global.out_path;
  const std::string circuit_path = prefix + ".qc";
  const std::string history_path = prefix + "_history.csv";

  Manifest manifest(raw_args, config.seed);
  manifest.add_block("ga", ga::describe_config(config));
  if (model) manifest.add_block("noise", noise::describe_model(*model));
  manifest.add("average_fidelity", fmt12(result.average));
  manifest.add("minimum_fidelity", fmt12(result.minimum));
  manifest.add("min_input", fmt12(result.min_input.first) + ":" +
                                fmt12(result.min_input.second));
  manifest.add("gates", std::to_string(result.best_circuit.gates.size()));
  manifest.add("cnot_nominal", std::to_string(nominal));
  manifest.add("cnot_transpiled", std::to_string(transpiled));

  qct::write_file(circuit_path, result.best_circuit,
                  manifest.comment_block());

  std::string history = manifest.csv_header();
  history += "generation,best_fitness\n";
  for (std::size_t i = 0; i < result.history.size(); ++i)
    history += std::to_string(i) + "," + fmt12(result.history[i]) + "\n";
  write_text_file(history_path, history);

  std::cout << "best circuit: " << result.best_circuit.gates.size()
            << " gates, cnot_nominal=" << nominal
            << ", cnot_transpiled=" << transpiled << "\n"
            << "grid average fidelity = " << fmt12(result.average) << "\n"
            << "minimum fidelity = " << fmt12(result.minimum) << " at input ("
            << fmt12(result.min_input.first) << ", "
            << fmt12(result.min_input.second) << ")\n"
            << "wrote " << circuit_path << "\n"
            << "wrote " << history_path << "\n";
  return kExitOk;
}

struct TranspileArgs {
  std::string circuit_path;
};

int cmd_transpile(const TranspileArgs& args, const GlobalOptions& global,
                  const std::vector<std::string>& raw_args) {
  const gates::Circuit circuit = qct::parse_file(args.circuit_path);
  const gates::Circuit lowered = gates::transpile(circuit);

  const int nominal =
      gates::cnot_count(circuit, gates::CnotConvention::nominal);
  const int transpiled =
      gates::cnot_count(circuit, gates::CnotConvention::transpiled);

  // Equivalence is a hard guarantee of the lowering, so a violation is a bug
  // in this tool, not bad input. Dense verification needs 2^n x 2^n matrices,
  // hence the register-width cutoff.
  std::string equivalence;
  if (circuit.n_qubits <= 8) {
    const double deviation = gates::phase_aligned_distance(
        gates::circuit_unitary(circuit), gates::circuit_unitary(lowered));
    if (deviation > 1e-8)
      throw internal_error(
          "lowered circuit deviates from the original by " +
          fmt12(deviation));
    equivalence = "verified max_deviation=" + fmt12(deviation);
  } else {
    equivalence = "skipped reason=register wider than 8 qubits";
  }

  std::ostringstream stats;
  stats << "gates_in=" << circuit.gates.size() << "\n"
        << "gates_out=" << lowered.gates.size() << "\n"
        << "cnot_nominal=" << nominal << "\n"
        << "cnot_transpiled=" << transpiled << "\n"
        << "equivalence=" << equivalence << "\n";

  if (!global.out_path.empty()) {
    Manifest manifest(raw_args, global.seed);
    manifest.add("source", args.circuit_path);
    qct::write_file(global.out_path, lowered,
                    manifest.comment_block() + stats.str());
    std::cout << stats.str() << "wrote " << global.out_path << "\n";
  } else {
    for (const auto& line : nonempty_lines(stats.str()))
      std::cout << "# " << line << "\n";
    std::cout << qct::serialize(lowered);
  }
  return kExitOk;
}

struct EncodeGateArgs {
  std::string gate;
};

int cmd_encode_gate(const EncodeGateArgs& args, const GlobalOptions& global,
                    const std::vector<std::string>& raw_args) {
  const adders::GateEncodingResult result =
      adders::encode_gate_named(args.gate);

  Manifest manifest(raw_args, global.seed);

  std::string text;
  text += "gate=" + args.gate + "\n";
  text += std::string("solvable=") + (result.solvable ? "true" : "false") +
          "\n";
  json j;
  j["manifest"] = manifest.to_json();
  j["gate"] = args.gate;
  j["solvable"] = result.solvable;
  if (result.solvable) {
    text += "a=" + format_complex(result.a) + "\n";
    text += "u_tilde=[[" + format_complex(result.u_tilde(0, 0)) + ", " +
            format_complex(result.u_tilde(0, 1)) + "], [" +
            format_complex(result.u_tilde(1, 0)) + ", " +
            format_complex(result.u_tilde(1, 1)) + "]]\n";
    j["a"] = complex_json(result.a);
    j["u_tilde"] = json::array(
        {json::array({complex_json(result.u_tilde(0, 0)),
                      complex_json(result.u_tilde(0, 1))}),
         json::array({complex_json(result.u_tilde(1, 0)),
                      complex_json(result.u_tilde(1, 1))})});
  } else {
    text += "reason=" + result.reason + "\n";
    j["reason"] = result.reason;
  }

  std::cout << text;
  if (!global.out_path.empty()) {
    const std::string payload = global.format == "json"
                                    ? j.dump(2) + "\n"
                                    : manifest.csv_header() + text;
    write_text_file(global.out_path, payload);
    std::cout << "wrote " << global.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

std::string manifest_timestamp() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch == nullptr || *epoch == '\0') return "unset";
  char* end = nullptr;
  const long long seconds = std::strtoll(epoch, &end, 10);
  if (end == epoch || *end != '\0') return "unset";
  const std::time_t t = static_cast<std::time_t>(seconds);
  std::tm utc{};
  if (gmtime_r(&t, &utc) == nullptr) return "unset";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                utc.tm_year + 1900, utc.tm_mon + 1, utc.tm_mday, utc.tm_hour,
                utc.tm_min, utc.tm_sec);
  return buf;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"3-qubit quantum adder / autoencoder experiment harness"};
  app.name("qadd");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GlobalOptions global;
  CLI::Option* seed_opt =
      app.add_option("--seed", global.seed, "RNG seed for sampling/search")
          ->capture_default_str();
  app.add_option("--noise", global.noise_path,
                 "noise config file (key=value)");
  app.add_option("--format", global.format, "result file format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", global.out_path,
                 "result file path (ga: output prefix)");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "compute one of the five bundled result tables");
  table->fallthrough();
  table->add_option("number", table_args.number, "table number")
      ->required()
      ->check(CLI::Range(1, 5));
  table->add_option("--profile", table_args.profile,
                    "noise profile: exact execution or forecast model")
      ->check(CLI::IsMember({"ideal", "advanced"}))
      ->capture_default_str();
  table->add_option("--adder", table_args.adder_path,
                    "circuit file for tables 4/5 (search-produced adder)");
  table->add_option("--shots", table_args.shots,
                    "sample counts instead of exact distributions (tables "
                    "2/4)");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a circuit file and print the outcome distribution");
  simulate->fallthrough();
  simulate->add_option("circuit", sim_args.circuit_path, "circuit file (.qc)")
      ->required();
  simulate->add_option(
      "--input", sim_args.input,
      "comma-separated angles; qubit i starts as cos(a_i)|0>+sin(a_i)|1>, "
      "missing angles are 0");
  simulate->add_option("--measure", sim_args.measure,
                       "comma-separated qubits to measure (default: all)");
  simulate->add_option("--shots", sim_args.shots,
                       "sample a histogram instead of exact probabilities");

  GaArgs ga_args;
  CLI::App* ga_cmd = app.add_subcommand(
      "ga", "genetic search for a low-CNOT adder circuit");
  ga_cmd->fallthrough();
  ga_cmd->add_option("--config", ga_args.config_path,
                     "search config file (key=value)");

  TranspileArgs transpile_args;
  CLI::App* transpile = app.add_subcommand(
      "transpile", "lower a circuit to the {U1, U3, CNOT} basis");
  transpile->fallthrough();
  transpile
      ->add_option("circuit", transpile_args.circuit_path,
                   "circuit file (.qc)")
      ->required();

  EncodeGateArgs encode_args;
  CLI::App* encode_gate = app.add_subcommand(
      "encode-gate",
      "decide whether a controlled gate survives the encode/decode pipeline "
      "as a single-qubit gate");
  encode_gate->fallthrough();
  encode_gate
      ->add_option("gate", encode_args.gate,
                   "gate spec: CZ, CS, CSDG, CT, CTDG, CNOT, CH, SWAP, "
                   "U1(<angle>), CU1(<angle>), or a single-qubit name")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    auto parsed = app.get_subcommands();
    while (!parsed.empty()) {
      target = parsed.front();
      parsed = parsed.front()->get_subcommands();
    }
    std::cout << target->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  ga_args.seed_overridden = seed_opt->count() > 0;

  try {
    if (table->parsed()) return cmd_table(table_args, global, args);
    if (simulate->parsed()) return cmd_simulate(sim_args, global, args);
    if (ga_cmd->parsed()) return cmd_ga(ga_args, global, args);
    if (transpile->parsed())
      return cmd_transpile(transpile_args, global, args);
    if (encode_gate->parsed())
      return cmd_encode_gate(encode_args, global, args);
    std::cerr << "usage error: no command given\n";
    return kExitUsage;
  } catch (const qadd::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const qadd::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qadd::cli
