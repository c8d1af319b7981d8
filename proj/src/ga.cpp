#include "qadd/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qadd/kvfile.hpp"
#include "qadd/qct.hpp"
#include "qadd/sim.hpp"

namespace qadd::ga {

namespace {

using std::numbers::pi;

constexpr int kQubits = 3;
constexpr int kSingleKinds = 11;  // GeneKind::I .. GeneKind::RZ

GeneKind kind_from_index(int index) { return static_cast<GeneKind>(index); }

int other_qubit(sim::Rng& rng, int a) {
  // One of the two register qubits that are not `a`, picked uniformly.
  int candidates[2] = {0, 0};
  int count = 0;
  for (int q = 1; q <= kQubits; ++q) {
    if (q != a) candidates[count++] = q;
  }
  return candidates[rng.below(2)];
}

double random_angle(sim::Rng& rng) { return (rng.uniform() * 2.0 - 1.0) * pi; }

Gene random_single_gene(sim::Rng& rng) {
  Gene gene;
  gene.kind = kind_from_index(static_cast<int>(rng.below(kSingleKinds)));
  gene.a = 1 + static_cast<int>(rng.below(kQubits));
  if (gene_has_angle(gene.kind)) gene.angle = random_angle(rng);
  return gene;
}

Gene random_gene(sim::Rng& rng) {
  Gene gene;
  gene.kind = kind_from_index(static_cast<int>(rng.below(kGeneKinds)));
  gene.a = 1 + static_cast<int>(rng.below(kQubits));
  if (gene_is_two_qubit(gene.kind)) {
    gene.b = other_qubit(rng, gene.a);
  }
  if (gene_has_angle(gene.kind)) gene.angle = random_angle(rng);
  return gene;
}

// Replaces CNOT genes beyond the budget (left to right) with random
// single-qubit genes, keeping the whole population feasible.
void repair(Genome& genome, int cnot_budget, sim::Rng& rng) {
  int cnots = 0;
  for (Gene& gene : genome.genes) {
    if (gene.kind != GeneKind::CNOT) continue;
    ++cnots;
    if (cnots > cnot_budget) gene = random_single_gene(rng);
  }
}

void mutate(Genome& genome, const GaConfig& config, sim::Rng& rng) {
  for (Gene& gene : genome.genes) {
    if (rng.uniform() < config.mutation_rate) {
      gene.kind = kind_from_index(static_cast<int>(rng.below(kGeneKinds)));
      if (gene_is_two_qubit(gene.kind) && gene.b == gene.a) {
        gene.b = other_qubit(rng, gene.a);
      }
    }
    if (rng.uniform() < config.mutation_rate) {
      gene.a = 1 + static_cast<int>(rng.below(kQubits));
      if (gene_is_two_qubit(gene.kind)) {
        gene.b = other_qubit(rng, gene.a);
      }
    }
    if (rng.uniform() < config.mutation_rate && gene_has_angle(gene.kind)) {
      gene.angle += rng.gaussian(config.angle_sigma);
    }
  }
}

Genome crossover(const Genome& p1, const Genome& p2, sim::Rng& rng) {
  if (p1.genes.size() != p2.genes.size()) {
    throw internal_error("crossover parents have different capacities");
  }
  const std::size_t cut = rng.below(p1.genes.size() + 1);
  Genome child;
  child.genes.reserve(p1.genes.size());
  child.genes.assign(p1.genes.begin(),
                     p1.genes.begin() + static_cast<std::ptrdiff_t>(cut));
  child.genes.insert(child.genes.end(),
                     p2.genes.begin() + static_cast<std::ptrdiff_t>(cut),
                     p2.genes.end());
  return child;
}

std::size_t tournament_pick(const std::vector<double>& fits,
                            int tournament_size, sim::Rng& rng) {
  std::size_t best = rng.below(fits.size());
  for (int round = 1; round < tournament_size; ++round) {
    const std::size_t challenger = rng.below(fits.size());
    if (fits[challenger] > fits[best]) best = challenger;
  }
  return best;
}

std::vector<std::size_t> ranked_indices(const std::vector<double>& fits) {
  std::vector<std::size_t> order(fits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return fits[a] > fits[b];
                   });
  return order;
}

const std::vector<std::pair<double, double>>& effective_grid(
    const GaConfig& config) {
  if (!config.grid.empty()) return config.grid;
  static const std::vector<std::pair<double, double>> fallback =
      GaConfig::default_grid();
  return fallback;
}

}  // namespace

bool gene_is_two_qubit(GeneKind kind) {
  return kind == GeneKind::CNOT || kind == GeneKind::CH;
}

bool gene_has_angle(GeneKind kind) {
  return kind == GeneKind::RX || kind == GeneKind::RY || kind == GeneKind::RZ;
}

std::vector<std::pair<double, double>> GaConfig::default_grid() {
  const std::vector<double> axis = {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0,
                                    pi / 2.0};
  std::vector<std::pair<double, double>> grid;
  grid.reserve(axis.size() * axis.size());
  for (const double t1 : axis) {
    for (const double t2 : axis) grid.emplace_back(t1, t2);
  }
  return grid;
}

void validate_config(const GaConfig& config) {
  if (config.population < 2) {
    throw config_error("population must be at least 2");
  }
  if (config.generations < 1) {
    throw config_error("generations must be at least 1");
  }
  if (config.tournament < 1 || config.tournament > config.population) {
    throw config_error("tournament size must be in 1..population");
  }
  if (config.elitism < 0 || config.elitism > config.population) {
    throw config_error("elitism must be in 0..population");
  }
  if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
    throw config_error("mutation_rate must lie in [0, 1]");
  }
  if (!(config.angle_sigma >= 0.0)) {
    throw config_error("angle_sigma must be non-negative");
  }
  if (config.gate_limit < 1) {
    throw config_error("gate_limit must be at least 1");
  }
  if (config.cnot_budget < 0) {
    throw config_error("cnot_budget must be non-negative");
  }
}

gates::Circuit decode_genome(const Genome& genome, int cnot_budget,
                             int gate_limit) {
  if (static_cast<int>(genome.genes.size()) > gate_limit) {
    throw constraint_error("genome has " +
                           std::to_string(genome.genes.size()) +
                           " genes, exceeding the gate limit " +
                           std::to_string(gate_limit));
  }
  gates::Circuit circuit;
  circuit.n_qubits = kQubits;
  int cnots = 0;
  for (const Gene& gene : genome.genes) {
    switch (gene.kind) {
      case GeneKind::I:
        break;  // padding; contributes no gate
      case GeneKind::X:
        circuit.gates.push_back(gates::g1(gates::GateId::X, gene.a));
        break;
      case GeneKind::Z:
        circuit.gates.push_back(gates::g1(gates::GateId::Z, gene.a));
        break;
      case GeneKind::H:
        circuit.gates.push_back(gates::g1(gates::GateId::H, gene.a));
        break;
      case GeneKind::S:
        circuit.gates.push_back(gates::g1(gates::GateId::S, gene.a));
        break;
      case GeneKind::Sdg:
        circuit.gates.push_back(gates::g1(gates::GateId::Sdg, gene.a));
        break;
      case GeneKind::T:
        circuit.gates.push_back(gates::g1(gates::GateId::T, gene.a));
        break;
      case GeneKind::Tdg:
        circuit.gates.push_back(gates::g1(gates::GateId::Tdg, gene.a));
        break;
      case GeneKind::RX:
        circuit.gates.push_back(
            gates::g1p(gates::GateId::RX, gene.angle, gene.a));
        break;
      case GeneKind::RY:
        circuit.gates.push_back(
            gates::g1p(gates::GateId::RY, gene.angle, gene.a));
        break;
      case GeneKind::RZ:
        circuit.gates.push_back(
            gates::g1p(gates::GateId::RZ, gene.angle, gene.a));
        break;
      case GeneKind::CNOT:
        ++cnots;
        circuit.gates.push_back(gates::gcnot(gene.a, gene.b));
        break;
      case GeneKind::CH:
        circuit.gates.push_back(gates::gch(gene.a, gene.b));
        break;
    }
    if (cnots > cnot_budget) {
      throw constraint_error("genome uses " + std::to_string(cnots) +
                             " CNOT genes, exceeding the budget " +
                             std::to_string(cnot_budget));
    }
  }
  for (const auto& g : circuit.gates) gates::validate_gate(g, kQubits);
  return circuit;
}

double fitness(const Genome& genome, const GaConfig& config,
               const noise::NoiseModel* model) {
  const gates::Circuit circuit =
      decode_genome(genome, config.cnot_budget, config.gate_limit);
  return adders::grid_average_fidelity(circuit, effective_grid(config), model)
      .average;
}

GaResult evolve(const GaConfig& config, const noise::NoiseModel* model) {
  validate_config(config);
  const auto& grid = effective_grid(config);
  const std::size_t pop_size = static_cast<std::size_t>(config.population);
  const std::size_t capacity = static_cast<std::size_t>(config.gate_limit);

  const auto evaluate = [&](const Genome& genome) {
    return adders::grid_average_fidelity(
               decode_genome(genome, config.cnot_budget, config.gate_limit),
               grid, model)
        .average;
  };

  // Generation 0: random fixed-capacity genomes, repaired to the budget.
  std::vector<Genome> pop(pop_size);
  for (std::size_t slot = 0; slot < pop_size; ++slot) {
    sim::Rng rng(sim::mix_seed(config.seed, 0, slot));
    pop[slot].genes.resize(capacity);
    for (Gene& gene : pop[slot].genes) gene = random_gene(rng);
    repair(pop[slot], config.cnot_budget, rng);
  }

  std::vector<double> fits(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) fits[i] = evaluate(pop[i]);

  GaResult result;
  std::size_t best_idx = static_cast<std::size_t>(
      std::max_element(fits.begin(), fits.end()) - fits.begin());
  result.best = pop[best_idx];
  double best_fit = fits[best_idx];
  result.history.push_back(best_fit);

  for (int gen = 1; gen <= config.generations; ++gen) {
    const auto order = ranked_indices(fits);
    std::vector<Genome> next(pop_size);
    for (int e = 0; e < config.elitism; ++e) {
      next[static_cast<std::size_t>(e)] = pop[order[static_cast<std::size_t>(e)]];
    }
    for (std::size_t slot = static_cast<std::size_t>(config.elitism);
         slot < pop_size; ++slot) {
      sim::Rng rng(
          sim::mix_seed(config.seed, static_cast<std::uint64_t>(gen), slot));
      const Genome& p1 = pop[tournament_pick(fits, config.tournament, rng)];
      const Genome& p2 = pop[tournament_pick(fits, config.tournament, rng)];
      Genome child = crossover(p1, p2, rng);
      mutate(child, config, rng);
      repair(child, config.cnot_budget, rng);
      next[slot] = std::move(child);
    }
    pop = std::move(next);
    for (std::size_t i = 0; i < pop_size; ++i) fits[i] = evaluate(pop[i]);
    best_idx = static_cast<std::size_t>(
        std::max_element(fits.begin(), fits.end()) - fits.begin());
    if (fits[best_idx] > best_fit) {
      best_fit = fits[best_idx];
      result.best = pop[best_idx];
    }
    result.history.push_back(best_fit);
  }

  result.best_circuit =
      decode_genome(result.best, config.cnot_budget, config.gate_limit);
  result.best_circuit.name = "evolved_adder";
  const adders::GridFidelity summary =
      adders::grid_average_fidelity(result.best_circuit, grid, model);
  result.average = summary.average;
  result.minimum = summary.minimum;
  result.min_input = summary.min_input;
  return result;
}

AutoencoderCircuits ga_autoencoder(const GaResult& result) {
  AutoencoderCircuits circuits;
  circuits.encoder.circuit = result.best_circuit;
  circuits.encoder.circuit.name = "evolved_adder";
  circuits.encoder.label = "evolved_adder";
  circuits.decoder = gates::dagger_circuit(circuits.encoder.circuit);
  return circuits;
}

GaConfig load_ga_config(const std::string& path) {
  return parse_ga_config(kv::read_text_file(path));
}

GaConfig parse_ga_config(const std::string& text) {
  auto entries = kv::parse(text);
  GaConfig config;
  config.population = static_cast<int>(
      kv::take_int(entries, "population", config.population));
  config.generations = static_cast<int>(
      kv::take_int(entries, "generations", config.generations));
  config.tournament = static_cast<int>(
      kv::take_int(entries, "tournament", config.tournament));
  config.elitism =
      static_cast<int>(kv::take_int(entries, "elitism", config.elitism));
  config.mutation_rate =
      kv::take_double(entries, "mutation_rate", config.mutation_rate);
  config.angle_sigma =
      kv::take_double(entries, "angle_sigma", config.angle_sigma);
  config.gate_limit = static_cast<int>(
      kv::take_int(entries, "gate_limit", config.gate_limit));
  config.cnot_budget = static_cast<int>(
      kv::take_int(entries, "cnot_budget", config.cnot_budget));
  const long long seed =
      kv::take_int(entries, "seed", static_cast<long long>(config.seed));
  if (seed < 0) throw config_error("seed must be non-negative");
  config.seed = static_cast<std::uint64_t>(seed);

  const std::string axis_text = kv::take_string(entries, "grid_axis", "");
  if (!axis_text.empty()) {
    std::vector<double> axis;
    std::istringstream stream(axis_text);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        axis.push_back(qct::parse_angle(token));
      } catch (const qadd::error& e) {
        throw config_error("grid_axis: " + std::string(e.what()));
      }
    }
    if (axis.empty()) throw config_error("grid_axis must list angles");
    config.grid.clear();
    for (const double t1 : axis) {
      for (const double t2 : axis) config.grid.emplace_back(t1, t2);
    }
  } else {
    config.grid = GaConfig::default_grid();
  }
  kv::reject_unknown(entries, "ga config");
  validate_config(config);
  return config;
}

std::string describe_config(const GaConfig& config) {
  std::ostringstream out;
  out.precision(12);
  out << "population=" << config.population << '\n'
      << "generations=" << config.generations << '\n'
      << "tournament=" << config.tournament << '\n'
      << "elitism=" << config.elitism << '\n'
      << "mutation_rate=" << config.mutation_rate << '\n'
      << "angle_sigma=" << config.angle_sigma << '\n'
      << "gate_limit=" << config.gate_limit << '\n'
      << "cnot_budget=" << config.cnot_budget << '\n'
      << "seed=" << config.seed << '\n';
  out << "grid=";
  const auto& grid = effective_grid(config);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out << ' ';
    out << grid[i].first << ':' << grid[i].second;
  }
  out << '\n';
  return out.str();
}

}  // namespace qadd::ga
