#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qadd/adders.hpp"
#include "qadd/gates.hpp"
#include "qadd/noise.hpp"

namespace qadd::ga {

// Search alphabet. CH is allowed without counting against the CNOT budget
// (the nominal tally treats it as free); CCNOT is deliberately absent.
enum class GeneKind {
  I,
  X,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  RX,
  RY,
  RZ,
  CNOT,
  CH,
};

inline constexpr int kGeneKinds = 13;

bool gene_is_two_qubit(GeneKind kind);
bool gene_has_angle(GeneKind kind);

// One instruction: single-qubit genes use `a` as target; two-qubit genes use
// `a` as control and `b` as target.
struct Gene {
  GeneKind kind = GeneKind::I;
  int a = 1;
  int b = 2;
  double angle = 0.0;

  bool operator==(const Gene&) const = default;
};

struct Genome {
  std::vector<Gene> genes;

  bool operator==(const Genome&) const = default;
};

struct GaConfig {
  int population = 100;
  int generations = 300;
  int tournament = 3;
  int elitism = 1;
  double mutation_rate = 0.1;   // per-gene probability, per mutation kind
  double angle_sigma = 0.1;     // radians, gaussian angle jitter
  int gate_limit = 20;          // genome capacity
  int cnot_budget = 2;
  std::uint64_t seed = 42;
  std::vector<std::pair<double, double>> grid;  // defaults to the 5x5 grid

  static std::vector<std::pair<double, double>> default_grid();
};

void validate_config(const GaConfig& config);

struct GaResult {
  Genome best;
  gates::Circuit best_circuit;
  std::vector<double> history;  // best fitness after each generation
  double average = 0.0;         // grid-average fidelity of the best circuit
  double minimum = 0.0;
  std::pair<double, double> min_input{0.0, 0.0};
};

// Maps active genes in order onto a 3-qubit circuit. Throws constraint_error
// when the genome exceeds the CNOT budget or the gate limit.
gates::Circuit decode_genome(const Genome& genome, int cnot_budget = 2,
                             int gate_limit = 20);

// Mean adder fidelity of the decoded circuit over the grid; equals
// adders::grid_average_fidelity(decode_genome(g), grid).average.
double fitness(const Genome& genome, const GaConfig& config,
               const noise::NoiseModel* model = nullptr);

// Tournament selection, single-point crossover, per-gene mutation (gate-id
// resample, operand resample, gaussian angle jitter), elitism, and CNOT
// budget repair. Deterministic for a fixed seed; per-individual RNG streams
// are derived from (seed, generation, slot) so evaluation order never
// matters.
GaResult evolve(const GaConfig& config,
                const noise::NoiseModel* model = nullptr);

struct AutoencoderCircuits {
  adders::AdderSpec encoder;
  gates::Circuit decoder;  // dagger of the encoder circuit
};

AutoencoderCircuits ga_autoencoder(const GaResult& result);

// Flat key=value config file: population, generations, tournament, elitism,
// mutation_rate, angle_sigma, gate_limit, cnot_budget, seed, grid_axis
// (comma-separated angles; the grid is the cartesian square of the axis).
GaConfig load_ga_config(const std::string& path);
GaConfig parse_ga_config(const std::string& text);
std::string describe_config(const GaConfig& config);

}  // namespace qadd::ga
