#pragma once

#include <string>

#include "qadd/gates.hpp"
#include "qadd/sim.hpp"

namespace qadd::noise {

// Where the damping+dephasing pair is inserted during noisy execution:
//   per_gate_lowered — CCNOT/CH are expanded to their decompositions first,
//                      then every gate is followed by the pair on each qubit
//                      it touches (the default).
//   per_gate         — same, but composite gates stay composite.
//   readout          — the circuit runs unitarily and the pair is applied
//                      once to every qubit at the end, modeling hardware
//                      whose dominant error is at readout. The shipped
//                      "advanced" profile uses this; it is what reproduces
//                      the bundled reference forecast tables.
enum class Insertion { per_gate_lowered, per_gate, readout };

struct NoiseModel {
  double p_damp = 0.0;     // |1> -> |0> decay probability per insertion
  double p_dephase = 0.0;  // phase-flip probability per insertion
  double f_cnot = 1.0;     // CNOT process fidelity (forecast factor only)
  double f_flip = 1.0;     // readout stay-probability p00 = p11
  bool t1_readout = false; // extra damping on measured qubits before readout
  Insertion insertion = Insertion::per_gate_lowered;
};

void validate_model(const NoiseModel& model);  // probabilities in [0,1]

// Amplitude damping: K1 = diag(1, sqrt(1-p)), K2 = [[0, sqrt(p)], [0, 0]].
sim::KrausChannel amplitude_damping(double p);

// Dephasing: K1 = sqrt(1-p)·I, K2 = diag(sqrt(p), -sqrt(p)); off-diagonal
// entries scale by (1-2p).
sim::KrausChannel dephasing(double p);

// Density-matrix execution with damping+dephasing inserted per
// model.insertion. f_cnot/f_flip do not enter here — they are multiplicative
// forecast factors (see advanced_fidelity / apply_readout_error).
sim::DensityMatrix noisy_run(const gates::Circuit& c, const NoiseModel& model,
                             const sim::DensityMatrix& input);

// The pre-measurement damping hook ("T1 readout"): damping(p_damp) on each
// measured qubit. Under readout insertion this is already part of noisy_run
// and must not be applied again; measurement pipelines call this helper,
// which no-ops in that case or when t1_readout is off.
sim::DensityMatrix apply_t1_readout(const sim::DensityMatrix& rho,
                                    const NoiseModel& model,
                                    const std::vector<int>& measured);

// Classical readout bit-flip: each measured bit keeps its value with
// probability f_flip, independently.
sim::Distribution apply_readout_error(const sim::Distribution& dist,
                                      const NoiseModel& model);

// Multiplicative forecast f_tilde * f_cnot^n_cnot * f_flip.
double advanced_fidelity(double f_tilde, double f_cnot, int n_cnot,
                         double f_flip);

// Flat key=value config (keys p_damp, p_dephase, f_cnot, f_flip, t1_readout,
// insertion). Unknown keys are config errors.
NoiseModel load_noise_config(const std::string& path);
NoiseModel parse_noise_config(const std::string& text);

const std::string& insertion_name(Insertion ins);
Insertion insertion_from_name(const std::string& name);

// Model snapshot as "key=value" lines (manifest embedding).
std::string describe_model(const NoiseModel& model);

}  // namespace qadd::noise
