#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qadd/adders.hpp"
#include "qadd/noise.hpp"

namespace qadd::tables {

// The six (θ1, θ2) input rows used by the fidelity tables, in publication
// order: (0,0), (π/2,π/2), (π/2,0), (0,π/2), (π/4,π/4), (π/8,π/8).
const std::vector<std::pair<double, double>>& standard_inputs();
const std::vector<std::string>& standard_input_labels();

// The nine Pauli measurement pairs XX..ZZ used by the gate-encoding tables.
const std::vector<std::pair<adders::PauliBasis, adders::PauliBasis>>&
pauli_pairs();
const std::vector<std::string>& pauli_pair_labels();

enum class Profile { ideal, advanced };

// One computed-vs-reference cell. `hardware` cells carry only a reference
// (measured on real hardware; not reproducible here).
struct TableCell {
  std::optional<double> computed;
  std::optional<double> reference;

  std::optional<double> deviation() const;
};

struct TableRow {
  std::string label;
  std::vector<TableCell> cells;
};

struct TableDoc {
  int number = 0;
  Profile profile = Profile::ideal;
  std::vector<std::string> columns;  // one name per cell slot
  std::vector<TableRow> rows;
  std::vector<std::string> footnotes;
};

struct TableRequest {
  int number = 1;
  Profile profile = Profile::ideal;
  noise::NoiseModel model;              // used when profile == advanced
  const adders::AdderSpec* adder = nullptr;  // required for tables 4 and 5
  std::uint64_t shots = 0;              // 0 = exact distributions
  std::uint64_t seed = 0;
};

// Builds one of the five bundled tables:
//   1 — adder output fidelity vs the ideal sum, six inputs
//   2 — CZ encoding experiment (direct vs encoded), nine Pauli bases
//   3 — encode/decode round trip, six inputs
//   4 — like 2, for a supplied (search-produced) adder
//   5 — like 3, for a supplied adder
// Advanced profiles compute the forecast f_tilde * f_cnot^n * f_flip and
// footnote the gate-level-insertion f_tilde alongside the profile's, so the
// systematic gap between the two stays visible.
TableDoc make_table(const TableRequest& request);

// Bundled reference values (the "reference"/"hardware_reference" columns).
extern const std::array<double, 6> kTable1Ideal;
extern const std::array<double, 6> kTable1Advanced;
extern const std::array<double, 6> kTable1Hardware;
extern const std::array<double, 9> kTable2DirectAdvanced;
extern const std::array<double, 9> kTable2EncodedAdvanced;
extern const std::array<double, 9> kTable2DirectHardware;
extern const std::array<double, 9> kTable2EncodedHardware;
extern const std::array<double, 6> kTable3Advanced;
extern const std::array<double, 6> kTable3Hardware;
extern const std::array<double, 9> kTable4DirectIdeal;
extern const std::array<double, 9> kTable4EncodedIdeal;
extern const std::array<double, 9> kTable4DirectAdvanced;
extern const std::array<double, 9> kTable4EncodedAdvanced;
extern const std::array<double, 9> kTable4DirectHardware;
extern const std::array<double, 9> kTable4EncodedHardware;
extern const std::array<double, 6> kTable5Advanced;
extern const std::array<double, 6> kTable5Hardware;

}  // namespace qadd::tables
