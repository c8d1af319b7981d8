#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "qadd/adders.hpp"
#include "qadd/errors.hpp"
#include "qadd/noise.hpp"
#include "qadd/tables.hpp"

using namespace qadd;
using tables::Profile;
using tables::TableDoc;
using tables::TableRequest;

namespace {

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

int column_index(const TableDoc& doc, const std::string& name) {
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    if (doc.columns[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("standard rows and measurement pairs") {
  const auto& inputs = tables::standard_inputs();
  const auto& labels = tables::standard_input_labels();
  REQUIRE(inputs.size() == 6);
  REQUIRE(labels.size() == 6);
  CHECK(labels[0] == "0,0");
  CHECK(labels[5] == "pi/8,pi/8");
  CHECK(inputs[5].first == doctest::Approx(3.14159265 / 8).epsilon(1e-6));

  const auto& pairs = tables::pauli_pairs();
  const auto& pair_labels = tables::pauli_pair_labels();
  REQUIRE(pairs.size() == 9);
  REQUIRE(pair_labels.size() == 9);
  CHECK(pair_labels[0] == "XX");
  CHECK(pair_labels[8] == "ZZ");
  CHECK(pairs[1].first == adders::PauliBasis::X);
  CHECK(pairs[1].second == adders::PauliBasis::Y);
}

TEST_CASE("cells expose the absolute deviation") {
  tables::TableCell cell;
  CHECK(!cell.deviation().has_value());
  cell.computed = 0.95;
  CHECK(!cell.deviation().has_value());
  cell.reference = 0.9268;
  CHECK(*cell.deviation() == doctest::Approx(0.0232).epsilon(1e-12));
}

TEST_CASE("adder fidelity table, exact execution") {
  TableRequest request;
  request.number = 1;
  request.profile = Profile::ideal;
  const TableDoc doc = tables::make_table(request);

  CHECK(doc.number == 1);
  REQUIRE(doc.rows.size() == 6);
  const int fidelity = column_index(doc, "fidelity");
  const int hardware = column_index(doc, "hardware_reference");
  REQUIRE(fidelity >= 0);
  REQUIRE(hardware >= 0);

  for (int i = 0; i < 5; ++i) {
    const auto& cell = doc.rows[i].cells[fidelity];
    REQUIRE(cell.computed.has_value());
    CHECK(std::abs(*cell.computed - 1.0) < 1e-9);
    CHECK(*cell.reference == 1.0);
  }
  const auto& last = doc.rows[5].cells[fidelity];
  CHECK(std::abs(*last.computed - 0.9268) < 5e-4);
  CHECK(*last.reference == tables::kTable1Ideal[5]);

  // Hardware cells are reference-only.
  CHECK(!doc.rows[0].cells[hardware].computed.has_value());
  CHECK(*doc.rows[0].cells[hardware].reference == tables::kTable1Hardware[0]);
}

TEST_CASE("adder fidelity table, forecast model") {
  TableRequest request;
  request.number = 1;
  request.profile = Profile::advanced;
  request.model = advanced_model();
  const TableDoc doc = tables::make_table(request);

  const int f_tilde = column_index(doc, "f_tilde");
  const int forecast = column_index(doc, "forecast");
  REQUIRE(f_tilde >= 0);
  REQUIRE(forecast >= 0);

  for (int i = 0; i < 6; ++i) {
    const auto& cell = doc.rows[i].cells[forecast];
    REQUIRE(cell.computed.has_value());
    REQUIRE(cell.reference.has_value());
    CHECK(*cell.reference == tables::kTable1Advanced[i]);
    CHECK(*cell.deviation() < 0.03);
    // The noisy-execution factor stays in (0, 1].
    const auto& ft = doc.rows[i].cells[f_tilde];
    CHECK(*ft.computed <= 1.0 + 1e-12);
    CHECK(*ft.computed > 0.9);
  }

  // The (0,0) row is the pure product: f_tilde = 1, forecast = 0.99^13.
  CHECK(std::abs(*doc.rows[0].cells[f_tilde].computed - 1.0) < 1e-9);
  CHECK(std::abs(*doc.rows[0].cells[forecast].computed -
                 std::pow(0.99, 13)) < 1e-12);

  // Footnotes carry the CNOT tally and the systematic-gap report.
  REQUIRE(!doc.footnotes.empty());
  bool has_tally = false, has_gap = false;
  for (const auto& note : doc.footnotes) {
    has_tally = has_tally || note.find("n_cnot=12") != std::string::npos;
    has_gap = has_gap || note.find("systematic gap") != std::string::npos;
  }
  CHECK(has_tally);
  CHECK(has_gap);
}

TEST_CASE("round-trip table, exact execution, is all ones") {
  TableRequest request;
  request.number = 3;
  request.profile = Profile::ideal;
  const TableDoc doc = tables::make_table(request);
  const int fidelity = column_index(doc, "fidelity");
  for (const auto& row : doc.rows)
    CHECK(std::abs(*row.cells[fidelity].computed - 1.0) < 1e-9);
}

TEST_CASE("round-trip table, forecast model, lands near the reference") {
  TableRequest request;
  request.number = 3;
  request.profile = Profile::advanced;
  request.model = advanced_model();
  const TableDoc doc = tables::make_table(request);
  const int forecast = column_index(doc, "forecast");
  for (int i = 0; i < 6; ++i) {
    const auto& cell = doc.rows[i].cells[forecast];
    CHECK(std::abs(*cell.computed - 0.7700) < 0.03);
    CHECK(*cell.reference == tables::kTable3Advanced[i]);
  }
  bool has_tally = false;
  for (const auto& note : doc.footnotes)
    has_tally = has_tally || note.find("n_cnot=24") != std::string::npos;
  CHECK(has_tally);
}

TEST_CASE("encoding table, exact execution, both arms are ones") {
  TableRequest request;
  request.number = 2;
  request.profile = Profile::ideal;
  const TableDoc doc = tables::make_table(request);
  REQUIRE(doc.rows.size() == 9);
  const int direct = column_index(doc, "direct");
  const int encoded = column_index(doc, "encoded");
  REQUIRE(direct >= 0);
  REQUIRE(encoded >= 0);
  for (const auto& row : doc.rows) {
    CHECK(std::abs(*row.cells[direct].computed - 1.0) < 1e-9);
    CHECK(std::abs(*row.cells[encoded].computed - 1.0) < 1e-9);
  }
}

TEST_CASE("encoding table, forecast model, tracks the reference columns") {
  TableRequest request;
  request.number = 2;
  request.profile = Profile::advanced;
  request.model = advanced_model();
  const TableDoc doc = tables::make_table(request);
  const int direct = column_index(doc, "direct_forecast");
  const int encoded = column_index(doc, "encoded_forecast");
  REQUIRE(direct >= 0);
  REQUIRE(encoded >= 0);
  for (int i = 0; i < 9; ++i) {
    CHECK(*doc.rows[i].cells[direct].reference ==
          tables::kTable2DirectAdvanced[i]);
    CHECK(*doc.rows[i].cells[encoded].reference ==
          tables::kTable2EncodedAdvanced[i]);
    CHECK(*doc.rows[i].cells[direct].deviation() < 0.03);
    CHECK(*doc.rows[i].cells[encoded].deviation() < 0.03);
  }
}

TEST_CASE("encoding table with shots is deterministic per seed") {
  TableRequest request;
  request.number = 2;
  request.profile = Profile::ideal;
  request.shots = 4096;
  request.seed = 11;
  const TableDoc a = tables::make_table(request);
  const TableDoc b = tables::make_table(request);
  const int direct = column_index(a, "direct");
  for (int i = 0; i < 9; ++i) {
    CHECK(*a.rows[i].cells[direct].computed ==
          *b.rows[i].cells[direct].computed);
    CHECK(*a.rows[i].cells[direct].computed > 0.99);
  }
}

TEST_CASE("supplied-adder tables require the adder") {
  TableRequest request;
  request.number = 4;
  CHECK_THROWS_AS(tables::make_table(request), config_error);
  request.number = 5;
  CHECK_THROWS_AS(tables::make_table(request), config_error);

  // With the hand adder supplied, the exact round-trip column is ones and
  // the reference columns come from the bundled search-circuit values.
  const adders::AdderSpec adder = adders::basis_adder();
  request.adder = &adder;
  request.number = 5;
  const TableDoc doc = tables::make_table(request);
  const int fidelity = column_index(doc, "fidelity");
  for (const auto& row : doc.rows)
    CHECK(std::abs(*row.cells[fidelity].computed - 1.0) < 1e-9);

  request.number = 4;
  const TableDoc enc = tables::make_table(request);
  const int direct = column_index(enc, "direct");
  for (const auto& row : enc.rows)
    CHECK(std::abs(*row.cells[direct].computed - 1.0) < 1e-9);
}

TEST_CASE("row labels match the published order") {
  TableRequest request;
  request.number = 1;
  const TableDoc doc = tables::make_table(request);
  const auto& labels = tables::standard_input_labels();
  for (int i = 0; i < 6; ++i) CHECK(doc.rows[i].label == labels[i]);

  request.number = 2;
  const TableDoc enc = tables::make_table(request);
  const auto& pair_labels = tables::pauli_pair_labels();
  for (int i = 0; i < 9; ++i) CHECK(enc.rows[i].label == pair_labels[i]);
}

TEST_CASE("unknown table numbers are rejected") {
  TableRequest request;
  request.number = 0;
  CHECK_THROWS_AS(tables::make_table(request), config_error);
  request.number = 6;
  CHECK_THROWS_AS(tables::make_table(request), config_error);
}
