#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "csvqe/io.hpp"
#include "doctest.h"

using csvqe::ProblemInstance;
using csvqe::PipelineReport;
using csvqe::PauliString;
using csvqe::PauliSum;

TEST_CASE("instance text round trip preserves every field") {
  ProblemInstance inst;
  inst.name = "roundtrip";
  inst.hamiltonian = PauliSum(3);
  inst.hamiltonian.add_term(PauliString::from_text("ZII"), 0.25);
  inst.hamiltonian.add_term(PauliString::from_text("IXY"), -1.5);
  inst.hamiltonian.add_term(PauliString::from_text("III"), 0.0625);
  inst.reference_energy = -1.75;
  inst.metadata["system"] = "unit test";
  inst.metadata["basis"] = "none";

  const ProblemInstance back = csvqe::parse_instance(csvqe::instance_to_text(inst));
  CHECK(back == inst);
}

TEST_CASE("instance round trip keeps full double precision") {
  ProblemInstance inst;
  inst.name = "precision";
  inst.hamiltonian = PauliSum(1);
  inst.hamiltonian.add_term(PauliString::from_text("Z"), -0.16286045115279859);
  inst.hamiltonian.add_term(PauliString::from_text("X"), 0.1234567890123456789);
  inst.reference_energy = -1.8510456784448643;
  const ProblemInstance back = csvqe::parse_instance(csvqe::instance_to_text(inst));
  CHECK(back.hamiltonian.coefficient(PauliString::from_text("Z")) == -0.16286045115279859);
  CHECK(back.reference_energy == inst.reference_energy);
}

TEST_CASE("instance parsing rejects malformed input with the origin in the message") {
  auto expect_reject = [](const std::string& text) {
    CHECK_THROWS_AS(csvqe::parse_instance(text, "bad.ham"), std::runtime_error);
    try {
      csvqe::parse_instance(text, "bad.ham");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("bad.ham") != std::string::npos);
    }
  };

  expect_reject("not json at all");
  expect_reject(R"({"name": "x", "terms": [["Z", 1.0]]})");                  // missing n_qubits
  expect_reject(R"({"name": "x", "n_qubits": 2, "terms": []})");             // empty terms
  expect_reject(R"({"name": "x", "n_qubits": 2, "terms": [["ZZZ", 1.0]]})"); // wrong length
  expect_reject(R"({"name": "x", "n_qubits": 1, "terms": [["Q", 1.0]]})");   // bad letter
  expect_reject(R"({"name": "x", "n_qubits": 1, "terms": [["Z", "one"]]})"); // non-numeric
  expect_reject(R"({"name": "x", "n_qubits": 1, "terms": [["Z", 1e999]]})"); // overflows to inf
  // Exact cancellation leaves the zero operator.
  expect_reject(R"({"name": "x", "n_qubits": 1, "terms": [["Z", 1.0], ["Z", -1.0]]})");
  // Shape mismatches deeper in the document still carry the origin.
  expect_reject(R"({"name": "x", "n_qubits": 1, "terms": [["Z", 1.0]], "metadata": {"k": 5}})");
  expect_reject(R"({"name": 7, "n_qubits": 1, "terms": [["Z", 1.0]]})");
}

TEST_CASE("duplicate terms merge on parse") {
  const ProblemInstance inst = csvqe::parse_instance(
      R"({"name": "m", "n_qubits": 1, "terms": [["Z", 1.0], ["Z", 0.5], ["X", 2.0]]})");
  CHECK(inst.hamiltonian.size() == 2);
  CHECK(inst.hamiltonian.coefficient(PauliString::from_text("Z")) == 1.5);
}

TEST_CASE("instance file io round trips through disk") {
  const auto path = std::filesystem::temp_directory_path() / "csvqe_io_test.ham";
  ProblemInstance inst;
  inst.name = "disk";
  inst.hamiltonian = PauliSum(2);
  inst.hamiltonian.add_term(PauliString::from_text("XX"), 0.5);
  csvqe::write_instance(inst, path);
  CHECK(csvqe::load_instance(path) == inst);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(csvqe::load_instance("/nonexistent/definitely/missing.ham"),
                  std::runtime_error);
}

TEST_CASE("report round trip preserves all stage records") {
  PipelineReport r;
  r.instance_name = "demo";
  r.config = {{"seed", "42"}, {"ansatz", "gate"}, {"layers", "2"}};
  r.reference_energy = -2.5;
  r.taper = csvqe::TaperRecord{4, 2, {"ZZII", "IIZZ"}, {1, -1}};
  r.split = csvqe::SplitRecord{5, 3, -1.25};
  r.reduction = csvqe::ReductionRecord{2, 1, 0.75, 6};
  r.grouping = csvqe::GroupingRecord{"qubitwise", 6, 3};
  csvqe::SolveRecord solve;
  solve.ansatz = "gate";
  solve.layers = 2;
  solve.shots = 4096;
  solve.e_c = -0.5;
  solve.e_csvqe = -1.75;
  solve.error_vs_reference = 0.75;
  solve.duration_dt = 768;
  solve.evaluations = 37;
  solve.trace = {{0, -0.1}, {1, -0.4}, {2, -0.5}};
  r.solve = solve;

  CHECK(csvqe::parse_report(csvqe::report_to_text(r)) == r);
}

TEST_CASE("partially-run pipelines serialize missing stages as null") {
  PipelineReport r;
  r.instance_name = "partial";
  r.config["seed"] = "1";
  const std::string text = csvqe::report_to_text(r);
  const PipelineReport back = csvqe::parse_report(text);
  CHECK(back == r);
  CHECK_FALSE(back.taper.has_value());
  CHECK_FALSE(back.solve.has_value());
  CHECK(text.find("null") != std::string::npos);
}

TEST_CASE("report file io round trips and rejects garbage") {
  const auto path = std::filesystem::temp_directory_path() / "csvqe_io_test.report.json";
  PipelineReport r;
  r.instance_name = "disk";
  r.grouping = csvqe::GroupingRecord{"full", 10, 4};
  csvqe::write_report(r, path);
  CHECK(csvqe::load_report(path) == r);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(csvqe::parse_report("[1,2,3]", "junk"), std::runtime_error);
  CHECK_THROWS_AS(csvqe::parse_report("{", "junk"), std::runtime_error);
}

TEST_CASE("sweep csv has the stable header and one row per threshold") {
  std::vector<csvqe::SweepRow> rows;
  rows.push_back({0, -1.5, 0.25, 0, 1});
  rows.push_back({2, -1.74, std::nullopt, 768, 3});
  const std::string text = csvqe::sweep_csv_text(rows);
  CHECK(text.rfind("n_target,e_csvqe,error_vs_reference,duration_dt,grouped_count\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  // Missing reference leaves an empty field, not a placeholder value.
  CHECK(text.find("-1.74,,768") != std::string::npos);
  CHECK(text.find("0.25") != std::string::npos);
}
