#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// A named Hamiltonian with optional reference energy (Hartree) and
/// free-form string metadata. This is the unit every pipeline stage
/// reads and writes, so stages compose through plain files.
struct ProblemInstance {
  std::string name;
  PauliSum hamiltonian;
  std::optional<double> reference_energy;
  std::map<std::string, std::string> metadata;

  bool operator==(const ProblemInstance&) const = default;
};

ProblemInstance parse_instance(const std::string& text, const std::string& origin = "<memory>");
std::string instance_to_text(const ProblemInstance& inst);
ProblemInstance load_instance(const std::filesystem::path& path);
void write_instance(const ProblemInstance& inst, const std::filesystem::path& path);

struct TraceEntry {
  std::size_t iteration = 0;
  double energy = 0.0;
  bool operator==(const TraceEntry&) const = default;
};

struct TaperRecord {
  std::size_t n_original = 0;
  std::size_t n_tapered = 0;
  std::vector<std::string> generators;
  std::vector<int> sector;  // +1/-1 per generator
  bool operator==(const TaperRecord&) const = default;
};

struct SplitRecord {
  std::size_t noncontextual_terms = 0;
  std::size_t contextual_terms = 0;
  double e_nc = 0.0;
  bool operator==(const SplitRecord&) const = default;
};

struct ReductionRecord {
  std::size_t n_contextual = 0;  // qubits of the reduced contextual Hamiltonian
  std::size_t stabilizer_count = 0;
  double constant_shift = 0.0;
  std::size_t term_count = 0;
  bool operator==(const ReductionRecord&) const = default;
};

struct GroupingRecord {
  std::string mode;
  std::size_t original_count = 0;
  std::size_t grouped_count = 0;
  bool operator==(const GroupingRecord&) const = default;
};

struct SolveRecord {
  std::string ansatz;  // gate | pulse | oracle
  std::size_t layers = 0;
  std::optional<std::size_t> shots;
  double e_c = 0.0;
  double e_csvqe = 0.0;
  std::optional<double> error_vs_reference;
  std::size_t duration_dt = 0;
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;
  bool operator==(const SolveRecord&) const = default;
};

/// One record per executed stage; stages that did not run serialize as
/// null so a partially-run pipeline still produces a valid report.
struct PipelineReport {
  std::string instance_name;
  std::map<std::string, std::string> config;  // effective configuration + seed
  std::optional<double> reference_energy;
  std::optional<TaperRecord> taper;
  std::optional<SplitRecord> split;
  std::optional<ReductionRecord> reduction;
  std::optional<GroupingRecord> grouping;
  std::optional<SolveRecord> solve;
  bool operator==(const PipelineReport&) const = default;
};

PipelineReport parse_report(const std::string& text, const std::string& origin = "<memory>");
std::string report_to_text(const PipelineReport& r);
PipelineReport load_report(const std::filesystem::path& path);
void write_report(const PipelineReport& r, const std::filesystem::path& path);

/// Plot-ready threshold-sweep row (one reduced problem size per row).
struct SweepRow {
  std::size_t n_target = 0;
  double e_csvqe = 0.0;
  std::optional<double> error_vs_reference;
  std::size_t duration_dt = 0;
  std::size_t grouped_count = 0;
};

std::string sweep_csv_text(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace csvqe
