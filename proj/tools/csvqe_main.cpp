#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "csvqe/contextual.hpp"
#include "csvqe/grouping.hpp"
#include "csvqe/io.hpp"
#include "csvqe/oracle.hpp"
#include "csvqe/pipeline.hpp"
#include "csvqe/subspace.hpp"
#include "csvqe/tapering.hpp"

namespace {

namespace fs = std::filesystem;

fs::path resolve_outdir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CSVQE_OUTDIR"); env && *env) return env;
  return ".";
}

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

csvqe::GroupingMode grouping_from_name(const std::string& name) {
  if (name == "qubitwise") return csvqe::GroupingMode::qubitwise;
  if (name == "general") return csvqe::GroupingMode::general;
  throw std::invalid_argument("unknown grouping mode '" + name + "'");
}

template <typename Fn>
int run_stage(const char* stage, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "csvqe %s: %s\n", stage, e.what());
    return 1;
  }
}

struct CommonArgs {
  std::string instance_path;
  std::string outdir;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("instance", args.instance_path, "Hamiltonian instance file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--outdir", args.outdir,
                  "output directory (default: $CSVQE_OUTDIR, else the working directory)");
  cmd->add_option("--seed", args.seed, "seed recorded in every output");
}

fs::path prepare_outdir(const CommonArgs& args) {
  const fs::path dir = resolve_outdir(args.outdir);
  fs::create_directories(dir);
  return dir;
}

std::string stem_of(const std::string& instance_path) {
  return fs::path(instance_path).stem().string();
}

// ---------------------------------------------------------------------------
// inspect

int run_inspect(const CommonArgs& args) {
  return run_stage("inspect", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    std::printf("name: %s\n", inst.name.c_str());
    std::printf("qubits: %zu\n", inst.hamiltonian.n());
    std::printf("terms: %zu\n", inst.hamiltonian.size());
    if (inst.reference_energy) {
      std::printf("reference_energy: %s\n", format_double(*inst.reference_energy).c_str());
    }
    for (const auto& [key, value] : inst.metadata) {
      std::printf("metadata.%s: %s\n", key.c_str(), value.c_str());
    }
    if (inst.hamiltonian.n() <= csvqe::kOracleQubitLimit) {
      const auto ground = csvqe::exact_ground(inst.hamiltonian);
      std::printf("exact_ground: %s\n", format_double(ground.energy).c_str());
    }
  });
}

// ---------------------------------------------------------------------------
// taper

struct TaperArgs : CommonArgs {
  std::vector<int> sector;
  std::string out;
};

int run_taper(const TaperArgs& args) {
  return run_stage("taper", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    csvqe::SymmetryBasis basis = csvqe::find_z2_symmetries(inst.hamiltonian);

    csvqe::ProblemInstance tapered = inst;
    tapered.name = inst.name + ".tapered";
    csvqe::TaperRecord record;
    record.n_original = inst.hamiltonian.n();
    record.n_tapered = inst.hamiltonian.n();
    if (!basis.generators.empty()) {
      basis = csvqe::build_rotations(basis, inst.hamiltonian);
      std::optional<csvqe::SectorAssignment> explicit_sector;
      if (!args.sector.empty()) explicit_sector = csvqe::SectorAssignment{args.sector};
      const csvqe::SectorAssignment sector = csvqe::select_sector(
          inst.hamiltonian, basis,
          explicit_sector ? csvqe::SectorStrategy::explicit_sector
                          : csvqe::SectorStrategy::exhaustive,
          explicit_sector);
      tapered.hamiltonian = csvqe::taper(inst.hamiltonian, basis, sector);
      record.n_tapered = tapered.hamiltonian.n();
      for (const csvqe::PauliString& g : basis.generators) {
        record.generators.push_back(g.text());
      }
      record.sector = sector.values;
    }

    tapered.metadata["seed"] = std::to_string(args.seed);
    tapered.metadata["stage"] = "taper";
    for (std::size_t j = 0; j < record.generators.size(); ++j) {
      tapered.metadata["symmetry." + std::to_string(j)] =
          record.generators[j] + (record.sector[j] > 0 ? " -> +1" : " -> -1");
    }

    csvqe::PipelineReport report;
    report.instance_name = inst.name;
    report.reference_energy = inst.reference_energy;
    report.config["seed"] = std::to_string(args.seed);
    report.config["stage"] = "taper";
    report.taper = record;

    const fs::path dir = prepare_outdir(args);
    const std::string stem = stem_of(args.instance_path);
    const fs::path instance_out =
        args.out.empty() ? dir / (stem + ".tapered.ham") : fs::path(args.out);
    csvqe::write_instance(tapered, instance_out);
    csvqe::write_report(report, dir / (stem + ".taper.json"));

    std::printf("symmetries: %zu\n", record.generators.size());
    for (std::size_t j = 0; j < record.generators.size(); ++j) {
      std::printf("  %s  sector %+d\n", record.generators[j].c_str(), record.sector[j]);
    }
    std::printf("qubits: %zu -> %zu\n", record.n_original, record.n_tapered);
    std::printf("wrote %s\n", instance_out.string().c_str());
  });
}

// ---------------------------------------------------------------------------
// split

int run_split(const CommonArgs& args) {
  return run_stage("split", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    const csvqe::ContextualSplit parts = csvqe::split(inst.hamiltonian);
    const csvqe::NoncontextualStructure structure = csvqe::decompose(parts.h_nc.strings());
    const csvqe::NoncontextualSolution classical =
        csvqe::optimize_noncontextual(structure, parts.h_nc);

    const fs::path dir = prepare_outdir(args);
    const std::string stem = stem_of(args.instance_path);

    csvqe::ProblemInstance nc = inst;
    nc.name = inst.name + ".h_nc";
    nc.hamiltonian = parts.h_nc;
    nc.metadata["seed"] = std::to_string(args.seed);
    nc.metadata["stage"] = "split";
    nc.metadata["e_nc"] = format_double(classical.energy);
    csvqe::write_instance(nc, dir / (stem + ".h_nc.ham"));

    csvqe::ProblemInstance c = inst;
    c.name = inst.name + ".h_c";
    c.hamiltonian = parts.h_c;
    c.reference_energy = {};
    c.metadata["seed"] = std::to_string(args.seed);
    c.metadata["stage"] = "split";
    csvqe::write_instance(c, dir / (stem + ".h_c.ham"));

    csvqe::PipelineReport report;
    report.instance_name = inst.name;
    report.reference_energy = inst.reference_energy;
    report.config["seed"] = std::to_string(args.seed);
    report.config["stage"] = "split";
    report.split = csvqe::SplitRecord{parts.h_nc.size(), parts.h_c.size(), classical.energy};
    csvqe::write_report(report, dir / (stem + ".split.json"));

    std::printf("noncontextual terms: %zu\n", parts.h_nc.size());
    std::printf("contextual terms: %zu\n", parts.h_c.size());
    std::printf("universal elements: %zu\n", structure.universal.size());
    std::printf("anticommuting classes: %zu\n", structure.classes.size());
    std::printf("generators: %zu\n", structure.generators.size());
    std::printf("e_nc: %s\n", format_double(classical.energy).c_str());
  });
}

// ---------------------------------------------------------------------------
// group

struct GroupArgs : CommonArgs {
  std::string mode = "qubitwise";
};

int run_group(const GroupArgs& args) {
  return run_stage("group", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    const csvqe::GroupingMode mode = grouping_from_name(args.mode);
    const std::vector<csvqe::MeasurementGroup> groups = csvqe::group(inst.hamiltonian, mode);

    csvqe::PipelineReport report;
    report.instance_name = inst.name;
    report.reference_energy = inst.reference_energy;
    report.config["seed"] = std::to_string(args.seed);
    report.config["stage"] = "group";
    report.config["grouping"] = args.mode;
    report.grouping =
        csvqe::GroupingRecord{args.mode, inst.hamiltonian.size(), groups.size()};

    const fs::path dir = prepare_outdir(args);
    csvqe::write_report(report, dir / (stem_of(args.instance_path) + ".group.json"));

    std::printf("terms: %zu\n", inst.hamiltonian.size());
    std::printf("groups: %zu (%s)\n", groups.size(), args.mode.c_str());
    for (std::size_t i = 0; i < groups.size(); ++i) {
      std::printf("  group %zu  size %zu", i, groups[i].members.size());
      if (mode == csvqe::GroupingMode::qubitwise) {
        std::printf("  basis %s", groups[i].basis_string.text().c_str());
      }
      std::printf("\n");
    }
  });
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs : CommonArgs {
  std::optional<std::size_t> qubits;
  bool sweep = false;
};

int run_reduce(const ReduceArgs& args) {
  return run_stage("reduce", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    const csvqe::ContextualSplit parts = csvqe::split(inst.hamiltonian);
    const csvqe::NoncontextualStructure structure = csvqe::decompose(parts.h_nc.strings());
    const csvqe::NoncontextualSolution classical =
        csvqe::optimize_noncontextual(structure, parts.h_nc);

    const std::size_t n = inst.hamiltonian.n();
    std::vector<std::size_t> targets;
    if (args.sweep) {
      for (std::size_t t = csvqe::min_feasible_n_target(n, structure); t <= n; ++t) {
        targets.push_back(t);
      }
    } else {
      targets.push_back(args.qubits.value_or(n));
    }

    const fs::path dir = prepare_outdir(args);
    const std::string stem = stem_of(args.instance_path);
    for (const std::size_t target : targets) {
      csvqe::SubspaceSpec spec =
          csvqe::choose_stabilizers(classical, structure, parts.h_c, target);
      spec = csvqe::build_u_w(spec);
      csvqe::PauliSum remainder = inst.hamiltonian;
      remainder.add_term(csvqe::PauliString(n), -classical.energy);
      const csvqe::ReducedProblem reduced = csvqe::project(remainder, spec);

      csvqe::ProblemInstance out = inst;
      out.name = inst.name + ".reduced" + std::to_string(target);
      out.hamiltonian = reduced.h_c_reduced;
      out.metadata["seed"] = std::to_string(args.seed);
      out.metadata["stage"] = "reduce";
      out.metadata["e_nc"] = format_double(classical.energy);
      out.metadata["constant_shift"] = format_double(reduced.constant_shift);
      const fs::path instance_out = dir / (stem + ".reduced" + std::to_string(target) + ".ham");
      csvqe::write_instance(out, instance_out);

      csvqe::PipelineReport report;
      report.instance_name = inst.name;
      report.reference_energy = inst.reference_energy;
      report.config["seed"] = std::to_string(args.seed);
      report.config["stage"] = "reduce";
      report.config["n_target"] = std::to_string(target);
      report.split =
          csvqe::SplitRecord{parts.h_nc.size(), parts.h_c.size(), classical.energy};
      report.reduction = csvqe::ReductionRecord{spec.n_reduced, spec.stabilizers.size(),
                                                reduced.constant_shift,
                                                reduced.h_c_reduced.size()};
      csvqe::write_report(report, dir / (stem + ".reduce" + std::to_string(target) + ".json"));

      std::printf("n_target %zu: stabilizers %zu, reduced terms %zu, wrote %s\n", target,
                  spec.stabilizers.size(), reduced.h_c_reduced.size(),
                  instance_out.string().c_str());
    }
  });
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs : CommonArgs {
  std::string ansatz = "gate";
  bool oracle_vqe = false;
  std::size_t layers = 2;
  std::optional<std::size_t> qubits;
  bool sweep = false;
  std::optional<std::size_t> shots;
  std::string optimizer = "nelder_mead";
  std::size_t max_iterations = 100;
  double tolerance = 1e-8;
  std::string grouping = "qubitwise";
  bool no_taper = false;
  std::vector<int> sector;
  std::string device_path;
  std::string timing_path;
  std::string out;
};

csvqe::PipelineOptions pipeline_options(const SolveArgs& args) {
  csvqe::PipelineOptions opts;
  opts.do_taper = !args.no_taper;
  if (!args.sector.empty()) {
    opts.sector_strategy = csvqe::SectorStrategy::explicit_sector;
    opts.explicit_sector = csvqe::SectorAssignment{args.sector};
  }
  opts.solve.ansatz =
      args.oracle_vqe ? csvqe::AnsatzKind::oracle : csvqe::ansatz_from_name(args.ansatz);
  opts.solve.layers = args.layers;
  opts.solve.optimizer.method = csvqe::optimizer_from_name(args.optimizer);
  opts.solve.optimizer.max_iterations = args.max_iterations;
  opts.solve.optimizer.tolerance = args.tolerance;
  opts.solve.optimizer.seed = args.seed;
  opts.solve.shots = args.shots;
  opts.solve.grouping_mode = grouping_from_name(args.grouping);
  if (!args.timing_path.empty()) opts.solve.timing = csvqe::load_timing_table(args.timing_path);
  if (!args.device_path.empty()) opts.solve.device = csvqe::load_device_model(args.device_path);
  return opts;
}

void print_solve_summary(const csvqe::PipelineResult& result) {
  std::printf("e_nc: %s\n", format_double(result.e_nc).c_str());
  std::printf("e_c: %s\n", format_double(result.e_c).c_str());
  std::printf("e_csvqe: %s\n", format_double(result.e_csvqe).c_str());
  if (result.report.solve && result.report.solve->error_vs_reference) {
    std::printf("error_vs_reference: %s\n",
                format_double(*result.report.solve->error_vs_reference).c_str());
  }
}

int run_solve(const SolveArgs& args) {
  return run_stage("solve", [&] {
    const csvqe::ProblemInstance inst = csvqe::load_instance(args.instance_path);
    const csvqe::PipelineOptions base = pipeline_options(args);
    const fs::path dir = prepare_outdir(args);
    const std::string stem = stem_of(args.instance_path);

    if (!args.sweep) {
      csvqe::PipelineOptions opts = base;
      opts.n_target = args.qubits;
      const csvqe::PipelineResult result = csvqe::run_pipeline(inst, opts);
      const fs::path report_out =
          args.out.empty() ? dir / (stem + ".report.json") : fs::path(args.out);
      csvqe::write_report(result.report, report_out);
      print_solve_summary(result);
      std::printf("wrote %s\n", report_out.string().c_str());
      return;
    }

    // Replicate the classical prefix once to find the feasible thresholds.
    csvqe::PauliSum current = inst.hamiltonian;
    if (base.do_taper) {
      csvqe::SymmetryBasis basis = csvqe::find_z2_symmetries(current);
      if (!basis.generators.empty()) {
        basis = csvqe::build_rotations(basis, current);
        const csvqe::SectorAssignment sector = csvqe::select_sector(
            current, basis, base.sector_strategy, base.explicit_sector);
        current = csvqe::taper(current, basis, sector);
      }
    }
    const csvqe::ContextualSplit parts = csvqe::split(current);
    const csvqe::NoncontextualStructure structure = csvqe::decompose(parts.h_nc.strings());
    const std::size_t lo = csvqe::min_feasible_n_target(current.n(), structure);
    const std::size_t hi = current.n();

    std::vector<csvqe::PipelineResult> results(hi - lo + 1);
    std::vector<std::exception_ptr> failures(results.size());
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < results.size(); ++i) {
      workers.emplace_back([&, i] {
        try {
          csvqe::PipelineOptions opts = base;
          opts.n_target = lo + i;
          results[i] = csvqe::run_pipeline(inst, opts);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }

    std::vector<csvqe::SweepRow> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const csvqe::PipelineReport& report = results[i].report;
      csvqe::SweepRow row;
      row.n_target = lo + i;
      row.e_csvqe = results[i].e_csvqe;
      if (report.solve) {
        row.error_vs_reference = report.solve->error_vs_reference;
        row.duration_dt = report.solve->duration_dt;
      }
      if (report.grouping) row.grouped_count = report.grouping->grouped_count;
      rows.push_back(row);
      csvqe::write_report(report,
                          dir / (stem + ".n" + std::to_string(lo + i) + ".report.json"));
    }
    const fs::path csv_out = args.out.empty() ? dir / (stem + ".sweep.csv") : fs::path(args.out);
    csvqe::write_sweep_csv(rows, csv_out);
    for (const csvqe::SweepRow& row : rows) {
      std::printf("n_target %zu: e_csvqe %s\n", row.n_target,
                  format_double(row.e_csvqe).c_str());
    }
    std::printf("wrote %s\n", csv_out.string().c_str());
  });
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::vector<std::string> reports;
  std::string kind = "sweep";
  std::string outdir;
  std::string out;
};

int run_report(const ReportArgs& args) {
  return run_stage("report", [&] {
    std::vector<csvqe::PipelineReport> reports;
    for (const std::string& path : args.reports) {
      reports.push_back(csvqe::load_report(path));
    }
    const fs::path dir = resolve_outdir(args.outdir);
    fs::create_directories(dir);
    const fs::path out =
        args.out.empty() ? dir / ("reports." + args.kind + ".csv") : fs::path(args.out);

    std::string text;
    if (args.kind == "sweep") {
      std::vector<csvqe::SweepRow> rows;
      for (const csvqe::PipelineReport& report : reports) {
        if (!report.solve) throw std::invalid_argument("report lacks a solve record");
        csvqe::SweepRow row;
        if (const auto it = report.config.find("n_target"); it != report.config.end()) {
          row.n_target = std::stoul(it->second);
        } else if (report.reduction) {
          row.n_target = report.reduction->n_contextual;
        }
        row.e_csvqe = report.solve->e_csvqe;
        row.error_vs_reference = report.solve->error_vs_reference;
        row.duration_dt = report.solve->duration_dt;
        if (report.grouping) row.grouped_count = report.grouping->grouped_count;
        rows.push_back(row);
      }
      text = csvqe::sweep_csv_text(rows);
    } else if (args.kind == "grouping") {
      text = "instance,mode,original_count,grouped_count\n";
      for (const csvqe::PipelineReport& report : reports) {
        if (!report.grouping) throw std::invalid_argument("report lacks a grouping record");
        text += report.instance_name + "," + report.grouping->mode + "," +
                std::to_string(report.grouping->original_count) + "," +
                std::to_string(report.grouping->grouped_count) + "\n";
      }
    } else if (args.kind == "trace") {
      text = "instance,iteration,energy\n";
      for (const csvqe::PipelineReport& report : reports) {
        if (!report.solve) throw std::invalid_argument("report lacks a solve record");
        for (const csvqe::TraceEntry& entry : report.solve->trace) {
          text += report.instance_name + "," + std::to_string(entry.iteration) + "," +
                  format_double(entry.energy) + "\n";
        }
      }
    } else {
      throw std::invalid_argument("unknown report kind '" + args.kind + "'");
    }

    std::ofstream stream(out);
    if (!stream) throw std::runtime_error("cannot write " + out.string());
    stream << text;
    std::printf("wrote %s\n", out.string().c_str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contextual-subspace VQE pipeline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read defaults from a configuration file");

  CommonArgs inspect_args;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "print instance facts");
  add_common(inspect_cmd, inspect_args);

  TaperArgs taper_args;
  CLI::App* taper_cmd = app.add_subcommand("taper", "taper Z2 symmetries out of an instance");
  add_common(taper_cmd, taper_args);
  taper_cmd->add_option("--sector", taper_args.sector,
                        "explicit +/-1 eigenvalue per symmetry (default: exhaustive search)");
  taper_cmd->add_option("--out", taper_args.out, "tapered instance path");

  CommonArgs split_args;
  CLI::App* split_cmd =
      app.add_subcommand("split", "split into noncontextual and contextual parts");
  add_common(split_cmd, split_args);

  GroupArgs group_args;
  CLI::App* group_cmd = app.add_subcommand("group", "group terms into commuting families");
  add_common(group_cmd, group_args);
  group_cmd->add_option("--mode", group_args.mode, "qubitwise | general");

  ReduceArgs reduce_args;
  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "project onto a contextual subspace of a chosen size");
  add_common(reduce_cmd, reduce_args);
  CLI::Option* reduce_qubits =
      reduce_cmd->add_option("--qubits", reduce_args.qubits, "reduced qubit count");
  reduce_cmd->add_flag("--sweep", reduce_args.sweep, "every feasible reduced size")
      ->excludes(reduce_qubits);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run the full pipeline");
  add_common(solve_cmd, solve_args);
  solve_cmd->add_option("--ansatz", solve_args.ansatz, "gate | pulse");
  solve_cmd->add_flag("--oracle-vqe", solve_args.oracle_vqe,
                      "exact reduced diagonalization in place of VQE");
  solve_cmd->add_option("--layers", solve_args.layers, "ansatz layers");
  CLI::Option* solve_qubits =
      solve_cmd->add_option("--qubits", solve_args.qubits, "reduced qubit count");
  solve_cmd->add_flag("--sweep", solve_args.sweep, "sweep every feasible reduced size")
      ->excludes(solve_qubits);
  solve_cmd->add_option("--shots", solve_args.shots, "samples per measurement group");
  solve_cmd->add_option("--optimizer", solve_args.optimizer, "nelder_mead | cobyla_like");
  solve_cmd->add_option("--max-iterations", solve_args.max_iterations, "optimizer iterations");
  solve_cmd->add_option("--tolerance", solve_args.tolerance, "optimizer tolerance");
  solve_cmd->add_option("--grouping", solve_args.grouping, "qubitwise | general");
  solve_cmd->add_flag("--no-taper", solve_args.no_taper, "skip the tapering stage");
  solve_cmd->add_option("--sector", solve_args.sector, "explicit tapering sector");
  solve_cmd->add_option("--device", solve_args.device_path, "device model JSON (pulse ansatz)");
  solve_cmd->add_option("--timing", solve_args.timing_path, "gate timing table JSON");
  solve_cmd->add_option("--out", solve_args.out, "report path (or sweep CSV path)");

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand("report", "convert reports to plot-ready CSV");
  report_cmd->add_option("reports", report_args.reports, "report JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  report_cmd->add_option("--kind", report_args.kind, "sweep | grouping | trace");
  report_cmd->add_option("--outdir", report_args.outdir, "output directory");
  report_cmd->add_option("--out", report_args.out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*inspect_cmd) return run_inspect(inspect_args);
  if (*taper_cmd) return run_taper(taper_args);
  if (*split_cmd) return run_split(split_args);
  if (*group_cmd) return run_group(group_args);
  if (*reduce_cmd) return run_reduce(reduce_args);
  if (*solve_cmd) return run_solve(solve_args);
  if (*report_cmd) return run_report(report_args);
  return 2;
}
