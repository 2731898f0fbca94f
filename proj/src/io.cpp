#include "csvqe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace csvqe {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    // parse_error for malformed text, out_of_range for numbers like 1e999
    fail(origin, e.what());
  }
}

double require_finite(const json& v, const std::string& origin, const std::string& field) {
  if (!v.is_number()) fail(origin, field + " must be a real number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(origin, field + " must be finite");
  return d;
}

json trace_to_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const TraceEntry& t : trace) arr.push_back(json::array({t.iteration, t.energy}));
  return arr;
}

std::vector<TraceEntry> trace_from_json(const json& arr, const std::string& origin) {
  std::vector<TraceEntry> out;
  for (const json& row : arr) {
    if (!row.is_array() || row.size() != 2) fail(origin, "trace rows must be [iteration, energy]");
    out.push_back({row[0].get<std::size_t>(), require_finite(row[1], origin, "trace energy")});
  }
  return out;
}

}  // namespace

namespace {

ProblemInstance instance_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "instance must be a JSON object");
  for (const std::string required : {"name", "n_qubits", "terms"}) {
    if (!doc.contains(required)) fail(origin, "missing field '" + required + "'");
  }

  ProblemInstance inst;
  inst.name = doc.at("name").get<std::string>();
  const std::size_t n = doc.at("n_qubits").get<std::size_t>();
  const json& terms = doc.at("terms");
  if (!terms.is_array() || terms.empty()) fail(origin, "'terms' must be a nonempty array");

  inst.hamiltonian = PauliSum(n);
  std::size_t line = 0;
  for (const json& entry : terms) {
    ++line;
    const std::string where = origin + ", term " + std::to_string(line);
    if (!entry.is_array() || entry.size() != 2) fail(where, "expected [pauli_string, coefficient]");
    const std::string pauli = entry[0].get<std::string>();
    if (pauli.size() != n) {
      fail(where, "string '" + pauli + "' has length " + std::to_string(pauli.size()) +
                      ", expected n_qubits = " + std::to_string(n));
    }
    PauliString p;
    try {
      p = PauliString::from_text(pauli);
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    inst.hamiltonian.add_term(p, require_finite(entry[1], where, "coefficient"));
  }
  if (inst.hamiltonian.empty()) fail(origin, "all terms cancel; the zero operator is not a valid instance");

  if (doc.contains("reference_energy") && !doc.at("reference_energy").is_null()) {
    inst.reference_energy = require_finite(doc.at("reference_energy"), origin, "reference_energy");
  }
  if (doc.contains("metadata") && !doc.at("metadata").is_null()) {
    for (const auto& [k, v] : doc.at("metadata").items()) {
      inst.metadata[k] = v.get<std::string>();
    }
  }
  return inst;
}

}  // namespace

ProblemInstance parse_instance(const std::string& text, const std::string& origin) {
  const json doc = parse_json(text, origin);
  try {
    return instance_from_json(doc, origin);
  } catch (const json::exception& e) {
    // typed field accesses throw json::type_error on shape mismatches
    fail(origin, e.what());
  }
}

std::string instance_to_text(const ProblemInstance& inst) {
  json doc;
  doc["name"] = inst.name;
  doc["n_qubits"] = inst.hamiltonian.n();
  json terms = json::array();
  for (const auto& [p, c] : inst.hamiltonian) terms.push_back(json::array({p.text(), c}));
  doc["terms"] = std::move(terms);
  doc["reference_energy"] =
      inst.reference_energy ? json(*inst.reference_energy) : json(nullptr);
  json meta = json::object();
  for (const auto& [k, v] : inst.metadata) meta[k] = v;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path), path.string());
}

void write_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
  write_file(path, instance_to_text(inst));
}

std::string report_to_text(const PipelineReport& r) {
  json doc;
  doc["instance_name"] = r.instance_name;
  json config = json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  doc["config"] = std::move(config);
  doc["reference_energy"] = r.reference_energy ? json(*r.reference_energy) : json(nullptr);

  if (r.taper) {
    doc["taper"] = {{"n_original", r.taper->n_original},
                    {"n_tapered", r.taper->n_tapered},
                    {"generators", r.taper->generators},
                    {"sector", r.taper->sector}};
  } else {
    doc["taper"] = nullptr;
  }
  if (r.split) {
    doc["split"] = {{"noncontextual_terms", r.split->noncontextual_terms},
                    {"contextual_terms", r.split->contextual_terms},
                    {"e_nc", r.split->e_nc}};
  } else {
    doc["split"] = nullptr;
  }
  if (r.reduction) {
    doc["reduction"] = {{"n_contextual", r.reduction->n_contextual},
                        {"stabilizer_count", r.reduction->stabilizer_count},
                        {"constant_shift", r.reduction->constant_shift},
                        {"term_count", r.reduction->term_count}};
  } else {
    doc["reduction"] = nullptr;
  }
  if (r.grouping) {
    doc["grouping"] = {{"mode", r.grouping->mode},
                       {"original_count", r.grouping->original_count},
                       {"grouped_count", r.grouping->grouped_count}};
  } else {
    doc["grouping"] = nullptr;
  }
  if (r.solve) {
    json s = {{"ansatz", r.solve->ansatz},
              {"layers", r.solve->layers},
              {"shots", r.solve->shots ? json(*r.solve->shots) : json(nullptr)},
              {"e_c", r.solve->e_c},
              {"e_csvqe", r.solve->e_csvqe},
              {"error_vs_reference",
               r.solve->error_vs_reference ? json(*r.solve->error_vs_reference) : json(nullptr)},
              {"duration_dt", r.solve->duration_dt},
              {"evaluations", r.solve->evaluations},
              {"trace", trace_to_json(r.solve->trace)}};
    doc["solve"] = std::move(s);
  } else {
    doc["solve"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

namespace {

PipelineReport report_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "report must be a JSON object");
  PipelineReport r;
  r.instance_name = doc.value("instance_name", std::string{});
  if (doc.contains("config") && doc.at("config").is_object()) {
    for (const auto& [k, v] : doc.at("config").items()) r.config[k] = v.get<std::string>();
  }
  if (doc.contains("reference_energy") && !doc.at("reference_energy").is_null()) {
    r.reference_energy = require_finite(doc.at("reference_energy"), origin, "reference_energy");
  }
  if (doc.contains("taper") && !doc.at("taper").is_null()) {
    const json& t = doc.at("taper");
    TaperRecord rec;
    rec.n_original = t.at("n_original").get<std::size_t>();
    rec.n_tapered = t.at("n_tapered").get<std::size_t>();
    rec.generators = t.at("generators").get<std::vector<std::string>>();
    rec.sector = t.at("sector").get<std::vector<int>>();
    r.taper = std::move(rec);
  }
  if (doc.contains("split") && !doc.at("split").is_null()) {
    const json& s = doc.at("split");
    r.split = SplitRecord{s.at("noncontextual_terms").get<std::size_t>(),
                          s.at("contextual_terms").get<std::size_t>(),
                          require_finite(s.at("e_nc"), origin, "e_nc")};
  }
  if (doc.contains("reduction") && !doc.at("reduction").is_null()) {
    const json& d = doc.at("reduction");
    r.reduction = ReductionRecord{d.at("n_contextual").get<std::size_t>(),
                                  d.at("stabilizer_count").get<std::size_t>(),
                                  require_finite(d.at("constant_shift"), origin, "constant_shift"),
                                  d.at("term_count").get<std::size_t>()};
  }
  if (doc.contains("grouping") && !doc.at("grouping").is_null()) {
    const json& g = doc.at("grouping");
    r.grouping = GroupingRecord{g.at("mode").get<std::string>(),
                                g.at("original_count").get<std::size_t>(),
                                g.at("grouped_count").get<std::size_t>()};
  }
  if (doc.contains("solve") && !doc.at("solve").is_null()) {
    const json& s = doc.at("solve");
    SolveRecord rec;
    rec.ansatz = s.at("ansatz").get<std::string>();
    rec.layers = s.at("layers").get<std::size_t>();
    if (!s.at("shots").is_null()) rec.shots = s.at("shots").get<std::size_t>();
    rec.e_c = require_finite(s.at("e_c"), origin, "e_c");
    rec.e_csvqe = require_finite(s.at("e_csvqe"), origin, "e_csvqe");
    if (!s.at("error_vs_reference").is_null()) {
      rec.error_vs_reference = require_finite(s.at("error_vs_reference"), origin, "error_vs_reference");
    }
    rec.duration_dt = s.at("duration_dt").get<std::size_t>();
    rec.evaluations = s.at("evaluations").get<std::size_t>();
    rec.trace = trace_from_json(s.at("trace"), origin);
    r.solve = std::move(rec);
  }
  return r;
}

}  // namespace

PipelineReport parse_report(const std::string& text, const std::string& origin) {
  const json doc = parse_json(text, origin);
  try {
    return report_from_json(doc, origin);
  } catch (const json::exception& e) {
    fail(origin, e.what());
  }
}

PipelineReport load_report(const std::filesystem::path& path) {
  return parse_report(read_file(path), path.string());
}

void write_report(const PipelineReport& r, const std::filesystem::path& path) {
  write_file(path, report_to_text(r));
}

std::string sweep_csv_text(const std::vector<SweepRow>& rows) {
  std::string out = "n_target,e_csvqe,error_vs_reference,duration_dt,grouped_count\n";
  char buf[64];
  for (const SweepRow& row : rows) {
    out += std::to_string(row.n_target);
    std::snprintf(buf, sizeof(buf), ",%.17g", row.e_csvqe);
    out += buf;
    if (row.error_vs_reference) {
      std::snprintf(buf, sizeof(buf), ",%.17g", *row.error_vs_reference);
      out += buf;
    } else {
      out += ",";
    }
    out += "," + std::to_string(row.duration_dt);
    out += "," + std::to_string(row.grouped_count);
    out += "\n";
  }
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  write_file(path, sweep_csv_text(rows));
}

}  // namespace csvqe
