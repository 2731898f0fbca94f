#include "csvqe/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace csvqe {

TimingTable load_timing_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open timing table " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  TimingTable table;
  if (doc.contains("rotation")) table.rotation_dt = doc.at("rotation").get<std::size_t>();
  if (doc.contains("cnot")) table.cnot_dt = doc.at("cnot").get<std::size_t>();
  if (table.rotation_dt == 0 || table.cnot_dt == 0) {
    throw std::runtime_error(path.string() + ": gate times must be positive");
  }
  return table;
}

std::size_t duration_of(const GateCircuit& c, const TimingTable& table) {
  std::vector<std::size_t> busy(c.n, 0);
  for (const GateOp& op : c.ops) {
    if (op.q0 >= c.n || (op.kind == GateOp::Kind::cnot && op.q1 >= c.n)) {
      throw std::out_of_range("duration_of: gate qubit index out of range");
    }
    if (op.kind == GateOp::Kind::rotation) {
      busy[op.q0] += table.rotation_dt;
    } else {
      const std::size_t start = std::max(busy[op.q0], busy[op.q1]);
      busy[op.q0] = busy[op.q1] = start + table.cnot_dt;
    }
  }
  std::size_t total = 0;
  for (std::size_t b : busy) total = std::max(total, b);
  return total;
}

}  // namespace csvqe
