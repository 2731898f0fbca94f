#include "csvqe/gf2.hpp"

#include <stdexcept>

namespace csvqe::gf2 {

namespace {

void xor_into(Vec& dst, const Vec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != row && m[r][col]) xor_into(m[r], m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix kernel_basis(const Matrix& m) {
  Matrix basis;
  if (m.empty()) return basis;
  const std::size_t cols = m[0].size();
  Matrix reduced = m;
  const std::vector<std::size_t> pivots = rref(reduced);
  std::vector<std::uint8_t> is_pivot(cols, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    // Row i of the RREF reads x_{pivot_i} + sum over free columns = 0.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = reduced[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_combination(const Matrix& rows, const Vec& target) {
  const std::size_t k = rows.size();
  const std::size_t cols = target.size();
  for (const Vec& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("gf2: row length mismatch");
  }
  // Augmented system: transpose(rows) * c = target.
  Matrix aug(cols, Vec(k + 1, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = target[j];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < cols; ++col) {
    std::size_t pivot = row;
    while (pivot < cols && aug[pivot][col] == 0) ++pivot;
    if (pivot == cols) continue;
    std::swap(aug[row], aug[pivot]);
    for (std::size_t r = 0; r < cols; ++r) {
      if (r != row && aug[r][col]) xor_into(aug[r], aug[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < cols; ++r) {
    if (aug[r][k]) return std::nullopt;  // 0 = 1: inconsistent
  }
  Vec c(k, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug[i][k];
  return c;
}

std::vector<std::size_t> independent_rows(const Matrix& rows) {
  std::vector<std::size_t> kept;
  Matrix echelon;           // rows reduced so far, each with a unique leading column
  std::vector<std::size_t> leads;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    Vec v = rows[idx];
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if (leads[i] < v.size() && v[leads[i]]) xor_into(v, echelon[i]);
    }
    std::size_t lead = v.size();
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j]) {
        lead = j;
        break;
      }
    }
    if (lead == v.size()) continue;  // dependent
    kept.push_back(idx);
    echelon.push_back(std::move(v));
    leads.push_back(lead);
  }
  return kept;
}

}  // namespace csvqe::gf2
