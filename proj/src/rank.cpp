#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <utility>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/state.hpp"

namespace pcg {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;

// Coefficient matrix across the cut: rows are the distinct support patterns
// on part_a, columns the patterns on the complement; the entry is the
// component sign (each component fills exactly one cell).
Matrix cut_matrix(const PcgStateSpec& state, QubitSet part_a) {
  std::map<QubitSet, int> rows, cols;
  for (const Component& c : state.components) {
    rows.emplace(c.support & part_a, 0);
    cols.emplace(c.support & ~part_a, 0);
  }
  int idx = 0;
  for (auto& [mask, i] : rows) i = idx++;
  idx = 0;
  for (auto& [mask, i] : cols) i = idx++;

  Matrix m(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (const Component& c : state.components) {
    m[rows[c.support & part_a]][cols[c.support & ~part_a]] = c.sign;
  }
  return m;
}

// Fraction-free elimination over the integers; rows are re-reduced by their
// gcd after every combination step, so entries stay exact and small.
int eliminate_rank(Matrix m, int stop_at) {
  const int n_rows = static_cast<int>(m.size());
  const int n_cols = n_rows > 0 ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < n_cols && rank < n_rows; ++col) {
    int sel = -1;
    for (int r = rank; r < n_rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[rank], m[sel]);
    for (int r = rank + 1; r < n_rows; ++r) {
      if (m[r][col] == 0) continue;
      const BigInt p = m[rank][col];
      const BigInt q = m[r][col];
      BigInt g = 0;
      for (int c = col; c < n_cols; ++c) {
        m[r][c] = m[r][c] * p - m[rank][c] * q;
        g = boost::multiprecision::gcd(g, m[r][c]);
      }
      if (g > 1) {
        for (int c = col; c < n_cols; ++c) m[r][c] /= g;
      }
    }
    ++rank;
    if (stop_at >= 0 && rank >= stop_at) break;
  }
  return rank;
}

void check_part(const PcgStateSpec& state, QubitSet part_a) {
  const QubitSet full = full_set(state.n);
  if (part_a == 0 || part_a == full || (part_a & ~full) != 0) {
    throw PcgError("bipartition must be a nonempty proper subset of the qubits");
  }
}

}  // namespace

int bipartition_rank(const PcgStateSpec& state, QubitSet part_a) {
  check_part(state, part_a);
  return eliminate_rank(cut_matrix(state, part_a), -1);
}

bool bipartition_rank_at_least(const PcgStateSpec& state, QubitSet part_a,
                               int threshold) {
  check_part(state, part_a);
  if (threshold <= 0) return true;
  return eliminate_rank(cut_matrix(state, part_a), threshold) >= threshold;
}

}  // namespace pcg
