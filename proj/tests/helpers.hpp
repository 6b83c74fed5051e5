#pragma once

// Test-side oracles and generators. Everything here recomputes results from
// first principles (dense integer amplitude vectors, minor-expansion rank,
// exhaustive enumeration) so library regressions cannot hide behind shared
// code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "pcg/coloring.hpp"
#include "pcg/hardy.hpp"
#include "pcg/state.hpp"

namespace pcg::test {

// Dense unnormalized amplitude vector: entry at index i is the sign of the
// component whose support mask equals i, else 0.
inline std::vector<int> dense_state(const PcgStateSpec& state) {
  std::vector<int> amp(std::size_t{1} << state.n, 0);
  for (const Component& c : state.components) amp[c.support] = c.sign;
  return amp;
}

inline void dense_project(std::vector<int>& amp, const ZAssignment& fixed) {
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    if ((static_cast<QubitSet>(idx) & fixed.domain) != fixed.minus) amp[idx] = 0;
  }
}

// <prod_{k in edge} X_k> over the amplitudes as an unreduced fraction
// (numerator, squared norm).
inline std::pair<std::int64_t, std::int64_t> dense_x_expectation(
    const std::vector<int>& amp, QubitSet edge) {
  std::int64_t num = 0;
  std::int64_t den = 0;
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    den += static_cast<std::int64_t>(amp[idx]) * amp[idx];
    num += static_cast<std::int64_t>(amp[idx]) * amp[idx ^ edge];
  }
  return {num, den};
}

struct DenseRho {
  std::int64_t e00 = 0, e01 = 0, e11 = 0, den = 0;
};

inline DenseRho dense_reduced_density(const std::vector<int>& amp, int qubit) {
  const QubitSet bit = qubit_bit(qubit);
  DenseRho rho;
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    const std::int64_t a = amp[idx];
    rho.den += a * a;
    if (idx & bit) {
      rho.e11 += a * a;
    } else {
      rho.e00 += a * a;
      rho.e01 += a * amp[idx | bit];
    }
  }
  return rho;
}

// Bareiss fraction-free determinant; entries stay exact for the small +-1
// matrices used in tests.
inline std::int64_t dense_det(std::vector<std::vector<std::int64_t>> m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return 1;
  std::int64_t prev = 1;
  std::int64_t sign = 1;
  for (int i = 0; i < k - 1; ++i) {
    if (m[i][i] == 0) {
      int sel = -1;
      for (int r = i + 1; r < k; ++r) {
        if (m[r][i] != 0) {
          sel = r;
          break;
        }
      }
      if (sel < 0) return 0;
      std::swap(m[i], m[sel]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) {
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
      }
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  return sign * m[k - 1][k - 1];
}

// Exact rank by minor expansion: the largest k with some nonzero k x k minor.
inline int minor_rank(const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
  auto combinations = [](int total, int pick) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      int i = pick - 1;
      while (i >= 0 && idx[i] == total - pick + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  for (int k = std::min(rows, cols); k >= 1; --k) {
    for (const auto& rsel : combinations(rows, k)) {
      for (const auto& csel : combinations(cols, k)) {
        std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
        for (int r = 0; r < k; ++r) {
          for (int c = 0; c < k; ++c) sub[r][c] = m[rsel[r]][csel[c]];
        }
        if (dense_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

// Cut matrix rebuilt from the dense vector, independent of the library's.
inline std::vector<std::vector<std::int64_t>> dense_cut_matrix(
    const std::vector<int>& amp, QubitSet part_a) {
  std::vector<QubitSet> row_patterns, col_patterns;
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    if (amp[idx] == 0) continue;
    row_patterns.push_back(static_cast<QubitSet>(idx) & part_a);
    col_patterns.push_back(static_cast<QubitSet>(idx) & ~part_a);
  }
  auto dedup = [](std::vector<QubitSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(row_patterns);
  dedup(col_patterns);
  std::vector<std::vector<std::int64_t>> m(
      row_patterns.size(), std::vector<std::int64_t>(col_patterns.size(), 0));
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    if (amp[idx] == 0) continue;
    const auto r = std::lower_bound(row_patterns.begin(), row_patterns.end(),
                                    static_cast<QubitSet>(idx) & part_a) -
                   row_patterns.begin();
    const auto c = std::lower_bound(col_patterns.begin(), col_patterns.end(),
                                    static_cast<QubitSet>(idx) & ~part_a) -
                   col_patterns.begin();
    m[r][c] = amp[idx];
  }
  return m;
}

// Random strictly valid state: pairwise-distinct supports, no containment
// between nonempty ones, and the empty support never next to a singleton.
inline PcgStateSpec random_state(std::mt19937& rng, int max_n = 6,
                                 int max_components = 6) {
  std::uniform_int_distribution<int> n_dist(2, max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> m_dist(1, max_components);
  const int target = m_dist(rng);
  std::uniform_int_distribution<QubitSet> mask_dist(0, full_set(n) - 1);

  std::vector<Component> picked;
  for (int attempts = 0; attempts < 200 && static_cast<int>(picked.size()) < target;
       ++attempts) {
    const QubitSet mask = mask_dist(rng);
    bool ok = true;
    for (const Component& c : picked) {
      if (c.support == mask) {
        ok = false;
        break;
      }
      const QubitSet u = c.support | mask;
      const int bigger = std::max(set_size(c.support), set_size(mask));
      if (c.support != 0 && mask != 0) {
        if (set_size(u) <= bigger) {
          ok = false;
          break;
        }
      } else if (bigger == 1) {
        ok = false;
        break;
      }
    }
    if (ok) picked.push_back({rng() % 2 == 0 ? 1 : -1, mask});
  }
  if (picked.empty()) picked.push_back({1, 0});
  std::sort(picked.begin(), picked.end(), [](const Component& a, const Component& b) {
    return support_lex_less(a.support, b.support);
  });
  return {n, std::move(picked)};
}

inline Pcg random_pcg(std::mt19937& rng, int max_n = 10, int max_edges = 12) {
  std::uniform_int_distribution<int> n_dist(2, max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> e_dist(0, max_edges);
  const int edges = e_dist(rng);
  std::uniform_int_distribution<QubitSet> mask_dist(0, full_set(n));
  Pcg graph;
  graph.n = n;
  graph.hollow = mask_dist(rng) & full_set(n);
  for (int i = 0; i < edges; ++i) {
    QubitSet mask = 0;
    do {
      mask = mask_dist(rng);
    } while (set_size(mask) < 2);
    graph.edges.push_back({mask, rng() % 2 == 0 ? 1 : -1});
  }
  return graph;
}

// perm[q-1] is the new label of qubit q.
inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline QubitSet permute_set(QubitSet set, const std::vector<int>& perm) {
  QubitSet out = 0;
  for (int q : set_to_indices(set)) out |= qubit_bit(perm[q - 1]);
  return out;
}

inline PcgStateSpec permute_state(const PcgStateSpec& state,
                                  const std::vector<int>& perm) {
  PcgStateSpec out;
  out.n = state.n;
  for (const Component& c : state.components) {
    out.components.push_back({c.sign, permute_set(c.support, perm)});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) {
              return support_lex_less(a.support, b.support);
            });
  return out;
}

inline Outcome permute_outcome(const Outcome& outcome, const std::vector<int>& perm) {
  return {outcome.n, permute_set(outcome.minus, perm)};
}

inline Pcg permute_pcg(const Pcg& graph, const std::vector<int>& perm) {
  Pcg out;
  out.n = graph.n;
  out.hollow = permute_set(graph.hollow, perm);
  for (const PcgEdge& e : graph.edges) {
    out.edges.push_back({permute_set(e.vertices, perm), e.weight});
  }
  return out;
}

// Conditions mapped through a relabeling and re-sorted, for comparing the
// engine's output on relabeled inputs.
inline std::vector<HardyCondition> permute_conditions(
    const std::vector<HardyCondition>& conditions, const std::vector<int>& perm) {
  std::vector<HardyCondition> out;
  for (const HardyCondition& c : conditions) {
    HardyCondition moved;
    moved.edge = permute_set(c.edge, perm);
    moved.alpha = c.alpha;
    for (const ZAssignment& w : c.witnesses) {
      moved.witnesses.push_back(
          {permute_set(w.domain, perm), permute_set(w.minus, perm)});
    }
    out.push_back(std::move(moved));
  }
  std::sort(out.begin(), out.end(), [](const HardyCondition& a, const HardyCondition& b) {
    return support_lex_less(a.edge, b.edge);
  });
  return out;
}

}  // namespace pcg::test
