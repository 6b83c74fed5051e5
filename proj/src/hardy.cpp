#include "pcg/hardy.hpp"

#include <algorithm>
#include <unordered_map>

#include "pcg/error.hpp"

namespace pcg {

std::optional<int> x_product_eigenvalue(const ResidualState& residual,
                                        QubitSet edge) {
  if (residual.components.empty()) {
    throw PcgError("conditioning event has probability zero");
  }
  if (edge & residual.fixed.domain) {
    throw PcgError("edge overlaps the conditioned qubits");
  }
  if (edge & ~full_set(residual.n)) {
    throw PcgError("edge outside the state's qubits");
  }

  std::unordered_map<QubitSet, int> sign_of;
  sign_of.reserve(residual.components.size());
  for (const Component& c : residual.components) sign_of.emplace(c.support, c.sign);

  // The flip map s -> s ^ edge must permute the residual supports with one
  // uniform sign ratio; that ratio is the eigenvalue.
  int alpha = 0;
  for (const Component& c : residual.components) {
    const auto partner = sign_of.find(c.support ^ edge);
    if (partner == sign_of.end()) return std::nullopt;
    const int ratio = c.sign * partner->second;
    if (alpha == 0) {
      alpha = ratio;
    } else if (alpha != ratio) {
      return std::nullopt;
    }
  }
  return alpha;
}

ConditionSet derive_conditions(const PcgStateSpec& state, const Outcome& outcome,
                               const DeriveOptions& options) {
  if (outcome.n != state.n) throw PcgError("outcome length does not match state");
  const QubitSet full = full_set(state.n);

  std::unordered_map<QubitSet, int> sign_of;
  sign_of.reserve(state.components.size());
  for (const Component& c : state.components) sign_of.emplace(c.support, c.sign);
  if (!sign_of.count(outcome.minus)) {
    throw PcgError("outcome has probability zero");
  }

  // diff bits against the outcome: a component survives conditioning on the
  // complement of `edge` exactly when its diff lies inside the edge. The
  // residual is never empty (the outcome's own component has diff 0).
  std::vector<std::pair<QubitSet, int>> diffs;
  diffs.reserve(state.components.size());
  for (const Component& c : state.components) {
    diffs.emplace_back(c.support ^ outcome.minus, c.sign);
  }

  ConditionSet set;
  set.n = state.n;
  set.outcome = outcome;
  for (QubitSet edge = 0;; ++edge) {
    const bool last = edge == full;
    const bool skip = set_size(edge) < 2 || (options.paper_edges_only && edge == full);
    if (!skip) {
      int alpha = 0;
      bool eigen = true;
      for (const auto& [diff, sign] : diffs) {
        if (diff & ~edge) continue;
        const auto partner = sign_of.find((diff ^ edge) ^ outcome.minus);
        if (partner == sign_of.end()) {
          eigen = false;
          break;
        }
        const int ratio = sign * partner->second;
        if (alpha == 0) {
          alpha = ratio;
        } else if (alpha != ratio) {
          eigen = false;
          break;
        }
      }
      if (eigen && alpha != 0) {
        HardyCondition cond;
        cond.edge = edge;
        cond.alpha = alpha;
        cond.witnesses.push_back({full & ~edge, outcome.minus & ~edge});
        set.conditions.push_back(std::move(cond));
      }
    }
    if (last) break;
  }

  std::sort(set.conditions.begin(), set.conditions.end(),
            [](const HardyCondition& a, const HardyCondition& b) {
              return support_lex_less(a.edge, b.edge);
            });
  // Edges are pairwise distinct by construction (one candidate edge per
  // conditioning set), which is exactly the flip-partner uniqueness the
  // dedup relies on.
  for (std::size_t i = 1; i < set.conditions.size(); ++i) {
    if (set.conditions[i - 1].edge == set.conditions[i].edge) {
      throw PcgError("duplicate edge in derived conditions");
    }
  }
  return set;
}

Rational conditional_probability(const PcgStateSpec& state, QubitSet edge,
                                 int alpha, const ZAssignment& conditioning) {
  if (alpha != 1 && alpha != -1) throw PcgError("alpha must be +1 or -1");
  if (edge & ~full_set(state.n)) throw PcgError("edge outside the state's qubits");
  if (edge & conditioning.domain) {
    throw PcgError("edge overlaps the conditioned qubits");
  }
  if (conditioning.minus & ~conditioning.domain) {
    throw PcgError("assignment values outside its domain");
  }

  std::unordered_map<QubitSet, int> sign_of;
  sign_of.reserve(state.components.size());
  for (const Component& c : state.components) sign_of.emplace(c.support, c.sign);

  // <prod X> over the residual: flipping by the edge keeps consistency with
  // the conditioning, so partners can be looked up globally.
  std::int64_t residual_size = 0;
  std::int64_t signed_pairs = 0;
  for (const Component& c : state.components) {
    if ((c.support & conditioning.domain) != conditioning.minus) continue;
    ++residual_size;
    const auto partner = sign_of.find(c.support ^ edge);
    if (partner != sign_of.end()) {
      signed_pairs += static_cast<std::int64_t>(c.sign) * partner->second;
    }
  }
  if (residual_size == 0) {
    throw PcgError("conditioning event has probability zero");
  }
  return {residual_size + alpha * signed_pairs, 2 * residual_size};
}

Rational joint_z_probability(const PcgStateSpec& state, const Outcome& outcome) {
  if (outcome.n != state.n) throw PcgError("outcome length does not match state");
  if (state.sign_of(outcome.minus).has_value()) {
    return {1, state.size()};
  }
  return 0;
}

}  // namespace pcg
