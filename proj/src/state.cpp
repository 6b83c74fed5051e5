#include "pcg/state.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pcg/error.hpp"

namespace pcg {

namespace {

std::string support_str(QubitSet set) {
  std::string out = "{";
  bool first = true;
  for (int q : set_to_indices(set)) {
    if (!first) out += ",";
    out += std::to_string(q);
    first = false;
  }
  return out + "}";
}

void add_violation(std::vector<Violation>& list, std::string kind,
                   std::vector<int> components, std::string message) {
  list.push_back({std::move(kind), std::move(components), std::move(message)});
}

}  // namespace

std::optional<int> PcgStateSpec::sign_of(QubitSet support) const {
  for (const Component& c : components) {
    if (c.support == support) return c.sign;
  }
  return std::nullopt;
}

std::string Outcome::bitstring() const {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int q = 1; q <= n; ++q) {
    if (contains(minus, q)) out[q - 1] = '1';
  }
  return out;
}

Outcome Outcome::from_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw PcgError("outcome bitstring length out of range");
  }
  Outcome out;
  out.n = static_cast<int>(bits.size());
  for (int q = 1; q <= out.n; ++q) {
    const char c = bits[q - 1];
    if (c == '1') {
      out.minus |= qubit_bit(q);
    } else if (c != '0') {
      throw PcgError("outcome bitstring must contain only '0' and '1'");
    }
  }
  return out;
}

ValidationResult validate_pcg_state(const RawState& raw,
                                    const ValidationOptions& options) {
  ValidationResult result;
  auto& violations = result.violations;

  if (raw.n < 1) {
    add_violation(violations, "qubit_count", {},
                  "state needs at least one qubit");
  }
  if (raw.n > options.max_qubits) {
    add_violation(violations, "qubit_guard", {},
                  "n = " + std::to_string(raw.n) + " exceeds the guard of " +
                      std::to_string(options.max_qubits) +
                      " qubits (downstream checks are exponential)");
  }
  if (raw.components.empty()) {
    add_violation(violations, "no_components", {},
                  "state needs at least one component");
  }
  if (!violations.empty()) return result;

  // Per-component shape; positions of well-formed components keep their masks.
  std::vector<std::pair<int, Component>> formed;
  for (int i = 0; i < static_cast<int>(raw.components.size()); ++i) {
    const RawComponent& rc = raw.components[i];
    bool ok = true;
    if (rc.sign != 1 && rc.sign != -1) {
      add_violation(violations, "invalid_sign", {i},
                    "components[" + std::to_string(i) + "]: sign must be +1 or -1");
      ok = false;
    }
    QubitSet mask = 0;
    for (int q : rc.support) {
      if (q < 1 || q > raw.n) {
        add_violation(violations, "index_out_of_range", {i},
                      "components[" + std::to_string(i) + "]: qubit " +
                          std::to_string(q) + " outside 1.." +
                          std::to_string(raw.n));
        ok = false;
        continue;
      }
      if (contains(mask, q)) {
        add_violation(violations, "repeated_index", {i},
                      "components[" + std::to_string(i) + "]: qubit " +
                          std::to_string(q) + " listed twice");
        ok = false;
        continue;
      }
      mask |= qubit_bit(q);
    }
    if (!ok) continue;

    if (options.mode == ValidationMode::Strict &&
        set_size(mask) == raw.n) {
      add_violation(violations, "full_support", {i},
                    "components[" + std::to_string(i) + "]: support " +
                        support_str(mask) + " covers every qubit");
      continue;
    }
    formed.emplace_back(i, Component{rc.sign, mask});
  }

  // Pairwise rules over the well-formed components.
  for (std::size_t a = 0; a < formed.size(); ++a) {
    for (std::size_t b = a + 1; b < formed.size(); ++b) {
      const auto& [ia, ca] = formed[a];
      const auto& [ib, cb] = formed[b];
      if (ca.support == cb.support) {
        add_violation(violations, "duplicate_support", {ia, ib},
                      "components[" + std::to_string(ia) + "] and components[" +
                          std::to_string(ib) + "]: duplicate support " +
                          support_str(ca.support));
        continue;
      }
      if (options.mode != ValidationMode::Strict) continue;

      const QubitSet u = ca.support | cb.support;
      const int max_size = std::max(set_size(ca.support), set_size(cb.support));
      if (ca.support != 0 && cb.support != 0) {
        if (set_size(u) <= max_size) {
          add_violation(violations, "containment", {ia, ib},
                        "components[" + std::to_string(ia) +
                            "] and components[" + std::to_string(ib) +
                            "]: support " + support_str(ca.support) +
                            " and " + support_str(cb.support) +
                            " violate the union condition (one contains the other)");
        }
      } else if (max_size == 1) {
        // Empty against a singleton: the union condition fails and the pair
        // would give the only single-qubit-flip overlap the marginals forbid.
        add_violation(violations, "union_condition", {ia, ib},
                      "components[" + std::to_string(ia) + "] and components[" +
                          std::to_string(ib) + "]: empty support with singleton " +
                          support_str(u) + " violates the union condition");
      }
    }
  }

  if (!violations.empty()) return result;

  PcgStateSpec spec;
  spec.n = raw.n;
  spec.components.reserve(formed.size());
  for (const auto& [idx, comp] : formed) spec.components.push_back(comp);
  std::sort(spec.components.begin(), spec.components.end(),
            [](const Component& x, const Component& y) {
              return support_lex_less(x.support, y.support);
            });
  result.spec = std::move(spec);
  return result;
}

std::vector<std::pair<Outcome, Rational>> outcome_support(
    const PcgStateSpec& state) {
  std::vector<std::pair<Outcome, Rational>> out;
  out.reserve(state.components.size());
  const Rational p(1, state.size());
  for (const Component& c : state.components) {
    out.emplace_back(Outcome{state.n, c.support}, p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.bitstring() < b.first.bitstring();
  });
  return out;
}

ResidualState project_z(const PcgStateSpec& state, const ZAssignment& fixed) {
  if (fixed.domain & ~full_set(state.n)) {
    throw PcgError("assignment fixes qubits outside the state");
  }
  if (fixed.minus & ~fixed.domain) {
    throw PcgError("assignment values outside its domain");
  }
  ResidualState residual;
  residual.n = state.n;
  residual.fixed = fixed;
  for (const Component& c : state.components) {
    if ((c.support & fixed.domain) == fixed.minus) {
      residual.components.push_back({c.sign, c.support & ~fixed.domain});
    }
  }
  return residual;
}

ReducedDensityMatrix reduced_density(const PcgStateSpec& state, int qubit) {
  if (qubit < 1 || qubit > state.n) throw PcgError("qubit index out of range");
  const QubitSet bit = qubit_bit(qubit);
  const std::int64_t total = state.size();
  std::int64_t zeros = 0;
  std::int64_t cross = 0;  // sum of sign pairs over supports differing in `qubit` only
  std::unordered_map<QubitSet, int> sign_of;
  sign_of.reserve(state.components.size());
  for (const Component& c : state.components) sign_of.emplace(c.support, c.sign);
  for (const Component& c : state.components) {
    if (c.support & bit) continue;
    ++zeros;
    const auto it = sign_of.find(c.support | bit);
    if (it != sign_of.end()) cross += static_cast<std::int64_t>(c.sign) * it->second;
  }
  ReducedDensityMatrix rho;
  rho.r00 = Rational(zeros, total);
  rho.r11 = Rational(total - zeros, total);
  rho.r01 = Rational(cross, total);
  rho.r10 = rho.r01;
  return rho;
}

NonstabilizerResult certify_nonstabilizer(const PcgStateSpec& state) {
  NonstabilizerResult result;
  const QubitSet full = full_set(state.n);

  // Full entanglement: Schmidt rank > 1 across every cut. Each unordered cut
  // is visited once via the side containing qubit 1.
  bool fully_entangled = state.n >= 2;
  for (QubitSet a = 1; fully_entangled && a < full; a += 2) {
    if (!bipartition_rank_at_least(state, a, 2)) fully_entangled = false;
  }
  if (!fully_entangled) {
    result.reason = "not fully entangled";
    return result;
  }

  for (int q = 1; q <= state.n; ++q) {
    ReducedDensityMatrix rho = reduced_density(state, q);
    if (!rho.is_maximally_mixed()) {
      result.certified = true;
      result.witness_qubit = q;
      result.rho = rho;
      return result;
    }
  }
  result.reason = "all single-qubit marginals maximally mixed";
  return result;
}

}  // namespace pcg
