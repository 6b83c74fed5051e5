#pragma once

#include <optional>
#include <vector>

#include "pcg/state.hpp"

namespace pcg {

// One Hardy-type certainty relation: the product of X over `edge` equals
// alpha with probability one, given any of the Z conditionings in
// `witnesses`. Each witness fixes exactly the complement of the edge.
struct HardyCondition {
  QubitSet edge = 0;
  int alpha = 1;
  std::vector<ZAssignment> witnesses;

  friend bool operator==(const HardyCondition&, const HardyCondition&) = default;
};

// All conditions derivable for one outcome, sorted by edge (index-list
// lexicographic), deduplicated by (edge, alpha).
struct ConditionSet {
  int n = 0;
  Outcome outcome;
  std::vector<HardyCondition> conditions;
};

struct DeriveOptions {
  // Restrict to conditionings on at least one qubit (drops the edge equal to
  // the full qubit set).
  bool paper_edges_only = false;
};

// Eigenvalue of the X-product over `edge` on the residual, if the residual is
// an eigenstate: flipping the edge qubits must permute the residual
// components with a uniform sign. edge must avoid the fixed qubits; an empty
// residual is a zero-probability conditioning and an error.
std::optional<int> x_product_eigenvalue(const ResidualState& residual,
                                        QubitSet edge);

// Enumerates every conditioning set (complement of each candidate edge with
// >= 2 qubits), takes conditioning values from the outcome, and keeps each
// edge whose residual is an X-product eigenstate. The outcome must have
// nonzero probability.
ConditionSet derive_conditions(const PcgStateSpec& state,
                               const Outcome& outcome,
                               const DeriveOptions& options = {});

// P(prod_{k in edge} X_k = alpha | conditioning), exact. The edge must be
// disjoint from the conditioned qubits and need not cover the complement.
Rational conditional_probability(const PcgStateSpec& state, QubitSet edge,
                                 int alpha, const ZAssignment& conditioning);

// P(Z = outcome): 1/|I| if some component induces the outcome, else 0.
Rational joint_z_probability(const PcgStateSpec& state, const Outcome& outcome);

}  // namespace pcg
