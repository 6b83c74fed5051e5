#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcg/bits.hpp"
#include "pcg/rational.hpp"

namespace pcg {

// One basis component theta |0...0>_rest |1...1>_support. The amplitude is
// sign / sqrt(|components|); the normalization stays implicit so no float
// ever appears.
struct Component {
  int sign = 1;          // +1 or -1
  QubitSet support = 0;  // qubits in |1>

  friend bool operator==(const Component&, const Component&) = default;
};

// Exact sparse n-qubit state with uniform-magnitude coefficients.
// Canonical form: components sorted by support in index-list lexicographic
// order, supports emitted ascending.
struct PcgStateSpec {
  int n = 0;
  std::vector<Component> components;

  int size() const { return static_cast<int>(components.size()); }
  std::optional<int> sign_of(QubitSet support) const;

  friend bool operator==(const PcgStateSpec&, const PcgStateSpec&) = default;
};

// Full Z-measurement record; `minus` holds the qubits that returned -1.
// Bitstring convention on every surface: '0' <-> Z=+1 <-> |0>.
struct Outcome {
  int n = 0;
  QubitSet minus = 0;

  int value(int qubit) const { return contains(minus, qubit) ? -1 : 1; }
  std::string bitstring() const;
  static Outcome from_bitstring(const std::string& bits);  // throws PcgError

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Partial Z-assignment: qubits in `domain` are fixed, those also in `minus`
// to -1; minus is a subset of domain.
struct ZAssignment {
  QubitSet domain = 0;
  QubitSet minus = 0;

  int value(int qubit) const { return contains(minus, qubit) ? -1 : 1; }

  friend bool operator==(const ZAssignment&, const ZAssignment&) = default;
};

// Unnormalized post-selected state: the components consistent with `fixed`,
// supports restricted to the free qubits (original indices kept).
struct ResidualState {
  int n = 0;
  ZAssignment fixed;
  std::vector<Component> components;

  QubitSet free_set() const { return full_set(n) & ~fixed.domain; }
};

// Exact 2x2 single-qubit marginal. Diagonal for every strictly valid state;
// the off-diagonal entries are computed, never assumed zero.
struct ReducedDensityMatrix {
  Rational r00, r01, r10, r11;

  bool is_diagonal() const { return r01 == Rational(0) && r10 == Rational(0); }
  bool is_maximally_mixed() const {
    return is_diagonal() && r00 == Rational(1, 2) && r11 == Rational(1, 2);
  }

  friend bool operator==(const ReducedDensityMatrix&,
                         const ReducedDensityMatrix&) = default;
};

enum class ValidationMode { Strict, PaperCompatible };

struct ValidationOptions {
  ValidationMode mode = ValidationMode::Strict;
  // Downstream oracles are exponential in n; raising this is a deliberate act.
  int max_qubits = 16;
};

struct RawComponent {
  int sign = 1;
  std::vector<int> support;
};

struct RawState {
  int n = 0;
  std::vector<RawComponent> components;
};

struct Violation {
  std::string kind;
  std::vector<int> components;  // 0-based positions in the raw input
  std::string message;
};

struct ValidationResult {
  std::optional<PcgStateSpec> spec;  // canonicalized, present iff no violation
  std::vector<Violation> violations;

  bool ok() const { return spec.has_value(); }
};

// Checks every state invariant and returns either the canonicalized spec or
// the complete list of violations. Strict mode additionally demands
// |support| < n and the pairwise union condition (no containment between
// nonempty supports; the empty support may only coexist with supports of
// size >= 2).
ValidationResult validate_pcg_state(const RawState& raw,
                                    const ValidationOptions& options = {});

// The |I| observable Z-outcomes, one per component, each with probability
// exactly 1/|I|; sorted by outcome bitstring.
std::vector<std::pair<Outcome, Rational>> outcome_support(
    const PcgStateSpec& state);

ResidualState project_z(const PcgStateSpec& state, const ZAssignment& fixed);

ReducedDensityMatrix reduced_density(const PcgStateSpec& state, int qubit);

// Schmidt rank across the cut (part_a | complement): rank over the rationals
// of the coefficient matrix indexed by support patterns on the two sides.
// part_a must be a nonempty proper subset of the qubits.
int bipartition_rank(const PcgStateSpec& state, QubitSet part_a);

// Same elimination with early exit once `threshold` pivots are found.
bool bipartition_rank_at_least(const PcgStateSpec& state, QubitSet part_a,
                               int threshold);

struct NonstabilizerResult {
  bool certified = false;
  int witness_qubit = 0;     // lowest-index biased qubit, set when certified
  ReducedDensityMatrix rho;  // marginal of the witness qubit
  std::string reason;        // set when inconclusive
};

// Certified = entangled across every bipartition and at least one
// single-qubit marginal differs from I/2. Inconclusive is not a stabilizer
// verdict; it only means this criterion cannot tell.
NonstabilizerResult certify_nonstabilizer(const PcgStateSpec& state);

}  // namespace pcg
