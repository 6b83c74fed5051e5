#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcg/coloring.hpp"
#include "pcg/hardy.hpp"
#include "pcg/state.hpp"

namespace pcg {

struct OutcomeRecord {
  Outcome outcome;
  Rational probability;
  ConditionSet conditions;
  Pcg pcg;
  ColorabilityResult verdict;

  int condition_count() const {
    return static_cast<int>(conditions.conditions.size());
  }
};

// Full verdict: davn holds iff every outcome's condition group builds an
// un-colorable graph, i.e. iff success_probability is exactly 1.
struct DavnReport {
  int state_size = 0;  // |I|
  std::vector<OutcomeRecord> records;  // sorted by outcome bitstring
  bool davn = false;
  int uncolorable_count = 0;
  Rational success_probability;
  NonstabilizerResult nonstabilizer;
  std::optional<std::int64_t> lhv_consistent_count;
};

struct DavnOptions {
  int jobs = 1;  // outcome-level workers; the report is identical for any value
  bool with_lhv = false;
  DeriveOptions derive;
  int lhv_max_qubits = 12;
};

// One deterministic local assignment: Z values and X values for every qubit,
// stored as the sets of -1 entries.
struct LhvAssignment {
  int n = 0;
  QubitSet z_minus = 0;
  QubitSet x_minus = 0;
};

struct LhvScan {
  std::int64_t count = 0;
  std::vector<LhvAssignment> samples;  // first `sample_limit` hits
};

DavnReport verify_davn(const PcgStateSpec& state, const DavnOptions& options = {});

// Independent oracle over all (z, x) in {+-1}^n x {+-1}^n: an assignment is
// consistent when z is an observable outcome and x satisfies every condition
// derived for that outcome. Enumeration order is bitstring-lexicographic in
// (z, x). davn holds iff the count is zero.
LhvScan lhv_consistent_assignments(const PcgStateSpec& state,
                                   std::int64_t sample_limit = 0,
                                   int max_qubits = 12);

Rational success_probability(const PcgStateSpec& state);

}  // namespace pcg
