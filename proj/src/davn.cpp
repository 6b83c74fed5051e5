#include "pcg/davn.hpp"

#include <algorithm>
#include <thread>

#include "pcg/error.hpp"

namespace pcg {

DavnReport verify_davn(const PcgStateSpec& state, const DavnOptions& options) {
  const auto support = outcome_support(state);
  const int total = static_cast<int>(support.size());

  DavnReport report;
  report.state_size = state.size();
  report.records.resize(total);

  auto verify_one = [&](int i) {
    OutcomeRecord& record = report.records[i];
    record.outcome = support[i].first;
    record.probability = support[i].second;
    record.conditions = derive_conditions(state, record.outcome, options.derive);
    record.pcg = build_pcg(record.outcome, record.conditions);
    record.verdict = check_colorable(record.pcg);
  };

  // Records land in preassigned slots, so the report is byte-identical for
  // any worker count.
  const int jobs = std::clamp(options.jobs, 1, std::max(total, 1));
  if (jobs <= 1) {
    for (int i = 0; i < total; ++i) verify_one(i);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (int i = t; i < total; i += jobs) verify_one(i);
      });
    }
    for (std::thread& w : workers) w.join();
  }

  for (const OutcomeRecord& record : report.records) {
    if (!record.verdict.colorable) ++report.uncolorable_count;
  }
  report.davn = report.uncolorable_count == total;
  report.success_probability = Rational(report.uncolorable_count, total);
  report.nonstabilizer = certify_nonstabilizer(state);
  if (options.with_lhv) {
    report.lhv_consistent_count =
        lhv_consistent_assignments(state, 0, options.lhv_max_qubits).count;
  }
  return report;
}

LhvScan lhv_consistent_assignments(const PcgStateSpec& state,
                                   std::int64_t sample_limit, int max_qubits) {
  if (state.n > max_qubits) {
    throw PcgError("lhv enumeration is limited to " + std::to_string(max_qubits) +
                   " qubits (4^n assignments); raise the limit to override");
  }

  LhvScan scan;
  const std::uint32_t x_count = 1u << state.n;
  // z values outside the outcome support admit no consistent assignment, so
  // only supported outcomes are expanded; x still runs over all 2^n values.
  for (const auto& [outcome, probability] : outcome_support(state)) {
    const ConditionSet conditions = derive_conditions(state, outcome);
    for (std::uint32_t ordinal = 0; ordinal < x_count; ++ordinal) {
      const QubitSet x_minus = mask_from_ordinal(ordinal, state.n);
      bool consistent = true;
      for (const HardyCondition& c : conditions.conditions) {
        if (odd_parity(x_minus & c.edge) != (c.alpha < 0)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      ++scan.count;
      if (static_cast<std::int64_t>(scan.samples.size()) < sample_limit) {
        scan.samples.push_back({state.n, outcome.minus, x_minus});
      }
    }
  }
  return scan;
}

Rational success_probability(const PcgStateSpec& state) {
  return verify_davn(state).success_probability;
}

}  // namespace pcg
