#include "sstn/decision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sstn/errors.hpp"

namespace sstn {

LevelStatistics sstn_statistic(const DiscrepancyVector& q,
                               const CalibrationTable& table) {
  if (q.levels() != table.mu.size()) {
    throw DimensionMismatch("discrepancy vector has " + std::to_string(q.levels()) +
                            " levels, table has " + std::to_string(table.mu.size()));
  }
  LevelStatistics out;
  out.per_level = ((q.q - table.mu).array() / table.sigma.array()).abs();
  out.statistic = 0;
  out.argmax_level = 1;
  for (Index m = 0; m < out.per_level.size(); ++m) {
    if (out.per_level[m] > out.statistic) {
      out.statistic = out.per_level[m];
      out.argmax_level = static_cast<int>(m) + 1;
    }
  }
  return out;
}

namespace {

Index count_at_least(Scalar statistic, const CalibrationTable& table) {
  const auto first = std::lower_bound(table.replicates.begin(),
                                      table.replicates.end(), statistic);
  return table.replicates.end() - first;
}

}  // namespace

Scalar p_value(Scalar statistic, const CalibrationTable& table) {
  return static_cast<Scalar>(count_at_least(statistic, table)) /
         static_cast<Scalar>(table.replicates.size());
}

Scalar p_value_add_one(Scalar statistic, const CalibrationTable& table) {
  return static_cast<Scalar>(1 + count_at_least(statistic, table)) /
         static_cast<Scalar>(1 + table.replicates.size());
}

TestResult run_sstn(const Sample& sample, const SstnConfig& config,
                    TableStore& store, std::optional<Scalar> alpha,
                    PValueRule rule) {
  config.validate();
  if (sample.size() < 4) {
    throw InvalidSample("the test requires n >= 4, got n = " +
                        std::to_string(sample.size()));
  }
  if (sample.sd() == 0) {
    throw DegenerateSample("all observations identical; normality is undefined");
  }

  const TableKey key = sample.size() < config.finite_threshold
                           ? TableKey::finite(static_cast<int>(sample.size()), config)
                           : TableKey::asymptotic(config);
  const CalibrationTable& table = store.acquire(key);

  const DiscrepancyVector q = discrepancy_vector(sample, config);
  const LevelStatistics stats = sstn_statistic(q, table);

  TestResult result;
  result.statistic = stats.statistic;
  result.p = rule == PValueRule::AddOne ? p_value_add_one(stats.statistic, table)
                                        : p_value(stats.statistic, table);
  result.per_level = stats.per_level;
  result.argmax_level = stats.argmax_level;
  result.calibration = table.key;
  if (alpha) {
    result.alpha = alpha;
    result.decision = result.p < *alpha ? Decision::Reject : Decision::Retain;
  }
  return result;
}

}  // namespace sstn
