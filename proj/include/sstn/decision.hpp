#ifndef SSTN_DECISION_HPP
#define SSTN_DECISION_HPP

#include <optional>

#include "sstn/calibration_table.hpp"
#include "sstn/config.hpp"
#include "sstn/deviation.hpp"
#include "sstn/sample.hpp"
#include "sstn/store.hpp"
#include "sstn/types.hpp"

namespace sstn {

enum class Decision { Retain, Reject };

/// Per-level standardized discrepancies and their maximum.
struct LevelStatistics {
  Vector per_level;   ///< |(q_m - mu_m) / sigma_m| for m = 1..M
  Scalar statistic;   ///< max over per_level
  int argmax_level;   ///< 1-based level attaining the max, smallest on ties
};

/// Standardizes a discrepancy vector against a table's moments.  Throws
/// DimensionMismatch when the level counts differ.
LevelStatistics sstn_statistic(const DiscrepancyVector& q,
                               const CalibrationTable& table);

/// Monte Carlo p-value: (number of replicates >= statistic) / B, counted by
/// binary search on the sorted replicates.
Scalar p_value(Scalar statistic, const CalibrationTable& table);

/// (1 + count) / (1 + B) variant that never returns exactly zero.
Scalar p_value_add_one(Scalar statistic, const CalibrationTable& table);

enum class PValueRule { Plain, AddOne };

struct TestResult {
  Scalar statistic = 0;
  Scalar p = 1;
  Vector per_level;
  int argmax_level = 1;
  TableKey calibration;  ///< identifies the table (kind, n, parameters) used
  std::optional<Scalar> alpha;
  std::optional<Decision> decision;  ///< reject iff p < alpha (strict)
};

/// Full test: routes to the size-specific table when n is below the
/// configured threshold and to the asymptotic table otherwise, computes the
/// observed discrepancies through the calibration code path, and renders the
/// decision when alpha is given.
TestResult run_sstn(const Sample& sample, const SstnConfig& config,
                    TableStore& store,
                    std::optional<Scalar> alpha = std::nullopt,
                    PValueRule rule = PValueRule::Plain);

}  // namespace sstn

#endif
