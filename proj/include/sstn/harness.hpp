#ifndef SSTN_HARNESS_HPP
#define SSTN_HARNESS_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sstn/config.hpp"
#include "sstn/scenarios.hpp"
#include "sstn/store.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// Central 95% band of Binomial(R, alpha)/R for the rejection proportion of
/// a correctly calibrated test.
struct AcceptanceBand {
  double lower = 0;
  double upper = 1;
  double alpha = 0;
  int replications = 0;

  bool contains(double rate) const { return rate >= lower && rate <= upper; }
};

/// Exact binomial CDF P(X <= k) for X ~ Binomial(n, p).
double binomial_cdf(int k, int n, double p);

/// Smallest k with P(X <= k) >= q.
int binomial_quantile(double q, int n, double p);

/// Band from the 2.5% and 97.5% binomial quantiles.  Throws InvalidConfig
/// for replications < 1 or alpha outside (0, 1).
AcceptanceBand acceptance_band(int replications, double alpha);

/// Tests the study can run: the self-similarity test plus the five baselines.
enum class TestKind {
  Sstn,
  ShapiroWilk,
  AndersonDarling,
  JarqueBera,
  Lilliefors,
  DAgostinoPearson,
};

constexpr TestKind kAllTests[] = {
    TestKind::Sstn,       TestKind::ShapiroWilk, TestKind::AndersonDarling,
    TestKind::JarqueBera, TestKind::Lilliefors,  TestKind::DAgostinoPearson,
};

std::string_view test_name(TestKind kind);
std::optional<TestKind> parse_test_kind(std::string_view name);

/// One (family, parameter, n, test) cell of the study.
struct PowerCell {
  Family family = Family::NormalFamily;
  double parameter = 0;
  int sample_size = 0;
  TestKind test = TestKind::Sstn;
  int replications = 0;
  int rejections = 0;
  bool applicable = true;  ///< false when the test does not support this n
  std::optional<bool> in_band;  ///< null-hypothesis (normal family) cells only

  double rate() const {
    return replications > 0 ? static_cast<double>(rejections) / replications : 0;
  }

  bool operator==(const PowerCell&) const = default;
};

struct StudyPlan {
  struct FamilyPlan {
    Family family;
    std::vector<double> parameters;
  };

  std::vector<FamilyPlan> families;
  std::vector<int> sample_sizes;
  std::vector<TestKind> tests;
  int replications = 500;
  double alpha = 0.05;
  SstnConfig config;  ///< calibration parameters and the master seed
  bool lognormal_second_param_is_sd = false;

  void validate() const;
};

/// The full study grid.  Desk scale runs R = 500 with B = 2000 calibration
/// replicates; full scale runs R = 1000 with B = 10000.
StudyPlan default_plan(bool full_scale = false);

/// Parses a JSON plan document (see README for the schema).
StudyPlan parse_plan(std::string_view json_text);

/// Runs every cell of the plan: R samples per (family, parameter, n), shared
/// across tests, each test applied at the plan's alpha.  Sample draws depend
/// only on (master seed, family, parameter index, n, replicate), so the cell
/// set and thread count do not perturb them.  Calibration tables are built
/// once per n up front.  Cells arrive at the callback as they finish.
std::vector<PowerCell> run_power_study(
    const StudyPlan& plan, TableStore& store, int threads = 0,
    const std::function<void(const PowerCell&)>& on_cell = {});

/// Writes one CSV per family (rows ordered by family, parameter, n, test)
/// with columns family,parameter,n,test,R,rejections,rate,in_band.
/// Returns the paths written.  Throws InvalidConfig on an empty collection,
/// IoFailure on write errors.
std::vector<std::filesystem::path> emit_tables(const std::vector<PowerCell>& cells,
                                               const std::filesystem::path& dir);

/// Parses cells back from an emitted CSV (round-trip of emit_tables).
std::vector<PowerCell> parse_cells_csv(std::string_view text);

}  // namespace sstn

#endif
