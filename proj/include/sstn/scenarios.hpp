#ifndef SSTN_SCENARIOS_HPP
#define SSTN_SCENARIOS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "sstn/rng.hpp"
#include "sstn/sample.hpp"

namespace sstn {

/// The eight distribution families of the simulation study, each with a
/// single varying parameter:
///   NormalFamily              N(a-3, 9/a^2)
///   Gamma                     Gamma(theta, scale 1)
///   ChiSquare                 chi^2_m
///   Lognormal                 Lognormal(0, (7/6-d)^2)
///   Weibull                   Weibull(k, scale 1)
///   StudentT                  t_nu (nu = 1 is standard Cauchy)
///   NormalMixture             0.6 N(-1,1) + 0.4 N(4-b, 2)
///   UniformNormalConvolution  U(-3,3) + N(0, sigma^2), sigma = 0 pure uniform
enum class Family {
  NormalFamily,
  Gamma,
  ChiSquare,
  Lognormal,
  Weibull,
  StudentT,
  NormalMixture,
  UniformNormalConvolution,
};

constexpr Family kAllFamilies[] = {
    Family::NormalFamily, Family::Gamma,         Family::ChiSquare,
    Family::Lognormal,    Family::Weibull,       Family::StudentT,
    Family::NormalMixture, Family::UniformNormalConvolution,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct ScenarioSpec {
  Family family = Family::NormalFamily;
  double parameter = 0;
  int sample_size = 0;
  /// The lognormal family's second parameter (7/6-d)^2 is read as the
  /// variance of the underlying normal by default; set to read it as the
  /// standard deviation instead (for sensitivity comparisons).
  bool lognormal_second_param_is_sd = false;
};

/// The study's parameter grid for a family.
std::vector<double> study_parameters(Family family);

/// The study's sample sizes {10, 25, 50, 100, 250, 500}.
std::vector<int> study_sample_sizes();

/// n independent draws from the specified law; deterministic given the
/// engine state.  Throws InvalidParameter for out-of-domain parameters.
Sample draw_scenario(const ScenarioSpec& spec, Rng& rng);

}  // namespace sstn

#endif
