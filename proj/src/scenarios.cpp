#include "sstn/scenarios.hpp"

#include <cmath>
#include <random>
#include <string>

#include "sstn/errors.hpp"

namespace sstn {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::NormalFamily: return "normal";
    case Family::Gamma: return "gamma";
    case Family::ChiSquare: return "chisq";
    case Family::Lognormal: return "lognormal";
    case Family::Weibull: return "weibull";
    case Family::StudentT: return "t";
    case Family::NormalMixture: return "mixture";
    case Family::UniformNormalConvolution: return "uniform-normal";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family family : kAllFamilies) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

std::vector<double> study_parameters(Family family) {
  switch (family) {
    case Family::NormalFamily: return {1, 2, 3, 4, 5, 6};
    case Family::Gamma: return {1, 4, 6, 8, 10, 12};
    case Family::ChiSquare: return {3, 6, 9, 12, 15, 18};
    case Family::Lognormal:
      return {1.0 / 6, 2.0 / 6, 3.0 / 6, 4.0 / 6, 5.0 / 6, 1.0};
    case Family::Weibull: return {0.5, 1, 1.5, 2, 2.5, 3};
    case Family::StudentT: return {1, 2, 3, 4, 5, 6};
    case Family::NormalMixture: return {0, 1, 2, 3, 4, 5};
    case Family::UniformNormalConvolution: return {0, 0.2, 0.4, 0.6, 0.8, 1};
  }
  return {};
}

std::vector<int> study_sample_sizes() { return {10, 25, 50, 100, 250, 500}; }

namespace {

[[noreturn]] void bad_parameter(Family family, double parameter,
                                const char* requirement) {
  throw InvalidParameter(std::string(family_name(family)) + " parameter " +
                         std::to_string(parameter) + " invalid: " + requirement);
}

}  // namespace

Sample draw_scenario(const ScenarioSpec& spec, Rng& rng) {
  if (spec.sample_size < 2) {
    throw InvalidParameter("scenario sample size must be >= 2");
  }
  const double par = spec.parameter;
  Vector draws(spec.sample_size);

  switch (spec.family) {
    case Family::NormalFamily: {
      if (!(par > 0)) bad_parameter(spec.family, par, "a > 0 required");
      std::normal_distribution<double> normal(par - 3, 3 / par);
      for (auto& v : draws) v = normal(rng);
      break;
    }
    case Family::Gamma: {
      if (!(par > 0)) bad_parameter(spec.family, par, "shape > 0 required");
      std::gamma_distribution<double> gamma(par, 1.0);
      for (auto& v : draws) v = gamma(rng);
      break;
    }
    case Family::ChiSquare: {
      if (!(par > 0)) bad_parameter(spec.family, par, "degrees of freedom > 0 required");
      std::gamma_distribution<double> gamma(par / 2, 2.0);
      for (auto& v : draws) v = gamma(rng);
      break;
    }
    case Family::Lognormal: {
      const double base = 7.0 / 6 - par;
      if (base == 0) {
        bad_parameter(spec.family, par, "d = 7/6 gives zero variance");
      }
      const double sigma = spec.lognormal_second_param_is_sd ? base * base
                                                             : std::abs(base);
      std::lognormal_distribution<double> lognormal(0.0, sigma);
      for (auto& v : draws) v = lognormal(rng);
      break;
    }
    case Family::Weibull: {
      if (!(par > 0)) bad_parameter(spec.family, par, "shape > 0 required");
      std::weibull_distribution<double> weibull(par, 1.0);
      for (auto& v : draws) v = weibull(rng);
      break;
    }
    case Family::StudentT: {
      if (!(par > 0)) bad_parameter(spec.family, par, "degrees of freedom > 0 required");
      if (par == 1) {
        // Standard Cauchy by inverse CDF, tan(pi (U - 1/2)).
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        for (auto& v : draws) v = std::tan(M_PI * (uniform(rng) - 0.5));
      } else {
        std::student_t_distribution<double> student(par);
        for (auto& v : draws) v = student(rng);
      }
      break;
    }
    case Family::NormalMixture: {
      std::bernoulli_distribution pick_first(0.6);
      std::normal_distribution<double> first(-1.0, 1.0);
      std::normal_distribution<double> second(4.0 - par, std::sqrt(2.0));
      for (auto& v : draws) {
        v = pick_first(rng) ? first(rng) : second(rng);
      }
      break;
    }
    case Family::UniformNormalConvolution: {
      if (par < 0) bad_parameter(spec.family, par, "sigma >= 0 required");
      std::uniform_real_distribution<double> uniform(-3.0, 3.0);
      std::normal_distribution<double> noise(0.0, par);
      for (auto& v : draws) {
        v = uniform(rng) + (par > 0 ? noise(rng) : 0.0);
      }
      break;
    }
  }
  return Sample(std::move(draws));
}

}  // namespace sstn
