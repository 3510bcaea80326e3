#include "sstn/config.hpp"

#include <string>

#include "sstn/errors.hpp"

namespace sstn {

void SstnConfig::validate() const {
  if (max_level < 1) throw InvalidConfig("max_level must be >= 1");
  if (grid_size < 2) throw InvalidConfig("grid_size must be >= 2");
  if (!(bound > 0)) throw InvalidConfig("bound must be positive");
  if (!(beta > 0)) throw InvalidConfig("beta must be positive");
  if (replicates < 1) throw InvalidConfig("replicates must be >= 1");
  if (finite_threshold < 4) throw InvalidConfig("finite_threshold must be >= 4");
}

}  // namespace sstn
