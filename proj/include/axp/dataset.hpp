#pragma once

#include <string>
#include <vector>

#include "axp/types.hpp"

namespace axp {

/// Header line of feature names plus rows of 0/1, comma separated.
struct Dataset {
  FeatureSpace space;
  std::vector<Individual> rows;

  static Dataset parse(const std::string& text);
  std::string serialize() const;
};

/// "A=1,G=0,..." with a value for every feature of the space.
Individual parse_individual(const std::string& text, const FeatureSpace& space);
std::string format_individual(Individual x, const FeatureSpace& space);

}  // namespace axp
