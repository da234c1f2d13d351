#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include "hopf/model.hpp"

namespace hopf {

/// Run parameters read from a flat key=value file. Lines starting with '#'
/// and blank lines are ignored.
struct RunConfig {
  HopfModel model;
  std::string field = "const1";
  std::string phi = "sqrt";
  int p_max = 64;
  std::uint64_t seed = 1;
};

// Throws ConfigError carrying the offending line number.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace hopf
