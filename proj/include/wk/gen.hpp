#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wk/io.hpp"

namespace wk {

enum class Family { Uniform, Correlated, Banded, Cliff, ProximityStress };

const char* to_string(Family f);
Family parse_family(const std::string& s);
std::vector<Family> all_families();

struct GeneratorSpec {
  Family family = Family::Uniform;
  std::size_t n = 20;
  // item weights (and uniform profits) drawn from [lo, hi], as scaled integers
  i64 lo = 1'000'000;
  i64 hi = 100'000'000;
  std::uint64_t seed = 0;
  double capacity_fraction = 0.5;  // t = fraction * total weight
  double eps = 0.1;
  double delta = 0.1;  // banded: efficiencies in [1, 1 + delta]
  std::size_t tau = 8;  // cliff: items per plateau
  double gap = 0.25;    // proximity_stress: efficiency gap between the blocks
  int digits = io::kDefaultDigits;
};

// Deterministic per spec. Comments record the family, the parameters and,
// for cliff, the efficiency-order positions where each plateau ends.
io::InstanceFile generate(const GeneratorSpec& spec);

}  // namespace wk
