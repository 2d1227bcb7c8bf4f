#include "wk/gen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wk/rng.hpp"

namespace wk {

const char* to_string(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Correlated: return "correlated";
    case Family::Banded: return "banded";
    case Family::Cliff: return "cliff";
    case Family::ProximityStress: return "proximity_stress";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto f : all_families())
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown family: " + s);
}

std::vector<Family> all_families() {
  return {Family::Uniform, Family::Correlated, Family::Banded, Family::Cliff, Family::ProximityStress};
}

namespace {

i64 with_efficiency(i64 w, long double e) { return std::max<i64>(1, (i64)std::llround(e * (long double)w)); }

}  // namespace

io::InstanceFile generate(const GeneratorSpec& spec) {
  if (spec.lo < 1 || spec.hi < spec.lo) throw std::invalid_argument("gen: need 1 <= lo <= hi");
  Rng rng(spec.seed);
  io::InstanceFile f;
  f.digits = spec.digits;
  auto& items = f.inst.items;
  std::ostringstream meta;
  meta << "family=" << to_string(spec.family) << " n=" << spec.n << " seed=" << spec.seed;
  auto weight = [&] { return rng.range(spec.lo, spec.hi); };

  switch (spec.family) {
    case Family::Uniform:
      for (std::size_t i = 0; i < spec.n; ++i) items.push_back({weight(), weight()});
      break;
    case Family::Correlated:
      for (std::size_t i = 0; i < spec.n; ++i) {
        i64 w = weight();
        items.push_back({w, with_efficiency(w, 0.9L + 0.2L * rng.uniform())});
      }
      break;
    case Family::Banded:
      meta << " rho=1 delta=" << spec.delta;
      for (std::size_t i = 0; i < spec.n; ++i) {
        i64 w = weight();
        items.push_back({w, with_efficiency(w, 1.0L + spec.delta * rng.uniform())});
      }
      break;
    case Family::Cliff: {
      // plateau k has efficiency 2^-k (within 1%); items are emitted in
      // shuffled order
      const std::size_t tau = std::max<std::size_t>(1, spec.tau);
      meta << " tau=" << tau << " cliffs=";
      for (std::size_t k = 1; k * tau < spec.n; ++k) meta << (k > 1 ? "," : "") << k * tau;
      for (std::size_t i = 0; i < spec.n; ++i) {
        i64 w = weight();
        const long double e = std::ldexp(1.0L, -(int)(i / tau)) * (1.0L - 0.01L * rng.uniform());
        items.push_back({w, with_efficiency(w, e)});
      }
      for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
      break;
    }
    case Family::ProximityStress: {
      meta << " gap=" << spec.gap << " high=" << (spec.n + 1) / 2;
      for (std::size_t i = 0; i < spec.n; ++i) {
        i64 w = weight();
        const long double base = i < (spec.n + 1) / 2 ? 1.0L + spec.gap : 1.0L;
        items.push_back({w, with_efficiency(w, base * (1.0L + 0.001L * rng.uniform()))});
      }
      break;
    }
  }
  i64 tot = 0;
  for (const auto& it : items) tot += it.weight;
  f.inst.capacity = (i64)std::floor((long double)tot * spec.capacity_fraction);
  f.inst.eps = spec.eps;
  meta << " capacity_fraction=" << spec.capacity_fraction;
  f.comments.push_back(meta.str());
  return f;
}

}  // namespace wk
