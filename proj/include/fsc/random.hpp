#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "fsc/polynomial.hpp"

namespace fsc {

// FNV-1a, so derived seeds do not depend on std::hash.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL ^ (seed * 0x9E3779B97F4A7C15ULL);
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Draws small random rationals; the mapping from engine output to values is
/// spelled out so results do not depend on the standard library's
/// distributions.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed, long range = 30) : engine_(seed), range_(range) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Rational any() {
    Rational q(integer(-range_, range_), integer(1, range_ / 3 + 1));
    q.canonicalize();
    return q;
  }

  Rational nonzero() {
    Rational q = any();
    while (q == 0) q = any();
    return q;
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
  long range_;
};

}  // namespace fsc
