#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "svf/model.hpp"
#include "svf/rational.hpp"

namespace svf {

// Deterministic rational sampler for the verification suites and bench
// fixtures. Numerators in [-20, 20], denominators in [1, 10]: small enough
// to keep big-integer growth modest, large enough that any identity
// failure would surface.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(rng_() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational() { return Rational(int_in(-20, 20), int_in(1, 10)); }

  Rational nonzero_rational() {
    for (;;) {
      Rational x = rational();
      if (!x.is_zero()) return x;
    }
  }

  Rational positive_rational() { return Rational(int_in(1, 20), int_in(1, 10)); }

  Rational nonneg_rational() { return Rational(int_in(0, 20), int_in(1, 10)); }

  std::vector<Rational> rationals(int count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(rational());
    return out;
  }

  // pairwise distinct draws
  std::vector<Rational> distinct_rationals(int count) {
    std::vector<Rational> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
      Rational x = rational();
      bool fresh = true;
      for (const auto& y : out)
        if (x == y) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(x));
    }
    return out;
  }

  BoundaryVector vector2() { return BoundaryVector{rational(), rational()}; }

  BoundaryVector nonneg_vector2() {
    return BoundaryVector{nonneg_rational(), nonneg_rational()};
  }

  BoundaryVectors vectors() {
    return BoundaryVectors{vector2(), vector2(), vector2(), vector2()};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace svf
