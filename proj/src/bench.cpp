#include "svf/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "svf/closed_forms.hpp"
#include "svf/contraction.hpp"
#include "svf/efp.hpp"
#include "svf/errors.hpp"
#include "svf/sampling.hpp"

namespace svf {

namespace {

constexpr std::uint64_t kBenchSeed = 0x5ef6b3a1d2c40911ull;

ModelParams draw_rect(int m, int n, std::uint64_t salt) {
  RationalSampler rng(kBenchSeed ^ salt);
  for (;;) {
    ModelParams p;
    p.c = rng.nonzero_rational();
    p.u = rng.distinct_rationals(m);
    p.v = rng.rationals(n);
    p.vectors = rng.vectors();
    bool ok = !pairing(p.vectors.east, p.vectors.south).is_zero() &&
              !pairing(p.vectors.north, p.vectors.west).is_zero() &&
              !p.vectors.south.c1.is_zero() &&
              !pairing(p.vectors.north, p.vectors.south).is_zero();
    for (int j = 0; ok && j < m; ++j)
      for (int i = 0; ok && i < n; ++i)
        if (p.u[j] == p.v[i]) ok = false;
    for (int j = 0; ok && j < m; ++j)
      for (int k = 0; ok && k < m; ++k)
        if (j != k && (p.u[j] - p.u[k] + p.c).is_zero()) ok = false;
    if (ok) return p;
  }
}

EfpParams draw_wedge(int n, int m, std::uint64_t salt) {
  RationalSampler rng(kBenchSeed ^ salt);
  for (;;) {
    EfpParams p;
    p.n = n;
    p.m = m;
    p.c = rng.positive_rational();
    p.v_all = rng.distinct_rationals(n + m);
    std::sort(p.v_all.begin(), p.v_all.end());
    p.vecs = BoundaryVectors{rng.nonneg_vector2(), rng.nonneg_vector2(),
                             rng.nonneg_vector2(), rng.nonneg_vector2()};
    p.vecs.south.c1 = rng.positive_rational();
    bool ok = !pairing(p.vecs.north, p.vecs.south).is_zero() &&
              !pairing(p.vecs.north, p.vecs.west).is_zero();
    for (int j = 0; ok && j < m; ++j) {
      for (int i = 0; ok && i < n; ++i)
        if ((p.v_all[n + j] - p.v_all[i] + p.c).is_zero()) ok = false;
      for (int i = 0; ok && i < m; ++i)
        if (i != j && (p.v_all[n + j] - p.v_all[n + i] + p.c).is_zero())
          ok = false;
    }
    if (ok) return p;
  }
}

using Runner = std::function<void(int size)>;

Runner make_runner(const std::string& quantity, const std::string& method) {
  const auto unsupported = [&]() -> InputError {
    return InputError("bench does not support quantity '" + quantity +
                      "' with method '" + method + "'");
  };

  if (quantity == "triangular") {
    if (method == "contraction")
      return [](int size) {
        RationalSampler rng(kBenchSeed ^ static_cast<std::uint64_t>(size));
        const auto u = rng.rationals(size);
        const Rational c = rng.nonzero_rational();
        triangular_contract(u, c, rng.vector2(), rng.vector2());
      };
    if (method == "factorized")
      return [](int size) {
        RationalSampler rng(kBenchSeed ^ static_cast<std::uint64_t>(size));
        const auto u = rng.rationals(size);
        const Rational c = rng.nonzero_rational();
        triangular_factorized(u, c, rng.vector2(), rng.vector2());
      };
    throw unsupported();
  }
  if (quantity == "gdw") {
    const auto shape = [](int size) {
      return std::pair<int, int>{std::min(size, 8), size};  // (m, n)
    };
    if (method == "contraction")
      return [shape](int size) {
        auto [m, n] = shape(size);
        gdw_contract(draw_rect(m, n, static_cast<std::uint64_t>(size)));
      };
    if (method == "subset-sum")
      return [shape](int size) {
        auto [m, n] = shape(size);
        gdw_subset_sum(draw_rect(m, n, static_cast<std::uint64_t>(size)));
      };
    if (method == "determinant")
      return [shape](int size) {
        auto [m, n] = shape(size);
        gdw_determinant(draw_rect(m, n, static_cast<std::uint64_t>(size)));
      };
    throw unsupported();
  }
  if (quantity == "trapezoid") {
    const auto shape = [](int size) {
      return std::pair<int, int>{size - size / 2, size / 2};  // (n, m)
    };
    if (method == "contraction")
      return [shape](int size) {
        auto [n, m] = shape(size);
        EfpParams p = draw_wedge(n, m, static_cast<std::uint64_t>(size));
        trapezoid_value(p.v_all, n, m, p.c, p.vecs);
      };
    if (method == "factorized")
      return [shape](int size) {
        auto [n, m] = shape(size);
        EfpParams p = draw_wedge(n, m, static_cast<std::uint64_t>(size));
        trapezoid_factorized(p.v_all, n, m, p.c, p.vecs);
      };
    throw unsupported();
  }
  if (quantity == "efp") {
    const auto shape = [](int size) {
      return std::pair<int, int>{size - size / 2, size / 2};  // (n, m)
    };
    if (method == "determinant")
      return [shape](int size) {
        auto [n, m] = shape(size);
        efp_determinant(draw_wedge(n, m, static_cast<std::uint64_t>(size)));
      };
    if (method == "components")
      return [shape](int size) {
        auto [n, m] = shape(size);
        efp_components(draw_wedge(n, m, static_cast<std::uint64_t>(size)));
      };
    throw unsupported();
  }
  throw InputError("bench does not support quantity '" + quantity + "'");
}

void check_size_limits(const std::string& quantity, int lo, int hi) {
  if (lo < 1 || hi < lo)
    throw InputError("bench: invalid size range " + std::to_string(lo) +
                     ".." + std::to_string(hi));
  const int cap = 12;
  if (hi > cap)
    throw InputError("bench: size " + std::to_string(hi) + " exceeds the " +
                     quantity + " contraction limit of " + std::to_string(cap));
}

}  // namespace

std::string bench_csv(const std::string& quantity, const std::string& method,
                      int size_lo, int size_hi) {
  Runner run = make_runner(quantity, method);
  check_size_limits(quantity, size_lo, size_hi);
  std::string out = "size,method,seconds,max_bits\n";
  for (int size = size_lo; size <= size_hi; ++size) {
    std::size_t max_bits = 0;
    const auto start = std::chrono::steady_clock::now();
    {
      BitWatch watch;
      run(size);
      max_bits = watch.max_bits();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    char row[160];
    std::snprintf(row, sizeof(row), "%d,%s,%.6f,%zu\n", size, method.c_str(),
                  elapsed.count(), max_bits);
    out += row;
  }
  return out;
}

}  // namespace svf
