#include "doctest.h"

#include "svf/closed_forms.hpp"
#include "svf/contraction.hpp"
#include "svf/errors.hpp"
#include "svf/sampling.hpp"

using svf::BoundaryVector;
using svf::BoundaryVectors;
using svf::ModelParams;
using svf::Rational;

namespace {

const BoundaryVector kOnes{Rational(1), Rational(1)};
const BoundaryVectors kAllOnes{kOnes, kOnes, kOnes, kOnes};

ModelParams draw_pole_free(svf::RationalSampler& rng, int m, int n) {
  for (;;) {
    ModelParams p;
    p.c = rng.nonzero_rational();
    p.u = rng.distinct_rationals(m);
    p.v = rng.rationals(n);
    p.vectors = rng.vectors();
    bool ok = !svf::pairing(p.vectors.east, p.vectors.south).is_zero() &&
              !svf::pairing(p.vectors.north, p.vectors.west).is_zero();
    for (int j = 0; ok && j < m; ++j)
      for (int i = 0; ok && i < n; ++i)
        if (p.u[j] == p.v[i]) ok = false;
    for (int j = 0; ok && j < m; ++j)
      for (int k = 0; ok && k < m; ++k)
        if (j != k && (p.u[j] - p.u[k] + p.c).is_zero()) ok = false;
    if (ok) return p;
  }
}

}  // namespace

TEST_CASE("triangular factorized form") {
  SUBCASE("n = 1") {
    const std::vector<Rational> u{Rational(3)};
    const BoundaryVector e{Rational(2), Rational(1)};
    const BoundaryVector s{Rational(1), Rational(4)};
    CHECK(svf::triangular_factorized(u, Rational(5), e, s) == Rational(6));
  }
  SUBCASE("n = 2 golden value") {
    const std::vector<Rational> u{Rational(1), Rational(0)};
    CHECK(svf::triangular_factorized(u, Rational(1), kOnes, kOnes) ==
          Rational(8));
  }
  SUBCASE("vanishing factor at u_2 = u_1 + c") {
    const std::vector<Rational> u{Rational(2), Rational(5)};
    CHECK(svf::triangular_factorized(u, Rational(3), kOnes, kOnes) ==
          Rational(0));
  }
}

TEST_CASE("beta") {
  SUBCASE("ordinary domain-wall vectors give 1") {
    const BoundaryVectors dwbc{BoundaryVector{Rational(0), Rational(1)},
                               BoundaryVector{Rational(1), Rational(0)},
                               BoundaryVector{Rational(1), Rational(0)},
                               BoundaryVector{Rational(0), Rational(1)}};
    CHECK(svf::beta_constant(dwbc) == Rational(1));
  }
  SUBCASE("vanishes when n is parallel to the east dual") {
    BoundaryVectors vecs = kAllOnes;
    vecs.north = BoundaryVector{Rational(2), Rational(2)};  // e2 n1 = e1 n2
    CHECK(svf::beta_constant(vecs) == Rational(0));
  }
  SUBCASE("vanishes when s is parallel to w") {
    BoundaryVectors vecs{BoundaryVector{Rational(1), Rational(2)}, kOnes,
                         BoundaryVector{Rational(3), Rational(6)},
                         BoundaryVector{Rational(1), Rational(2)}};
    CHECK(svf::beta_constant(vecs) == Rational(0));
  }
  SUBCASE("degenerate pairings are named") {
    BoundaryVectors es_zero = kAllOnes;
    es_zero.east = BoundaryVector{Rational(1), Rational(-1)};
    CHECK_THROWS_WITH_AS(svf::beta_constant(es_zero),
                         doctest::Contains("<e|s>"), svf::EvalError);
    BoundaryVectors nw_zero = kAllOnes;
    nw_zero.west = BoundaryVector{Rational(1), Rational(-1)};
    CHECK_THROWS_WITH_AS(svf::beta_constant(nw_zero),
                         doctest::Contains("<n|w>"), svf::EvalError);
  }
}

TEST_CASE("subset-sum expansion") {
  svf::RationalSampler rng(50);
  SUBCASE("m = n = 1 equals the explicit expansion") {
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = draw_pole_free(rng, 1, 1);
      CHECK(svf::gdw_subset_sum(p) ==
            svf::z11_explicit(p.u[0], p.v[0], p.c, p.vectors));
    }
  }
  SUBCASE("beta = 0 leaves only the empty subset") {
    ModelParams p = draw_pole_free(rng, 2, 2);
    p.vectors.south = BoundaryVector{Rational(1), Rational(2)};
    p.vectors.west = BoundaryVector{Rational(2), Rational(4)};  // s || w
    if (svf::pairing(p.vectors.east, p.vectors.south).is_zero() ||
        svf::pairing(p.vectors.north, p.vectors.west).is_zero())
      return;
    Rational expected =
        svf::pairing(p.vectors.north, p.vectors.south).pow(0) *
        svf::pairing(p.vectors.east, p.vectors.south).pow(2) *
        svf::pairing(p.vectors.north, p.vectors.west).pow(2) /
        p.c.pow(4);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) expected *= p.u[j] - p.v[k] + p.c;
    CHECK(svf::gdw_subset_sum(p) == expected);
  }
  SUBCASE("m = 2, n = 2 matches contraction") {
    for (int trial = 0; trial < 10; ++trial) {
      const ModelParams p = draw_pole_free(rng, 2, 2);
      CHECK(svf::gdw_subset_sum(p) == svf::gdw_contract(p));
    }
  }
  SUBCASE("errors") {
    ModelParams p = draw_pole_free(rng, 2, 2);
    p.u[1] = p.u[0];
    CHECK_THROWS_WITH_AS(svf::gdw_subset_sum(p),
                         doctest::Contains("u_1 - u_2 = 0"), svf::EvalError);
    ModelParams q = draw_pole_free(rng, 2, 2);
    q.v.pop_back();  // m > n
    CHECK_THROWS_AS(svf::gdw_subset_sum(q), svf::InputError);
    ModelParams r = draw_pole_free(rng, 1, 1);
    r.vectors.east = BoundaryVector{Rational(0), Rational(0)};
    CHECK_THROWS_AS(svf::gdw_subset_sum(r), svf::EvalError);
  }
}

TEST_CASE("determinant form") {
  svf::RationalSampler rng(51);
  SUBCASE("m = n = 1 equals the explicit expansion") {
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = draw_pole_free(rng, 1, 1);
      CHECK(svf::gdw_determinant(p) ==
            svf::z11_explicit(p.u[0], p.v[0], p.c, p.vectors));
    }
  }
  SUBCASE("m = 1, n = 2 matches the subset-sum") {
    for (int trial = 0; trial < 15; ++trial) {
      const ModelParams p = draw_pole_free(rng, 1, 2);
      CHECK(svf::gdw_determinant(p) == svf::gdw_subset_sum(p));
    }
  }
  SUBCASE("m = 2, n = 3 matches contraction") {
    for (int trial = 0; trial < 10; ++trial) {
      const ModelParams p = draw_pole_free(rng, 2, 3);
      CHECK(svf::gdw_determinant(p) == svf::gdw_contract(p));
    }
  }
  SUBCASE("poles are named") {
    ModelParams p = draw_pole_free(rng, 2, 2);
    p.v[1] = p.u[0];
    CHECK_THROWS_WITH_AS(svf::gdw_determinant(p),
                         doctest::Contains("u_1 - v_2 = 0"), svf::EvalError);
    ModelParams q = draw_pole_free(rng, 2, 2);
    q.u[1] = q.u[0] + q.c;
    CHECK_THROWS_WITH_AS(svf::gdw_determinant(q),
                         doctest::Contains("+ c = 0"), svf::EvalError);
  }
}

TEST_CASE("explicit 1x1 expansion") {
  SUBCASE("all-ones golden value") {
    CHECK(svf::z11_explicit(Rational(1), Rational(0), Rational(1), kAllOnes) ==
          Rational(8));
  }
  SUBCASE("u = v drops the b-term") {
    svf::RationalSampler rng(52);
    const auto vecs = rng.vectors();
    const Rational u = rng.rational();
    const auto& [nv, ev, sv, wv] = vecs;
    const Rational expected =
        (ev.c1 * wv.c1 * nv.c1 * sv.c1 + ev.c2 * wv.c2 * nv.c2 * sv.c2) +
        (ev.c2 * wv.c1 * nv.c1 * sv.c2 + ev.c1 * wv.c2 * nv.c2 * sv.c1);
    CHECK(svf::z11_explicit(u, u, rng.nonzero_rational(), vecs) == expected);
  }
  SUBCASE("ordinary domain-wall vectors give 1 for all u, v, c") {
    const BoundaryVectors dwbc{BoundaryVector{Rational(0), Rational(1)},
                               BoundaryVector{Rational(1), Rational(0)},
                               BoundaryVector{Rational(1), Rational(0)},
                               BoundaryVector{Rational(0), Rational(1)}};
    svf::RationalSampler rng(53);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(svf::z11_explicit(rng.rational(), rng.rational(),
                              rng.nonzero_rational(), dwbc) == Rational(1));
  }
}

TEST_CASE("specialized rectangle closed form") {
  SUBCASE("m = 0") {
    svf::RationalSampler rng(54);
    const auto v = rng.rationals(3);
    const auto vecs = rng.vectors();
    CHECK(svf::gdw_specialized(v, Rational(1), vecs, 0) ==
          svf::pairing(vecs.north, vecs.south).pow(3));
  }
  SUBCASE("m = n = 1 has no rapidity dependence") {
    svf::RationalSampler rng(55);
    const auto vecs = rng.vectors();
    const std::vector<Rational> v{rng.rational()};
    CHECK(svf::gdw_specialized(v, rng.nonzero_rational(), vecs, 1) ==
          svf::pairing(vecs.east, vecs.south) *
              svf::pairing(vecs.north, vecs.west));
  }
  SUBCASE("matches the contraction at the specialization point") {
    svf::RationalSampler rng(56);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = static_cast<int>(rng.int_in(1, 5));
      const int m = static_cast<int>(rng.int_in(1, n));
      ModelParams p;
      p.c = rng.nonzero_rational();
      p.v = rng.rationals(n);
      p.vectors = rng.vectors();
      p.u.assign(p.v.end() - m, p.v.end());
      CHECK(svf::gdw_contract(p) ==
            svf::gdw_specialized(p.v, p.c, p.vectors, m));
    }
  }
  SUBCASE("m > n rejected") {
    const std::vector<Rational> v{Rational(1)};
    CHECK_THROWS_AS(svf::gdw_specialized(v, Rational(1), kAllOnes, 2),
                    svf::InputError);
  }
}

TEST_CASE("trapezoid factorized form") {
  SUBCASE("m = 0") {
    svf::RationalSampler rng(57);
    const auto v = rng.rationals(2);
    const auto vecs = rng.vectors();
    CHECK(svf::trapezoid_factorized(v, 2, 0, Rational(2), vecs) ==
          svf::pairing(vecs.north, vecs.south).pow(2));
  }
  SUBCASE("1|1 all-ones golden value") {
    const std::vector<Rational> v{Rational(0), Rational(1)};
    CHECK(svf::trapezoid_factorized(v, 1, 1, Rational(1), kAllOnes) ==
          Rational(8));
  }
  SUBCASE("second product uses the reversed difference") {
    // with n = 0, m = 2: factor (v_2 - v_1 + c)/c, not (v_1 - v_2 + c)/c
    const std::vector<Rational> v{Rational(3), Rational(1)};
    const Rational c(2);
    CHECK(svf::trapezoid_factorized(v, 0, 2, c, kAllOnes) ==
          svf::pairing(kOnes, kOnes).pow(2) * (v[1] - v[0] + c) / c);
  }
}

TEST_CASE("triple equality across all three routes") {
  svf::RationalSampler rng(58);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m)
      for (int trial = 0; trial < 3; ++trial) {
        const ModelParams p = draw_pole_free(rng, m, n);
        const Rational z = svf::gdw_contract(p);
        CHECK(z == svf::gdw_subset_sum(p));
        CHECK(z == svf::gdw_determinant(p));
      }
}

TEST_CASE("east rescaling scales the value by lambda^m") {
  svf::RationalSampler rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const ModelParams p = draw_pole_free(rng, 2, 3);
    const Rational lambda = rng.nonzero_rational();
    ModelParams scaled = p;
    scaled.vectors.east.c1 *= lambda;
    scaled.vectors.east.c2 *= lambda;
    const Rational expected = lambda.pow(2) * svf::gdw_contract(p);
    CHECK(svf::gdw_contract(scaled) == expected);
    CHECK(svf::gdw_subset_sum(scaled) == expected);
    CHECK(svf::gdw_determinant(scaled) == expected);
  }
}
