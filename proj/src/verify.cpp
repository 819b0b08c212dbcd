#include "svf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "svf/closed_forms.hpp"
#include "svf/contraction.hpp"
#include "svf/efp.hpp"
#include "svf/errors.hpp"
#include "svf/sampling.hpp"
#include "svf/vertex.hpp"

namespace svf {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kRedrawLimit = 100000;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

ordered_json list_json(std::span<const Rational> xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

ordered_json vec_json(const BoundaryVector& v) {
  return ordered_json::array({v.c1.str(), v.c2.str()});
}

ordered_json vecs_json(const BoundaryVectors& b) {
  ordered_json o;
  o["n"] = vec_json(b.north);
  o["e"] = vec_json(b.east);
  o["s"] = vec_json(b.south);
  o["w"] = vec_json(b.west);
  return o;
}

struct Failure {
  std::string identity;
  ordered_json inputs;
  std::string expected;
  std::string actual;
};

std::optional<Failure> expect_equal(const char* identity,
                                    const ordered_json& inputs,
                                    const Rational& expected,
                                    const Rational& actual) {
  if (expected == actual) return std::nullopt;
  return Failure{identity, inputs, expected.str(), actual.str()};
}

std::optional<Failure> expect_true(const char* identity,
                                   const ordered_json& inputs, bool ok) {
  if (ok) return std::nullopt;
  return Failure{identity, inputs, "true", "false"};
}

struct SuiteCtx {
  RationalSampler rng;
  unsigned trials;
  unsigned max_size;
  unsigned passes = 0;
  ordered_json failures = ordered_json::array();

  SuiteCtx(std::uint64_t seed, unsigned trials_, unsigned max_size_)
      : rng(seed), trials(trials_), max_size(max_size_) {}

  void finish(unsigned trial, const std::optional<Failure>& f) {
    if (!f) {
      ++passes;
      return;
    }
    ordered_json entry;
    entry["trial"] = trial;
    entry["identity"] = f->identity;
    entry["inputs"] = f->inputs;
    entry["expected"] = f->expected;
    entry["actual"] = f->actual;
    failures.push_back(entry);
  }

  int size_in(int lo, int hi_cap) const {
    return std::max(lo, std::min(static_cast<int>(max_size), hi_cap));
  }

  [[noreturn]] static void redraw_exhausted() {
    throw InputError("sampler failed to find pole-free parameters");
  }
};

// ---- individual suites -------------------------------------------------

void suite_yang_baxter(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const Rational ui = ctx.rng.rational();
    const Rational uj = ctx.rng.rational();
    const Rational uk = ctx.rng.rational();
    const Rational c = ctx.rng.nonzero_rational();
    ordered_json inputs{{"ui", ui.str()},
                        {"uj", uj.str()},
                        {"uk", uk.str()},
                        {"c", c.str()}};
    ctx.finish(t, expect_true("yang-baxter relation", inputs,
                              check_yang_baxter(ui, uj, uk, c)));
  }
}

void suite_unitarity(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const Rational uj = ctx.rng.rational();
    const Rational uk = ctx.rng.rational();
    const Rational c = ctx.rng.nonzero_rational();
    ordered_json inputs{{"uj", uj.str()}, {"uk", uk.str()}, {"c", c.str()}};
    ctx.finish(t, expect_true("unitarity relation", inputs,
                              check_unitarity(uj, uk, c)));
  }
}

void suite_triangular_factorization(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(1, ctx.size_in(1, 12)));
    const auto u = ctx.rng.rationals(n);
    const Rational c = ctx.rng.nonzero_rational();
    const BoundaryVector e = ctx.rng.vector2();
    const BoundaryVector s = ctx.rng.vector2();
    ordered_json inputs{{"u", list_json(u)},
                        {"c", c.str()},
                        {"e", vec_json(e)},
                        {"s", vec_json(s)}};
    ctx.finish(t, expect_equal("triangular contraction == factorized form",
                               inputs, triangular_factorized(u, c, e, s),
                               triangular_contract(u, c, e, s)));
  }
}

void suite_triangular_vanishing(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(2, ctx.size_in(2, 12)));
    const int j = static_cast<int>(ctx.rng.int_in(1, n - 1));
    auto u = ctx.rng.rationals(n);
    const Rational c = ctx.rng.nonzero_rational();
    u[n - 1] = u[j - 1] + c;
    const BoundaryVector e = ctx.rng.vector2();
    const BoundaryVector s = ctx.rng.vector2();
    ordered_json inputs{{"u", list_json(u)},
                        {"c", c.str()},
                        {"j", j},
                        {"e", vec_json(e)},
                        {"s", vec_json(s)}};
    ctx.finish(t, expect_equal("triangular value vanishes at u_n = u_j + c",
                               inputs, Rational(0),
                               triangular_contract(u, c, e, s)));
  }
}

void suite_triangular_degree(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(2, ctx.size_in(2, 8)));
    const int j = static_cast<int>(ctx.rng.int_in(1, n));
    const auto u = ctx.rng.rationals(n);
    const Rational c = ctx.rng.nonzero_rational();
    const BoundaryVector e = ctx.rng.vector2();
    const BoundaryVector s = ctx.rng.vector2();
    const auto nodes = ctx.rng.distinct_rationals(n + 2);
    const auto coeffs = triangular_degree_profile(u, c, e, s, j, nodes);
    ordered_json inputs{{"u", list_json(u)}, {"c", c.str()},
                        {"j", j},           {"e", vec_json(e)},
                        {"s", vec_json(s)}, {"nodes", list_json(nodes)}};
    std::optional<Failure> f;
    for (std::size_t d = static_cast<std::size_t>(n); d < coeffs.size(); ++d) {
      f = expect_equal("degree bound: coefficient of degree >= n vanishes",
                       inputs, Rational(0), coeffs[d]);
      if (f) break;
    }
    ctx.finish(t, f);
  }
}

void suite_triangular_pair_specialization(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(2, ctx.size_in(2, 12)));
    auto u = ctx.rng.rationals(n);
    for (int i = 1; i <= n / 2; ++i) u[n - i] = u[i - 1];
    const Rational c = ctx.rng.nonzero_rational();
    const BoundaryVector e = ctx.rng.vector2();
    const BoundaryVector s = ctx.rng.vector2();
    Rational expected = pairing(e, s).pow(static_cast<unsigned long>(n));
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n - j; ++k)
        expected *= ((u[j - 1] - u[k - 1] + c) / c) *
                    ((u[k - 1] - u[j - 1] + c) / c);
    ordered_json inputs{{"u", list_json(u)},
                        {"c", c.str()},
                        {"e", vec_json(e)},
                        {"s", vec_json(s)}};
    ctx.finish(t, expect_equal(
                      "pairwise-specialized triangular value == double product",
                      inputs, expected, triangular_contract(u, c, e, s)));
  }
}

struct GdwDraw {
  ModelParams params;
  ordered_json inputs() const {
    return ordered_json{{"u", list_json(params.u)},
                        {"v", list_json(params.v)},
                        {"c", params.c.str()},
                        {"vectors", vecs_json(params.vectors)}};
  }
};

// Draw pole-free parameters for the closed-form comparisons: pairwise
// distinct u's, u_j != v_i, u_j - u_k + c != 0, and beta defined.
GdwDraw draw_gdw_pole_free(SuiteCtx& ctx, int m, int n) {
  for (int attempt = 0; attempt < kRedrawLimit; ++attempt) {
    ModelParams p;
    p.c = ctx.rng.nonzero_rational();
    p.u = ctx.rng.distinct_rationals(m);
    p.v = ctx.rng.rationals(n);
    p.vectors = ctx.rng.vectors();
    bool ok = !pairing(p.vectors.east, p.vectors.south).is_zero() &&
              !pairing(p.vectors.north, p.vectors.west).is_zero();
    for (int j = 0; ok && j < m; ++j)
      for (int i = 0; ok && i < n; ++i)
        if (p.u[j] == p.v[i]) ok = false;
    for (int j = 0; ok && j < m; ++j)
      for (int k = 0; ok && k < m; ++k)
        if (j != k && (p.u[j] - p.u[k] + p.c).is_zero()) ok = false;
    if (ok) return GdwDraw{std::move(p)};
  }
  SuiteCtx::redraw_exhausted();
}

void suite_gdw_triple_equality(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(1, ctx.size_in(1, 8)));
    const int m = static_cast<int>(ctx.rng.int_in(1, n));
    GdwDraw draw = draw_gdw_pole_free(ctx, m, n);
    const ordered_json inputs = draw.inputs();
    const Rational by_contraction = gdw_contract(draw.params);
    std::optional<Failure> f =
        expect_equal("contraction == subset-sum", inputs, by_contraction,
                     gdw_subset_sum(draw.params));
    if (!f)
      f = expect_equal("contraction == determinant", inputs, by_contraction,
                       gdw_determinant(draw.params));
    if (!f && m == 1 && n == 1)
      f = expect_equal("contraction == explicit 1x1 expansion", inputs,
                       by_contraction,
                       z11_explicit(draw.params.u[0], draw.params.v[0],
                                    draw.params.c, draw.params.vectors));
    ctx.finish(t, f);
  }
}

void suite_gdw_specialization(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    const int n = static_cast<int>(ctx.rng.int_in(1, ctx.size_in(1, 8)));
    const int m = static_cast<int>(ctx.rng.int_in(1, n));
    ModelParams p;
    bool drawn = false;
    for (int attempt = 0; attempt < kRedrawLimit && !drawn; ++attempt) {
      p.c = ctx.rng.nonzero_rational();
      p.v = ctx.rng.rationals(n);
      p.vectors = ctx.rng.vectors();
      drawn = !pairing(p.vectors.east, p.vectors.south).is_zero() &&
              !pairing(p.vectors.north, p.vectors.west).is_zero();
      // the specialized window becomes the u-list; keep it pole-free
      for (int i = n - m; drawn && i < n; ++i)
        for (int j = i + 1; drawn && j < n; ++j)
          if (p.v[i] == p.v[j] || (p.v[i] - p.v[j] + p.c).is_zero() ||
              (p.v[j] - p.v[i] + p.c).is_zero())
            drawn = false;
    }
    if (!drawn) SuiteCtx::redraw_exhausted();
    p.u.assign(p.v.end() - m, p.v.end());
    ordered_json inputs{{"v", list_json(p.v)},
                        {"m", m},
                        {"c", p.c.str()},
                        {"vectors", vecs_json(p.vectors)}};
    const Rational expected = gdw_specialized(p.v, p.c, p.vectors, m);
    std::optional<Failure> f =
        expect_equal("specialized contraction == specialized closed form",
                     inputs, expected, gdw_contract(p));
    if (!f)
      f = expect_equal("specialized subset-sum == specialized closed form",
                       inputs, expected, gdw_subset_sum(p));
    ctx.finish(t, f);
  }
}

struct TrapezoidDraw {
  std::vector<Rational> v_all;
  int n = 0;
  int m = 0;
  Rational c;
  BoundaryVectors vecs;
  ordered_json inputs() const {
    return ordered_json{{"v", list_json(v_all)},
                        {"split", ordered_json::array({n, m})},
                        {"c", c.str()},
                        {"vectors", vecs_json(vecs)}};
  }
};

TrapezoidDraw draw_trapezoid(SuiteCtx& ctx) {
  const int total = static_cast<int>(ctx.rng.int_in(1, ctx.size_in(1, 10)));
  const int m = static_cast<int>(ctx.rng.int_in(0, total));
  for (int attempt = 0; attempt < kRedrawLimit; ++attempt) {
    TrapezoidDraw d;
    d.n = total - m;
    d.m = m;
    d.c = ctx.rng.nonzero_rational();
    d.v_all = ctx.rng.rationals(total);
    d.vecs = ctx.rng.vectors();
    if (d.vecs.south.is_zero()) continue;
    bool ok = true;
    for (int i = d.n; ok && i < total; ++i)
      for (int j = i + 1; ok && j < total; ++j)
        if ((d.v_all[i] - d.v_all[j] + d.c).is_zero()) ok = false;
    if (ok) return d;
  }
  SuiteCtx::redraw_exhausted();
}

BoundaryVector draw_aux_east(SuiteCtx& ctx, const BoundaryVector& south) {
  for (int attempt = 0; attempt < kRedrawLimit; ++attempt) {
    BoundaryVector e = ctx.rng.vector2();
    if (!pairing(e, south).is_zero()) return e;
  }
  SuiteCtx::redraw_exhausted();
}

void suite_trapezoid_factorization(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    TrapezoidDraw d = draw_trapezoid(ctx);
    ctx.finish(t, expect_equal(
                      "trapezoid quotient == factorized form", d.inputs(),
                      trapezoid_factorized(d.v_all, d.n, d.m, d.c, d.vecs),
                      trapezoid_value(d.v_all, d.n, d.m, d.c, d.vecs)));
  }
}

void suite_trapezoid_e_independence(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    TrapezoidDraw d = draw_trapezoid(ctx);
    const BoundaryVector e1 = draw_aux_east(ctx, d.vecs.south);
    const BoundaryVector e2 = draw_aux_east(ctx, d.vecs.south);
    ordered_json inputs = d.inputs();
    inputs["aux_e1"] = vec_json(e1);
    inputs["aux_e2"] = vec_json(e2);
    ctx.finish(
        t, expect_equal("trapezoid value independent of auxiliary east",
                        inputs,
                        trapezoid_value_aux(d.v_all, d.n, d.m, d.c, d.vecs, e1),
                        trapezoid_value_aux(d.v_all, d.n, d.m, d.c, d.vecs,
                                            e2)));
  }
}

void suite_two_regime_factorization(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    TrapezoidDraw d = draw_trapezoid(ctx);
    // Distinct auxiliary east: trapezoid_value is the quotient definition,
    // so reusing the params' own east would make this check vacuous.
    const BoundaryVector aux = draw_aux_east(ctx, d.vecs.south);
    ModelParams rect;
    rect.c = d.c;
    rect.u.assign(d.v_all.begin() + d.n, d.v_all.end());
    rect.v = d.v_all;
    rect.vectors = d.vecs;
    const std::span<const Rational> tail(rect.u);
    ordered_json inputs = d.inputs();
    inputs["aux_e"] = vec_json(aux);
    const Rational rhs =
        trapezoid_value_aux(d.v_all, d.n, d.m, d.c, d.vecs, aux) *
        triangular_contract(tail, d.c, d.vecs.east, d.vecs.south);
    ctx.finish(t, expect_equal(
                      "specialized rectangle == trapezoid x triangular",
                      inputs, rhs, gdw_contract(rect)));
  }
}

struct EfpDraw {
  EfpParams p;
  ordered_json inputs() const {
    return ordered_json{{"v", list_json(p.v_all)},
                        {"split", ordered_json::array({p.n, p.m})},
                        {"c", p.c.str()},
                        {"vectors", vecs_json(p.vecs)}};
  }
};

bool efp_pole_free(const EfpParams& p) {
  const int n = p.n;
  const int m = p.m;
  const auto& v = p.v_all;
  if (p.vecs.south.c1.is_zero()) return false;
  if (pairing(p.vecs.north, p.vecs.south).is_zero()) return false;
  if (pairing(p.vecs.north, p.vecs.west).is_zero()) return false;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i)
      if ((v[n + j] - v[i] + p.c).is_zero()) return false;
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      if (v[n + j] == v[n + i]) return false;
      if ((v[n + j] - v[n + i] + p.c).is_zero()) return false;
    }
  }
  return true;
}

EfpDraw draw_efp(SuiteCtx& ctx, bool regime) {
  const int n = static_cast<int>(ctx.rng.int_in(0, ctx.size_in(0, 8)));
  const int m = static_cast<int>(ctx.rng.int_in(0, ctx.size_in(0, 4)));
  for (int attempt = 0; attempt < kRedrawLimit; ++attempt) {
    EfpDraw d;
    d.p.n = n;
    d.p.m = m;
    if (regime) {
      d.p.c = ctx.rng.positive_rational();
      d.p.v_all = ctx.rng.distinct_rationals(n + m);
      std::sort(d.p.v_all.begin(), d.p.v_all.end());
      d.p.vecs = BoundaryVectors{ctx.rng.nonneg_vector2(),
                                 ctx.rng.nonneg_vector2(),
                                 ctx.rng.nonneg_vector2(),
                                 ctx.rng.nonneg_vector2()};
      d.p.vecs.south.c1 = ctx.rng.positive_rational();
    } else {
      d.p.c = ctx.rng.nonzero_rational();
      d.p.v_all = ctx.rng.rationals(n + m);
      d.p.vecs = ctx.rng.vectors();
    }
    if (efp_pole_free(d.p)) return d;
  }
  SuiteCtx::redraw_exhausted();
}

void suite_efp_equality(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    EfpDraw d = draw_efp(ctx, /*regime=*/false);
    const ordered_json inputs = d.inputs();
    std::optional<Failure> f =
        expect_equal("emptiness determinant == component route", inputs,
                     efp_components(d.p), efp_determinant(d.p));
    if (!f) {
      BoundaryVectors pinned = d.p.vecs;
      pinned.east = BoundaryVector{Rational(1), Rational(0)};
      f = expect_equal("gamma == beta at east (1,0)", inputs,
                       beta_constant(pinned), gamma_constant(d.p.vecs));
    }
    if (!f) {
      EfpParams zero = d.p;
      zero.m = 0;
      zero.v_all.assign(d.p.v_all.begin(), d.p.v_all.begin() + d.p.n);
      f = expect_equal("P(0) == 1 via determinant", inputs, Rational(1),
                       efp_determinant(zero));
      if (!f)
        f = expect_equal("P(0) == 1 via components", inputs, Rational(1),
                         efp_components(zero));
    }
    ctx.finish(t, f);
  }
}

void suite_efp_regime(SuiteCtx& ctx) {
  for (unsigned t = 0; t < ctx.trials; ++t) {
    EfpDraw d = draw_efp(ctx, /*regime=*/true);
    const ordered_json inputs = d.inputs();
    const Rational p_det = efp_determinant(d.p);
    std::optional<Failure> f =
        expect_equal("emptiness determinant == component route", inputs,
                     efp_components(d.p), p_det);
    if (!f)
      f = expect_true("0 <= P(m) <= 1 in the ordered nonnegative regime",
                      inputs, Rational(0) <= p_det && p_det <= Rational(1));
    ctx.finish(t, f);
  }
}

struct SuiteEntry {
  const char* name;
  void (*fn)(SuiteCtx&);
};

constexpr SuiteEntry kSuites[] = {
    {"yang-baxter", suite_yang_baxter},
    {"unitarity", suite_unitarity},
    {"triangular-factorization", suite_triangular_factorization},
    {"triangular-vanishing", suite_triangular_vanishing},
    {"triangular-degree", suite_triangular_degree},
    {"triangular-pair-specialization", suite_triangular_pair_specialization},
    {"gdw-triple-equality", suite_gdw_triple_equality},
    {"gdw-specialization", suite_gdw_specialization},
    {"trapezoid-factorization", suite_trapezoid_factorization},
    {"trapezoid-e-independence", suite_trapezoid_e_independence},
    {"two-regime-factorization", suite_two_regime_factorization},
    {"efp-equality", suite_efp_equality},
    {"efp-regime", suite_efp_regime},
};

ordered_json run_one(const SuiteEntry& entry, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteCtx ctx(options.seed ^ fnv1a64(entry.name), options.trials,
               options.max_size);
  entry.fn(ctx);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  ordered_json report;
  report["suite"] = entry.name;
  report["trials"] = options.trials;
  report["seed"] = options.seed;
  report["max_size"] = options.max_size;
  report["passes"] = ctx.passes;
  report["failures"] = ctx.failures;
  report["elapsed_seconds"] = elapsed.count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kSuites) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

ordered_json run_suites(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    const auto start = std::chrono::steady_clock::now();
    ordered_json sub = ordered_json::array();
    unsigned passes = 0, failures = 0;
    for (const auto& entry : kSuites) {
      ordered_json r = run_one(entry, options);
      passes += r["passes"].get<unsigned>();
      failures += static_cast<unsigned>(r["failures"].size());
      sub.push_back(std::move(r));
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    ordered_json report;
    report["suite"] = "all";
    report["trials"] = options.trials;
    report["seed"] = options.seed;
    report["max_size"] = options.max_size;
    report["passes"] = passes;
    report["failures_total"] = failures;
    report["suites"] = std::move(sub);
    report["elapsed_seconds"] = elapsed.count();
    return report;
  }
  for (const auto& entry : kSuites)
    if (name == entry.name) return run_one(entry, options);
  throw InputError("unknown suite '" + name + "'");
}

unsigned report_failures(const ordered_json& report) {
  if (report.contains("failures_total"))
    return report["failures_total"].get<unsigned>();
  if (report.contains("failures"))
    return static_cast<unsigned>(report["failures"].size());
  return 0;
}

}  // namespace svf
