#include "svf/efp.hpp"

#include <string>

#include "svf/contraction.hpp"
#include "svf/errors.hpp"
#include "svf/linalg.hpp"

namespace svf {

namespace {

void check_efp_shape(const EfpParams& p) {
  if (p.n < 0 || p.m < 0 ||
      p.v_all.size() !=
          static_cast<std::size_t>(p.n) + static_cast<std::size_t>(p.m))
    throw InputError("efp: rapidity list length " +
                     std::to_string(p.v_all.size()) +
                     " does not match split (" + std::to_string(p.n) + ", " +
                     std::to_string(p.m) + ")");
  if (p.c.is_zero()) throw InputError("crossing constant c must be nonzero");
}

std::string v_name(int i) { return "v_" + std::to_string(i); }

}  // namespace

Rational gamma_constant(const BoundaryVectors& vecs) {
  const auto& [nv, ev, sv, wv] = vecs;
  (void)ev;
  if (sv.c1.is_zero()) throw degeneracy_error("s1 = 0", "gamma");
  const Rational nw = pairing(nv, wv);
  if (nw.is_zero())
    throw degeneracy_error("<n|w> = n1 w1 + n2 w2 = 0", "gamma");
  return -(nv.c2 * (sv.c2 * wv.c1 - sv.c1 * wv.c2)) / (sv.c1 * nw);
}

Rational efp_determinant(const EfpParams& p) {
  check_efp_shape(p);
  if (p.m == 0) return Rational(1);
  const int n = p.n;
  const int m = p.m;
  const auto& v = p.v_all;
  const auto& c = p.c;

  const Rational gamma = gamma_constant(p.vecs);
  const Rational ns = pairing(p.vecs.north, p.vecs.south);
  if (ns.is_zero())
    throw degeneracy_error("<n|s> = n1 s1 + n2 s2 = 0",
                           "emptiness determinant");

  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i)
      if ((v[n + j] - v[i] + c).is_zero())
        throw pole_error(v_name(n + j + 1) + " - " + v_name(i + 1) + " + c = 0",
                         "emptiness determinant");
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      if (v[n + j] == v[n + i])
        throw pole_error(v_name(n + j + 1) + " - " + v_name(n + i + 1) + " = 0",
                         "emptiness determinant");
      if ((v[n + j] - v[n + i] + c).is_zero())
        throw pole_error(v_name(n + j + 1) + " - " + v_name(n + i + 1) +
                             " + c = 0",
                         "emptiness determinant");
    }
  }

  // row_j = prod_{i<=n} (v_{j+n} - v_i)/(v_{j+n} - v_i + c)
  //         * prod_{i != j} (v_{j+n} - v_{i+n} + c)/(v_{j+n} - v_{i+n})
  std::vector<Rational> row(m, Rational(1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i)
      row[j] *= (v[n + j] - v[i]) / (v[n + j] - v[i] + c);
    for (int i = 0; i < m; ++i)
      if (i != j) row[j] *= (v[n + j] - v[n + i] + c) / (v[n + j] - v[n + i]);
  }

  Matrix mat(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      Rational entry = -(gamma * c / (v[n + j] - v[n + k] + c)) * row[j];
      if (j == k) entry += Rational(1);
      mat.at(j, k) = std::move(entry);
    }

  const Rational prefactor =
      (p.vecs.north.c1 * p.vecs.south.c1 / ns)
          .pow(static_cast<unsigned long>(m));
  return prefactor * mat.determinant();
}

Rational efp_components(const EfpParams& p) {
  check_efp_shape(p);
  const int n = p.n;
  const int m = p.m;
  const auto& v = p.v_all;
  const auto& c = p.c;

  ModelParams rect;
  rect.c = c;
  rect.u.assign(v.begin() + n, v.end());
  rect.v.assign(v.begin(), v.begin() + n);
  rect.vectors = p.vecs;
  Rational numerator = gdw_contract_fixed_east(
      rect, BoundaryVector{Rational(1), Rational(0)});

  numerator *= p.vecs.north.c1.pow(static_cast<unsigned long>(m));
  for (int i = n; i < n + m; ++i)
    for (int j = i + 1; j < n + m; ++j) numerator *= (v[j] - v[i] + c) / c;

  const Rational normalization = trapezoid_value(v, n, m, c, p.vecs);
  if (normalization.is_zero())
    throw degeneracy_error("trapezoid normalization vanishes",
                           "emptiness probability");
  return numerator / normalization;
}

}  // namespace svf
