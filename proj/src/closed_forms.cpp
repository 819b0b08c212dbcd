#include "svf/closed_forms.hpp"

#include <string>
#include <vector>

#include "svf/errors.hpp"
#include "svf/linalg.hpp"

namespace svf {

namespace {

void require_nonzero_c(const Rational& c) {
  if (c.is_zero()) throw InputError("crossing constant c must be nonzero");
}

void require_m_le_n(int m, int n, const char* context) {
  if (m > n)
    throw InputError(std::string(context) + ": m = " + std::to_string(m) +
                     " exceeds n = " + std::to_string(n) +
                     " (closed forms are stated for m <= n)");
}

std::string u_minus_u(int j, int k) {
  return "u_" + std::to_string(j) + " - u_" + std::to_string(k);
}

}  // namespace

Rational triangular_factorized(std::span<const Rational> u, const Rational& c,
                               const BoundaryVector& e,
                               const BoundaryVector& s) {
  require_nonzero_c(c);
  const int n = static_cast<int>(u.size());
  Rational result = pairing(e, s).pow(static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) result *= (u[i] - u[j] + c) / c;
  return result;
}

Rational beta_constant(const BoundaryVectors& vecs) {
  const auto& [nv, ev, sv, wv] = vecs;
  const Rational es = pairing(ev, sv);
  if (es.is_zero())
    throw degeneracy_error("<e|s> = e1 s1 + e2 s2 = 0", "beta");
  const Rational nw = pairing(nv, wv);
  if (nw.is_zero())
    throw degeneracy_error("<n|w> = n1 w1 + n2 w2 = 0", "beta");
  return (ev.c2 * nv.c1 - ev.c1 * nv.c2) * (sv.c2 * wv.c1 - sv.c1 * wv.c2) /
         (es * nw);
}

Rational gdw_subset_sum(const ModelParams& params) {
  require_nonzero_c(params.c);
  const int m = static_cast<int>(params.u.size());
  const int n = static_cast<int>(params.v.size());
  require_m_le_n(m, n, "subset-sum");
  if (m > 30) throw InputError("subset-sum: m too large for 2^m expansion");
  const auto& u = params.u;
  const auto& v = params.v;
  const auto& c = params.c;
  const auto& vecs = params.vectors;

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (u[i] == u[j])
        throw pole_error(u_minus_u(i + 1, j + 1) + " = 0",
                         "subset-sum expansion");

  Rational prefactor =
      pairing(vecs.north, vecs.south).pow(static_cast<unsigned long>(n - m)) *
      pairing(vecs.east, vecs.south).pow(static_cast<unsigned long>(m)) *
      pairing(vecs.north, vecs.west).pow(static_cast<unsigned long>(m)) /
      c.pow(static_cast<unsigned long>(m) * static_cast<unsigned long>(n));

  if (m == 0) return prefactor;  // single empty-subset summand

  const Rational beta = beta_constant(vecs);

  // prod_k (u_j - v_k) and prod_k (u_j - v_k + c), per row
  std::vector<Rational> prod_uv(m, Rational(1)), prod_uvc(m, Rational(1));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n; ++k) {
      prod_uv[j] *= u[j] - v[k];
      prod_uvc[j] *= u[j] - v[k] + c;
    }

  Rational sum(0);
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    Rational term(1);
    int size = 0;
    for (int j = 0; j < m; ++j) {
      if (subset & (1u << j)) {
        term *= prod_uv[j];
        ++size;
      } else {
        term *= prod_uvc[j];
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!(subset & (1u << i))) continue;
      for (int j = 0; j < m; ++j) {
        if (subset & (1u << j)) continue;
        term *= (u[i] - u[j] + c) / (u[i] - u[j]);
      }
    }
    sum += (-beta).pow(static_cast<unsigned long>(size)) * term;
  }
  return prefactor * sum;
}

Rational gdw_determinant(const ModelParams& params) {
  require_nonzero_c(params.c);
  const int m = static_cast<int>(params.u.size());
  const int n = static_cast<int>(params.v.size());
  require_m_le_n(m, n, "determinant");
  const auto& u = params.u;
  const auto& v = params.v;
  const auto& c = params.c;
  const auto& vecs = params.vectors;

  Rational prefactor =
      pairing(vecs.north, vecs.south).pow(static_cast<unsigned long>(n - m)) *
      pairing(vecs.east, vecs.south).pow(static_cast<unsigned long>(m)) *
      pairing(vecs.north, vecs.west).pow(static_cast<unsigned long>(m)) /
      c.pow(static_cast<unsigned long>(m) * static_cast<unsigned long>(n));

  if (m == 0) return prefactor;

  const Rational beta = beta_constant(vecs);

  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      if (u[j] == v[i])
        throw pole_error("u_" + std::to_string(j + 1) + " - v_" +
                             std::to_string(i + 1) + " = 0",
                         "determinant expression");
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if (j == k) continue;
      if (u[j] == u[k])
        throw pole_error(u_minus_u(j + 1, k + 1) + " = 0",
                         "determinant expression");
      if ((u[j] - u[k] + c).is_zero())
        throw pole_error(u_minus_u(j + 1, k + 1) + " + c = 0",
                         "determinant expression");
    }

  // diag_j = prod_i (u_j - v_i + c)/(u_j - v_i),
  // gauge_j = prod_{i != j} (u_j - u_i + c)/(u_j - u_i)
  std::vector<Rational> diag(m, Rational(1)), gauge(m, Rational(1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) diag[j] *= (u[j] - v[i] + c) / (u[j] - v[i]);
    for (int i = 0; i < m; ++i)
      if (i != j) gauge[j] *= (u[j] - u[i] + c) / (u[j] - u[i]);
  }

  Matrix mat(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      Rational entry = -(beta * c / (u[j] - u[k] + c)) * gauge[j];
      if (j == k) entry += diag[j];
      mat.at(j, k) = std::move(entry);
    }

  Rational uv_product(1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) uv_product *= u[i] - v[j];

  return prefactor * uv_product * mat.determinant();
}

Rational z11_explicit(const Rational& u, const Rational& v, const Rational& c,
                      const BoundaryVectors& vecs) {
  require_nonzero_c(c);
  const auto& [nv, ev, sv, wv] = vecs;
  const Rational diff = u - v;
  return (ev.c1 * wv.c1 * nv.c1 * sv.c1 + ev.c2 * wv.c2 * nv.c2 * sv.c2) *
             ((diff + c) / c) +
         (ev.c2 * wv.c1 * nv.c1 * sv.c2 + ev.c1 * wv.c2 * nv.c2 * sv.c1) +
         (ev.c1 * wv.c1 * nv.c2 * sv.c2 + ev.c2 * wv.c2 * nv.c1 * sv.c1) *
             (diff / c);
}

Rational gdw_specialized(std::span<const Rational> v, const Rational& c,
                         const BoundaryVectors& vecs, int m) {
  require_nonzero_c(c);
  const int n = static_cast<int>(v.size());
  if (m < 0) throw InputError("specialized value: m must be nonnegative");
  require_m_le_n(m, n, "specialized value");
  Rational result =
      pairing(vecs.north, vecs.south).pow(static_cast<unsigned long>(n - m)) *
      pairing(vecs.east, vecs.south).pow(static_cast<unsigned long>(m)) *
      pairing(vecs.north, vecs.west).pow(static_cast<unsigned long>(m));
  for (int i = n - m; i < n; ++i)
    for (int j = 0; j < n; ++j) result *= (v[i] - v[j] + c) / c;
  return result;
}

Rational trapezoid_factorized(std::span<const Rational> v_all, int n, int m,
                              const Rational& c, const BoundaryVectors& vecs) {
  require_nonzero_c(c);
  if (n < 0 || m < 0 ||
      v_all.size() != static_cast<std::size_t>(n) + static_cast<std::size_t>(m))
    throw InputError("trapezoid: rapidity list length does not match split");
  Rational result =
      pairing(vecs.north, vecs.south).pow(static_cast<unsigned long>(n)) *
      pairing(vecs.north, vecs.west).pow(static_cast<unsigned long>(m));
  for (int i = n; i < n + m; ++i)
    for (int j = 0; j < n; ++j) result *= (v_all[i] - v_all[j] + c) / c;
  for (int i = n; i < n + m; ++i)
    for (int j = i + 1; j < n + m; ++j)
      result *= (v_all[j] - v_all[i] + c) / c;
  return result;
}

}  // namespace svf
