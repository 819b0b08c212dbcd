#include "svf/contraction.hpp"

#include <string>
#include <utility>

#include "svf/errors.hpp"

namespace svf {

namespace {

constexpr int kMaxSites = 22;  // hard cap on dense 2^L state size

void check_site_count(int n) {
  if (n < 0 || n > kMaxSites)
    throw InputError("site count " + std::to_string(n) +
                     " outside supported range [0, " +
                     std::to_string(kMaxSites) + "]");
}

// Adjoins one auxiliary site in front (most significant bit) initialized
// to `ket`; existing sites shift to 2..L+1 but keep their bit positions.
StateVector adjoin_front(const StateVector& state, const BoundaryVector& ket) {
  StateVector ext;
  ext.num_sites = state.num_sites + 1;
  const std::size_t half = state.amps.size();
  ext.amps.resize(half * 2);
  for (std::size_t i = 0; i < half; ++i) {
    ext.amps[i] = ket.c1 * state.amps[i];
    ext.amps[half + i] = ket.c2 * state.amps[i];
  }
  return ext;
}

// Contracts the front (most significant) site with <bra|.
StateVector contract_front(const StateVector& state,
                           const BoundaryVector& bra) {
  StateVector out;
  out.num_sites = state.num_sites - 1;
  const std::size_t half = state.amps.size() / 2;
  out.amps.resize(half);
  for (std::size_t i = 0; i < half; ++i)
    out.amps[i] = bra.c1 * state.amps[i] + bra.c2 * state.amps[half + i];
  return out;
}

}  // namespace

StateVector StateVector::product_state(int n, const BoundaryVector& site) {
  check_site_count(n);
  StateVector s;
  s.num_sites = n;
  s.amps.assign(1, Rational(1));
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> next(s.amps.size() * 2);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
      next[2 * i] = s.amps[i] * site.c1;
      next[2 * i + 1] = s.amps[i] * site.c2;
    }
    s.amps = std::move(next);
  }
  return s;
}

void apply_gate(StateVector& state, int site_j, int site_k, const RMatrix& r) {
  const int L = state.num_sites;
  if (site_j < 1 || site_j > L || site_k < 1 || site_k > L ||
      site_j == site_k)
    throw InputError("apply_gate: site pair (" + std::to_string(site_j) +
                     ", " + std::to_string(site_k) + ") out of range for " +
                     std::to_string(L) + " sites");
  const std::size_t mj = std::size_t{1} << (L - site_j);
  const std::size_t mk = std::size_t{1} << (L - site_k);
  const Rational& a = r.a();
  const Rational& b = r.b();
  const std::size_t dim = state.amps.size();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx & mj) || (idx & mk)) continue;
    Rational& a00 = state.amps[idx];
    Rational& a01 = state.amps[idx | mk];
    Rational& a10 = state.amps[idx | mj];
    Rational& a11 = state.amps[idx | mj | mk];
    a00 *= a;
    a11 *= a;
    Rational new01 = b * a01 + a10;
    a10 = a01 + b * a10;
    a01 = std::move(new01);
  }
}

Rational contract_all(const StateVector& state, const BoundaryVector& bra) {
  std::vector<Rational> acc = state.amps;
  while (acc.size() > 1) {
    const std::size_t half = acc.size() / 2;
    // fold the least significant (last) site
    for (std::size_t i = 0; i < half; ++i)
      acc[i] = bra.c1 * acc[2 * i] + bra.c2 * acc[2 * i + 1];
    acc.resize(half);
  }
  return acc[0];
}

Rational triangular_contract(std::span<const Rational> u, const Rational& c,
                             const BoundaryVector& e,
                             const BoundaryVector& s) {
  if (c.is_zero()) throw InputError("crossing constant c must be nonzero");
  const int n = static_cast<int>(u.size());
  check_site_count(n);
  StateVector state = StateVector::product_state(n, s);
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k <= n; ++k)
      apply_gate(state, i, k, r_matrix(u[i - 1], u[k - 1], c));
  return contract_all(state, e);
}

namespace {

Rational gdw_contract_impl(const Rational& c, std::span<const Rational> u,
                           std::span<const Rational> v,
                           const BoundaryVector& north,
                           const BoundaryVector& east,
                           const BoundaryVector& south,
                           const BoundaryVector& west) {
  if (c.is_zero()) throw InputError("crossing constant c must be nonzero");
  const int m = static_cast<int>(u.size());
  const int n = static_cast<int>(v.size());
  check_site_count(n + 1);
  StateVector column = StateVector::product_state(n, south);
  for (int i = 0; i < m; ++i) {
    StateVector ext = adjoin_front(column, west);
    for (int k = 1; k <= n; ++k)
      apply_gate(ext, 1, k + 1, r_matrix(u[i], v[k - 1], c));
    column = contract_front(ext, east);
  }
  return contract_all(column, north);
}

}  // namespace

Rational gdw_contract(const ModelParams& params) {
  const BoundaryVectors& b = params.vectors;
  return gdw_contract_impl(params.c, params.u, params.v, b.north, b.east,
                           b.south, b.west);
}

Rational gdw_contract_fixed_east(const ModelParams& params,
                                 const BoundaryVector& east) {
  const BoundaryVectors& b = params.vectors;
  return gdw_contract_impl(params.c, params.u, params.v, b.north, east,
                           b.south, b.west);
}

namespace {

void check_trapezoid_split(std::span<const Rational> v_all, int n, int m) {
  if (n < 0 || m < 0 ||
      v_all.size() != static_cast<std::size_t>(n) + static_cast<std::size_t>(m))
    throw InputError("trapezoid: rapidity list length " +
                     std::to_string(v_all.size()) + " does not match split (" +
                     std::to_string(n) + ", " + std::to_string(m) + ")");
}

}  // namespace

Rational trapezoid_value_aux(std::span<const Rational> v_all, int n, int m,
                             const Rational& c, const BoundaryVectors& vecs,
                             const BoundaryVector& aux_east) {
  check_trapezoid_split(v_all, n, m);
  if (c.is_zero()) throw InputError("crossing constant c must be nonzero");
  const auto tail = v_all.subspan(static_cast<std::size_t>(n));

  const Rational numerator = gdw_contract_impl(
      c, tail, v_all, vecs.north, aux_east, vecs.south, vecs.west);
  const Rational divisor = triangular_contract(tail, c, aux_east, vecs.south);
  if (divisor.is_zero()) {
    // Name the factor that killed <e|s>^m * prod (v_i - v_j + c)/c.
    if (pairing(aux_east, vecs.south).is_zero())
      throw degeneracy_error("<e|s> = 0 for the auxiliary east vector",
                             "trapezoid normalization");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if ((tail[i] - tail[j] + c).is_zero())
          throw degeneracy_error(
              "v_" + std::to_string(n + i + 1) + " - v_" +
                  std::to_string(n + j + 1) + " + c = 0",
              "trapezoid normalization");
    throw degeneracy_error("vanishing divisor", "trapezoid normalization");
  }
  return numerator / divisor;
}

Rational trapezoid_value(std::span<const Rational> v_all, int n, int m,
                         const Rational& c, const BoundaryVectors& vecs) {
  check_trapezoid_split(v_all, n, m);
  BoundaryVector aux = vecs.east;
  if (pairing(aux, vecs.south).is_zero()) {
    if (vecs.south.is_zero())
      throw degeneracy_error("south vector is zero", "trapezoid value");
    aux = vecs.south.c1.is_zero() ? BoundaryVector{Rational(0), Rational(1)}
                                  : BoundaryVector{Rational(1), Rational(0)};
  }
  return trapezoid_value_aux(v_all, n, m, c, vecs, aux);
}

std::vector<Rational> triangular_degree_profile(
    std::span<const Rational> u, const Rational& c, const BoundaryVector& e,
    const BoundaryVector& s, int var_index, std::span<const Rational> nodes) {
  if (var_index < 1 || var_index > static_cast<int>(u.size()))
    throw InputError("degree profile: variable index out of range");
  std::vector<Rational> values;
  values.reserve(nodes.size());
  std::vector<Rational> work(u.begin(), u.end());
  for (const Rational& x : nodes) {
    work[var_index - 1] = x;
    values.push_back(triangular_contract(work, c, e, s));
  }
  return interpolate_polynomial(nodes, values);
}

}  // namespace svf
