#include "cybe/rmatrix.hpp"

#include "cybe/double_manin.hpp"

#include <stdexcept>

namespace cybe {

SchoutenReport schouten_rr(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  if (r.dim() != n) throw std::invalid_argument("schouten_rr: dimension mismatch");
  SchoutenReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
        Scalar v = dot(bracket(L, r.sharp(a), r.sharp(b)), c) +
                   dot(bracket(L, r.sharp(b), r.sharp(c)), a) +
                   dot(bracket(L, r.sharp(c), r.sharp(a)), b);
        rep.values.push_back({{i, j, k}, v});
        if (v != 0) rep.cybe_ok = false;
      }
  return rep;
}

LieAlgebra dual_bracket(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  std::vector<std::string> names;
  for (const auto& s : L.basis_names()) names.push_back(s + "*");
  LieAlgebra D(n, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j);
      Vec v = coadjoint(L, r.sharp(a), b) - coadjoint(L, r.sharp(b), a);
      for (std::size_t k = 0; k < n; ++k) D.set_bracket(i, j, k, v[k]);
    }
  return D;
}

ClosednessReport omega_closed(const LieAlgebra& L, const SymplecticForm& w)
{
  std::size_t n = L.dim();
  ClosednessReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        Scalar s = w.eval(bracket(L, x, y), z) + w.eval(bracket(L, y, z), x) +
                   w.eval(bracket(L, z, x), y);
        if (s != 0) {
          rep.closed = false;
          rep.witness = {i, j, k};
          return rep;
        }
      }
  return rep;
}

Mat q_matrix(const SymplecticForm& w) { return w.omega.transpose(); }

Bivector r_from_omega(const LieAlgebra& L, const SymplecticForm& w)
{
  if (!w.omega.is_skew()) throw std::invalid_argument("omega is not skew");
  if (!omega_closed(L, w).closed) throw std::invalid_argument("omega is not closed");
  auto inv = inverse(q_matrix(w));
  if (!inv) throw std::invalid_argument("omega is singular");
  return Bivector{*inv};
}

bool center_condition(const LieAlgebra& L, const Bivector& r, const LieAlgebra& dual)
{
  std::size_t n = L.dim();
  auto Z = center(L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j);
      Vec defect = r.sharp(bracket(dual, a, b)) - bracket(L, r.sharp(a), r.sharp(b));
      if (!in_span(Z, defect)) return false;
    }
  return true;
}

GraphReport graph_check(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  GraphReport rep;
  // isotropy of graph(r) in the hyperbolic pairing: <(a,ra),(b,rb)> =
  // a(rb) + b(ra) = 0 for all a,b iff r is skew.
  rep.isotropic = true;
  for (std::size_t i = 0; i < n && rep.isotropic; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j);
      if (dot(a, r.sharp(b)) + dot(b, r.sharp(a)) != 0) {
        rep.isotropic = false;
        break;
      }
    }
  rep.lagrangian = rep.isotropic; // graph has dimension n = half of dim t*G
  // closure under the t*G bracket: r([a,b]_r) = [r(a),r(b)].
  LieAlgebra dual = dual_bracket(L, r);
  rep.subalgebra = true;
  for (std::size_t i = 0; i < n && rep.subalgebra; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j);
      Vec lhs = r.sharp(bracket(dual, a, b));
      Vec rhs = bracket(L, r.sharp(a), r.sharp(b));
      if (lhs != rhs) {
        rep.subalgebra = false;
        break;
      }
    }
  return rep;
}

Vec dual_coadjoint(const LieAlgebra& dual, const Vec& gamma, const Vec& x)
{
  return coadjoint(dual, gamma, x);
}

CertReport theta_iso(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  DoubleAlgebra D = build_double(L, r);
  PairedAlgebra T = cotangent_algebra(L);

  // theta on double coordinates (x | a) -> t*G coordinates (a | r(a) + x)
  Mat theta(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    theta(i, n + i) = 1;     // a-part passes through
    theta(n + i, i) = 1;     // x-part
    for (std::size_t j = 0; j < n; ++j) theta(n + i, n + j) = r.r(i, j); // + r(a)
  }

  CertReport rep;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = i + 1; j < 2 * n; ++j) {
      Vec u = unit_vec(2 * n, i), v = unit_vec(2 * n, j);
      Vec lhs = theta * bracket(D.pair.alg, u, v);
      Vec rhs = bracket(T.alg, theta * u, theta * v);
      if (lhs != rhs) {
        rep.ok = false;
        rep.witness = {i, j};
        rep.what = "homomorphism";
        return rep;
      }
      Scalar pd = dot(u, D.pair.form * v);
      Scalar pt = dot(theta * u, T.form * (theta * v));
      if (pd != pt) {
        rep.ok = false;
        rep.witness = {i, j};
        rep.what = "isometry";
        return rep;
      }
    }

  // theta maps the dual factor (0..n-1 in the a-slot of the double) onto graph(r)
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(2 * n); // element (0, e_i^*) of the double: a-part lives in n..2n-1
    u[n + i] = 1;
    Vec img = theta * u;
    // expected (e_i^*, r(e_i^*)) in t*G coordinates
    Vec a = unit_vec(n, i);
    Vec ra = r.sharp(a);
    for (std::size_t k = 0; k < n; ++k)
      if (img[k] != a[k] || img[n + k] != ra[k]) {
        rep.ok = false;
        rep.witness = {i, i};
        rep.what = "graph image";
        return rep;
      }
  }
  return rep;
}

} // namespace cybe
