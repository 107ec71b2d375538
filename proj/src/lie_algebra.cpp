#include "cybe/lie_algebra.hpp"

#include <stdexcept>

namespace cybe {

bool LieAlgebra::antisymmetric() const
{
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

Mat LieAlgebra::ad(const Vec& x) const
{
  if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

Mat LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vec(dim_, i)); }

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y)
{
  if (x.size() != L.dim() || y.size() != L.dim())
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec z(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < L.dim(); ++k) z[k] += x[i] * y[j] * L.c(i, j, k);
    }
  }
  return z;
}

Vec coadjoint(const LieAlgebra& L, const Vec& x, const Vec& alpha)
{
  if (alpha.size() != L.dim()) throw std::invalid_argument("coadjoint: dimension mismatch");
  return L.coad(x) * alpha;
}

JacobiReport jacobi_check(const LieAlgebra& L)
{
  JacobiReport rep;
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec s = bracket(L, bracket(L, ei, ej), ek) + bracket(L, bracket(L, ej, ek), ei) +
                bracket(L, bracket(L, ek, ei), ej);
        if (!is_zero(s)) {
          rep.ok = false;
          rep.worst_triple = {i, j, k};
          rep.worst_value = s;
          return rep;
        }
      }
  return rep;
}

AdInvarianceReport ad_invariance_check(const PairedAlgebra& P)
{
  AdInvarianceReport rep;
  std::size_t n = P.alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec bij = bracket(P.alg, unit_vec(n, i), unit_vec(n, j));
        Vec bik = bracket(P.alg, unit_vec(n, i), unit_vec(n, k));
        Scalar s = dot(bij, P.form * unit_vec(n, k)) + dot(unit_vec(n, j), P.form * bik);
        if (s != 0) {
          rep.ok = false;
          rep.witness = {i, j, k};
          return rep;
        }
      }
  return rep;
}

std::vector<Vec> center(const LieAlgebra& L)
{
  std::size_t n = L.dim();
  // x central iff ad_{e_j} x = 0 for all j; stack the ad matrices.
  Mat stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat a = L.ad_basis(j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) stacked(j * n + r, s) = a(r, s);
  }
  auto ker = kernel_basis(stacked);
  return row_space_basis(rows_to_mat(ker, n));
}

bool unimodular(const LieAlgebra& L)
{
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (trace(L.ad_basis(i)) != 0) return false;
  return true;
}

std::vector<std::vector<Vec>> derived_series(const LieAlgebra& L)
{
  std::size_t n = L.dim();
  std::vector<std::vector<Vec>> series;
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(unit_vec(n, i));
  while (true) {
    // [cur, cur]
    std::vector<Vec> spans;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        Vec v = bracket(L, cur[a], cur[b]);
        if (!is_zero(v)) spans.push_back(v);
      }
    std::vector<Vec> next = row_space_basis(rows_to_mat(spans, n));
    series.push_back(next);
    if (next.size() == cur.size() || next.empty()) break;
    cur = next;
  }
  return series;
}

bool solvable(const LieAlgebra& L)
{
  auto s = derived_series(L);
  return s.empty() || s.back().empty();
}

bool is_ideal(const LieAlgebra& L, const std::vector<Vec>& subspace)
{
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& u : subspace)
      if (!in_span(subspace, bracket(L, unit_vec(n, i), u))) return false;
  return true;
}

LieAlgebra quotient(const LieAlgebra& L, const std::vector<Vec>& ideal)
{
  if (!is_ideal(L, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  std::size_t n = L.dim();
  auto ibasis = row_space_basis(rows_to_mat(ideal, n));
  std::vector<bool> is_pivot(n, false);
  {
    Mat m = rows_to_mat(ibasis, n);
    for (auto p : rref(m)) is_pivot[p] = true;
  }
  // complement: non-pivot coordinates of the ideal's rref
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  std::size_t m = comp.size();

  // basis of L adapted to ideal + complement; reduce mod ideal = solve
  Mat full(n, n); // columns: ideal basis then complement unit vectors
  for (std::size_t j = 0; j < ibasis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) full(i, j) = ibasis[j][i];
  for (std::size_t j = 0; j < m; ++j) full(comp[j], ibasis.size() + j) = 1;
  auto finv = inverse(full);
  if (!finv) throw std::logic_error("quotient: adapted basis not invertible");

  LieAlgebra Q(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec v = bracket(L, unit_vec(n, comp[a]), unit_vec(n, comp[b]));
      Vec coords = *finv * v;
      for (std::size_t k = 0; k < m; ++k) Q.c(a, b, k) = coords[ibasis.size() + k];
    }
  return Q;
}

PairedAlgebra cotangent_algebra(const LieAlgebra& L)
{
  std::size_t n = L.dim();
  PairedAlgebra P;
  P.alg = LieAlgebra(2 * n);
  // [(a,x),(b,y)] = (ad*_x b - ad*_y a, [x,y]); covector part first.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // [e_i^* (dual slot i), x = e_j (slot n+j)]
      Vec v = coadjoint(L, unit_vec(n, j), unit_vec(n, i));
      for (std::size_t k = 0; k < n; ++k) P.alg.set_bracket(n + j, i, k, v[k]);
      // [e_i (slot n+i), e_j (slot n+j)] = [e_i,e_j]
      for (std::size_t k = 0; k < n; ++k) P.alg.c(n + i, n + j, n + k) = L.c(i, j, k);
    }
  P.form = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    P.form(i, n + i) = 1;
    P.form(n + i, i) = 1;
  }
  return P;
}

} // namespace cybe
