#include "cybe/lsa.hpp"

#include <stdexcept>

namespace cybe {

Vec LSA::product(const Vec& x, const Vec& y) const
{
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("lsa product: dimension mismatch");
  Vec z(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) z[k] += x[i] * y[j] * a(i, j, k);
    }
  }
  return z;
}

Mat LSA::left_mul(const Vec& x) const
{
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) += x[i] * a(i, j, k);
  }
  return m;
}

Mat LSA::right_mul(const Vec& x) const
{
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) m(k, i) += x[j] * a(i, j, k);
  }
  return m;
}

LieAlgebra LSA::commutator_algebra() const
{
  LieAlgebra L(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) L.set_bracket(i, j, k, a(i, j, k) - a(j, i, k));
  return L;
}

LsaReport lsa_check(const LSA& P)
{
  LsaReport rep;
  std::size_t n = P.dim();
  for (std::size_t i = 0; i < n && rep.left_symmetric; ++i)
    for (std::size_t j = 0; j < i && rep.left_symmetric; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        // a(x,y,z) - a(y,x,z)
        Vec d = (P.product(P.product(x, y), z) - P.product(x, P.product(y, z))) -
                (P.product(P.product(y, x), z) - P.product(y, P.product(x, z)));
        if (!is_zero(d)) {
          rep.left_symmetric = false;
          rep.witness = {i, j, k};
          break;
        }
      }
  rep.commutator = P.commutator_algebra();
  rep.commutator_jacobi = jacobi_check(rep.commutator);
  return rep;
}

bool compatible(const LSA& P, const LieAlgebra& L)
{
  if (P.dim() != L.dim()) return false;
  std::size_t n = P.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (P.a(i, j, k) - P.a(j, i, k) != L.c(i, j, k)) return false;
  return true;
}

LSA symplectic_lsa(const LieAlgebra& L, const SymplecticForm& w)
{
  Bivector r = r_from_omega(L, w); // validates omega
  Mat Q = q_matrix(w);
  std::size_t n = L.dim();
  LSA P(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = r.sharp(coadjoint(L, unit_vec(n, i), Q * unit_vec(n, j)));
      for (std::size_t k = 0; k < n; ++k) P.a(i, j, k) = prod[k];
    }
  return P;
}

DualLsaResult dual_lsa(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  DualLsaResult res;
  res.dual = dual_bracket(L, r);
  res.cybe_ok = schouten_rr(L, r).cybe_ok;
  res.lsa = LSA(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = coadjoint(L, r.sharp(unit_vec(n, i)), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) res.lsa.a(i, j, k) = prod[k];
    }
  // identity (7): ad*_{r([a,b]_r)} = ad*_{[r(a),r(b)]} for eta into aff(G*)
  for (std::size_t i = 0; i < n && res.eta_homomorphism; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j);
      Mat lhs = L.coad(r.sharp(bracket(res.dual, a, b)));
      Mat rhs = L.coad(bracket(L, r.sharp(a), r.sharp(b)));
      if (!(lhs == rhs)) {
        res.eta_homomorphism = false;
        break;
      }
    }
  return res;
}

ImageLsaResult image_lsa(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  ImageLsaResult res;
  res.image_basis = row_space_basis(r.r.transpose()); // column space of r
  std::size_t m = res.image_basis.size();
  for (const auto& v : res.image_basis) {
    auto alpha = solve(r.r, v);
    if (!alpha) throw std::logic_error("image_lsa: basis vector not in image");
    res.preimages.push_back(*alpha);
  }

  // omega_bar well-definedness: kernel preimage shifts contribute nothing
  for (const auto& kappa : kernel_basis(r.r))
    for (const auto& v : res.image_basis)
      if (dot(kappa, v) != 0) res.well_defined = false;

  Mat B = cols_to_mat(res.image_basis, n);
  auto in_image_coords = [&](const Vec& v) { return solve(B, v); };

  res.algebra = LieAlgebra(m);
  res.lsa = LSA(m);
  res.omega_bar = Mat(m, m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      res.omega_bar(s, t) = dot(res.preimages[s], res.image_basis[t]);
      Vec br = bracket(L, res.image_basis[s], res.image_basis[t]);
      if (auto coords = in_image_coords(br)) {
        for (std::size_t k = 0; k < m; ++k) res.algebra.c(s, t, k) = (*coords)[k];
      } else {
        res.subalgebra = false;
      }
      Vec prod = r.sharp(coadjoint(L, res.image_basis[s], res.preimages[t]));
      if (auto coords = in_image_coords(prod)) {
        for (std::size_t k = 0; k < m; ++k) res.lsa.a(s, t, k) = (*coords)[k];
      } else {
        res.subalgebra = false;
      }
    }

  // projection p(a) = r(a) is an LSA morphism G* -> Im(r)
  DualLsaResult dl = dual_lsa(L, r);
  for (std::size_t i = 0; i < n && res.projection_morphism; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = r.sharp(dl.lsa.product(unit_vec(n, i), unit_vec(n, j)));
      auto ci = in_image_coords(r.sharp(unit_vec(n, i)));
      auto cj = in_image_coords(r.sharp(unit_vec(n, j)));
      if (!ci || !cj) {
        res.projection_morphism = false;
        break;
      }
      Vec rhs = B * res.lsa.product(*ci, *cj);
      if (lhs != rhs) {
        res.projection_morphism = false;
        break;
      }
    }
  return res;
}

CompletenessReport completeness(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  CompletenessReport rep;
  DualLsaResult dl = dual_lsa(L, r);
  rep.cybe_ok = dl.cybe_ok;

  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar t = trace(dl.lsa.right_mul(unit_vec(n, i)));
    rep.traces.push_back(t);
    if (t != 0) all_zero = false;
  }
  rep.complete = all_zero;

  ImageLsaResult img = image_lsa(L, r);
  rep.image_unimodular = unimodular(img.algebra);

  // tr R_a = tr R^im_{r(a)} on all basis covectors
  Mat B = cols_to_mat(img.image_basis, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto coords = solve(B, r.sharp(unit_vec(n, i)));
    if (!coords) {
      rep.trace_match = false;
      continue;
    }
    if (trace(img.lsa.right_mul(*coords)) != rep.traces[i]) rep.trace_match = false;
  }
  rep.triad_consistent = rep.trace_match && (rep.complete == rep.image_unimodular);

  rep.ker_r = kernel_basis(r.r);
  for (const auto& kappa : rep.ker_r) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec beta = unit_vec(n, i);
      if (!is_zero(dl.lsa.product(kappa, beta))) rep.ker_abelian_ideal = false;
      if (!in_span(rep.ker_r, dl.lsa.product(beta, kappa))) rep.ker_abelian_ideal = false;
    }
    for (const auto& kappa2 : rep.ker_r)
      if (!is_zero(dl.lsa.product(kappa, kappa2))) rep.ker_abelian_ideal = false;
  }

  if (rep.ker_r.empty()) {
    rep.quotient_solvable = solvable(dl.dual);
  } else if (is_ideal(dl.dual, rep.ker_r)) {
    rep.quotient_solvable = solvable(quotient(dl.dual, rep.ker_r));
  } else {
    rep.quotient_solvable = false; // Ker(r) not an ideal only off the CYBE locus
  }
  return rep;
}

TransportReport transport_check(const LieAlgebra& L, const SymplecticForm& w)
{
  std::size_t n = L.dim();
  TransportReport rep;
  Bivector r = r_from_omega(L, w);
  Mat Q = q_matrix(w);
  LSA sym = symplectic_lsa(L, w);
  DualLsaResult dl = dual_lsa(L, r);

  auto fail = [&](const char* id, std::size_t i, std::size_t j) {
    rep.ok = false;
    rep.failed_identity = id;
    rep.witness = {i, j};
  };

  for (std::size_t i = 0; i < n && rep.ok; ++i) {
    Vec x = unit_vec(n, i);
    Mat lx = sym.left_mul(x);
    if (!(Q * lx == L.coad(x) * Q)) { fail("a", i, i); break; }
    if (!(r.r * L.coad(x) == lx * r.r)) { fail("a'", i, i); break; }
    for (std::size_t j = 0; j < n && rep.ok; ++j) {
      Vec b = unit_vec(n, j);
      // (b) r(ad*_x b) = ad*_{q(x)} r(b)
      if (r.sharp(coadjoint(L, x, b)) != dual_coadjoint(dl.dual, Q * x, r.sharp(b)))
        { fail("b", i, j); break; }
      // (c) q([r(a), r(b)]) = [a,b]_r
      Vec a = unit_vec(n, i);
      if (Q * bracket(L, r.sharp(a), r.sharp(b)) != bracket(dl.dual, a, b))
        { fail("c", i, j); break; }
      // (d) q(x) b = ad*_x b in the dual LSA
      if (dl.lsa.product(Q * x, b) != coadjoint(L, x, b)) { fail("d", i, j); break; }
      // (e) r(b) x = ad*_b x (coadjoint action of the dual algebra)
      if (sym.product(r.sharp(b), x) != dual_coadjoint(dl.dual, b, x))
        { fail("e", i, j); break; }
      // (10): a b = q(r(a) r(b)), so q is an LSA isomorphism
      if (dl.lsa.product(a, b) != Q * sym.product(r.sharp(a), r.sharp(b)))
        { fail("eq10", i, j); break; }
    }
  }
  return rep;
}

} // namespace cybe
