#include "cybe/double_manin.hpp"

#include <stdexcept>

namespace cybe {

DoubleAlgebra build_double(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  DoubleAlgebra D;
  D.cybe_ok = schouten_rr(L, r).cybe_ok;
  LieAlgebra dual = dual_bracket(L, r);
  D.pair.alg = LieAlgebra(2 * n);
  // [(x,a),(y,b)] = ([x,y] + ad*_a y - ad*_b x, [a,b]_r + ad*_x b - ad*_y a)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // [e_i, e_j] (both in G)
      if (i < j)
        for (std::size_t k = 0; k < n; ++k) D.pair.alg.c(i, j, k) = L.c(i, j, k);
      if (i > j)
        for (std::size_t k = 0; k < n; ++k) D.pair.alg.c(i, j, k) = L.c(i, j, k);
      // [e_i^*, e_j^*] (both in G*)
      if (i != j)
        for (std::size_t k = 0; k < n; ++k) D.pair.alg.c(n + i, n + j, n + k) = dual.c(i, j, k);
      // [(e_i, 0), (0, e_j^*)] = (-ad*_{e_j^*} e_i, ad*_{e_i} e_j^*)
      Vec gpart = -dual_coadjoint(dual, unit_vec(n, j), unit_vec(n, i));
      Vec spart = coadjoint(L, unit_vec(n, i), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        D.pair.alg.set_bracket(i, n + j, k, gpart[k]);
        D.pair.alg.set_bracket(i, n + j, n + k, spart[k]);
      }
    }
  D.pair.form = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    D.pair.form(i, n + i) = 1;
    D.pair.form(n + i, i) = 1;
  }
  return D;
}

PairedAlgebra semidirect_coadjoint(const LieAlgebra& L)
{
  std::size_t n = L.dim();
  PairedAlgebra P;
  P.alg = LieAlgebra(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j || i > j)
        for (std::size_t k = 0; k < n; ++k) P.alg.c(i, j, k) = L.c(i, j, k);
      Vec spart = coadjoint(L, unit_vec(n, i), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) P.alg.set_bracket(i, n + j, n + k, spart[k]);
    }
  P.form = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    P.form(i, n + i) = 1;
    P.form(n + i, i) = 1;
  }
  return P;
}

CertReport xi_iso(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  DoubleAlgebra D = build_double(L, r);
  PairedAlgebra T = semidirect_coadjoint(L);

  // Xi(x,a) = (x + r(a), a)
  Mat xi = Mat::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xi(i, n + j) = r.r(i, j);

  CertReport rep;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = i + 1; j < 2 * n; ++j) {
      Vec u = unit_vec(2 * n, i), v = unit_vec(2 * n, j);
      if (xi * bracket(D.pair.alg, u, v) != bracket(T.alg, xi * u, xi * v)) {
        rep.ok = false;
        rep.witness = {i, j};
        rep.what = "homomorphism";
        return rep;
      }
      if (dot(u, D.pair.form * v) != dot(xi * u, T.form * (xi * v))) {
        rep.ok = false;
        rep.witness = {i, j};
        rep.what = "isometry";
        return rep;
      }
    }
  return rep;
}

LinkedReport linked_check(const LinkedData& D)
{
  LinkedReport rep;
  std::size_t na = D.A.dim(), nb = D.B.dim();
  LieAlgebra Am = D.A.commutator_algebra();
  LieAlgebra Bm = D.B.commutator_algebra();

  // theta1 is a representation of A_-
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vec br = bracket(Am, unit_vec(na, i), unit_vec(na, j));
      Mat m(nb, nb);
      for (std::size_t k = 0; k < na; ++k)
        if (br[k] != 0) m = m + br[k] * D.theta1[k];
      if (!(m == D.theta1[i] * D.theta1[j] - D.theta1[j] * D.theta1[i])) {
        rep.theta1_rep = false;
        rep.witness = {i, j, 0};
      }
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Vec br = bracket(Bm, unit_vec(nb, i), unit_vec(nb, j));
      Mat m(na, na);
      for (std::size_t k = 0; k < nb; ++k)
        if (br[k] != 0) m = m + br[k] * D.theta2[k];
      if (!(m == D.theta2[i] * D.theta2[j] - D.theta2[j] * D.theta2[i])) {
        rep.theta2_rep = false;
        rep.witness = {i, j, 0};
      }
    }

  // (12): (theta1(a)b)b' + b(theta1(a)b') - theta1(a)(bb') = theta1(theta2(b)a)b'
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) {
        Vec a = unit_vec(na, i), b = unit_vec(nb, j), bp = unit_vec(nb, k);
        Vec t1b = D.theta1[i] * b;
        Vec lhs = D.B.product(t1b, bp) + D.B.product(b, D.theta1[i] * bp) -
                  D.theta1[i] * D.B.product(b, bp);
        Vec t2a = D.theta2[j] * a;
        Vec rhs(nb);
        for (std::size_t s = 0; s < na; ++s)
          if (t2a[s] != 0) rhs = rhs + t2a[s] * (D.theta1[s] * bp);
        if (lhs != rhs) {
          rep.cond12 = false;
          rep.witness = {i, j, k};
        }
      }
  // (13): (theta2(b)a)a' + a(theta2(b)a') - theta2(b)(aa') = theta2(theta1(a)b)a'
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t k = 0; k < na; ++k) {
        Vec b = unit_vec(nb, j), a = unit_vec(na, i), ap = unit_vec(na, k);
        Vec t2a = D.theta2[j] * a;
        Vec lhs = D.A.product(t2a, ap) + D.A.product(a, D.theta2[j] * ap) -
                  D.theta2[j] * D.A.product(a, ap);
        Vec t1b = D.theta1[i] * b;
        Vec rhs(na);
        for (std::size_t s = 0; s < nb; ++s)
          if (t1b[s] != 0) rhs = rhs + t1b[s] * (D.theta2[s] * ap);
        if (lhs != rhs) {
          rep.cond13 = false;
          rep.witness = {j, i, k};
        }
      }
  rep.ok = rep.theta1_rep && rep.theta2_rep && rep.cond12 && rep.cond13;
  return rep;
}

LSA linked_product(const LinkedData& D)
{
  if (!linked_check(D).ok) throw std::invalid_argument("linked_product: data not linked");
  std::size_t na = D.A.dim(), nb = D.B.dim();
  LSA P(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) P.a(i, j, k) = D.A.a(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) P.a(na + i, na + j, na + k) = D.B.a(i, j, k);
  // (a,0)(0,b') = theta1(a) b' ; (0,b)(a',0) = theta2(b) a'
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) P.a(i, na + j, na + k) = D.theta1[i](k, j);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t k = 0; k < na; ++k) P.a(na + j, i, k) = D.theta2[j](k, i);
  return P;
}

SplitResult split_ideals(const LSA& P, const std::vector<Vec>& U, const std::vector<Vec>& V)
{
  std::size_t n = P.dim();
  std::size_t na = U.size(), nb = V.size();
  if (na + nb != n) throw std::invalid_argument("split_ideals: subspaces not supplementary");

  SplitResult res;
  res.basis = Mat(n, n);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t i = 0; i < n; ++i) res.basis(i, j) = U[j][i];
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < n; ++i) res.basis(i, na + j) = V[j][i];
  auto binv = inverse(res.basis);
  if (!binv) throw std::invalid_argument("split_ideals: subspaces not supplementary");

  // transform the product tensor into the adapted basis
  res.transformed = LSA(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec bi(n), bj(n);
      for (std::size_t k = 0; k < n; ++k) {
        bi[k] = res.basis(k, i);
        bj[k] = res.basis(k, j);
      }
      Vec coords = *binv * P.product(bi, bj);
      for (std::size_t k = 0; k < n; ++k) res.transformed.a(i, j, k) = coords[k];
    }

  // both blocks must be stable under left multiplication by everything
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bool target_in_U = j < na;
        bool value_in_U = k < na;
        if (res.transformed.a(i, j, k) != 0 && target_in_U != value_in_U)
          throw std::invalid_argument("split_ideals: subspaces are not left ideals");
      }

  res.data.A = LSA(na);
  res.data.B = LSA(nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) res.data.A.a(i, j, k) = res.transformed.a(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        res.data.B.a(i, j, k) = res.transformed.a(na + i, na + j, na + k);
  for (std::size_t i = 0; i < na; ++i) {
    Mat m(nb, nb);
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) m(k, j) = res.transformed.a(i, na + j, na + k);
    res.data.theta1.push_back(m);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    Mat m(na, na);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t k = 0; k < na; ++k) m(k, i) = res.transformed.a(na + j, i, k);
    res.data.theta2.push_back(m);
  }
  return res;
}

LSA double_lsa(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  if (!inverse(r.r)) throw std::invalid_argument("double_lsa: r must be invertible");
  if (!schouten_rr(L, r).cybe_ok) throw std::invalid_argument("double_lsa: r must satisfy CYBE");

  SymplecticForm w{(*inverse(r.r)).transpose()}; // omega with q = r^{-1}
  LSA sym = symplectic_lsa(L, w);
  DualLsaResult dl = dual_lsa(L, r);

  LSA P(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        P.a(i, j, k) = sym.a(i, j, k);                 // xy
        P.a(n + i, n + j, n + k) = dl.lsa.a(i, j, k);  // ab
      }
      // (0,a)(y,0) = ad*_a y ; (x,0)(0,b) = ad*_x b
      Vec gpart = dual_coadjoint(dl.dual, unit_vec(n, i), unit_vec(n, j));
      Vec spart = coadjoint(L, unit_vec(n, i), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        P.a(n + i, j, k) = gpart[k];
        P.a(i, n + j, n + k) = spart[k];
      }
    }
  return P;
}

LSA cotangent_lsa(const LieAlgebra& L, const SymplecticForm& w)
{
  std::size_t n = L.dim();
  LSA sym = symplectic_lsa(L, w); // validates omega
  LSA P(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) P.a(i, j, k) = sym.a(i, j, k);
      Vec spart = coadjoint(L, unit_vec(n, i), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) P.a(i, n + j, n + k) = spart[k];
    }
  return P;
}

DoubleCompletenessReport double_completeness(const LieAlgebra& L, const Bivector& r)
{
  std::size_t n = L.dim();
  DoubleCompletenessReport rep;
  LSA D = double_lsa(L, r);
  SymplecticForm w{(*inverse(r.r)).transpose()};
  LSA sym = symplectic_lsa(L, w);

  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar tg = trace(D.right_mul(unit_vec(2 * n, i)));
    Scalar td = trace(D.right_mul(unit_vec(2 * n, n + i)));
    rep.traces_g.push_back(tg);
    rep.traces_dual.push_back(td);
    if (tg != 0 || td != 0) all_zero = false;
    if (tg != trace(sym.right_mul(unit_vec(n, i)))) rep.trace_match_g = false;
    if (td != trace(sym.right_mul(r.sharp(unit_vec(n, i))))) rep.trace_match_dual = false;
  }
  rep.complete = all_zero;
  rep.g_unimodular = unimodular(L);
  rep.g_solvable = solvable(L);
  rep.consistent = rep.trace_match_g && rep.trace_match_dual &&
                   (rep.complete == rep.g_unimodular);
  return rep;
}

ComplexStructureReport complex_structure(const LieAlgebra& L, const SymplecticForm& w)
{
  std::size_t n = L.dim();
  Bivector r = r_from_omega(L, w);
  Mat Q = q_matrix(w);
  DoubleAlgebra D = build_double(L, r);

  ComplexStructureReport rep;
  // J(x,a) = (-r(a), q(x))
  rep.J = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.J(i, n + j) = -r.r(i, j);
      rep.J(n + i, j) = Q(i, j);
    }
  rep.square_ok = (rep.J * rep.J == -Mat::identity(2 * n));

  rep.nijenhuis_ok = true;
  const LieAlgebra& A = D.pair.alg;
  for (std::size_t i = 0; i < 2 * n && rep.nijenhuis_ok; ++i)
    for (std::size_t j = i + 1; j < 2 * n; ++j) {
      Vec u = unit_vec(2 * n, i), v = unit_vec(2 * n, j);
      Vec nij = bracket(A, rep.J * u, rep.J * v) - bracket(A, u, v) -
                rep.J * bracket(A, u, rep.J * v) - rep.J * bracket(A, rep.J * u, v);
      if (!is_zero(nij)) {
        rep.nijenhuis_ok = false;
        rep.witness = {i, j};
        rep.witness_value = nij;
        break;
      }
    }
  return rep;
}

} // namespace cybe
