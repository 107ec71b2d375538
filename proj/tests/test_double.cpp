#include <doctest.h>

#include "cybe/double_manin.hpp"
#include "test_util.hpp"

using namespace cybe;
using testutil::fixture_algebra;
using testutil::fixture_bivector;
using testutil::fixture_omega;

namespace {

bool same_lsa(const LSA& a, const LSA& b)
{
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.a(i, j, k) != b.a(i, j, k)) return false;
  return true;
}

} // namespace

TEST_CASE("double of aff(1) is a Manin algebra")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  auto D = build_double(L, fixture_bivector("aff1_r.json"));
  REQUIRE(D.cybe_ok);
  REQUIRE(D.pair.alg.dim() == 4);
  CHECK(jacobi_check(D.pair.alg).ok);
  CHECK(ad_invariance_check(D.pair).ok);
  // G and G* are isotropic halves
  CHECK(D.pair.form(0, 2) == 1);
  CHECK(D.pair.form(0, 1) == 0);
}

TEST_CASE("double jacobi: implied by the CYBE, equivalent to dual jacobi")
{
  // CYBE is sufficient but not necessary for the double to be Lie: the real
  // obstruction is ad-invariance of [r,r], which in dim 3 holds for every
  // skew r. The sharp statement is jacobi(double) == jacobi(dual bracket).
  std::mt19937_64 rng(29);
  int double_jacobi_failures = 0;
  for (const char* name : {"heis3.json", "n4.json"}) {
    LieAlgebra L = fixture_algebra(name);
    for (int t = 0; t < 40; ++t) {
      Bivector r{testutil::random_skew(rng, L.dim())};
      auto D = build_double(L, r);
      bool jac = jacobi_check(D.pair.alg).ok;
      if (D.cybe_ok) CHECK(jac);
      CHECK(jac == jacobi_check(dual_bracket(L, r)).ok);
      if (!jac) ++double_jacobi_failures;
    }
  }
  CHECK(double_jacobi_failures > 0); // the negative direction is exercised (n4)
}

TEST_CASE("xi and theta certify on all CYBE fixtures")
{
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_r.json"},
                     std::array<const char*, 2>{"sl2.json", "sl2_r_he.json"},
                     std::array<const char*, 2>{"heis3.json", "heis3_r.json"}}) {
    LieAlgebra L = fixture_algebra(names[0]);
    Bivector r = fixture_bivector(names[1]);
    auto xi = xi_iso(L, r);
    CHECK_MESSAGE(xi.ok, names[0], ": ", xi.what);
    auto th = theta_iso(L, r);
    CHECK_MESSAGE(th.ok, names[0], ": ", th.what);
  }
}

TEST_CASE("double LSA: left-symmetric with the double bracket as commutator")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  Bivector r = fixture_bivector("aff1_r.json");
  LSA P = double_lsa(L, r);
  auto rep = lsa_check(P);
  CHECK(rep.left_symmetric);
  auto D = build_double(L, r);
  CHECK(compatible(P, D.pair.alg));
}

TEST_CASE("cotangent LSA projects onto the symplectic LSA")
{
  LieAlgebra L = fixture_algebra("n4.json");
  SymplecticForm w = fixture_omega("n4_omega.json");
  LSA P = cotangent_lsa(L, w);
  CHECK(lsa_check(P).left_symmetric);
  CHECK(compatible(P, semidirect_coadjoint(L).alg));
  LSA sym = symplectic_lsa(L, w);
  std::size_t n = 4;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      Vec u = unit_vec(2 * n, i), v = unit_vec(2 * n, j);
      Vec p = P.product(u, v);
      Vec xu(n), xv(n), xp(n);
      for (std::size_t k = 0; k < n; ++k) {
        xu[k] = u[k];
        xv[k] = v[k];
        xp[k] = p[k];
      }
      CHECK(sym.product(xu, xv) == xp);
    }
}

TEST_CASE("coadjoint instantiation is linked; product round-trips split_ideals")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  Bivector r = fixture_bivector("aff1_r.json");
  std::size_t n = 2;

  SymplecticForm w{(*inverse(r.r)).transpose()};
  auto dl = dual_lsa(L, r);
  LinkedData data;
  data.A = symplectic_lsa(L, w);
  data.B = dl.lsa;
  for (std::size_t i = 0; i < n; ++i) data.theta1.push_back(L.coad(unit_vec(n, i)));
  for (std::size_t i = 0; i < n; ++i) data.theta2.push_back(dl.dual.coad(unit_vec(n, i)));

  auto chk = linked_check(data);
  CHECK(chk.theta1_rep);
  CHECK(chk.theta2_rep);
  CHECK(chk.cond12);
  CHECK(chk.cond13);
  REQUIRE(chk.ok);

  LSA prod = linked_product(data);
  LSA dbl = double_lsa(L, r);
  CHECK(same_lsa(prod, dbl));

  // split the double LSA back along G and G*
  std::vector<Vec> U = {unit_vec(4, 0), unit_vec(4, 1)};
  std::vector<Vec> V = {unit_vec(4, 2), unit_vec(4, 3)};
  auto split = split_ideals(dbl, U, V);
  CHECK(same_lsa(split.transformed, dbl)); // already adapted
  CHECK(same_lsa(linked_product(split.data), split.transformed));
}

TEST_CASE("split_ideals rejects non-stable subspaces")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  LSA dbl = double_lsa(L, fixture_bivector("aff1_r.json"));
  std::vector<Vec> U = {unit_vec(4, 0), unit_vec(4, 2)};
  std::vector<Vec> V = {unit_vec(4, 1), unit_vec(4, 3)};
  CHECK_THROWS_AS(split_ideals(dbl, U, V), std::invalid_argument);
}

TEST_CASE("double completeness is consistent with the base traces")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  auto rep = double_completeness(L, fixture_bivector("aff1_r.json"));
  CHECK(rep.trace_match_g);
  CHECK(rep.trace_match_dual);
  CHECK(rep.consistent);
  CHECK_FALSE(rep.complete); // aff(1) is not unimodular
  CHECK(rep.g_solvable);

  LieAlgebra N = fixture_algebra("n4.json");
  Bivector rn = r_from_omega(N, fixture_omega("n4_omega.json"));
  auto rep2 = double_completeness(N, rn);
  CHECK(rep2.complete);
  CHECK(rep2.consistent);
}

TEST_CASE("complex structure on the double: J^2 = -Id and N_J = 0")
{
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_omega.json"},
                     std::array<const char*, 2>{"abelian2.json", "abelian2_omega.json"},
                     std::array<const char*, 2>{"n4.json", "n4_omega.json"}}) {
    LieAlgebra L = fixture_algebra(names[0]);
    auto rep = complex_structure(L, fixture_omega(names[1]));
    CHECK_MESSAGE(rep.square_ok, names[0]);
    CHECK_MESSAGE(rep.nijenhuis_ok, names[0]);
    CHECK(rep.J.rows() == 2 * L.dim());
  }
}
