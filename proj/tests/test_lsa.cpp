#include <doctest.h>

#include "cybe/lsa.hpp"
#include "test_util.hpp"

using namespace cybe;
using testutil::fixture_algebra;
using testutil::fixture_bivector;
using testutil::fixture_omega;

TEST_CASE("symplectic LSA of aff(1): full product table")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  SymplecticForm w = fixture_omega("aff1_omega.json");
  LSA P = symplectic_lsa(L, w);
  // omega(xy,z) = -omega(y,[x,z]) pins the table:
  // e1e1 = -e1, e1e2 = 0, e2e1 = -e2, e2e2 = 0
  CHECK(P.product(unit_vec(2, 0), unit_vec(2, 0)) == Vec{-1, 0});
  CHECK(P.product(unit_vec(2, 0), unit_vec(2, 1)) == Vec{0, 0});
  CHECK(P.product(unit_vec(2, 1), unit_vec(2, 0)) == Vec{0, -1});
  CHECK(P.product(unit_vec(2, 1), unit_vec(2, 1)) == Vec{0, 0});

  auto rep = lsa_check(P);
  CHECK(rep.left_symmetric);
  CHECK(rep.commutator_jacobi.ok);
  CHECK(compatible(P, L)); // the acceptance oracle: xy - yx = [x,y]
}

TEST_CASE("symplectic LSA defining identity on random vectors")
{
  LieAlgebra L = fixture_algebra("n4.json");
  SymplecticForm w = fixture_omega("n4_omega.json");
  LSA P = symplectic_lsa(L, w);
  CHECK(compatible(P, L));
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    Vec x = testutil::random_vec(rng, 4);
    Vec y = testutil::random_vec(rng, 4);
    Vec z = testutil::random_vec(rng, 4);
    CHECK(w.eval(P.product(x, y), z) == -w.eval(y, bracket(L, x, z)));
  }
}

TEST_CASE("dual LSA of aff(1): table, traces, and eta")
{
  LieAlgebra L = fixture_algebra("aff1.json");
  Bivector r = fixture_bivector("aff1_r.json");
  auto res = dual_lsa(L, r);
  REQUIRE(res.cybe_ok);
  // e1*e2* = -e1*, e2*e2* = -e2*, others zero
  CHECK(res.lsa.product(unit_vec(2, 0), unit_vec(2, 1)) == Vec{-1, 0});
  CHECK(res.lsa.product(unit_vec(2, 1), unit_vec(2, 1)) == Vec{0, -1});
  CHECK(res.lsa.product(unit_vec(2, 0), unit_vec(2, 0)) == Vec{0, 0});
  CHECK(res.lsa.product(unit_vec(2, 1), unit_vec(2, 0)) == Vec{0, 0});
  CHECK(res.eta_homomorphism);
  CHECK(lsa_check(res.lsa).left_symmetric);
  CHECK(compatible(res.lsa, res.dual));
  // right multiplication traces {0, -2}
  CHECK(trace(res.lsa.right_mul(unit_vec(2, 0))) == 0);
  CHECK(trace(res.lsa.right_mul(unit_vec(2, 1))) == -2);
}

TEST_CASE("image LSA on a degenerate r: sl2 with h^e")
{
  LieAlgebra L = fixture_algebra("sl2.json");
  Bivector r = fixture_bivector("sl2_r_he.json");
  auto res = image_lsa(L, r);
  REQUIRE(res.image_basis.size() == 2); // Im r = span{h, e}
  CHECK(res.subalgebra);
  CHECK(res.well_defined);
  CHECK(res.projection_morphism);
  CHECK(jacobi_check(res.algebra).ok);
  CHECK(lsa_check(res.lsa).left_symmetric);
  CHECK(compatible(res.lsa, res.algebra));
  // [h,e] = 2e is not unimodular
  CHECK_FALSE(unimodular(res.algebra));
}

TEST_CASE("completeness triad: aff(1) incomplete, n4 complete, sl2 h^e incomplete")
{
  {
    LieAlgebra L = fixture_algebra("aff1.json");
    auto rep = completeness(L, fixture_bivector("aff1_r.json"));
    REQUIRE(rep.cybe_ok);
    CHECK(rep.traces == std::vector<Scalar>{0, -2});
    CHECK_FALSE(rep.complete);
    CHECK_FALSE(rep.image_unimodular);
    CHECK(rep.trace_match);
    CHECK(rep.triad_consistent);
    CHECK(rep.ker_r.empty());
    CHECK(rep.ker_abelian_ideal);
    CHECK(rep.quotient_solvable);
  }
  {
    LieAlgebra L = fixture_algebra("n4.json");
    Bivector r = r_from_omega(L, fixture_omega("n4_omega.json"));
    auto rep = completeness(L, r);
    REQUIRE(rep.cybe_ok);
    CHECK(rep.complete);
    for (const auto& t : rep.traces) CHECK(t == 0);
    CHECK(rep.image_unimodular);
    CHECK(rep.triad_consistent);
  }
  {
    LieAlgebra L = fixture_algebra("sl2.json");
    auto rep = completeness(L, fixture_bivector("sl2_r_he.json"));
    REQUIRE(rep.cybe_ok);
    CHECK_FALSE(rep.complete);
    CHECK_FALSE(rep.image_unimodular);
    CHECK(rep.trace_match);
    CHECK(rep.triad_consistent);
    CHECK(rep.ker_abelian_ideal);
  }
}

TEST_CASE("transport identities hold on every symplectic fixture")
{
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_omega.json"},
                     std::array<const char*, 2>{"abelian2.json", "abelian2_omega.json"},
                     std::array<const char*, 2>{"n4.json", "n4_omega.json"}}) {
    LieAlgebra L = fixture_algebra(names[0]);
    auto rep = transport_check(L, fixture_omega(names[1]));
    CHECK_MESSAGE(rep.ok, names[0], ": identity ", rep.failed_identity);
  }
}

TEST_CASE("lsa_check flags a non-left-symmetric product")
{
  LSA P(2);
  P.a(0, 0, 1) = 1; // e1e1 = e2
  P.a(0, 1, 0) = 1; // e1e2 = e1
  auto rep = lsa_check(P);
  CHECK_FALSE(rep.left_symmetric);
}

TEST_CASE("commutator algebra of an LSA is antisymmetric by construction")
{
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    LSA P(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) P.a(i, j, k) = d(rng);
    CHECK(P.commutator_algebra().antisymmetric());
  }
}
