// Acceptance suite: one line per criterion, exit code = number of failures.

#include "cybe/double_manin.hpp"
#include "cybe/io.hpp"
#include "cybe/poisson.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace cybe;

namespace {

json load_fixture(const std::string& name)
{
  std::ifstream in(std::string(CYBE_FIXTURES_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

LieAlgebra alg(const std::string& n) { return algebra_from_json(load_fixture(n)); }
Bivector biv(const std::string& n) { return bivector_from_json(load_fixture(n)); }
SymplecticForm omg(const std::string& n) { return omega_from_json(load_fixture(n)); }

Mat random_skew(std::mt19937_64& rng, std::size_t n)
{
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int v = d(rng);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n)
{
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

int failures = 0;

void report(int num, const char* label, bool ok, const std::string& detail = "")
{
  std::cout << "criterion " << num << " [" << label << "]: " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// 1. graph(r) subalgebra <=> CYBE, 200 random bivectors per algebra
void criterion1()
{
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240824);
  int mismatches = 0, trials = 0;
  for (const char* name : {"aff1.json", "heis3.json", "sl2.json", "n4.json"}) {
    LieAlgebra L = alg(name);
    for (int t = 0; t < 200; ++t) {
      Bivector r{random_skew(rng, L.dim())};
      ++trials;
      if (graph_check(L, r).subalgebra != schouten_rr(L, r).cybe_ok) ++mismatches;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << trials << " bivectors, " << mismatches << " mismatches, " << secs << " s";
  report(1, "graph(r) subalgebra <=> CYBE", mismatches == 0 && secs < 10.0, d.str());
}

// 2. completeness triad agreement + concrete values
void criterion2()
{
  bool ok = true;
  std::string detail;
  struct Case {
    const char* name;
    const char* algebra;
    Bivector r;
    bool expect_complete;
  };
  std::vector<Case> cases;
  cases.push_back({"aff1", "aff1.json", biv("aff1_r.json"), false});
  cases.push_back({"heis3", "heis3.json", biv("heis3_r.json"), true});
  cases.push_back({"sl2 h^e", "sl2.json", biv("sl2_r_he.json"), false});
  cases.push_back({"n4", "n4.json", r_from_omega(alg("n4.json"), omg("n4_omega.json")), true});
  cases.push_back({"abelian2", "abelian2.json",
                   r_from_omega(alg("abelian2.json"), omg("abelian2_omega.json")), true});
  for (auto& c : cases) {
    auto rep = completeness(alg(c.algebra), c.r);
    if (!rep.cybe_ok || !rep.triad_consistent || !rep.trace_match ||
        rep.complete != c.expect_complete) {
      ok = false;
      detail += std::string(c.name) + " ";
    }
  }
  // concrete aff(1) trace list {0, -2}
  auto aff = completeness(alg("aff1.json"), biv("aff1_r.json"));
  if (aff.traces != std::vector<Scalar>{0, -2}) {
    ok = false;
    detail += "aff1-traces ";
  }
  // sl2 h^e: image non-unimodular
  auto sl = completeness(alg("sl2.json"), biv("sl2_r_he.json"));
  if (sl.image_unimodular) {
    ok = false;
    detail += "sl2-image ";
  }
  report(2, "completeness triad", ok, detail);
}

// 3. theta and xi certify on all CYBE fixtures
void criterion3()
{
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::string, Bivector>> cases = {
      {"aff1.json", biv("aff1_r.json")},
      {"heis3.json", biv("heis3_r.json")},
      {"sl2.json", biv("sl2_r_he.json")},
      {"n4.json", r_from_omega(alg("n4.json"), omg("n4_omega.json"))},
      {"abelian2.json", r_from_omega(alg("abelian2.json"), omg("abelian2_omega.json"))}};
  for (auto& [name, r] : cases) {
    LieAlgebra L = alg(name);
    auto th = theta_iso(L, r);
    auto xi = xi_iso(L, r);
    if (!th.ok || !xi.ok) {
      ok = false;
      detail += name + (!th.ok ? "(theta: " + th.what + ") " : "(xi: " + xi.what + ") ");
    }
  }
  report(3, "Manin isomorphisms theta, xi", ok, detail);
}

// 4. double LSA + linked round trip on invertible-r fixtures
void criterion4()
{
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::string, Bivector>> cases = {
      {"aff1.json", biv("aff1_r.json")},
      {"n4.json", r_from_omega(alg("n4.json"), omg("n4_omega.json"))},
      {"abelian2.json", r_from_omega(alg("abelian2.json"), omg("abelian2_omega.json"))}};
  for (auto& [name, r] : cases) {
    LieAlgebra L = alg(name);
    std::size_t n = L.dim();
    LSA dbl = double_lsa(L, r);
    auto chk = lsa_check(dbl);
    auto D = build_double(L, r);
    bool here = chk.left_symmetric && compatible(dbl, D.pair.alg);

    // coadjoint instantiation: conditions (12)/(13) and product round trip
    SymplecticForm w{(*inverse(r.r)).transpose()};
    auto dl = dual_lsa(L, r);
    LinkedData data;
    data.A = symplectic_lsa(L, w);
    data.B = dl.lsa;
    for (std::size_t i = 0; i < n; ++i) data.theta1.push_back(L.coad(unit_vec(n, i)));
    for (std::size_t i = 0; i < n; ++i) data.theta2.push_back(dl.dual.coad(unit_vec(n, i)));
    auto lrep = linked_check(data);
    here = here && lrep.ok && lrep.cond12 && lrep.cond13;
    if (here) {
      LSA prod = linked_product(data);
      std::vector<Vec> U, V;
      for (std::size_t i = 0; i < n; ++i) U.push_back(unit_vec(2 * n, i));
      for (std::size_t i = 0; i < n; ++i) V.push_back(unit_vec(2 * n, n + i));
      auto split = split_ideals(dbl, U, V);
      LSA rebuilt = linked_product(split.data);
      for (std::size_t i = 0; i < 2 * n && here; ++i)
        for (std::size_t j = 0; j < 2 * n && here; ++j)
          for (std::size_t k = 0; k < 2 * n; ++k)
            if (prod.a(i, j, k) != dbl.a(i, j, k) ||
                rebuilt.a(i, j, k) != split.transformed.a(i, j, k)) {
              here = false;
              break;
            }
    }
    if (!here) {
      ok = false;
      detail += name + " ";
    }
  }
  report(4, "double LSA + linked split round trip", ok, detail);
}

// 5. complex structure on all symplectic fixtures
void criterion5()
{
  bool ok = true;
  std::string detail;
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_omega.json"},
                     std::array<const char*, 2>{"abelian2.json", "abelian2_omega.json"},
                     std::array<const char*, 2>{"n4.json", "n4_omega.json"}}) {
    auto rep = complex_structure(alg(names[0]), omg(names[1]));
    if (!rep.square_ok || !rep.nijenhuis_ok) {
      ok = false;
      detail += std::string(names[0]) + " ";
    }
  }
  report(5, "complex structure J^2 = -Id, N_J = 0", ok, detail);
}

// 6. polynomial Poisson tensor: shape, aff(1) value, Jacobi
void criterion6()
{
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(4242);
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_omega.json"},
                     std::array<const char*, 2>{"abelian2.json", "abelian2_omega.json"},
                     std::array<const char*, 2>{"n4.json", "n4_omega.json"}}) {
    LieAlgebra L = alg(names[0]);
    PolyPoisson P = poly_tensor(L, omg(names[1]));
    bool here = P.constant.is_zero();
    for (std::size_t i = 0; i < L.dim() && here; ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        if (P.entry(i, j).degree() > 2) {
          here = false;
          break;
        }
    here = here && schouten_poly(P).jacobi_ok;
    if (!here) {
      ok = false;
      detail += std::string(names[0]) + " ";
    }
  }
  // aff(1): {e1,e2} = -xi2 + xi2^2 against the bracket-formula oracle
  {
    LieAlgebra L = alg("aff1.json");
    SymplecticForm w = omg("aff1_omega.json");
    PolyPoisson P = poly_tensor(L, w);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int t = 0; t < 10; ++t) {
      Vec xi = {Scalar(num(rng)) / 5, Scalar(num(rng)) / 5};
      Scalar expect = -xi[1] + xi[1] * xi[1];
      Bivector r = r_from_omega(L, w);
      Vec a1 = coadjoint(L, unit_vec(2, 0), xi);
      Vec a2 = coadjoint(L, unit_vec(2, 1), xi);
      Scalar oracle = -dot(xi, bracket(L, unit_vec(2, 0), unit_vec(2, 1))) - r.form(a1, a2);
      if (P.eval(0, 1, xi) != expect || oracle != expect) {
        ok = false;
        detail += "aff1-value ";
        break;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(6, "polynomial Poisson tensor", ok && secs < 5.0, detail);
}

// 7. leaf rank at exponential sample points
void criterion7()
{
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(777);
  for (auto names : {std::array<const char*, 2>{"aff1.json", "aff1_omega.json"},
                     std::array<const char*, 2>{"abelian2.json", "abelian2_omega.json"},
                     std::array<const char*, 2>{"n4.json", "n4_omega.json"}}) {
    LieAlgebra L = alg(names[0]);
    SymplecticForm w = omg(names[1]);
    int bad = 0, indet = 0, total = 20;
    for (int t = 0; t < total; ++t) {
      auto rep = leaf_rank(L, w, random_vec(rng, L.dim()), 30);
      if (rep.indeterminate)
        ++indet;
      else if (!rep.equal)
        ++bad;
    }
    if (bad > 0 || indet * 20 >= total) { // indeterminate < 5%
      ok = false;
      std::ostringstream d;
      d << names[0] << "(bad=" << bad << ",indet=" << indet << ") ";
      detail += d.str();
    }
  }
  report(7, "leaf rank = coadjoint orbit rank", ok, detail);
}

// 8. cohomology identity series
void criterion8()
{
  auto a = cohomology_check(alg("aff1.json"), omg("aff1_omega.json"), unit_vec(2, 0), 30, 1e-12);
  bool ok = !a.exact && a.exact_ok && a.residual < 1e-12;
  std::mt19937_64 rng(88);
  for (int t = 0; t < 5; ++t) {
    auto n = cohomology_check(alg("n4.json"), omg("n4_omega.json"), random_vec(rng, 4), 30);
    ok = ok && n.exact && n.exact_ok && n.residual == 0.0;
  }
  std::ostringstream d;
  d << "aff1 residual " << a.residual;
  report(8, "cocycle series identity", ok, d.str());
}

// 9. CLI determinism on n4
void criterion9()
{
  auto t0 = std::chrono::steady_clock::now();
  std::string fixtures = CYBE_FIXTURES_DIR;
  std::string base = std::string(CYBE_CLI_PATH) + " all --algebra " + fixtures +
                     "/n4.json --omega-file " + fixtures + "/n4_omega.json --seed 5 --out ";
  std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
  int rc1 = std::system((base + out1).c_str());
  int rc2 = std::system((base + out2).c_str());
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp(out1), b = slurp(out2);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b && secs < 30.0;
  std::ostringstream d;
  d << "exit " << rc1 << "/" << rc2 << ", " << a.size() << " bytes, " << secs << " s";
  report(9, "CLI determinism", ok, d.str());
}

} // namespace

int main()
{
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << "\n";
  return failures;
}
