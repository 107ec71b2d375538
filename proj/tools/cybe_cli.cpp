// Command-line front end: loads algebra / bivector / symplectic JSON files,
// runs any pipeline stage and writes a machine-readable certification report.
// Exit codes: 0 = all certifications pass, 1 = a certification failed,
// 2 = input or IO error.

#include "cybe/double_manin.hpp"
#include "cybe/io.hpp"
#include "cybe/lsa.hpp"
#include "cybe/poisson.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace cybe;

namespace {

struct RunConfig {
  std::string algebra_path;
  std::string r_path;
  std::string omega_path;
  std::string out_path;
  std::string format = "json";
  double tolerance = 1e-9;
  unsigned K = 25;
  std::uint64_t seed = 1;
  unsigned samples = 20;
  std::string a_spec; // comma-separated rationals for exponential points
};

struct Inputs {
  LieAlgebra L;
  std::optional<Bivector> r;
  std::optional<SymplecticForm> omega;
  json input_meta;
};

json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json meta;
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string file_hash(const std::string& path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return content_hash(ss.str());
}

Inputs load_inputs(const RunConfig& cfg, bool need_r, bool need_omega)
{
  Inputs in;
  in.L = algebra_from_json(read_json_file(cfg.algebra_path));
  in.input_meta["algebra"] = {{"path", cfg.algebra_path}, {"hash", file_hash(cfg.algebra_path)}};
  if (!cfg.omega_path.empty()) {
    in.omega = omega_from_json(read_json_file(cfg.omega_path));
    if (in.omega->dim() != in.L.dim()) throw std::invalid_argument("omega dimension mismatch");
    in.input_meta["omega"] = {{"path", cfg.omega_path}, {"hash", file_hash(cfg.omega_path)}};
  }
  if (!cfg.r_path.empty()) {
    in.r = bivector_from_json(read_json_file(cfg.r_path));
    if (in.r->dim() != in.L.dim()) throw std::invalid_argument("bivector dimension mismatch");
    in.input_meta["r"] = {{"path", cfg.r_path}, {"hash", file_hash(cfg.r_path)}};
  }
  // admission gate
  auto jac = jacobi_check(in.L);
  if (!jac.ok) {
    std::ostringstream os;
    os << "algebra fails the Jacobi identity at triple (" << jac.worst_triple[0] + 1 << ","
       << jac.worst_triple[1] + 1 << "," << jac.worst_triple[2] + 1 << ")";
    throw std::invalid_argument(os.str());
  }
  if (need_r && !in.r && in.omega) in.r = r_from_omega(in.L, *in.omega);
  if (need_r && !in.r) throw std::invalid_argument("this subcommand needs --r-file or --omega-file");
  if (need_omega && !in.omega)
    throw std::invalid_argument("this subcommand needs --omega-file");
  return in;
}

json schouten_values_json(const SchoutenReport& rep)
{
  json vals = json::array();
  for (const auto& e : rep.values)
    if (e.value != 0)
      vals.push_back({{"triple", {e.triple[0] + 1, e.triple[1] + 1, e.triple[2] + 1}},
                      {"value", rational_to_string(e.value)}});
  return vals;
}

Vec parse_vector(const std::string& spec, std::size_t dim)
{
  Vec v(dim);
  std::stringstream ss(spec);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= dim) throw std::invalid_argument("vector has too many entries");
    v[i++] = parse_rational(tok);
  }
  if (i != dim) throw std::invalid_argument("vector has too few entries");
  return v;
}

Vec random_small_vector(std::mt19937_64& rng, std::size_t dim)
{
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(dim);
  for (auto& x : v) x = d(rng);
  return v;
}

// ---- per-stage runners; each returns ok and fills a json block ----

bool run_cybe(const Inputs& in, json& out)
{
  auto rep = schouten_rr(in.L, *in.r);
  out["cybe_ok"] = rep.cybe_ok;
  out["nonzero_values"] = schouten_values_json(rep);
  return rep.cybe_ok;
}

bool run_dual(const Inputs& in, json& out)
{
  auto rep = schouten_rr(in.L, *in.r);
  LieAlgebra dual = dual_bracket(in.L, *in.r);
  auto jac = jacobi_check(dual);
  out["cybe_ok"] = rep.cybe_ok;
  out["dual_algebra"] = algebra_to_json(dual);
  out["dual_jacobi_ok"] = jac.ok;
  return !rep.cybe_ok || jac.ok; // jacobi may legitimately fail off the CYBE locus
}

bool run_lsa(const Inputs& in, json& out)
{
  bool ok = true;
  if (in.omega) {
    LSA sym = symplectic_lsa(in.L, *in.omega);
    auto chk = lsa_check(sym);
    bool comp = compatible(sym, in.L);
    auto tr = transport_check(in.L, *in.omega);
    out["symplectic_lsa"] = lsa_to_json(sym);
    out["left_symmetric"] = chk.left_symmetric;
    out["compatible"] = comp;
    out["transport_ok"] = tr.ok;
    if (!tr.ok) out["transport_failed_identity"] = tr.failed_identity;
    ok = chk.left_symmetric && comp && tr.ok;
  }
  if (in.r) {
    auto dl = dual_lsa(in.L, *in.r);
    auto chk = lsa_check(dl.lsa);
    bool comp = compatible(dl.lsa, dl.dual);
    out["dual_lsa"] = lsa_to_json(dl.lsa);
    out["dual_lsa_cybe_ok"] = dl.cybe_ok;
    out["dual_lsa_left_symmetric"] = chk.left_symmetric;
    out["dual_lsa_compatible"] = comp;
    out["eta_homomorphism"] = dl.eta_homomorphism;
    if (dl.cybe_ok) ok = ok && chk.left_symmetric && comp && dl.eta_homomorphism;
  }
  return ok;
}

bool run_completeness(const Inputs& in, json& out)
{
  auto rep = completeness(in.L, *in.r);
  json traces = json::array();
  for (const auto& t : rep.traces) traces.push_back(rational_to_string(t));
  out["traces"] = traces;
  out["complete"] = rep.complete;
  out["image_unimodular"] = rep.image_unimodular;
  out["trace_match"] = rep.trace_match;
  out["triad_consistent"] = rep.triad_consistent;
  out["ker_abelian_ideal"] = rep.ker_abelian_ideal;
  out["quotient_solvable"] = rep.quotient_solvable;
  out["cybe_ok"] = rep.cybe_ok;
  return rep.triad_consistent && rep.ker_abelian_ideal;
}

bool run_double(const Inputs& in, json& out)
{
  auto D = build_double(in.L, *in.r);
  auto jac = jacobi_check(D.pair.alg);
  auto inv = ad_invariance_check(D.pair);
  out["cybe_ok"] = D.cybe_ok;
  out["jacobi_ok"] = jac.ok;
  out["pairing_ad_invariant"] = inv.ok;
  out["double_algebra"] = algebra_to_json(D.pair.alg);
  // CYBE is sufficient for jacobi of the double, not necessary
  return !D.cybe_ok || (jac.ok && inv.ok);
}

bool run_xi(const Inputs& in, json& out)
{
  auto xi = xi_iso(in.L, *in.r);
  auto th = theta_iso(in.L, *in.r);
  out["xi_ok"] = xi.ok;
  out["theta_ok"] = th.ok;
  if (!xi.ok) out["xi_failure"] = xi.what;
  if (!th.ok) out["theta_failure"] = th.what;
  return xi.ok && th.ok;
}

bool run_linked(const Inputs& in, json& out)
{
  // coadjoint instantiation on the double of (L, r)
  auto rinv = inverse(in.r->r);
  if (!rinv) throw std::invalid_argument("linked: r must be invertible");
  SymplecticForm w{rinv->transpose()};
  LSA A = symplectic_lsa(in.L, w);
  auto dl = dual_lsa(in.L, *in.r);
  std::size_t n = in.L.dim();
  LinkedData data;
  data.A = A;
  data.B = dl.lsa;
  for (std::size_t i = 0; i < n; ++i) data.theta1.push_back(in.L.coad(unit_vec(n, i)));
  for (std::size_t i = 0; i < n; ++i)
    data.theta2.push_back(dl.dual.coad(unit_vec(n, i)));
  auto chk = linked_check(data);
  out["linked"] = chk.ok;
  out["cond12"] = chk.cond12;
  out["cond13"] = chk.cond13;
  bool round_trip = false;
  if (chk.ok) {
    LSA prod = linked_product(data);
    LSA dbl = double_lsa(in.L, *in.r);
    round_trip = true;
    for (std::size_t i = 0; i < 2 * n && round_trip; ++i)
      for (std::size_t j = 0; j < 2 * n && round_trip; ++j)
        for (std::size_t k = 0; k < 2 * n; ++k)
          if (prod.a(i, j, k) != dbl.a(i, j, k)) {
            round_trip = false;
            break;
          }
  }
  out["product_equals_double_lsa"] = round_trip;
  return chk.ok && round_trip;
}

bool run_complex(const Inputs& in, json& out)
{
  auto rep = complex_structure(in.L, *in.omega);
  out["square_ok"] = rep.square_ok;
  out["nijenhuis_ok"] = rep.nijenhuis_ok;
  return rep.square_ok && rep.nijenhuis_ok;
}

bool run_cotangent_lsa(const Inputs& in, json& out)
{
  LSA P = cotangent_lsa(in.L, *in.omega);
  auto chk = lsa_check(P);
  out["cotangent_lsa"] = lsa_to_json(P);
  out["left_symmetric"] = chk.left_symmetric;
  // projection onto G is an LSA morphism onto the symplectic LSA
  LSA sym = symplectic_lsa(in.L, *in.omega);
  std::size_t n = in.L.dim();
  bool proj = true;
  for (std::size_t i = 0; i < 2 * n && proj; ++i)
    for (std::size_t j = 0; j < 2 * n && proj; ++j) {
      Vec u = unit_vec(2 * n, i), v = unit_vec(2 * n, j);
      Vec p = P.product(u, v);
      Vec xu(n), xv(n), xp(n);
      for (std::size_t k = 0; k < n; ++k) {
        xu[k] = u[k];
        xv[k] = v[k];
        xp[k] = p[k];
      }
      if (sym.product(xu, xv) != xp) proj = false;
    }
  out["projection_morphism"] = proj;
  return chk.left_symmetric && proj;
}

bool run_poisson(const Inputs& in, const RunConfig& cfg, json& out)
{
  PolyPoisson P = poly_tensor(in.L, *in.omega);
  out["tensor"] = poly_poisson_to_json(P);
  out["constant_zero"] = P.constant.is_zero();
  // lambda_sharp consistency at seeded random rational points
  std::mt19937_64 rng(cfg.seed);
  std::size_t n = in.L.dim();
  bool consistent = true;
  for (unsigned s = 0; s < 10 && consistent; ++s) {
    Vec xi = random_small_vector(rng, n);
    Mat lam = lambda_sharp(in.L, *in.omega, xi);
    for (std::size_t i = 0; i < n && consistent; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dot(lam * unit_vec(n, i), unit_vec(n, j)) != P.eval(i, j, xi)) {
          consistent = false;
          break;
        }
  }
  out["lambda_sharp_consistent"] = consistent;
  return P.constant.is_zero() && consistent;
}

bool run_schouten(const Inputs& in, json& out)
{
  PolyPoisson P = poly_tensor(in.L, *in.omega);
  auto rep = schouten_poly(P);
  out["jacobi_ok"] = rep.jacobi_ok;
  out["trivector_degree"] = rep.max_degree;
  return rep.jacobi_ok;
}

bool run_leaf_rank(const Inputs& in, const RunConfig& cfg, json& out)
{
  std::mt19937_64 rng(cfg.seed);
  std::size_t n = in.L.dim();
  unsigned failures = 0, indeterminate = 0;
  json samples = json::array();
  for (unsigned s = 0; s < cfg.samples; ++s) {
    Vec a = cfg.a_spec.empty() || s > 0 ? random_small_vector(rng, n)
                                        : parse_vector(cfg.a_spec, n);
    auto rep = leaf_rank(in.L, *in.omega, a, cfg.K);
    samples.push_back({{"a", vec_to_json(a)},
                       {"rank_lambda", rep.rank_lambda},
                       {"rank_coadjoint", rep.rank_coadjoint},
                       {"equal", rep.equal},
                       {"exact", rep.exact},
                       {"indeterminate", rep.indeterminate}});
    if (rep.indeterminate)
      ++indeterminate;
    else if (!rep.equal)
      ++failures;
  }
  out["samples"] = samples;
  out["failures"] = failures;
  out["indeterminate"] = indeterminate;
  return failures == 0;
}

bool run_cocycle(const Inputs& in, const RunConfig& cfg, json& out)
{
  Mat q = q_matrix(*in.omega);
  bool coc = cocycle_check(in.L, q);
  out["cocycle_ok"] = coc;
  std::size_t n = in.L.dim();
  Vec a = cfg.a_spec.empty() ? unit_vec(n, 0) : parse_vector(cfg.a_spec, n);
  auto rep = cohomology_check(in.L, *in.omega, a, cfg.K, cfg.tolerance);
  out["cohomology"] = {{"exact", rep.exact},
                       {"ok", rep.exact_ok},
                       {"residual", rep.residual},
                       {"tail_bound", rep.tail_bound},
                       {"K", cfg.K}};
  return coc && rep.exact_ok;
}

void emit(const json& report, const RunConfig& cfg, bool ok)
{
  std::string text;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "cybe " << kVersion << " report\n";
    for (const auto& [k, v] : report.at("results").items())
      os << "  " << k << ": " << v.dump() << "\n";
    os << (ok ? "PASS" : "FAIL") << "\n";
    text = os.str();
  } else {
    text = report.dump(2) + "\n";
  }
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream outf(cfg.out_path);
    if (!outf) throw std::invalid_argument("cannot write " + cfg.out_path);
    outf << text;
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Yang-Baxter / left-symmetric structure verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--algebra", cfg.algebra_path, "Lie algebra JSON file")->required();
  app.add_option("--r-file", cfg.r_path, "skew bivector JSON file");
  app.add_option("--omega-file", cfg.omega_path, "symplectic form JSON file");
  app.add_option("--out", cfg.out_path, "report output path (default stdout)");
  app.add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", cfg.tolerance, "float residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--K", cfg.K, "series truncation order")->check(CLI::Range(1u, 1000u));
  app.add_option("--seed", cfg.seed, "RNG seed for sample points");
  app.add_option("--samples", cfg.samples, "number of leaf-rank sample points");
  app.add_option("--point", cfg.a_spec, "Lie algebra element, comma-separated rationals");

  const std::vector<std::string> subs = {"jacobi", "cybe", "dual", "lsa", "completeness",
                                         "double", "xi", "linked", "complex", "cotangent-lsa",
                                         "poisson", "schouten", "leaf-rank", "cocycle", "all"};
  for (const auto& s : subs) app.add_subcommand(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();

  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["version"] = kVersion;
  report["config"] = {{"subcommand", cmd}, {"tolerance", cfg.tolerance}, {"K", cfg.K},
                      {"seed", cfg.seed}, {"samples", cfg.samples}};

  bool needs_r = cmd == "cybe" || cmd == "dual" || cmd == "completeness" || cmd == "double" ||
                 cmd == "xi" || cmd == "linked" || cmd == "all";
  bool needs_omega = cmd == "complex" || cmd == "cotangent-lsa" || cmd == "poisson" ||
                     cmd == "schouten" || cmd == "leaf-rank" || cmd == "cocycle";

  try {
    // "all" accepts either input; prefers omega when present
    Inputs in = load_inputs(cfg, needs_r, needs_omega);
    report["inputs"] = in.input_meta;
    json& results = report["results"] = json::object();
    bool ok = true;

    if (cmd == "jacobi") {
      results["jacobi_ok"] = true; // load_inputs already gates on it
    } else if (cmd == "cybe") {
      ok = run_cybe(in, results);
    } else if (cmd == "dual") {
      ok = run_dual(in, results);
    } else if (cmd == "lsa") {
      if (!in.r && !in.omega) throw std::invalid_argument("lsa needs --r-file or --omega-file");
      if (!in.r && in.omega) in.r = r_from_omega(in.L, *in.omega);
      ok = run_lsa(in, results);
    } else if (cmd == "completeness") {
      ok = run_completeness(in, results);
    } else if (cmd == "double") {
      ok = run_double(in, results);
    } else if (cmd == "xi") {
      ok = run_xi(in, results);
    } else if (cmd == "linked") {
      ok = run_linked(in, results);
    } else if (cmd == "complex") {
      ok = run_complex(in, results);
    } else if (cmd == "cotangent-lsa") {
      ok = run_cotangent_lsa(in, results);
    } else if (cmd == "poisson") {
      ok = run_poisson(in, cfg, results);
    } else if (cmd == "schouten") {
      ok = run_schouten(in, results);
    } else if (cmd == "leaf-rank") {
      ok = run_leaf_rank(in, cfg, results);
    } else if (cmd == "cocycle") {
      ok = run_cocycle(in, cfg, results);
    } else if (cmd == "all") {
      ok = run_cybe(in, results["cybe"]);
      ok = run_dual(in, results["dual"]) && ok;
      ok = run_lsa(in, results["lsa"]) && ok;
      ok = run_completeness(in, results["completeness"]) && ok;
      ok = run_double(in, results["double"]) && ok;
      ok = run_xi(in, results["xi"]) && ok;
      if (inverse(in.r->r)) {
        ok = run_linked(in, results["linked"]) && ok;
        if (!in.omega) in.omega = SymplecticForm{(*inverse(in.r->r)).transpose()};
        ok = run_complex(in, results["complex"]) && ok;
        ok = run_cotangent_lsa(in, results["cotangent_lsa"]) && ok;
        ok = run_poisson(in, cfg, results["poisson"]) && ok;
        ok = run_schouten(in, results["schouten"]) && ok;
        ok = run_leaf_rank(in, cfg, results["leaf_rank"]) && ok;
        ok = run_cocycle(in, cfg, results["cocycle"]) && ok;
      }
    }

    report["ok"] = ok;
    emit(report, cfg, ok);
    return ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
