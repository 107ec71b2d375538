#include "cybe/poisson.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <stdexcept>

// Float-path Eigen arithmetic lives outside namespace cybe: inside it,
// overload resolution on * drags Eigen expressions through the exact
// Scalar operators and boost's converting constructor, which does not
// SFINAE cleanly.
namespace fnum {

Eigen::VectorXd series_sum(const Eigen::MatrixXd& A, const Eigen::VectorXd& t0, unsigned K)
{
  Eigen::VectorXd t = t0;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(t.size());
  double fact = 1.0;
  for (unsigned k = 1; k <= K; ++k) {
    fact *= k;
    sum += t / fact;
    t = A * t;
  }
  return sum;
}

double cohomology_residual(const Eigen::MatrixXd& ad_a, const Eigen::MatrixXd& Qd,
                           const std::vector<Eigen::MatrixXd>& Ci, const Eigen::VectorXd& qv)
{
  Eigen::MatrixXd Ad = ad_a.exp();
  Eigen::MatrixXd q_sigma = Ad.transpose() * Qd * Ad;
  std::size_t n = Ci.size();
  Eigen::MatrixXd Dq(n, n); // delta(qv) with float alpha
  for (std::size_t i = 0; i < n; ++i) Dq.col(i) = Ci[i] * qv;
  Eigen::MatrixXd resid = Qd - q_sigma + Dq;
  return resid.cwiseAbs().maxCoeff();
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double sv_threshold, bool& indet)
{
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  auto sv = svd.singularValues();
  double thr = sv_threshold * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::size_t rk = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++rk;
    if (sv(i) > thr * 0.1 && sv(i) < thr * 10.0) indet = true;
  }
  return rk;
}

void leaf_ranks(const std::vector<Eigen::MatrixXd>& Ci, const Eigen::VectorXd& xi,
                const Eigen::MatrixXd& Rd, const Eigen::MatrixXd& Qd, double sv_threshold,
                std::size_t& rank_lambda, std::size_t& rank_coadjoint, bool& indet)
{
  std::size_t n = Ci.size();
  Eigen::MatrixXd D(n, n);
  for (std::size_t i = 0; i < n; ++i) D.col(i) = Ci[i] * xi;
  Eigen::MatrixXd lam = D * Rd * (Qd + D);
  indet = false;
  rank_lambda = numeric_rank(lam, sv_threshold, indet);
  rank_coadjoint = numeric_rank(D, sv_threshold, indet);
}

} // namespace fnum

namespace cybe {

namespace {

Eigen::MatrixXd to_double(const Mat& m)
{
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
  return d;
}

Eigen::VectorXd to_double(const Vec& v)
{
  Eigen::VectorXd d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d(i) = v[i].convert_to<double>();
  return d;
}

/// Smallest m <= dim with A^m = 0, or 0 when A is not nilpotent.
unsigned nilpotency_order(const Mat& a)
{
  Mat p = Mat::identity(a.rows());
  for (unsigned m = 1; m <= a.rows(); ++m) {
    p = p * a;
    if (p.is_zero()) return m;
  }
  return 0;
}

/// Exact exp of a nilpotent matrix.
Mat exp_nilpotent(const Mat& a)
{
  std::size_t n = a.rows();
  Mat sum = Mat::identity(n);
  Mat term = Mat::identity(n);
  Scalar fact = 1;
  for (unsigned k = 1; k <= n; ++k) {
    term = term * a;
    if (term.is_zero()) break;
    fact *= k;
    sum = sum + (Scalar(1) / fact) * term;
  }
  return sum;
}

double frobenius(const Eigen::MatrixXd& m) { return m.norm(); }

} // namespace

Poly Poly::constant(std::size_t nvars, const Scalar& c)
{
  Poly p(nvars);
  if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
  return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i)
{
  Poly p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

std::size_t Poly::degree() const
{
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void Poly::add_term(const std::vector<unsigned>& expo, const Scalar& coeff)
{
  if (coeff == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_[expo] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::derivative(std::size_t i) const
{
  Poly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    auto e2 = e;
    e2[i] -= 1;
    d.add_term(e2, c * Scalar(e[i]));
  }
  return d;
}

Scalar Poly::eval(const Vec& xi) const
{
  Scalar s = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned p = 0; p < e[i]; ++p) t *= xi[i];
    s += t;
  }
  return s;
}

Poly operator+(const Poly& a, const Poly& b)
{
  Poly c = a;
  for (const auto& [e, v] : b.terms_) c.add_term(e, v);
  return c;
}

Poly operator-(const Poly& a, const Poly& b)
{
  Poly c = a;
  for (const auto& [e, v] : b.terms_) c.add_term(e, -v);
  return c;
}

Poly operator*(const Poly& a, const Poly& b)
{
  Poly c(a.nvars_);
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) {
      std::vector<unsigned> e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      c.add_term(e, va * vb);
    }
  return c;
}

Poly PolyPoisson::entry(std::size_t i, std::size_t j) const
{
  Poly p = Poly::constant(dim, constant(i, j));
  for (std::size_t k = 0; k < dim; ++k)
    p = p + Poly::constant(dim, d(i, j, k)) * Poly::var(dim, k);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k; l < dim; ++l)
      p = p + Poly::constant(dim, e(i, j, k, l)) * Poly::var(dim, k) * Poly::var(dim, l);
  return p;
}

Scalar PolyPoisson::eval(std::size_t i, std::size_t j, const Vec& xi) const
{
  Scalar s = constant(i, j);
  for (std::size_t k = 0; k < dim; ++k) s += d(i, j, k) * xi[k];
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k; l < dim; ++l) s += e(i, j, k, l) * xi[k] * xi[l];
  return s;
}

bool cocycle_check(const LieAlgebra& L, const Mat& q)
{
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec x = unit_vec(n, i), y = unit_vec(n, j);
      Vec lhs = q * bracket(L, x, y);
      Vec rhs = coadjoint(L, x, q * y) - coadjoint(L, y, q * x);
      if (lhs != rhs) return false;
    }
  return true;
}

ExpPoint q_exp(const LieAlgebra& L, const Mat& q, const Vec& a, unsigned K)
{
  if (K < 1) throw std::invalid_argument("q_exp: K must be >= 1");
  ExpPoint pt;
  pt.a = a;
  Mat coad_a = L.coad(a);
  Vec qa = q * a;
  unsigned nil = nilpotency_order(coad_a);
  if (nil > 0) {
    // finite sum, exact
    pt.exact = true;
    pt.order = nil;
    Vec term = qa;
    Vec sum(L.dim());
    Scalar fact = 1;
    for (unsigned k = 1; k <= nil; ++k) {
      fact *= k;
      sum = sum + (Scalar(1) / fact) * term;
      term = coad_a * term;
    }
    pt.value_exact = sum;
    pt.tail_bound = 0.0;
    return pt;
  }
  pt.exact = false;
  pt.order = K;
  Eigen::MatrixXd A = to_double(coad_a);
  Eigen::VectorXd sum = fnum::series_sum(A, to_double(qa), K);
  pt.value_float.assign(sum.data(), sum.data() + sum.size());
  double lg = 0.0; // log of |A|^K / (K+1)!
  double na = frobenius(A);
  for (unsigned k = 1; k <= K + 1; ++k) lg -= std::log(double(k));
  lg += K * std::log(std::max(na, 1e-300));
  pt.tail_bound = std::exp(lg) * to_double(q * a).norm();
  return pt;
}

Mat delta(const LieAlgebra& L, const Vec& alpha)
{
  std::size_t n = L.dim();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec col = coadjoint(L, unit_vec(n, i), alpha);
    for (std::size_t j = 0; j < n; ++j) m(j, i) = col[j];
  }
  return m;
}

PolyPoisson poly_tensor(const LieAlgebra& L, const SymplecticForm& w)
{
  std::size_t n = L.dim();
  Bivector r = r_from_omega(L, w); // validates omega
  PolyPoisson P;
  P.dim = n;
  P.constant = Mat(n, n);
  P.linear.assign(n * n * n, Scalar(0));
  P.quadratic.assign(n * n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) P.d(i, j, k) = -L.c(i, j, k);
      // quadratic: -(ad*_j xi)^T R (ad*_i xi) = -xi^T C_j^T R C_i xi
      Mat M = L.coad(unit_vec(n, j)).transpose() * r.r * L.coad(unit_vec(n, i));
      for (std::size_t k = 0; k < n; ++k) {
        P.e(i, j, k, k) = -M(k, k);
        for (std::size_t l = k + 1; l < n; ++l) {
          Scalar v = -(M(k, l) + M(l, k));
          P.e(i, j, k, l) = v;
          P.e(i, j, l, k) = v;
        }
      }
    }
  return P;
}

Mat lambda_sharp(const LieAlgebra& L, const SymplecticForm& w, const Vec& xi)
{
  Bivector r = r_from_omega(L, w);
  Mat D = delta(L, xi);
  return D * (r.r * (q_matrix(w) + D));
}

SchoutenPolyReport schouten_poly(const PolyPoisson& P)
{
  SchoutenPolyReport rep;
  std::size_t n = P.dim;
  std::vector<Poly> entries(n * n, Poly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = P.entry(i, j);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly t(n);
        for (std::size_t l = 0; l < n; ++l) {
          t = t + entries[i * n + l] * entries[j * n + k].derivative(l);
          t = t + entries[j * n + l] * entries[k * n + i].derivative(l);
          t = t + entries[k * n + l] * entries[i * n + j].derivative(l);
        }
        rep.max_degree = std::max(rep.max_degree, t.degree());
        if (!t.is_zero()) {
          rep.jacobi_ok = false;
          rep.witness = {i, j, k};
        }
      }
  return rep;
}

CohomologyReport cohomology_check(const LieAlgebra& L, const SymplecticForm& w, const Vec& a,
                                  unsigned K, double tolerance)
{
  CohomologyReport rep;
  Mat Q = q_matrix(w);
  Mat ad_a = L.ad(a);
  unsigned nil = nilpotency_order(ad_a);
  Vec neg_a = -a;
  if (nil > 0) {
    // Ad_sigma = exp(ad_a) exact; Ad*_{sigma^{-1}} = exp(ad_a)^T
    Mat Ad = exp_nilpotent(ad_a);
    Mat q_sigma = Ad.transpose() * Q * Ad;
    ExpPoint qinv = q_exp(L, Q, neg_a, K);
    Mat resid = Q - q_sigma + delta(L, qinv.value_exact);
    rep.exact = true;
    rep.exact_ok = resid.is_zero();
    rep.residual = 0.0;
    if (!rep.exact_ok) {
      double m = 0;
      for (std::size_t i = 0; i < resid.rows(); ++i)
        for (std::size_t j = 0; j < resid.cols(); ++j)
          m = std::max(m, std::abs(resid(i, j).convert_to<double>()));
      rep.residual = m;
    }
    return rep;
  }
  ExpPoint qinv = q_exp(L, Q, neg_a, K);
  Eigen::VectorXd qv = Eigen::Map<const Eigen::VectorXd>(qinv.value_float.data(),
                                                         qinv.value_float.size());
  std::size_t n = L.dim();
  std::vector<Eigen::MatrixXd> Ci;
  for (std::size_t i = 0; i < n; ++i) Ci.push_back(to_double(L.coad(unit_vec(n, i))));
  rep.exact = false;
  rep.residual = fnum::cohomology_residual(to_double(ad_a), to_double(Q), Ci, qv);
  rep.tail_bound = qinv.tail_bound;
  rep.exact_ok = rep.residual < tolerance;
  return rep;
}

LeafRankReport leaf_rank(const LieAlgebra& L, const SymplecticForm& w, const Vec& a, unsigned K,
                         double sv_threshold)
{
  LeafRankReport rep;
  Mat Q = q_matrix(w);
  Bivector r = r_from_omega(L, w);
  ExpPoint pt = q_exp(L, Q, a, K);
  std::size_t n = L.dim();
  if (pt.exact) {
    rep.exact = true;
    Mat D = delta(L, pt.value_exact);
    Mat lam = D * (r.r * (Q + D));
    rep.rank_lambda = rank(lam);
    rep.rank_coadjoint = rank(D);
    rep.equal = rep.rank_lambda == rep.rank_coadjoint;
    return rep;
  }
  Eigen::VectorXd xi = Eigen::Map<const Eigen::VectorXd>(pt.value_float.data(),
                                                         pt.value_float.size());
  std::vector<Eigen::MatrixXd> Ci;
  for (std::size_t i = 0; i < n; ++i) Ci.push_back(to_double(L.coad(unit_vec(n, i))));
  bool indet = false;
  fnum::leaf_ranks(Ci, xi, to_double(r.r), to_double(q_matrix(w)), sv_threshold,
                   rep.rank_lambda, rep.rank_coadjoint, indet);
  rep.indeterminate = indet;
  rep.equal = !indet && rep.rank_lambda == rep.rank_coadjoint;
  return rep;
}

} // namespace cybe
