#ifndef CYBE_POISSON_HPP
#define CYBE_POISSON_HPP

#include "cybe/lsa.hpp"

#include <map>
#include <optional>

namespace cybe {

/// Sparse multivariate polynomial over exact rationals, exponent-vector keyed.
/// Only used for the Schouten self-bracket of degree <= 2 tensors.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly var(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  void add_term(const std::vector<unsigned>& expo, const Scalar& coeff);
  const std::map<std::vector<unsigned>, Scalar>& terms() const { return terms_; }

  Poly derivative(std::size_t i) const;
  Scalar eval(const Vec& xi) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

private:
  std::size_t nvars_ = 0;
  std::map<std::vector<unsigned>, Scalar> terms_; // exponent vector -> coeff
};

/// Degree <= 2 polynomial bivector field on G*:
/// Lambda^{ij}(xi) = c(i,j) + sum_k d(i,j,k) xi_k + sum_{k<=l} e(i,j,k,l) xi_k xi_l.
struct PolyPoisson {
  std::size_t dim = 0;
  Mat constant;                 // c(i,j)
  std::vector<Scalar> linear;   // d[i][j][k], antisymmetric in (i,j)
  std::vector<Scalar> quadratic; // e[i][j][k][l], symmetric in (k,l)

  Scalar& d(std::size_t i, std::size_t j, std::size_t k)
  {
    return linear[(i * dim + j) * dim + k];
  }
  const Scalar& d(std::size_t i, std::size_t j, std::size_t k) const
  {
    return linear[(i * dim + j) * dim + k];
  }
  Scalar& e(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
  {
    return quadratic[((i * dim + j) * dim + k) * dim + l];
  }
  const Scalar& e(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
  {
    return quadratic[((i * dim + j) * dim + k) * dim + l];
  }

  /// Lambda^{ij} as a polynomial in xi.
  Poly entry(std::size_t i, std::size_t j) const;
  /// {e_i, e_j}(xi), exact.
  Scalar eval(std::size_t i, std::size_t j, const Vec& xi) const;
};

/// Value of the exponential-series cocycle Q(exp a).
struct ExpPoint {
  Vec a;                  // Lie algebra element
  unsigned order = 0;     // terms actually summed
  bool exact = false;     // ad*_a nilpotent, series terminated
  Vec value_exact;        // set when exact
  std::vector<double> value_float; // set when !exact
  double tail_bound = 0.0;
};

/// q([x,y]) = ad*_x q(y) - ad*_y q(x) on all basis pairs, where q is given
/// by its matrix (covector components of q(e_i) in column i).
bool cocycle_check(const LieAlgebra& L, const Mat& q);

/// Q(exp a) = sum_{k>=1} (ad*_a)^{k-1}/k! q(a), exact when ad*_a is
/// nilpotent, else a float partial sum with tail bound
/// |ad*_a|^K / (K+1)! * |q(a)|.
ExpPoint q_exp(const LieAlgebra& L, const Mat& q, const Vec& a, unsigned K);

/// Matrix of delta(alpha) : x -> ad*_x alpha.
Mat delta(const LieAlgebra& L, const Vec& alpha);

/// Lambda from {x,y}(xi) = -<xi,[x,y]> - r(ad*_x xi, ad*_y xi); zero
/// constant part, linear part minus the Lie-Poisson tensor.
PolyPoisson poly_tensor(const LieAlgebra& L, const SymplecticForm& w);

/// Matrix of Lambda#(xi) = delta(xi) . r . (q + delta(xi)) : G -> G*.
Mat lambda_sharp(const LieAlgebra& L, const SymplecticForm& w, const Vec& xi);

struct SchoutenPolyReport {
  bool jacobi_ok = true;
  std::size_t max_degree = 0; // of the trivector coefficients
  std::array<std::size_t, 3> witness{0, 0, 0};
};

/// [Lambda,Lambda]^{ijk} = sum_l (Lambda^{li} d_l Lambda^{jk} + cyclic),
/// assembled exactly; jacobi_ok iff identically zero.
SchoutenPolyReport schouten_poly(const PolyPoisson& P);

struct CohomologyReport {
  bool exact = false;    // nilpotent path, residual identically zero
  bool exact_ok = false;
  double residual = 0.0; // max-norm of q - q^sigma + delta(Q(sigma^{-1}))
  double tail_bound = 0.0;
};

/// Identity q - q^sigma = -delta(Q(sigma^{-1})) at sigma = exp(a), with
/// Ad_sigma = exp(ad_a) and q^sigma = Ad*_{sigma^{-1}} . q . Ad_sigma.
CohomologyReport cohomology_check(const LieAlgebra& L, const SymplecticForm& w, const Vec& a,
                                  unsigned K, double tolerance = 1e-9);

struct LeafRankReport {
  std::size_t rank_lambda = 0;
  std::size_t rank_coadjoint = 0;
  bool equal = false;
  bool exact = false;         // decided in exact arithmetic
  bool indeterminate = false; // float singular values too close to threshold
};

/// Compares rank(Lambda#(xi)) with rank(x -> ad*_x xi) at xi = Q(exp a).
LeafRankReport leaf_rank(const LieAlgebra& L, const SymplecticForm& w, const Vec& a, unsigned K,
                         double sv_threshold = 1e-8);

} // namespace cybe

#endif
