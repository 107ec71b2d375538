#ifndef CYBE_LIE_ALGEBRA_HPP
#define CYBE_LIE_ALGEBRA_HPP

#include "cybe/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace cybe {

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Single source of truth for brackets.
class LieAlgebra {
public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis = {})
      : dim_(dim), c_(dim * dim * dim), basis_(std::move(basis))
  {
    if (basis_.empty())
      for (std::size_t i = 0; i < dim_; ++i) basis_.push_back("e" + std::to_string(i + 1));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_; }

  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const
  {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [e_i,e_j] coefficient and its antisymmetric counterpart.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v)
  {
    c(i, j, k) = v;
    c(j, i, k) = -v;
  }

  bool antisymmetric() const;

  /// Matrix of ad_x : y -> [x,y].
  Mat ad(const Vec& x) const;
  Mat ad_basis(std::size_t i) const;

  /// Matrix of ad*_x = -(ad_x)^T, convention <ad*_x a, y> = -<a,[x,y]>.
  Mat coad(const Vec& x) const { return -ad(x).transpose(); }

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
  std::vector<std::string> basis_;
};

struct JacobiReport {
  bool ok = true;
  std::array<std::size_t, 3> worst_triple{0, 0, 0}; // valid only when !ok
  Vec worst_value;                                  // cyclic sum at the worst triple
};

struct AdInvarianceReport {
  bool ok = true;
  std::array<std::size_t, 3> witness{0, 0, 0};
};

/// Lie algebra with a symmetric bilinear form; Manin when the form is
/// ad-invariant and hyperbolic.
struct PairedAlgebra {
  LieAlgebra alg;
  Mat form;
};

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);

/// ad*_x alpha as a covector.
Vec coadjoint(const LieAlgebra& L, const Vec& x, const Vec& alpha);

JacobiReport jacobi_check(const LieAlgebra& L);

/// <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
AdInvarianceReport ad_invariance_check(const PairedAlgebra& P);

/// Canonical (rref row) basis of the center.
std::vector<Vec> center(const LieAlgebra& L);

bool unimodular(const LieAlgebra& L);
bool solvable(const LieAlgebra& L);
std::vector<std::vector<Vec>> derived_series(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const std::vector<Vec>& subspace);

/// Quotient by an ideal; throws std::invalid_argument when the subspace
/// is not an ideal.
LieAlgebra quotient(const LieAlgebra& L, const std::vector<Vec>& ideal);

/// t*G = G* x| G with bracket [(a,x),(b,y)] = (ad*_x b - ad*_y a, [x,y])
/// and pairing <(a,x),(b,y)> = a(y) + b(x). Coordinates 0..n-1 are the
/// G* factor, n..2n-1 the G factor.
PairedAlgebra cotangent_algebra(const LieAlgebra& L);

} // namespace cybe

#endif
