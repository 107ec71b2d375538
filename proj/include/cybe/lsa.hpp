#ifndef CYBE_LSA_HPP
#define CYBE_LSA_HPP

#include "cybe/rmatrix.hpp"

#include <array>
#include <vector>

namespace cybe {

/// Left-symmetric algebra: e_i . e_j = sum_k a(i,j,k) e_k.
class LSA {
public:
  LSA() = default;
  explicit LSA(std::size_t dim) : dim_(dim), a_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Scalar& a(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& a(std::size_t i, std::size_t j, std::size_t k) const
  {
    return a_[(i * dim_ + j) * dim_ + k];
  }

  Vec product(const Vec& x, const Vec& y) const;

  /// Matrix of left multiplication l_x : y -> xy.
  Mat left_mul(const Vec& x) const;
  /// Matrix of right multiplication R_x : y -> yx.
  Mat right_mul(const Vec& x) const;

  /// Commutator Lie algebra: [x,y] = xy - yx.
  LieAlgebra commutator_algebra() const;

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> a_;
};

struct LsaReport {
  bool left_symmetric = true;
  std::array<std::size_t, 3> witness{0, 0, 0}; // worst triple when not left-symmetric
  LieAlgebra commutator;
  JacobiReport commutator_jacobi;
};

/// Associator symmetry a(x,y,z) = a(y,x,z) on all basis triples, plus the
/// commutator bracket and its Jacobi status.
LsaReport lsa_check(const LSA& P);

/// xy - yx = [x,y] against a declared underlying algebra.
bool compatible(const LSA& P, const LieAlgebra& L);

/// LSA of a symplectic Lie algebra: xy = r(ad*_x q(y)), i.e.
/// omega(xy, z) = -omega(y, [x,z]).
LSA symplectic_lsa(const LieAlgebra& L, const SymplecticForm& w);

struct DualLsaResult {
  LSA lsa;             // a.b = ad*_{r(a)} b on G*
  LieAlgebra dual;     // (G*, [,]_r)
  bool cybe_ok = true; // downstream claims void when false
  bool eta_homomorphism = true; // identity (7) for eta : G* -> aff(G*)
};

DualLsaResult dual_lsa(const LieAlgebra& L, const Bivector& r);

struct ImageLsaResult {
  std::vector<Vec> image_basis;   // basis of Im(r) in G coordinates
  std::vector<Vec> preimages;     // alpha_s with r(alpha_s) = image_basis[s]
  LieAlgebra algebra;             // bracket of L restricted to Im(r)
  LSA lsa;                        // r(a) r(b) = r(ad*_{r(a)} b)
  Mat omega_bar;                  // omega_bar(v_s, v_t) = <alpha_s, v_t>
  bool subalgebra = true;         // Im(r) closed under [,]
  bool well_defined = true;       // omega_bar independent of preimage choice
  bool projection_morphism = true;// p : G* -> Im(r) is an LSA morphism
};

ImageLsaResult image_lsa(const LieAlgebra& L, const Bivector& r);

struct CompletenessReport {
  std::vector<Scalar> traces;      // tr R_{e_i^*} in the dual LSA
  bool complete = false;           // all traces zero
  bool image_unimodular = false;   // unimodular(Im(r) algebra)
  bool trace_match = true;         // tr R_a == tr R^im_{r(a)} on basis covectors
  bool triad_consistent = true;    // the three criteria agree
  std::vector<Vec> ker_r;          // basis of Ker(r)
  bool ker_abelian_ideal = true;   // Ker(r) is an abelian two-sided LSA ideal
  bool quotient_solvable = false;  // solvable(G*/Ker r), reported alongside
  bool cybe_ok = true;
};

CompletenessReport completeness(const LieAlgebra& L, const Bivector& r);

struct TransportReport {
  bool ok = true;
  std::string failed_identity; // "a","a'","b","c","d","e","eq10"
  std::array<std::size_t, 2> witness{0, 0};
};

/// Certifies the q/r transport identities between the symplectic LSA on G
/// and the dual LSA on G* on all basis pairs.
TransportReport transport_check(const LieAlgebra& L, const SymplecticForm& w);

} // namespace cybe

#endif
