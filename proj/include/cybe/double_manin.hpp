#ifndef CYBE_DOUBLE_MANIN_HPP
#define CYBE_DOUBLE_MANIN_HPP

#include "cybe/lsa.hpp"

namespace cybe {

/// Double Lie algebra D(G) = G + G* with the mixed bracket built from both
/// coadjoint actions, carrying the hyperbolic pairing. Coordinates 0..n-1
/// are the G factor, n..2n-1 the G* factor.
struct DoubleAlgebra {
  PairedAlgebra pair;
  bool cybe_ok = true; // sufficient (not necessary) for jacobi of the double
};

/// Two LSAs tied by a pair of representations; the data of Eq.-style
/// linked products. theta1[i] is the matrix of theta1(a_i) on B.
struct LinkedData {
  LSA A, B;
  std::vector<Mat> theta1; // A -> gl(B)
  std::vector<Mat> theta2; // B -> gl(A)
};

struct LinkedReport {
  bool ok = true;
  bool theta1_rep = true, theta2_rep = true; // Lie algebra representations
  bool cond12 = true, cond13 = true;
  std::array<std::size_t, 3> witness{0, 0, 0};
};

struct ComplexStructureReport {
  Mat J;
  bool square_ok = false;  // J^2 = -Id
  bool nijenhuis_ok = false;
  std::array<std::size_t, 2> witness{0, 0};
  Vec witness_value;
};

DoubleAlgebra build_double(const LieAlgebra& L, const Bivector& r);

/// Xi(x,a) = (x + r(a), a) : D(G) -> G x|_{ad*} G*, homomorphism + isometry.
CertReport xi_iso(const LieAlgebra& L, const Bivector& r);

/// Semidirect product G x|_{ad*} G* with bracket ([x,y], ad*_x b - ad*_y a)
/// and pairing a(y) + b(x). G coordinates first.
PairedAlgebra semidirect_coadjoint(const LieAlgebra& L);

LinkedReport linked_check(const LinkedData& D);

/// Product (a,b)(a',b') = (aa' + theta2(b)a', bb' + theta1(a)b') on A x B.
/// Throws std::invalid_argument when linked_check fails.
LSA linked_product(const LinkedData& D);

/// Splits an LSA along two supplementary subspaces that are stable under
/// left multiplication by the whole algebra; returns the linked data whose
/// linked_product reconstructs P in the adapted basis. The change of basis
/// (columns: U basis then V basis) is returned so callers can compare.
struct SplitResult {
  LinkedData data;
  Mat basis; // adapted basis, columns U then V
  LSA transformed; // P in the adapted basis
};

SplitResult split_ideals(const LSA& P, const std::vector<Vec>& U, const std::vector<Vec>& V);

/// LSA on D(G): (x,a)(y,b) = (xy + ad*_a y, ab + ad*_x b); requires r
/// invertible and CYBE.
LSA double_lsa(const LieAlgebra& L, const Bivector& r);

/// LSA on G x|_{ad*} G*: (x,a)(y,b) = (xy, ad*_x b).
LSA cotangent_lsa(const LieAlgebra& L, const SymplecticForm& w);

struct DoubleCompletenessReport {
  std::vector<Scalar> traces_g;    // tr R_{(e_i,0)} in the double LSA
  std::vector<Scalar> traces_dual; // tr R_{(0,e_i^*)}
  bool trace_match_g = true;       // equals tr R_{e_i} in the symplectic LSA
  bool trace_match_dual = true;    // equals tr R_{r(e_i^*)} in the symplectic LSA
  bool complete = false;
  bool g_unimodular = false;
  bool g_solvable = false;         // reported alongside, not folded in
  bool consistent = true;
};

DoubleCompletenessReport double_completeness(const LieAlgebra& L, const Bivector& r);

/// J(x,a) = (-r(a), q(x)) on the double; certified J^2 = -Id and N_J = 0.
ComplexStructureReport complex_structure(const LieAlgebra& L, const SymplecticForm& w);

} // namespace cybe

#endif
