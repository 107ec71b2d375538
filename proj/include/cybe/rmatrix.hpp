#ifndef CYBE_RMATRIX_HPP
#define CYBE_RMATRIX_HPP

#include "cybe/lie_algebra.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cybe {

/// Skew bivector r, doubling as the map r# : G* -> G, r#(a)_i = sum_j r(i,j) a_j.
/// As a bilinear form, r(a,b) = b(r#(a)).
struct Bivector {
  Mat r;
  std::size_t dim() const { return r.rows(); }
  Vec sharp(const Vec& alpha) const { return r * alpha; }
  Scalar form(const Vec& alpha, const Vec& beta) const { return dot(beta, sharp(alpha)); }
};

/// Symplectic form, omega(x,y) = x^T W y. Matrix of q = omega-flat is W^T.
struct SymplecticForm {
  Mat omega;
  std::size_t dim() const { return omega.rows(); }
  Scalar eval(const Vec& x, const Vec& y) const { return dot(x, omega * y); }
};

struct SchoutenEntry {
  std::array<std::size_t, 3> triple;
  Scalar value;
};

struct SchoutenReport {
  bool cybe_ok = true;
  std::vector<SchoutenEntry> values; // all i<j<k triples
};

struct GraphReport {
  bool isotropic = false;
  bool lagrangian = false;
  bool subalgebra = false;
};

/// Exact certification of an identity on all basis pairs; witness set on failure.
struct CertReport {
  bool ok = true;
  std::array<std::size_t, 2> witness{0, 0};
  std::string what; // which identity broke
};

struct ClosednessReport {
  bool closed = true;
  std::array<std::size_t, 3> witness{0, 0, 0};
};

/// [r,r](a,b,c) = <[r(a),r(b)],c> + cyclic, on all dual-basis triples.
SchoutenReport schouten_rr(const LieAlgebra& L, const Bivector& r);

/// Dual Lie algebra (G*, [,]_r), [a,b]_r = ad*_{r(a)} b - ad*_{r(b)} a.
LieAlgebra dual_bracket(const LieAlgebra& L, const Bivector& r);

ClosednessReport omega_closed(const LieAlgebra& L, const SymplecticForm& w);

/// Matrix of q : G -> G*, <q(x),y> = omega(x,y).
Mat q_matrix(const SymplecticForm& w);

/// r = q^{-1} with r# . q = id; throws std::invalid_argument when omega is
/// singular or not closed.
Bivector r_from_omega(const LieAlgebra& L, const SymplecticForm& w);

/// Hypothesis (*): r([a,b]_dual) - [r(a),r(b)] lies in Z(L) for all pairs.
bool center_condition(const LieAlgebra& L, const Bivector& r, const LieAlgebra& dual);

/// graph(r) = {(a, r(a))} inside t*G.
GraphReport graph_check(const LieAlgebra& L, const Bivector& r);

/// theta(a,x) = (a, r(a)+x) from the double D(r) to t*G: Lie algebra
/// homomorphism + isometry + graph image, certified exactly.
CertReport theta_iso(const LieAlgebra& L, const Bivector& r);

/// Coadjoint action of the dual algebra (G*,[,]_r) on G = (G*)*:
/// <ad*_gamma x, beta> = -<x, [gamma,beta]_dual>.
Vec dual_coadjoint(const LieAlgebra& dual, const Vec& gamma, const Vec& x);

} // namespace cybe

#endif
