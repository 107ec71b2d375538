#ifndef CYBE_IO_HPP
#define CYBE_IO_HPP

#include "cybe/lsa.hpp"
#include "cybe/poisson.hpp"

#include <nlohmann/json.hpp>
#include <string>

namespace cybe {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using nlohmann::json;

/// Algebra format: {"dim": n, "basis": [...], "brackets":
/// [{"i": i, "j": j, "coeffs": {"k": "p/q"}}]} with 1-based i < j;
/// the antisymmetric completion is implicit. Throws std::invalid_argument
/// on malformed input.
LieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& L);

/// {"r": [["0","1"],["-1","0"]]} etc.
Bivector bivector_from_json(const json& j);
json bivector_to_json(const Bivector& r);
SymplecticForm omega_from_json(const json& j);
json omega_to_json(const SymplecticForm& w);

Mat mat_from_json(const json& rows);
json mat_to_json(const Mat& m);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, std::size_t expect_dim);

/// LSA mirror of the algebra format under "products" (all pairs listed).
json lsa_to_json(const LSA& P);
LSA lsa_from_json(const json& j);

json poly_poisson_to_json(const PolyPoisson& P);

/// FNV-1a 64-bit, hex string; used to pin input files in reports.
std::string content_hash(const std::string& bytes);

} // namespace cybe

#endif
