#include "cybe/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace cybe {

namespace {

Scalar scalar_from_json(const json& j)
{
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("scalar must be an integer or a \"p/q\" string");
}

} // namespace

LieAlgebra algebra_from_json(const json& j)
{
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw std::invalid_argument("algebra: missing or invalid \"dim\"");
  std::size_t n = j["dim"].get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j["basis"].get<std::vector<std::string>>();
    if (names.size() != n) throw std::invalid_argument("algebra: basis size != dim");
  }
  LieAlgebra L(n, names);
  for (const auto& b : j.value("brackets", json::array())) {
    std::size_t i = b.at("i").get<std::size_t>();
    std::size_t jj = b.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i > n || jj > n || i >= jj)
      throw std::invalid_argument("algebra: bracket indices must satisfy 1 <= i < j <= dim");
    for (const auto& [ks, v] : b.at("coeffs").items()) {
      std::size_t k = std::stoul(ks);
      if (k < 1 || k > n) throw std::invalid_argument("algebra: coefficient index out of range");
      L.set_bracket(i - 1, jj - 1, k - 1, scalar_from_json(v));
    }
  }
  return L;
}

json algebra_to_json(const LieAlgebra& L)
{
  json j;
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t jj = i + 1; jj < L.dim(); ++jj) {
      json coeffs;
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (L.c(i, jj, k) != 0) coeffs[std::to_string(k + 1)] = rational_to_string(L.c(i, jj, k));
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

Mat mat_from_json(const json& rows)
{
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix: expected array");
  std::size_t n = rows.size();
  std::size_t m = rows[0].size();
  Mat out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = scalar_from_json(rows[i][j]);
  }
  return out;
}

json mat_to_json(const Mat& m)
{
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vec_to_json(const Vec& v)
{
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_string(x));
  return a;
}

Vec vec_from_json(const json& j, std::size_t expect_dim)
{
  if (!j.is_array() || j.size() != expect_dim)
    throw std::invalid_argument("vector: wrong length");
  Vec v(expect_dim);
  for (std::size_t i = 0; i < expect_dim; ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

Bivector bivector_from_json(const json& j)
{
  Mat m = mat_from_json(j.at("r"));
  if (m.rows() != m.cols() || !m.is_skew())
    throw std::invalid_argument("bivector: \"r\" must be a square skew matrix");
  return Bivector{m};
}

json bivector_to_json(const Bivector& r) { return json{{"r", mat_to_json(r.r)}}; }

SymplecticForm omega_from_json(const json& j)
{
  Mat m = mat_from_json(j.at("omega"));
  if (m.rows() != m.cols() || !m.is_skew())
    throw std::invalid_argument("omega: must be a square skew matrix");
  return SymplecticForm{m};
}

json omega_to_json(const SymplecticForm& w) { return json{{"omega", mat_to_json(w.omega)}}; }

json lsa_to_json(const LSA& P)
{
  json j;
  j["dim"] = P.dim();
  json products = json::array();
  for (std::size_t i = 0; i < P.dim(); ++i)
    for (std::size_t jj = 0; jj < P.dim(); ++jj) {
      json coeffs;
      for (std::size_t k = 0; k < P.dim(); ++k)
        if (P.a(i, jj, k) != 0) coeffs[std::to_string(k + 1)] = rational_to_string(P.a(i, jj, k));
      if (!coeffs.empty()) products.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["products"] = products;
  return j;
}

LSA lsa_from_json(const json& j)
{
  std::size_t n = j.at("dim").get<std::size_t>();
  LSA P(n);
  for (const auto& b : j.value("products", json::array())) {
    std::size_t i = b.at("i").get<std::size_t>();
    std::size_t jj = b.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i > n || jj > n)
      throw std::invalid_argument("lsa: product indices out of range");
    for (const auto& [ks, v] : b.at("coeffs").items())
      P.a(i - 1, jj - 1, std::stoul(ks) - 1) = scalar_from_json(v);
  }
  return P;
}

json poly_poisson_to_json(const PolyPoisson& P)
{
  json j;
  j["dim"] = P.dim;
  j["constant"] = mat_to_json(P.constant);
  json lin = json::array();
  json quad = json::array();
  std::size_t n = P.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i + 1; jj < n; ++jj) {
      for (std::size_t k = 0; k < n; ++k)
        if (P.d(i, jj, k) != 0)
          lin.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1},
                         {"value", rational_to_string(P.d(i, jj, k))}});
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l)
          if (P.e(i, jj, k, l) != 0)
            quad.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"l", l + 1},
                            {"value", rational_to_string(P.e(i, jj, k, l))}});
    }
  j["linear"] = lin;
  j["quadratic"] = quad;
  return j;
}

std::string content_hash(const std::string& bytes)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

} // namespace cybe
