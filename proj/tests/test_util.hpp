#ifndef CYBE_TEST_UTIL_HPP
#define CYBE_TEST_UTIL_HPP

#include "cybe/io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

inline cybe::json load_fixture(const std::string& name)
{
  std::ifstream in(std::string(CYBE_FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return cybe::json::parse(ss.str());
}

inline cybe::LieAlgebra fixture_algebra(const std::string& name)
{
  return cybe::algebra_from_json(load_fixture(name));
}

inline cybe::Bivector fixture_bivector(const std::string& name)
{
  return cybe::bivector_from_json(load_fixture(name));
}

inline cybe::SymplecticForm fixture_omega(const std::string& name)
{
  return cybe::omega_from_json(load_fixture(name));
}

/// Random skew matrix with integer entries in [-3,3].
inline cybe::Mat random_skew(std::mt19937_64& rng, std::size_t n)
{
  std::uniform_int_distribution<int> d(-3, 3);
  cybe::Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int v = d(rng);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

inline cybe::Vec random_vec(std::mt19937_64& rng, std::size_t n)
{
  std::uniform_int_distribution<int> d(-3, 3);
  cybe::Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

} // namespace testutil

#endif
