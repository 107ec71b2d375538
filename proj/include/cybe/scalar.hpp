#ifndef CYBE_SCALAR_HPP
#define CYBE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cybe {

/// Exact rational scalar. All algebraic certifications are decided with it;
/// floating point only enters the series/rank code in poisson.hpp.
using Scalar = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
inline Scalar parse_rational(const std::string& s)
{
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

/// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string rational_to_string(const Scalar& x)
{
  std::string n = numerator(x).str();
  if (denominator(x) == 1) return n;
  return n + "/" + denominator(x).str();
}

} // namespace cybe

#endif
