#ifndef GDS_RATIONAL_HPP
#define GDS_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gds
{

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::uint64_t num, std::uint64_t den)
{
  Rational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

inline BigInt big(std::uint64_t n) { return BigInt(std::to_string(n)); }

/// Always "numerator/denominator", also for integers ("1/1").
inline std::string to_fraction_string(Rational const &r)
{
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n/d" or "n". Throws std::invalid_argument.
Rational parse_fraction(std::string const &text);

} // namespace gds

#endif // GDS_RATIONAL_HPP
