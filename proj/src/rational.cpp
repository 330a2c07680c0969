#include "gds/rational.hpp"

#include <stdexcept>

namespace gds
{

Rational parse_fraction(std::string const &text)
{
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(BigInt(text));
    Rational r(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    if (r.get_den() == 0)
      throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (std::invalid_argument const &) {
    throw std::invalid_argument("not a fraction: \"" + text + "\"");
  }
}

} // namespace gds
