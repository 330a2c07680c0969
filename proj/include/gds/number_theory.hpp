#ifndef GDS_NUMBER_THEORY_HPP
#define GDS_NUMBER_THEORY_HPP

#include <cstdint>
#include <map>

#include "gds/rational.hpp"

namespace gds
{

/// Miller–Rabin with the first thirteen prime bases. Deterministic for
/// n < 3.3 * 10^24; above that the answer is probabilistic (BPSW via GMP).
bool is_prime_deterministic(BigInt const &n);

struct Factorization
{
  std::map<BigInt, unsigned> primes;
  bool complete = true; // false when the rho budget ran out
};

struct FactorOptions
{
  unsigned long trial_limit = 1000000;
  unsigned long rho_iterations = 2000000;
};

/// Trial division up to the limit, then Pollard–Brent rho on the cofactor.
Factorization factorize(BigInt n, FactorOptions const &options = {});

} // namespace gds

#endif // GDS_NUMBER_THEORY_HPP
