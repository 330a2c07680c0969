#include "gds/number_theory.hpp"

#include <vector>

#include "gds/errors.hpp"

namespace gds
{

namespace
{

BigInt mulmod(BigInt const &a, BigInt const &b, BigInt const &m)
{
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt powmod(BigInt const &base, BigInt const &e, BigInt const &m)
{
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool strong_probable_prime(BigInt const &n, BigInt const &d, unsigned s, unsigned long a)
{
  BigInt x = powmod(BigInt(a), d, n);
  if (x == 1 || x == n - 1)
    return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1)
      return true;
  }
  return false;
}

// Returns a non-trivial factor or 0 if the budget ran out.
BigInt pollard_brent(BigInt const &n, unsigned long &budget)
{
  if (n % 2 == 0)
    return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](BigInt const &v) -> BigInt { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt diff = abs(x - y);
          q = mulmod(q, diff, n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        auto spent = std::min(m, budget);
        budget -= spent;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);

    if (g == n) {
      do {
        ys = f(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1)
      return g;
  }
  return 0;
}

void split_cofactor(BigInt const &n, Factorization &out, unsigned long &budget)
{
  if (n == 1)
    return;
  if (is_prime_deterministic(n)) {
    ++out.primes[n];
    return;
  }
  auto factor = pollard_brent(n, budget);
  if (factor == 0) {
    out.complete = false;
    return;
  }
  split_cofactor(factor, out, budget);
  split_cofactor(BigInt(n / factor), out, budget);
}

} // namespace

bool is_prime_deterministic(BigInt const &n)
{
  if (n < 2)
    return false;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto p : bases) {
    if (n == p)
      return true;
    if (n % p == 0)
      return false;
  }
  static const BigInt deterministic_bound("3317044064679887385961981");
  if (n >= deterministic_bound)
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (auto a : bases)
    if (!strong_probable_prime(n, d, s, a))
      return false;
  return true;
}

Factorization factorize(BigInt n, FactorOptions const &options)
{
  if (n < 1)
    throw DomainError("factorize expects a positive integer");
  Factorization result;
  for (unsigned long p = 2; p <= options.trial_limit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++result.primes[BigInt(p)];
      n /= p;
    }
  }
  auto budget = options.rho_iterations;
  split_cofactor(n, result, budget);
  return result;
}

} // namespace gds
