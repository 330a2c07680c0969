#ifndef GDS_MODULAR_HPP
#define GDS_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace gds
{

/// Arithmetic in Z/pZ for a prime p < 2^32.
class PrimeField
{
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const
  { auto s = a + b; return s >= p_ ? s - p_ : s; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const
  { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws DomainError for 0.
  std::uint64_t inv(std::uint64_t a) const;

private:
  std::uint64_t p_;
};

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
using ModPolynomial = std::vector<std::uint64_t>; // coefficient of x^i at index i

/// Smallest prime p with p ≡ 1 (mod exponent) and p > lower_bound.
std::uint64_t smallest_prime_congruent_one(std::uint64_t exponent, std::uint64_t lower_bound);

/// Characteristic polynomial det(xI - A), monic, via reduction to Hessenberg form.
ModPolynomial characteristic_polynomial(PrimeField const &f, ModMatrix a);

std::uint64_t evaluate(PrimeField const &f, ModPolynomial const &poly, std::uint64_t x);

/// All roots in F_p, ascending, found by exhaustive evaluation.
std::vector<std::uint64_t> roots(PrimeField const &f, ModPolynomial const &poly);

/// Basis of {v : A v = 0} (column vectors), each basis vector returned as a row.
ModMatrix nullspace(PrimeField const &f, ModMatrix a);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(PrimeField const &f, ModMatrix &rows);

} // namespace gds

#endif // GDS_MODULAR_HPP
