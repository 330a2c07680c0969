#include "gds/modular.hpp"

#include <algorithm>

#include "gds/errors.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
  if (p < 2 || p >= (std::uint64_t(1) << 32))
    throw ConfigurationError("field modulus must be a prime below 2^32");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const
{
  std::uint64_t result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
  if (a % p_ == 0)
    throw DomainError("inverse of zero modulo " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t smallest_prime_congruent_one(std::uint64_t exponent, std::uint64_t lower_bound)
{
  if (exponent == 0)
    throw ConfigurationError("exponent must be positive");
  auto candidate = (lower_bound / exponent) * exponent + 1;
  for (; candidate < (std::uint64_t(1) << 32); candidate += exponent)
    if (candidate > lower_bound && is_prime(candidate))
      return candidate;
  throw ConfigurationError("no prime p = 1 mod " + std::to_string(exponent) +
                           " below 2^32");
}

ModPolynomial characteristic_polynomial(PrimeField const &f, ModMatrix h)
{
  auto n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0)
      ++pivot;
    if (pivot == n)
      continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (auto &row : h)
        std::swap(row[pivot], row[m]);
    }
    auto pinv = f.inv(h[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0)
        continue;
      auto u = f.mul(h[i][m - 1], pinv);
      for (std::size_t c = 0; c < n; ++c)
        h[i][c] = f.sub(h[i][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r)
        h[r][m] = f.add(h[r][m], f.mul(u, h[r][i]));
    }
  }

  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<ModPolynomial> polys{{1}};
  for (std::size_t m = 0; m < n; ++m) {
    ModPolynomial next(m + 2, 0);
    auto const &prev = polys[m];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], prev[d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      if (t == 0)
        break;
      auto coef = f.mul(t, h[i][m]);
      auto const &q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d)
        next[d] = f.sub(next[d], f.mul(coef, q[d]));
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::uint64_t evaluate(PrimeField const &f, ModPolynomial const &poly, std::uint64_t x)
{
  std::uint64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<std::uint64_t> roots(PrimeField const &f, ModPolynomial const &poly)
{
  std::vector<std::uint64_t> result;
  for (std::uint64_t x = 0; x < f.modulus(); ++x)
    if (evaluate(f, poly, x) == 0)
      result.push_back(x);
  return result;
}

std::vector<std::size_t> row_reduce(PrimeField const &f, ModMatrix &rows)
{
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  auto cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[r]);
    auto scale = f.inv(rows[r][c]);
    for (auto &v : rows[r])
      v = f.mul(v, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      auto u = rows[i][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        rows[i][cc] = f.sub(rows[i][cc], f.mul(u, rows[r][cc]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

ModMatrix nullspace(PrimeField const &f, ModMatrix a)
{
  auto cols = a.empty() ? 0 : a[0].size();
  auto pivots = row_reduce(f, a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  ModMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace gds
