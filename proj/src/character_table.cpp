#include "gds/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gds/errors.hpp"
#include "gds/kernels.hpp"
#include "gds/modular.hpp"

namespace gds
{

namespace
{

struct Eigenspace
{
  ModMatrix basis;                // reduced row echelon form
  std::vector<std::size_t> pivots;
};

Eigenspace make_space(PrimeField const &f, ModMatrix rows)
{
  auto pivots = row_reduce(f, rows);
  return Eigenspace{std::move(rows), std::move(pivots)};
}

// Matrix of the class matrix acting on column vectors of `space`, in the
// coordinates given by the pivot entries.
ModMatrix restrict_to(PrimeField const &f, kernels::CountMatrix const &a, Eigenspace const &space)
{
  auto d = space.basis.size();
  auto k = a.size;
  ModMatrix r(d, std::vector<std::uint64_t>(d, 0));
  for (std::size_t l = 0; l < d; ++l) {
    auto row = space.pivots[l];
    for (std::size_t m = 0; m < d; ++m) {
      std::uint64_t acc = 0;
      auto const &b = space.basis[m];
      for (std::size_t c = 0; c < k; ++c)
        if (b[c] != 0)
          acc = f.add(acc, f.mul(f.reduce(a(row, c)), b[c]));
      r[l][m] = acc;
    }
  }
  return r;
}

std::vector<Eigenspace> split(PrimeField const &f,
                              kernels::CountMatrix const &a,
                              Eigenspace const &space)
{
  auto r = restrict_to(f, a, space);
  auto d = r.size();
  auto eigenvalues = roots(f, characteristic_polynomial(f, r));
  if (eigenvalues.size() == 1)
    return {space};
  if (eigenvalues.empty())
    throw ConfigurationError("class matrix has no eigenvalue in F_" +
                             std::to_string(f.modulus()));

  std::vector<Eigenspace> parts;
  std::size_t total = 0;
  for (auto lambda : eigenvalues) {
    auto shifted = r;
    for (std::size_t i = 0; i < d; ++i)
      shifted[i][i] = f.sub(shifted[i][i], lambda);
    auto coords = nullspace(f, shifted);
    ModMatrix vectors;
    for (auto const &c : coords) {
      std::vector<std::uint64_t> v(space.basis[0].size(), 0);
      for (std::size_t m = 0; m < d; ++m)
        if (c[m] != 0)
          for (std::size_t x = 0; x < v.size(); ++x)
            v[x] = f.add(v[x], f.mul(c[m], space.basis[m][x]));
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(make_space(f, std::move(vectors)));
  }
  if (total != d)
    throw ConfigurationError("class matrix is not diagonalizable over F_" +
                             std::to_string(f.modulus()));
  return parts;
}

std::uint64_t exact_square_root(std::uint64_t n)
{
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r * r == n ? r : 0;
}

} // namespace

std::uint64_t choose_modulus(PermutationGroup const &g)
{
  return smallest_prime_congruent_one(g.exponent(), 2 * g.order());
}

CharacterData character_table_mod_p(PermutationGroup const &g, CharacterTableOptions const &options)
{
  CharacterData result;
  result.group_name = g.name();
  result.group_order = g.order();
  result.exponent = g.exponent();
  auto k = g.class_count();
  for (auto const &cls : g.classes())
    result.class_sizes.push_back(cls.size());
  for (std::size_t c = 0; c < k; ++c)
    result.inverse_class.push_back(g.inverse_class(static_cast<std::uint32_t>(c)));

  if (options.modulus) {
    auto p = *options.modulus;
    if (!is_prime(p) || p % g.exponent() != 1 % g.exponent() || p <= 2 * g.order())
      throw ConfigurationError("modulus " + std::to_string(p) +
                               " is not a prime = 1 mod exp(G) above 2|G|");
    result.modulus = p;
  } else {
    result.modulus = choose_modulus(g);
  }
  PrimeField f(result.modulus);

  if (k == 1) {
    result.degrees = {1};
    result.table = {{1}};
    return result;
  }

  ModMatrix identity(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    identity[i][i] = 1;
  std::vector<Eigenspace> spaces{make_space(f, identity)};

  // Split by class matrices in class order until every common eigenspace is a line.
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(),
                    [](Eigenspace const &s) { return s.basis.size() == 1; }))
      break;
    auto a = kernels::class_matrix(g, j);
    std::vector<Eigenspace> refined;
    for (auto const &space : spaces) {
      if (space.basis.size() == 1) {
        refined.push_back(space);
        continue;
      }
      for (auto &part : split(f, a, space))
        refined.push_back(std::move(part));
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != k)
    throw ConfigurationError("class matrices did not separate all characters of " + g.name());

  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> rows;
  for (auto const &space : spaces) {
    auto omega = space.basis[0];
    if (omega[0] == 0)
      throw ConfigurationError("central character vanishes on the identity class");
    auto scale = f.inv(omega[0]);
    for (auto &v : omega)
      v = f.mul(v, scale);

    // sum_i ω_i ω_{i'} / |C_i| = |G| / χ(1)^2
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = f.add(s, f.mul(f.mul(omega[i], omega[result.inverse_class[i]]),
                         f.inv(result.class_sizes[i])));
    auto degree_squared = f.mul(f.reduce(g.order()), f.inv(s));
    auto degree = exact_square_root(degree_squared);
    if (degree == 0 || g.order() % degree != 0)
      throw ConfigurationError("recovered degree residue is not a square divisor of |G|");

    std::vector<std::uint64_t> values(k);
    for (std::size_t i = 0; i < k; ++i)
      values[i] = f.mul(f.mul(omega[i], degree), f.inv(result.class_sizes[i]));
    rows.emplace_back(degree, std::move(values));
  }
  std::sort(rows.begin(), rows.end());

  std::uint64_t sum_squares = 0;
  for (auto &[degree, values] : rows) {
    sum_squares += degree * degree;
    result.degrees.push_back(degree);
    result.table.push_back(std::move(values));
  }
  if (sum_squares != g.order())
    throw ConfigurationError("sum of squared degrees differs from |G| for " + g.name());
  return result;
}

std::vector<std::uint64_t> character_degrees(PermutationGroup const &g)
{
  return character_table_mod_p(g).degrees;
}

bool satisfies_orthogonality(CharacterData const &chars)
{
  PrimeField f(chars.modulus);
  auto k = chars.class_count();
  if (chars.table.size() != k || chars.degrees.size() != k)
    return false;

  std::uint64_t sum_squares = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (chars.table[r][0] != chars.degrees[r])
      return false;
    sum_squares += chars.degrees[r] * chars.degrees[r];
  }
  if (sum_squares != chars.group_order)
    return false;

  auto order = f.reduce(chars.group_order);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < k; ++c)
        acc = f.add(acc, f.mul(f.reduce(chars.class_sizes[c]),
                               f.mul(chars.table[a][c],
                                     chars.table[b][chars.inverse_class[c]])));
      if (acc != (a == b ? order : 0))
        return false;
    }

  // Column orthogonality: sum_χ χ(g) χ(h^-1) = |C_G(g)| δ
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      std::uint64_t acc = 0;
      for (std::size_t r = 0; r < k; ++r)
        acc = f.add(acc, f.mul(chars.table[r][c], chars.table[r][chars.inverse_class[d]]));
      auto expected = c == d ? f.reduce(chars.group_order / chars.class_sizes[c]) : 0;
      if (acc != expected)
        return false;
    }
  return true;
}

std::vector<std::uint32_t> class_fusion(PermutationGroup const &parent,
                                        PermutationGroup const &subgroup_group)
{
  std::vector<std::uint32_t> fusion;
  for (auto const &cls : subgroup_group.classes())
    fusion.push_back(parent.class_of(parent.index_of(subgroup_group.element(cls.representative))));
  return fusion;
}

std::vector<std::vector<std::uint64_t>>
restriction_multiplicities(PermutationGroup const &g,
                           Subgroup const &n,
                           PermutationGroup const &n_group,
                           CharacterData const &chars_g,
                           CharacterData const &chars_n)
{
  if (chars_g.modulus != chars_n.modulus)
    throw DomainError("character tables use different moduli (" +
                      std::to_string(chars_g.modulus) + " vs " +
                      std::to_string(chars_n.modulus) + ")");
  if (!is_normal(g, n))
    throw DomainError("restriction target is not a normal subgroup");
  if (n_group.order() != n.order())
    throw DomainError("subgroup group does not match the subgroup");

  PrimeField f(chars_g.modulus);
  auto fusion = class_fusion(g, n_group);
  auto inv_order = f.inv(n.order());
  auto kn = chars_n.class_count();

  std::vector<std::vector<std::uint64_t>> result(chars_g.table.size(),
                                                 std::vector<std::uint64_t>(kn, 0));
  for (std::size_t i = 0; i < chars_g.table.size(); ++i) {
    for (std::size_t j = 0; j < kn; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < kn; ++c)
        acc = f.add(acc, f.mul(f.reduce(chars_n.class_sizes[c]),
                               f.mul(chars_g.table[i][fusion[c]],
                                     chars_n.table[j][chars_n.inverse_class[c]])));
      result[i][j] = f.mul(acc, inv_order);
    }
    std::uint64_t mass = 0;
    for (std::size_t j = 0; j < kn; ++j)
      mass += result[i][j] * chars_n.degrees[j];
    if (mass != chars_g.degrees[i])
      throw ConfigurationError("restriction multiplicities do not reproduce the degree");
  }
  return result;
}

} // namespace gds
