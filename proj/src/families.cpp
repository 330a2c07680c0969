#include "gds/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gds/errors.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

namespace
{

bool power_of(std::uint64_t q, std::uint64_t base, unsigned &exponent)
{
  exponent = 0;
  while (q > 1 && q % base == 0) {
    q /= base;
    ++exponent;
  }
  return q == 1 && exponent > 0;
}

} // namespace

std::string to_string(Family f)
{
  switch (f) {
  case Family::PSL2: return "psl2";
  case Family::PSL3: return "psl3";
  case Family::PSU3: return "psu3";
  case Family::Suzuki: return "suzuki";
  case Family::Ree: return "ree";
  case Family::TrialityD4: return "triality";
  }
  return "?";
}

Family family_from_string(std::string const &name)
{
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto f : {Family::PSL2, Family::PSL3, Family::PSU3, Family::Suzuki, Family::Ree,
                 Family::TrialityD4})
    if (to_string(f) == lower)
      return f;
  if (lower == "3d4")
    return Family::TrialityD4;
  throw InputError("unknown family \"" + name +
                   "\" (expected psl2, psl3, psu3, suzuki, ree or triality)");
}

FamilySpec::FamilySpec(Family family, std::uint64_t q) : family_(family), q_(q)
{
  auto primes = q >= 2 ? prime_divisors(q) : std::vector<std::uint64_t>{};
  if (primes.size() != 1)
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  p_ = primes[0];
  auto label = to_string(family) + "(" + std::to_string(q) + ")";

  unsigned e = 0;
  switch (family) {
  case Family::PSL2:
    if (q < 4)
      throw DomainError(label + ": PSL(2,q) is not simple for q < 4");
    divisor_ = std::gcd<std::uint64_t>(2, q - 1);
    break;
  case Family::PSL3:
    if (q < 3)
      throw DomainError(label + ": PSL(3,2) is PSL(2,7); use family psl2");
    divisor_ = std::gcd<std::uint64_t>(3, q - 1);
    break;
  case Family::PSU3:
    if (q < 3)
      throw DomainError(label + ": PSU(3,2) is solvable");
    divisor_ = std::gcd<std::uint64_t>(3, q + 1);
    break;
  case Family::Suzuki:
    if (!power_of(q, 2, e) || e % 2 == 0 || e < 3)
      throw DomainError(label + ": Suzuki groups need q = 2^(2n+1) with n >= 1");
    break;
  case Family::Ree:
    if (!power_of(q, 3, e) || e % 2 == 0 || e < 3)
      throw DomainError(label + ": Ree groups need q = 3^(2n+1) with n >= 1");
    break;
  case Family::TrialityD4:
    break;
  }
}

std::vector<std::pair<BigInt, unsigned>> FamilySpec::order_factors() const
{
  BigInt q = big(q_);
  BigInt one = 1;
  switch (family_) {
  case Family::PSL2:
    return {{q, 1}, {q - one, 1}, {q + one, 1}};
  case Family::PSL3:
    return {{q, 3}, {q - one, 2}, {q + one, 1}, {q * q + q + one, 1}};
  case Family::PSU3:
    return {{q, 3}, {q - one, 1}, {q + one, 2}, {q * q - q + one, 1}};
  case Family::Suzuki:
    return {{q, 2}, {q * q + one, 1}, {q - one, 1}};
  case Family::Ree:
    return {{q, 3}, {q + one, 1}, {q * q - q + one, 1}, {q - one, 1}};
  case Family::TrialityD4:
    return {{q, 12},
            {q - one, 2},
            {q + one, 2},
            {q * q + q + one, 2},
            {q * q - q + one, 2},
            {q * q * q * q - q * q + one, 1}};
  }
  return {};
}

BigInt family_order(FamilySpec const &spec)
{
  BigInt q = big(spec.q());
  BigInt q2 = q * q, q3 = q2 * q;
  switch (spec.family()) {
  case Family::PSL2:
    return q * (q2 - 1) / big(spec.d_divisor());
  case Family::PSL3:
    return q3 * (q2 - 1) * (q3 - 1) / big(spec.d_divisor());
  case Family::PSU3:
    return q3 * (q2 - 1) * (q3 + 1) / big(spec.d_divisor());
  case Family::Suzuki:
    return q2 * (q2 + 1) * (q - 1);
  case Family::Ree:
    return q3 * (q3 + 1) * (q - 1);
  case Family::TrialityD4: {
    BigInt q4 = q2 * q2, q6 = q3 * q3, q8 = q4 * q4, q12 = q6 * q6;
    return q12 * (q8 + q4 + 1) * (q6 - 1) * (q2 - 1);
  }
  }
  return 0;
}

namespace
{

// Class number, flagged when only an upper bound is known.
std::pair<BigInt, bool> class_number(FamilySpec const &spec)
{
  BigInt q = big(spec.q());
  switch (spec.family()) {
  case Family::PSL2:
    if (spec.q() % 2 == 0)
      return {q + 1, false};
    return {(q + 5) / 2, false};
  case Family::PSL3:
    if (spec.q() == 3)
      return {12, false};
    return {q * q + 3 * q, true};
  case Family::PSU3:
    return {q * q + q + 2, true};
  case Family::Suzuki:
    return {q + 3, false};
  case Family::Ree:
    return {q + 8, false};
  case Family::TrialityD4:
    return {q * q * q * q + q * q * q + q * q + q + 6, false};
  }
  return {0, false};
}

} // namespace

FamilyD family_d(FamilySpec const &spec)
{
  BigInt q = big(spec.q());
  BigInt q2 = q * q, q3 = q2 * q;
  auto [k, bound] = class_number(spec);
  Rational value;
  switch (spec.family()) {
  case Family::PSL3:
    if (bound) // (q²+3q) / ((1/3) q³(q²−1)(q³−1))
      value = Rational(k * 3, q3 * (q2 - 1) * (q3 - 1));
    else
      value = Rational(k, family_order(spec));
    break;
  case Family::PSU3: // (q²+q+2) / ((1/d) q³(q²−1)(q³+1))
    value = Rational(k * big(spec.d_divisor()), q3 * (q2 - 1) * (q3 + 1));
    break;
  default:
    value = Rational(k, family_order(spec));
    break;
  }
  value.canonicalize();
  return FamilyD{value, bound};
}

std::optional<BigInt> largest_prime_divisor(FamilySpec const &spec, FactorOptions const &options)
{
  std::map<BigInt, long> exponents;
  for (auto const &[factor, multiplicity] : spec.order_factors()) {
    auto f = factorize(factor, options);
    if (!f.complete)
      return std::nullopt;
    for (auto const &[prime, e] : f.primes)
      exponents[prime] += static_cast<long>(e) * multiplicity;
  }
  for (auto const &[prime, e] : factorize(big(spec.d_divisor())).primes)
    exponents[prime] -= e;

  std::optional<BigInt> best;
  for (auto const &[prime, e] : exponents)
    if (e > 0)
      best = prime;
  return best;
}

FamilyInvariants family_invariants(FamilySpec const &spec, FactorOptions const &options)
{
  FamilyInvariants inv;
  inv.order = family_order(spec);
  auto [k, bound] = class_number(spec);
  inv.class_number = k;
  inv.class_number_is_bound = bound;
  auto d = family_d(spec);
  inv.d_value = d.value;
  inv.d_is_bound = d.is_bound;
  inv.largest_prime = largest_prime_divisor(spec, options);
  return inv;
}

std::vector<std::uint64_t> valid_parameters(Family family, std::uint64_t q_max)
{
  std::vector<std::uint64_t> result;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    try {
      FamilySpec spec(family, q);
      result.push_back(q);
    } catch (DomainError const &) {
    }
  }
  return result;
}

std::vector<SweepRow> bound_sweep(Family family, std::uint64_t q_max, FactorOptions const &options)
{
  auto params = valid_parameters(family, q_max);
  std::vector<SweepRow> rows(params.size());
  auto n = static_cast<long long>(params.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long idx = 0; idx < n; ++idx) {
    FamilySpec spec(family, params[idx]);
    auto inv = family_invariants(spec, options);
    SweepRow row;
    row.family = family;
    row.q = params[idx];
    row.order = inv.order;
    row.d = inv.d_value;
    row.bound_flag = inv.d_is_bound;
    row.p = inv.largest_prime;
    if (!row.p) {
      row.notice = "factoring budget exhausted; row skipped";
    } else {
      BigInt p2 = *row.p * *row.p;
      row.d_below_threshold = row.d < Rational(BigInt(3), p2);
      row.lemma31_holds = p2 * p2 < 9 * row.order;
    }
    rows[idx] = std::move(row);
  }
  return rows;
}

bool suzuki_cofactor_check(std::uint64_t q, FactorOptions const &options)
{
  BigInt n = big(q) * big(q) + 1;
  auto f = factorize(n, options);
  if (!f.complete || f.primes.empty())
    return false;
  return 3 * f.primes.rbegin()->first <= n;
}

} // namespace gds
