#include <gtest/gtest.h>

#include <random>

#include "gds/builtins.hpp"
#include "gds/errors.hpp"
#include "gds/families.hpp"
#include "gds/number_theory.hpp"

using namespace gds;

namespace
{

std::uint64_t naive_largest_prime(std::uint64_t n)
{
  std::uint64_t best = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    while (n % f == 0) {
      best = f;
      n /= f;
    }
  return n > 1 ? std::max(best, n) : best;
}

bool naive_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

} // namespace

TEST(FamilyOrder, Examples)
{
  EXPECT_EQ(family_order({Family::PSL2, 7}), 168);
  EXPECT_EQ(family_order({Family::PSL2, 4}), 60);
  EXPECT_EQ(family_order({Family::PSL2, 5}), 60);
  EXPECT_EQ(family_order({Family::Suzuki, 8}), 29120);
  EXPECT_EQ(family_order({Family::PSL3, 3}), 5616);
  EXPECT_EQ(family_order({Family::PSL3, 4}), 20160);
  EXPECT_EQ(family_order({Family::PSU3, 3}), 6048);
  EXPECT_EQ(family_order({Family::PSU3, 5}), 126000);
  EXPECT_EQ(family_order({Family::Ree, 27}), BigInt("10073444472"));
  EXPECT_EQ(family_order({Family::TrialityD4, 2}), 211341312);
}

TEST(FamilyOrder, MatchesConstructedGroups)
{
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u})
    EXPECT_EQ(family_order({Family::PSL2, q}), psl2(q).order()) << q;
  EXPECT_EQ(family_order({Family::PSL3, 3}), psl3(3).order());
}

TEST(FamilySpec, RejectsInvalidParameters)
{
  EXPECT_THROW(FamilySpec(Family::PSL2, 3), DomainError);
  EXPECT_THROW(FamilySpec(Family::PSL2, 6), DomainError);
  EXPECT_THROW(FamilySpec(Family::PSL3, 2), DomainError);
  EXPECT_THROW(FamilySpec(Family::PSU3, 2), DomainError);
  EXPECT_THROW(FamilySpec(Family::Suzuki, 2), DomainError);
  EXPECT_THROW(FamilySpec(Family::Suzuki, 16), DomainError);
  EXPECT_THROW(FamilySpec(Family::Ree, 3), DomainError);
  EXPECT_THROW(FamilySpec(Family::Ree, 9), DomainError);
  EXPECT_NO_THROW(FamilySpec(Family::Suzuki, 32));
  EXPECT_NO_THROW(FamilySpec(Family::Ree, 243));
  EXPECT_EQ(FamilySpec(Family::PSL3, 4).d_divisor(), 3u);
  EXPECT_EQ(FamilySpec(Family::PSU3, 5).d_divisor(), 3u);
  EXPECT_EQ(FamilySpec(Family::PSU3, 4).d_divisor(), 1u);
}

TEST(FamilyName, Parsing)
{
  EXPECT_EQ(family_from_string("PSL2"), Family::PSL2);
  EXPECT_EQ(family_from_string("suzuki"), Family::Suzuki);
  EXPECT_EQ(family_from_string("triality"), Family::TrialityD4);
  EXPECT_THROW(family_from_string("sporadic"), InputError);
}

TEST(FamilyD, ClosedForms)
{
  auto a = family_d({Family::PSL2, 4});
  EXPECT_EQ(a.value, Rational(1, 12));
  EXPECT_FALSE(a.is_bound);
  EXPECT_EQ(family_d({Family::PSL2, 7}).value, Rational(1, 28));
  EXPECT_EQ(family_d({Family::PSL3, 3}).value, Rational(1, 468));
  EXPECT_FALSE(family_d({Family::PSL3, 3}).is_bound);
  EXPECT_TRUE(family_d({Family::PSL3, 4}).is_bound);
  EXPECT_TRUE(family_d({Family::PSU3, 3}).is_bound);
  EXPECT_EQ(family_d({Family::Suzuki, 8}).value, Rational(11, 29120));
}

TEST(FamilyD, MatchesConstructedGroups)
{
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    auto g = psl2(q);
    EXPECT_EQ(family_d({Family::PSL2, q}).value, make_rational(g.class_count(), g.order())) << q;
  }
  auto g = psl3(3);
  EXPECT_EQ(g.class_count(), 12u);
  EXPECT_EQ(family_d({Family::PSL3, 3}).value, make_rational(12, 5616));
}

TEST(FamilyInvariants, SuzukiEight)
{
  auto inv = family_invariants({Family::Suzuki, 8});
  EXPECT_EQ(inv.order, 29120);
  EXPECT_EQ(inv.class_number, 11);
  ASSERT_TRUE(inv.largest_prime);
  EXPECT_EQ(*inv.largest_prime, 13);
  EXPECT_LE(inv.class_number, inv.order);
}

TEST(LargestPrime, MatchesTrialDivision)
{
  for (auto f : {Family::PSL2, Family::PSL3, Family::PSU3}) {
    for (auto q : valid_parameters(f, 64)) {
      FamilySpec spec(f, q);
      auto order = family_order(spec);
      if (!order.fits_ulong_p())
        continue;
      auto p = largest_prime_divisor(spec);
      ASSERT_TRUE(p);
      EXPECT_EQ(*p, naive_largest_prime(order.get_ui())) << to_string(f) << " " << q;
    }
  }
}

TEST(BoundSweep, NoViolationsUpToDefaultRange)
{
  for (auto f : {Family::PSL2, Family::PSL3, Family::PSU3, Family::Suzuki, Family::Ree, Family::TrialityD4}) {
    auto rows = bound_sweep(f, 1024);
    EXPECT_FALSE(rows.empty());
    for (auto const &row : rows) {
      EXPECT_TRUE(row.notice.empty()) << to_string(f) << " " << row.q;
      EXPECT_TRUE(row.d_below_threshold) << to_string(f) << " " << row.q;
    }
  }
}

TEST(BoundSweep, SmallExamples)
{
  auto rows = bound_sweep(Family::PSL2, 5);
  ASSERT_EQ(rows.size(), 2u);
  for (auto const &row : rows) {
    EXPECT_EQ(*row.p, 5);
    EXPECT_EQ(row.d, Rational(1, 12));
    EXPECT_LT(row.d, Rational(3, 25));
  }
  auto sz = bound_sweep(Family::Suzuki, 8);
  ASSERT_EQ(sz.size(), 1u);
  EXPECT_EQ(*sz[0].p, 13);
  EXPECT_EQ(sz[0].d, Rational(11, 29120));
  EXPECT_FALSE(sz[0].bound_flag);
  EXPECT_TRUE(sz[0].d_below_threshold);
}

TEST(ValidParameters, Lists)
{
  EXPECT_EQ(valid_parameters(Family::Suzuki, 1024), (std::vector<std::uint64_t>{8, 32, 128, 512}));
  EXPECT_EQ(valid_parameters(Family::Ree, 1024), (std::vector<std::uint64_t>{27, 243}));
  EXPECT_EQ(valid_parameters(Family::PSL2, 12), (std::vector<std::uint64_t>{4, 5, 7, 8, 9, 11}));
  EXPECT_EQ(valid_parameters(Family::PSL3, 8), (std::vector<std::uint64_t>{3, 4, 5, 7, 8}));
}

TEST(SuzukiCofactor, NeverPrime)
{
  for (auto q : valid_parameters(Family::Suzuki, 1u << 20))
    EXPECT_TRUE(suzuki_cofactor_check(q)) << q;
}

TEST(Primality, AgreesWithTrialDivision)
{
  for (std::uint64_t n = 0; n < 20000; ++n)
    ASSERT_EQ(is_prime_deterministic(big(n)), naive_prime(n)) << n;
  EXPECT_TRUE(is_prime_deterministic(BigInt("2305843009213693951")));  // 2^61 - 1
  EXPECT_FALSE(is_prime_deterministic(BigInt("147573952589676412927"))); // 2^67 - 1
  EXPECT_FALSE(is_prime_deterministic(BigInt("3215031751")));           // strong pseudoprime to 2, 3, 5, 7
}

TEST(Factorize, ProductOfFactorsRestoresInput)
{
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    BigInt n = big(rng() >> 4) * big((rng() >> 40) + 1);
    auto f = factorize(n);
    ASSERT_TRUE(f.complete);
    BigInt product = 1;
    for (auto const &[p, e] : f.primes) {
      EXPECT_TRUE(is_prime_deterministic(p));
      for (unsigned k = 0; k < e; ++k)
        product *= p;
    }
    EXPECT_EQ(product, n);
  }
  auto m67 = factorize(BigInt("147573952589676412927"));
  EXPECT_EQ(m67.primes.size(), 2u);
  EXPECT_EQ(m67.primes.begin()->first, 193707721);
}
