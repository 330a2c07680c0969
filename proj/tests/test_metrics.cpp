#include <gtest/gtest.h>

#include "gds/builtins.hpp"
#include "gds/character_table.hpp"
#include "gds/errors.hpp"
#include "gds/metrics.hpp"
#include "support.hpp"

using namespace gds;
using testing_support::to_oracle;

namespace
{

GroupMetrics metrics_of(PermutationGroup const &g)
{
  auto d = character_degrees(g);
  return compute_metrics(g, d);
}

} // namespace

TEST(ComputeMetrics, SymmetricThree)
{
  auto m = metrics_of(symmetric_group(3));
  EXPECT_EQ(m.degree_sum, 4u);
  EXPECT_EQ(m.involution_count, 4u);
  EXPECT_EQ(m.class_number, 3u);
  EXPECT_EQ(m.t, Rational(2, 3));
  EXPECT_EQ(m.i, Rational(2, 3));
  EXPECT_EQ(m.d, Rational(1, 2));
}

TEST(ComputeMetrics, AlternatingFive)
{
  auto m = metrics_of(alternating_group(5));
  EXPECT_EQ(m.degree_sum, 16u);
  EXPECT_EQ(m.involution_count, 16u);
  EXPECT_EQ(m.class_number, 5u);
  EXPECT_EQ(m.t, Rational(4, 15));
  EXPECT_EQ(m.d, Rational(1, 12));
}

TEST(ComputeMetrics, Quaternion)
{
  auto m = metrics_of(builtin_group("quaternion"));
  EXPECT_EQ(m.degree_sum, 6u);
  EXPECT_EQ(m.involution_count, 2u);
  EXPECT_EQ(m.class_number, 5u);
  EXPECT_EQ(m.i, Rational(1, 4));
  EXPECT_EQ(m.t, Rational(3, 4));
  EXPECT_TRUE(sandwich_holds(m));
}

TEST(ComputeMetrics, Invariants)
{
  for (auto const *spec : {"symmetric:4", "cyclic:6", "dihedral:2", "extraspecial:27:3", "psl2:7", "sl2:3",
                           "product:quaternion,cyclic:2"}) {
    auto g = builtin_group(spec);
    auto m = metrics_of(g);
    EXPECT_GE(m.degree_sum, m.class_number) << spec;
    EXPECT_LE(m.degree_sum, m.order) << spec;
    EXPECT_EQ(m.degree_sum == m.order, m.class_number == m.order) << spec;
    EXPECT_EQ(m.d == 1, g.is_abelian()) << spec;
    EXPECT_TRUE(sandwich_holds(m)) << spec;
    EXPECT_LE(m.involution_count, m.degree_sum) << spec;
    EXPECT_LE(m.degree_sum * m.degree_sum, m.class_number * m.order) << spec;
    EXPECT_EQ(m.involution_count, oracle::involutions(to_oracle(g))) << spec;
  }
}

TEST(CommutingPairs, MatchesOracleAndClassEquation)
{
  for (auto const *spec : {"symmetric:3", "quaternion", "dihedral:4", "alternating:5", "extraspecial:27:9",
                           "cyclic:10", "metacyclic:7:3:2"}) {
    auto g = builtin_group(spec);
    auto o = to_oracle(g);
    Rational expected(big(oracle::commuting_pairs(o)), big(o.order() * o.order()));
    expected.canonicalize();
    auto r = commuting_pairs_bruteforce(g);
    EXPECT_EQ(r, expected) << spec;
    EXPECT_EQ(r, make_rational(g.class_count(), g.order())) << spec;
  }
  EXPECT_EQ(commuting_pairs_bruteforce(symmetric_group(3)), Rational(1, 2));
  EXPECT_EQ(commuting_pairs_bruteforce(builtin_group("quaternion")), Rational(5, 8));
  EXPECT_EQ(commuting_pairs_bruteforce(cyclic_group(7)), Rational(1));
}

TEST(CommutingPairs, CapEnforced)
{
  auto g = symmetric_group(5);
  EXPECT_THROW(commuting_pairs_bruteforce(g, {100}), CapacityError);
  EXPECT_NO_THROW(commuting_pairs_bruteforce(g, {120}));
}

TEST(HalfBoundWitness, AlternatingFourIsTheBoundary)
{
  auto g = alternating_group(4);
  auto w = half_bound_witness(g, character_degrees(g));
  EXPECT_EQ(w.lhs, 3u);
  EXPECT_EQ(w.rhs, 3u);
  EXPECT_FALSE(w.verdict);
  EXPECT_FALSE(w.direct);
  EXPECT_TRUE(w.consistent());
}

TEST(HalfBoundWitness, SymmetricThree)
{
  auto g = symmetric_group(3);
  auto w = half_bound_witness(g, character_degrees(g));
  EXPECT_EQ(w.lhs, 0u);
  EXPECT_EQ(w.rhs, 2u);
  EXPECT_TRUE(w.verdict);
  EXPECT_TRUE(w.consistent());
}

TEST(HalfBoundWitness, AlternatingFive)
{
  auto g = alternating_group(5);
  auto w = half_bound_witness(g, character_degrees(g));
  EXPECT_EQ(w.lhs, 29u);
  EXPECT_EQ(w.rhs, 1u);
  EXPECT_FALSE(w.verdict);
  EXPECT_TRUE(w.consistent());
}

TEST(HalfBoundWitness, InconsistentInputIsReported)
{
  // Degrees that cannot belong to a group of order 6 with |G:G′| = 2.
  std::vector<std::uint64_t> degrees{1, 1, 1, 1, 1, 1};
  auto w = half_bound_witness(6, degrees, 2);
  EXPECT_FALSE(w.consistent());
}
