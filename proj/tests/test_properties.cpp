// Invariants checked on groups generated by random permutations (fixed seeds).
#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gds/analysis.hpp"
#include "gds/builtins.hpp"
#include "gds/character_table.hpp"
#include "gds/isoclinism.hpp"
#include "gds/metrics.hpp"
#include "gds/subgroup.hpp"
#include "support.hpp"

using namespace gds;
using testing_support::random_group;
using testing_support::to_oracle;

namespace
{

std::vector<PermutationGroup> sample_groups(std::uint64_t seed, std::size_t count)
{
  std::mt19937_64 rng(seed);
  std::vector<PermutationGroup> groups;
  while (groups.size() < count) {
    std::size_t degree = 3 + rng() % 5; // 3..7
    std::size_t gens = 1 + rng() % 2;
    auto g = random_group(rng, degree, gens);
    if (g.order() > 720)
      continue;
    groups.push_back(std::move(g));
  }
  return groups;
}

} // namespace

class RandomGroups : public ::testing::TestWithParam<std::uint64_t>
{
protected:
  std::vector<PermutationGroup> groups = sample_groups(GetParam(), 12);
};

TEST_P(RandomGroups, ClassesMatchOracle)
{
  for (auto const &g : groups) {
    auto oc = oracle::classes(to_oracle(g));
    ASSERT_EQ(g.class_count(), oc.size());
    std::multiset<std::size_t> a, b;
    for (auto const &c : oc)
      a.insert(c.size());
    for (auto const &c : g.classes()) {
      b.insert(c.size());
      EXPECT_EQ(g.order() % c.size(), 0u);
    }
    EXPECT_EQ(a, b);
  }
}

TEST_P(RandomGroups, ProfileImplications)
{
  for (auto const &g : groups) {
    auto p = structural_predicates(g);
    EXPECT_TRUE(!p.abelian || p.nilpotent);
    EXPECT_TRUE(!p.nilpotent || p.supersolvable);
    EXPECT_TRUE(!p.supersolvable || p.solvable);
    bool all_p = std::all_of(p.p_solvable.begin(), p.p_solvable.end(), [](auto const &e) { return e.second; });
    EXPECT_EQ(p.solvable, all_p);
    EXPECT_EQ(p.fitting_height.has_value(), p.solvable);
    if (p.fitting_height) {
      EXPECT_EQ(*p.fitting_height == 0, g.order() == 1);
      if (p.abelian && g.order() > 1)
        EXPECT_EQ(*p.fitting_height, 1u);
    }
    auto product = std::accumulate(p.chief_factors.begin(), p.chief_factors.end(), std::uint64_t(1),
                                   std::multiplies<>());
    EXPECT_EQ(product, g.order());
    EXPECT_EQ(p.abelian, g.is_abelian());
  }
}

TEST_P(RandomGroups, DerivedAndCenterMatchOracle)
{
  for (auto const &g : groups) {
    auto o = to_oracle(g);
    auto dc = derived_and_center(g);
    EXPECT_EQ(dc.derived.order(), oracle::derived(o).size());
    EXPECT_EQ(dc.center.order(), oracle::center(o).size());
    auto q = quotient_group(g, dc.derived);
    EXPECT_EQ(q.group.class_count(), q.group.order());
    auto same = quotient_group(g, trivial_subgroup(g));
    EXPECT_EQ(same.group.class_count(), g.class_count());
    EXPECT_EQ(q.group.class_count(), oracle::quotient_class_count(o, {dc.derived.elements.begin(), dc.derived.elements.end()}));
  }
}

TEST_P(RandomGroups, CharacterTablesAndMetrics)
{
  for (auto const &g : groups) {
    auto chars = character_table_mod_p(g);
    EXPECT_TRUE(satisfies_orthogonality(chars));
    std::vector<std::uint64_t> degrees = chars.degrees;
    std::uint64_t squares = 0;
    for (auto d : degrees)
      squares += d * d;
    EXPECT_EQ(squares, g.order());
    auto m = compute_metrics(g, degrees);
    EXPECT_TRUE(sandwich_holds(m));
    EXPECT_LE(m.involution_count, m.degree_sum);
    EXPECT_LE(m.degree_sum * m.degree_sum, m.class_number * m.order);
    EXPECT_EQ(commuting_pairs_bruteforce(g), m.d);
    EXPECT_TRUE(half_bound_witness(g, degrees).consistent());
  }
}

TEST_P(RandomGroups, InvariantUnderAbelianFactor)
{
  auto c2 = cyclic_group(2);
  for (auto const &g : groups) {
    if (g.order() > 120)
      continue;
    auto h = direct_product(g, c2);
    auto mg = compute_metrics(g, character_degrees(g));
    auto mh = compute_metrics(h, character_degrees(h));
    EXPECT_EQ(mg.t, mh.t);
    EXPECT_EQ(mg.d, mh.d);
    if (g.order() / derived_and_center(g).center.order() <= 24)
      EXPECT_TRUE(are_isoclinic(g, h));
  }
}

TEST_P(RandomGroups, NormalSubgroupsAreNormal)
{
  for (auto const &g : groups) {
    if (g.order() > 200)
      continue;
    auto o = to_oracle(g);
    for (auto const &n : normal_subgroups(g)) {
      EXPECT_TRUE(oracle::is_normal(o, {n.elements.begin(), n.elements.end()}));
      EXPECT_EQ(g.order() % n.order(), 0u);
    }
  }
}

TEST_P(RandomGroups, RecordsAreDeterministic)
{
  for (auto const &g : groups) {
    auto a = to_json(analyze_group(g)).dump();
    auto b = to_json(analyze_group(g)).dump();
    EXPECT_EQ(a, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGroups, ::testing::Values(1u, 7u, 42u, 2024u));
