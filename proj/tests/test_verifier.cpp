#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gds/analysis.hpp"
#include "gds/builtins.hpp"
#include "gds/errors.hpp"
#include "gds/verifier.hpp"

using namespace gds;

namespace
{

CorpusGroup corpus_group(std::string const &spec)
{
  auto g = std::make_shared<PermutationGroup const>(builtin_group(spec));
  return {g->name(), {}, g};
}

Verdict verdict_of(ClaimId id, std::string const &spec)
{
  auto g = builtin_group(spec);
  auto record = analyze_group(g);
  return evaluate_group_claim(id, g, record).verdict;
}

Subgroup normal_of_order(PermutationGroup const &g, std::size_t order)
{
  for (auto const &n : normal_subgroups(g))
    if (n.order() == order)
      return n;
  throw std::runtime_error("no normal subgroup of that order");
}

} // namespace

TEST(ClaimIds, Parsing)
{
  EXPECT_EQ(claim_from_string("THM_1_3"), ClaimId::THM_1_3);
  EXPECT_EQ(claim_from_string("gallagher"), ClaimId::LEM_2_5);
  EXPECT_THROW(claim_from_string("THM_9_9"), InputError);
  EXPECT_EQ(parse_claim_list("all").size(), all_claims().size());
  EXPECT_EQ(parse_claim_list("THM_1_4,THM_1_1,THM_1_4"), (std::vector<ClaimId>{ClaimId::THM_1_1, ClaimId::THM_1_4}));
  EXPECT_THROW(parse_claim_list(","), InputError);
  for (auto id : all_claims())
    EXPECT_EQ(claim_from_string(to_string(id)), id);
}

TEST(TheoremClaims, AlternatingFourIsNotTriggeredByHalfBound)
{
  EXPECT_EQ(verdict_of(ClaimId::THM_1_4, "alternating:4"), Verdict::NotTriggered);
}

TEST(TheoremClaims, AlternatingFiveTimesTwoUsesTheDirectProductBranch)
{
  auto g = builtin_group("product:alternating:5,cyclic:2");
  auto r = analyze_group(g);
  EXPECT_EQ(r.metrics.degree_sum, 32u);
  EXPECT_TRUE(r.a5_times_abelian);
  EXPECT_FALSE(r.profile.solvable);
  EXPECT_EQ(evaluate_record_claim(ClaimId::THM_1_2, r)->verdict, Verdict::Holds);
}

TEST(TheoremClaims, SpecialLinearFiveSitsExactlyOnTheQuarterBound)
{
  auto r = analyze_group(sl2(5));
  EXPECT_EQ(r.metrics.degree_sum * 4, r.metrics.order);
  EXPECT_FALSE(r.a5_times_abelian); // Z(G) lies inside G′
  EXPECT_EQ(evaluate_record_claim(ClaimId::THM_1_2, r)->verdict, Verdict::NotTriggered);
}

TEST(TheoremClaims, StructureCasesAboveThreeEighths)
{
  for (auto const *spec : {"symmetric:3", "dihedral:4", "quaternion", "product:symmetric:3,cyclic:2"})
    EXPECT_EQ(verdict_of(ClaimId::THM_1_3, spec), Verdict::Holds) << spec;
  // t(D10) = 3/5 and t(ES27) = 5/9 fall below sqrt(3/8), although both have d > 3/8.
  for (auto const *spec : {"dihedral:5", "extraspecial:27:3", "alternating:4"})
    EXPECT_EQ(verdict_of(ClaimId::THM_1_3, spec), Verdict::NotTriggered) << spec;
}

TEST(TheoremClaims, ViolationsAreDetected)
{
  auto r = analyze_group(symmetric_group(3));
  r.profile.supersolvable = false;
  EXPECT_EQ(evaluate_record_claim(ClaimId::THM_1_4, r)->verdict, Verdict::Violated);
  r.rusin_case = RusinCase::None;
  EXPECT_EQ(evaluate_record_claim(ClaimId::THM_1_3, r)->verdict, Verdict::Violated);
  r.profile.p_solvable[3] = false;
  EXPECT_EQ(evaluate_record_claim(ClaimId::THM_1_1, r)->verdict, Verdict::Violated);
  r.half_bound.direct = false;
  EXPECT_EQ(evaluate_record_claim(ClaimId::HALF_EQUIV, r)->verdict, Verdict::Violated);
  r.commuting_bruteforce = Rational(1, 3);
  EXPECT_EQ(evaluate_record_claim(ClaimId::ORACLE_D, r)->verdict, Verdict::Violated);
}

TEST(ClassicalBounds, GustafsonEquality)
{
  for (auto const *spec : {"quaternion", "dihedral:4"}) {
    auto r = analyze_group(builtin_group(spec));
    EXPECT_EQ(r.metrics.d, Rational(5, 8)) << spec;
    EXPECT_EQ(evaluate_record_claim(ClaimId::LEM_2_2, r)->verdict, Verdict::Holds);
  }
}

TEST(ClassicalBounds, FittingIndexBound)
{
  auto r = analyze_group(symmetric_group(3));
  EXPECT_EQ(r.profile.fitting_order, 3u);
  EXPECT_EQ(evaluate_record_claim(ClaimId::LEM_2_4, r)->verdict, Verdict::Holds);
}

TEST(ClassicalBounds, NagaoOnSymmetricFour)
{
  auto g = symmetric_group(4);
  auto r = nagao_check(g);
  EXPECT_EQ(r.normal_subgroups, 4u);
  EXPECT_FALSE(r.failure);
  // k(S4) = 5 <= k(V4) k(S3) = 4 * 3
  auto v4 = normal_of_order(g, 4);
  EXPECT_EQ(subgroup_as_group(g, v4).class_count() * quotient_group(g, v4).group.class_count(), 12u);
}

TEST(OrbitBound, SymmetricFourOverKlein)
{
  auto g = symmetric_group(4);
  auto result = gallagher_check(g, normal_of_order(g, 4));
  ASSERT_EQ(result.orbits.size(), 2u);
  auto const &trivial = result.orbits[0];
  EXPECT_EQ(trivial.characters, (std::vector<std::size_t>{0}));
  EXPECT_EQ(trivial.characters_over, 3u); // the characters of S4/V4
  EXPECT_EQ(trivial.inertia_quotient_classes, 3u);
  auto const &moved = result.orbits[1];
  EXPECT_EQ(moved.characters.size(), 3u);
  EXPECT_EQ(moved.characters_over, 2u);
  EXPECT_EQ(moved.inertia_order, 8u);
  EXPECT_EQ(moved.inertia_quotient_classes, 2u); // D8/V4 is cyclic of order 2
  EXPECT_TRUE(result.holds());
}

TEST(OrbitBound, SymmetricThreeOverThree)
{
  auto g = symmetric_group(3);
  auto result = gallagher_check(g, normal_of_order(g, 3));
  ASSERT_EQ(result.orbits.size(), 2u);
  EXPECT_EQ(result.orbits[1].characters.size(), 2u);
  EXPECT_EQ(result.orbits[1].characters_over, 1u);
  EXPECT_EQ(result.orbits[1].inertia_quotient_classes, 1u);
}

TEST(OrbitBound, WholeGroup)
{
  auto g = dihedral_group(4);
  auto result = gallagher_check(g, whole_group(g));
  EXPECT_EQ(result.orbits.size(), g.class_count());
  for (auto const &o : result.orbits) {
    EXPECT_EQ(o.characters_over, 1u);
    EXPECT_EQ(o.inertia_quotient_classes, 1u);
  }
}

TEST(OrbitBound, CapsAndNormality)
{
  auto g = symmetric_group(5);
  EXPECT_THROW(gallagher_check(g, whole_group(g)), CapacityError);
  auto s3 = symmetric_group(3);
  std::vector<ElementId> t{s3.index_of(Permutation::from_cycles(3, {{1, 2}}))};
  EXPECT_THROW(gallagher_check(s3, closure(s3, t)), DomainError);
}

TEST(GroupClaims, SkippedAboveCaps)
{
  EXPECT_EQ(verdict_of(ClaimId::LEM_2_5, "symmetric:5"), Verdict::Skipped);
  EXPECT_EQ(verdict_of(ClaimId::ISO_INVARIANCE, "symmetric:5"), Verdict::Skipped);
  EXPECT_EQ(verdict_of(ClaimId::LEM_2_3, "psl2:7"), Verdict::Holds);
  EXPECT_EQ(verdict_of(ClaimId::LEM_2_3, "alternating:6"), Verdict::Skipped);
  EXPECT_EQ(verdict_of(ClaimId::ISO_INVARIANCE, "quaternion"), Verdict::Holds);
}

TEST(Verify, DeterministicAcrossJobCounts)
{
  std::vector<CorpusGroup> corpus;
  for (auto const *spec : {"symmetric:4", "quaternion", "alternating:5", "dihedral:5", "symmetric:3", "cyclic:6"})
    corpus.push_back(corpus_group(spec));
  VerifyConfig config;
  config.enforce_vacuity_guards = false;
  std::string reports[2];
  for (int jobs : {1, 4}) {
    config.jobs = jobs;
    std::ostringstream out;
    write_report_jsonl(out, verify(corpus, all_claims(), config));
    reports[jobs == 4] = out.str();
  }
  EXPECT_EQ(reports[0], reports[1]);
  EXPECT_NE(reports[0].find("\"kind\":\"summary\""), std::string::npos);
}

TEST(Verify, RowsSortedByName)
{
  std::vector<CorpusGroup> corpus{corpus_group("symmetric:4"), corpus_group("alternating:4"), corpus_group("quaternion")};
  auto result = verify(corpus, {ClaimId::LEM_2_1});
  std::vector<std::string> names;
  for (auto const &row : result.reports[0].rows)
    names.push_back(row.group);
  EXPECT_EQ(names, (std::vector<std::string>{"A4", "Q8", "S4"}));
}

TEST(Verify, VacuityGuardFailsWithoutTriggeringGroups)
{
  // Neither group has T > |G|/4.
  std::vector<CorpusGroup> corpus{corpus_group("symmetric:5"), corpus_group("psl2:7")};
  auto result = verify(corpus, {ClaimId::THM_1_2});
  EXPECT_TRUE(result.reports[0].counterexamples.empty());
  EXPECT_TRUE(result.reports[0].vacuous());
  EXPECT_FALSE(result.passed());

  VerifyConfig relaxed;
  relaxed.enforce_vacuity_guards = false;
  EXPECT_TRUE(verify(corpus, {ClaimId::THM_1_2}, relaxed).passed());
}

TEST(Verify, CacheReusesRecords)
{
  auto dir = std::filesystem::temp_directory_path() / "gds-verifier-cache-test";
  std::filesystem::remove_all(dir);
  auto g = corpus_group("symmetric:4");
  g.content_hash = "0123456789abcdef";
  VerifyConfig config;
  config.cache_dir = dir.string();
  config.enforce_vacuity_guards = false;
  auto first = verify({g}, {ClaimId::THM_1_4}, config);
  std::size_t files = 0;
  for ([[maybe_unused]] auto const &e : std::filesystem::directory_iterator(dir))
    ++files;
  EXPECT_EQ(files, 1u);
  auto second = verify({g}, {ClaimId::THM_1_4}, config);
  EXPECT_EQ(to_json(first.records[0]), to_json(second.records[0]));
  std::filesystem::remove_all(dir);
}
