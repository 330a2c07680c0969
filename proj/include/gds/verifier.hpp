#ifndef GDS_VERIFIER_HPP
#define GDS_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gds/analysis.hpp"
#include "gds/group.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

enum class ClaimId
{
  THM_1_1,        // k ≥ 3|G|/p² or T ≥ (√3/p)|G|  ⇒ p-solvable
  THM_1_2,        // T > |G|/4 ⇒ solvable of Fitting height ≤ 4, or A5 × abelian
  THM_1_3,        // T > √(3/8)|G| ⇒ abelian or one of the four structure cases
  THM_1_4,        // T > |G|/2 ⇒ supersolvable
  LEM_2_1,        // i ≤ t ≤ √d
  LEM_2_2,        // non-abelian ⇒ d ≤ 5/8
  LEM_2_3,        // k(G) ≤ k(N) k(G/N) for every normal N
  LEM_2_4,        // d ≤ |G:F(G)|^(-1/2)
  LEM_2_5,        // characters over a G-orbit on Irr(N) number at most k(I(θ)/N)
  CITED_4_15,     // T > (4/15)|G| ⇒ solvable
  CITED_2_3,      // T > (2/3)|G| ⇒ nilpotent
  HALF_EQUIV,     // 2T > |G| ⇔ Σ_{χ(1)≥3}(χ(1)²−2χ(1)) < |G:G′|
  ISO_INVARIANCE, // t and d agree on G and G × A for small abelian A
  ORACLE_D,       // brute-force commuting probability = k/|G|, Σ χ(1)² = |G|
};

std::vector<ClaimId> all_claims();
std::string to_string(ClaimId id);
/// Also accepts GALLAGHER as an alias of LEM_2_5. Throws InputError.
ClaimId claim_from_string(std::string const &name);
/// Comma-separated list or "all".
std::vector<ClaimId> parse_claim_list(std::string const &list);

enum class Verdict
{
  Holds,
  NotTriggered,
  Violated,
  Skipped,
};

std::string to_string(Verdict v);

struct ClaimRow
{
  std::string group;
  Verdict verdict = Verdict::NotTriggered;
  std::string detail;
};

struct Counterexample
{
  std::string group;
  std::string detail;
  nlohmann::ordered_json metrics; // the full analysis record
};

struct ClaimReport
{
  ClaimId claim_id = ClaimId::THM_1_1;
  std::size_t groups_checked = 0;
  std::size_t hypotheses_triggered = 0;
  std::size_t min_triggers = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<ClaimRow> rows; // sorted by group name

  bool vacuous() const { return hypotheses_triggered < min_triggers; }
  bool passed() const { return counterexamples.empty() && !vacuous(); }
};

struct VerifyConfig
{
  std::uint64_t max_prime = 31;
  std::size_t bruteforce_cap = 6000;
  std::size_t normal_subgroup_order_cap = 200; // LEM_2_3
  std::size_t gallagher_order_cap = 48;        // LEM_2_5
  std::size_t iso_order_cap = 100;             // ISO_INVARIANCE
  std::size_t isoclinism_quotient_cap = 24;
  bool enforce_vacuity_guards = true;
  std::map<ClaimId, std::size_t> min_triggers = {
    {ClaimId::THM_1_1, 1}, {ClaimId::THM_1_2, 2}, {ClaimId::THM_1_3, 5},
    {ClaimId::THM_1_4, 4}, {ClaimId::LEM_2_2, 1}, {ClaimId::CITED_4_15, 1},
    {ClaimId::CITED_2_3, 1},
  };
  int jobs = 1;
  std::optional<std::string> cache_dir;
};

/// Per-group evaluation of a claim that only needs the analysis record.
/// Returns nullopt for claims that need the group itself.
std::optional<ClaimRow> evaluate_record_claim(ClaimId id, AnalysisRecord const &record,
                                              VerifyConfig const &config = {});

/// Group-level claims (LEM_2_3, LEM_2_5, ISO_INVARIANCE) on one group.
ClaimRow evaluate_group_claim(ClaimId id, PermutationGroup const &g,
                              AnalysisRecord const &record, VerifyConfig const &config = {});

struct GallagherOrbit
{
  std::vector<std::size_t> characters;  // rows of Irr(N) in the orbit
  std::size_t characters_over = 0;      // |{χ ∈ Irr(G) : χ lies over the orbit}|
  std::uint64_t inertia_order = 0;      // |I(θ)| for the first character of the orbit
  std::uint64_t inertia_quotient_classes = 0; // k(I(θ)/N)
  bool holds() const { return characters_over <= inertia_quotient_classes; }
};

struct GallagherResult
{
  std::vector<GallagherOrbit> orbits;
  bool holds() const;
};

struct GallagherOptions
{
  std::size_t order_cap = 48;
};

/// Throws CapacityError above the cap and DomainError if N is not normal.
GallagherResult gallagher_check(PermutationGroup const &g, Subgroup const &n,
                                GallagherOptions const &options = {});

/// k(G) ≤ k(N) k(G/N) for every normal subgroup; returns the first failing N's order or nullopt.
struct NagaoResult
{
  std::size_t normal_subgroups = 0;
  std::optional<std::string> failure;
};
NagaoResult nagao_check(PermutationGroup const &g);

struct CorpusGroup
{
  std::string name;
  std::string content_hash; // cache key; empty disables caching
  std::shared_ptr<PermutationGroup const> group;
};

struct VerificationResult
{
  std::vector<ClaimReport> reports;
  std::vector<AnalysisRecord> records; // sorted by name
  bool passed() const;
};

/// Analyzes the corpus (in parallel across groups) and evaluates each claim.
VerificationResult verify(std::vector<CorpusGroup> const &corpus,
                          std::vector<ClaimId> const &claims,
                          VerifyConfig const &config = {});

/// One row per (claim, group) followed by a summary row per claim.
void write_report_jsonl(std::ostream &out, VerificationResult const &result);

} // namespace gds

#endif // GDS_VERIFIER_HPP
