#ifndef GDS_ANALYSIS_HPP
#define GDS_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gds/group.hpp"
#include "gds/isoclinism.hpp"
#include "gds/metrics.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

inline constexpr int analysis_schema_version = 1;

/// Everything the theorem checks need to know about one group.
struct AnalysisRecord
{
  int schema_version = analysis_schema_version;
  std::string name;
  std::uint64_t degree = 0;
  GroupMetrics metrics;
  std::vector<std::uint64_t> degrees; // sorted
  std::uint64_t modulus = 0;
  std::uint64_t exponent = 1;
  StructuralProfile profile;
  RusinCase rusin_case = RusinCase::None;
  bool stem = false;
  /// G′ is a perfect group of order 60, G′ ∩ Z(G) = 1 and G = G′ Z(G).
  bool a5_times_abelian = false;
  HalfBoundWitness half_bound;
  std::optional<Rational> commuting_bruteforce; // absent above the brute-force cap
  std::map<std::string, std::string> verdicts;  // theorem id -> holds / not-triggered / violated

  std::uint64_t central_quotient_order() const { return metrics.order / profile.center_order; }
};

struct AnalysisOptions
{
  std::size_t bruteforce_cap = 6000;
  std::uint64_t max_prime = 31;
};

AnalysisRecord analyze_group(PermutationGroup const &g, AnalysisOptions const &options = {});

/// Stable key order; rationals as "num/den" strings.
nlohmann::ordered_json to_json(AnalysisRecord const &record);
/// Throws InputError on missing or malformed fields.
AnalysisRecord record_from_json(nlohmann::ordered_json const &j);

} // namespace gds

#endif // GDS_ANALYSIS_HPP
