#ifndef GDS_METRICS_HPP
#define GDS_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gds/group.hpp"
#include "gds/rational.hpp"

namespace gds
{

/// Exact invariants of one group: T(G) = Σ χ(1), k(G), I(G) = |{x : x² = 1}|
/// and the ratios t = T/|G|, d = k/|G|, i = I/|G|.
struct GroupMetrics
{
  std::uint64_t order = 0;
  std::uint64_t class_number = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t involution_count = 0;
  Rational t;
  Rational d;
  Rational i;
};

GroupMetrics compute_metrics(PermutationGroup const &g, std::span<const std::uint64_t> degrees);

/// i ≤ t ≤ √d, compared as i² ≤ t² ≤ d.
bool sandwich_holds(GroupMetrics const &m);

struct BruteForceOptions
{
  std::size_t order_cap = 6000;
};

/// |{(x, y) : xy = yx}| / |G|² by direct enumeration. Throws CapacityError
/// above the cap; callers fall back to k/|G|.
Rational commuting_pairs_bruteforce(PermutationGroup const &g, BruteForceOptions const &options = {});

/// Integer form of T(G) > |G|/2: Σ_{χ(1) ≥ 3} (χ(1)² − 2χ(1)) < |G:G′|.
struct HalfBoundWitness
{
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool verdict = false;        // lhs < rhs
  bool direct = false;         // 2T > |G|
  std::uint64_t linear_characters = 0;

  /// The equivalence holds and the linear characters number |G:G′|.
  bool consistent() const { return verdict == direct && linear_characters == rhs; }
};

/// `derived_index` is |G:G′|.
HalfBoundWitness half_bound_witness(std::uint64_t order,
                                    std::span<const std::uint64_t> degrees,
                                    std::uint64_t derived_index);

HalfBoundWitness half_bound_witness(PermutationGroup const &g, std::span<const std::uint64_t> degrees);

} // namespace gds

#endif // GDS_METRICS_HPP
