#ifndef GDS_ISOCLINISM_HPP
#define GDS_ISOCLINISM_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gds/group.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

/// The commutator map G/Z(G) x G/Z(G) -> G′.
struct CommutatorPairing
{
  Quotient central_quotient;
  Subgroup center;
  Subgroup derived;
  std::vector<ElementId> representatives; // a preimage in G of each quotient element
  std::vector<ElementId> table;           // table[a * |Q| + b] = [rep a, rep b]

  std::size_t quotient_order() const { return representatives.size(); }
  ElementId operator()(ElementId a, ElementId b) const
  { return table[std::size_t(a) * representatives.size() + b]; }
};

CommutatorPairing commutator_pairing(PermutationGroup const &g);

/// [az, bz'] = [a, b] for all coset representatives. Checked exhaustively.
bool pairing_well_defined(PermutationGroup const &g, CommutatorPairing const &pairing);

/// Z(G) ⊆ G′.
bool stem_check(PermutationGroup const &g);

struct IsoclinismOptions
{
  std::size_t quotient_cap = 24;
};

/// Exhaustive search for compatible isomorphisms G/Z(G) -> H/Z(H) and G′ -> H′.
/// Returns false at once when the orders of the central quotients or derived
/// subgroups differ; throws CapacityError when |G/Z(G)| exceeds the cap.
bool are_isoclinic(PermutationGroup const &g,
                   PermutationGroup const &h,
                   IsoclinismOptions const &options = {});

struct ProportionCheck
{
  bool holds = false;
  bool degree_sums_proportional = false;
  /// degree -> (multiplicity in G, multiplicity in H)
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> multiplicities;
};

/// For isoclinic G and H: the same degrees occur, with m_d |H| = n_d |G| for
/// each degree d, hence T(G)|H| = T(H)|G|. A failure is a verdict, not an error.
ProportionCheck multiplicity_proportion_check(std::uint64_t order_g,
                                              std::uint64_t order_h,
                                              std::span<const std::uint64_t> degrees_g,
                                              std::span<const std::uint64_t> degrees_h);

enum class RusinCase
{
  TwoGroup,
  ThreeGroup,
  S3Type,
  D10Type,
  None,
};

std::string to_string(RusinCase c);
RusinCase rusin_case_from_string(std::string const &s);

struct RusinClassification
{
  RusinCase case_id = RusinCase::None;
  std::uint64_t central_quotient_order = 0;
  std::uint64_t derived_order = 0;
};

/// The structure cases for groups with commuting probability above 3/8:
/// G/Z(G) and G′ both 2-groups, both 3-groups, G/Z(G) ≅ S3 with |G′| = 3,
/// or G/Z(G) ≅ D10 with |G′| = 5. First match wins.
RusinClassification rusin_case_classify(std::uint64_t central_quotient_order,
                                        std::uint64_t derived_order);
RusinClassification rusin_case_classify(PermutationGroup const &g);

} // namespace gds

#endif // GDS_ISOCLINISM_HPP
