#ifndef GDS_SUBGROUP_HPP
#define GDS_SUBGROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gds/group.hpp"

namespace gds
{

/// A subgroup of some PermutationGroup, stored as sorted element ids of
/// that parent together with a (small) generating set.
struct Subgroup
{
  std::vector<ElementId> elements;   // sorted
  std::vector<ElementId> generators;
  bool normal = false;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId x) const;
  bool is_subset_of(Subgroup const &other) const;
  bool is_trivial() const { return elements.size() == 1; }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  { return a.elements == b.elements; }
};

Subgroup trivial_subgroup(PermutationGroup const &g);
Subgroup whole_group(PermutationGroup const &g);

/// Wraps a set of elements known to form a subgroup, computing a small
/// generating set. Throws DomainError if the set is not closed.
Subgroup subgroup_from_elements(PermutationGroup const &g, std::vector<ElementId> elements,
                                bool normal = false);

/// <gens> inside g.
Subgroup closure(PermutationGroup const &g, std::span<const ElementId> gens);

/// Smallest normal subgroup of g containing gens.
Subgroup normal_closure(PermutationGroup const &g, std::span<const ElementId> gens);

/// True iff conjugation by every generator of g preserves h.
bool is_normal(PermutationGroup const &g, Subgroup const &h);

/// [A, B] for normal subgroups A, B of g.
Subgroup commutator_subgroup(PermutationGroup const &g, Subgroup const &a, Subgroup const &b);

/// A ∩ B.
Subgroup intersection(PermutationGroup const &g, Subgroup const &a, Subgroup const &b);

/// A·B for normal subgroups (or whenever AB is a subgroup).
Subgroup join(PermutationGroup const &g, Subgroup const &a, Subgroup const &b);

struct DerivedAndCenter
{
  Subgroup derived;
  Subgroup center;
  /// G = G^(0) > G^(1) > ... ending at the first repeated term.
  std::vector<Subgroup> derived_series;
};

DerivedAndCenter derived_and_center(PermutationGroup const &g);

/// G = γ1 > γ2 > ... ending at the first repeated term.
std::vector<Subgroup> lower_central_series(PermutationGroup const &g);

/// The subgroup h as a stand-alone permutation group on the same points.
PermutationGroup subgroup_as_group(PermutationGroup const &g,
                                   Subgroup const &h,
                                   std::string name = {});

struct Quotient
{
  PermutationGroup group;
  /// projection[x] = image of element x of the parent in `group`.
  std::vector<ElementId> projection;
  /// coset_of[x] = index of the right coset Nx (point acted on by the quotient).
  std::vector<std::uint32_t> coset_of;
};

/// G/N acting on the right cosets of N. Throws DomainError if N is not normal.
Quotient quotient_group(PermutationGroup const &g, Subgroup const &n, std::string name = {});

/// A chief series 1 = N0 < N1 < ... < Nr = G. Each step adds the smallest
/// normal closure over the current term, which is a minimal normal subgroup
/// of the quotient.
std::vector<Subgroup> chief_series(PermutationGroup const &g);

std::vector<std::uint64_t> chief_factor_orders(std::vector<Subgroup> const &series);

/// Primes dividing n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_prime_power_of(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// A Sylow p-subgroup, grown one normalizing p-element at a time.
Subgroup sylow_subgroup(PermutationGroup const &g, std::uint64_t p);

/// O_p(G): the union of classes contained in a Sylow p-subgroup.
Subgroup p_core(PermutationGroup const &g, std::uint64_t p);

struct StructuralProfile
{
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool solvable = false;
  std::map<std::uint64_t, bool> p_solvable; // primes dividing |G|
  std::optional<unsigned> fitting_height;   // absent for non-solvable G
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  /// Number of proper steps until the derived series stabilizes.
  unsigned derived_length = 0;
  std::uint64_t fitting_order = 0;
  std::vector<std::uint64_t> chief_factors;

  bool is_p_solvable(std::uint64_t p) const;
};

StructuralProfile structural_predicates(PermutationGroup const &g);

struct FittingData
{
  Subgroup fitting;
  std::optional<unsigned> height;
};

FittingData fitting_data(PermutationGroup const &g);

/// Throws DomainError("undefined for non-solvable input") when g is not solvable.
unsigned fitting_height(PermutationGroup const &g);

/// Every normal subgroup of g, ordered by (order, elements).
/// Throws CapacityError when more than `cap` are found.
std::vector<Subgroup> normal_subgroups(PermutationGroup const &g, std::size_t cap = 100000);

} // namespace gds

#endif // GDS_SUBGROUP_HPP
