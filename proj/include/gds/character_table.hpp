#ifndef GDS_CHARACTER_TABLE_HPP
#define GDS_CHARACTER_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gds/group.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

/// Irreducible characters of a group with values reduced modulo a prime.
///
/// The modulus p satisfies p ≡ 1 (mod exp(G)) and p > 2|G|, so every degree,
/// every inner product of characters and every restriction multiplicity is
/// determined by its residue.
struct CharacterData
{
  std::string group_name;
  std::uint64_t group_order = 0;
  std::uint64_t modulus = 0;
  std::uint64_t exponent = 1;                  // exp(G)
  std::vector<std::uint64_t> class_sizes;      // column order = group class order
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint64_t> degrees;          // row order
  std::vector<std::vector<std::uint64_t>> table; // table[row][class]

  std::size_t class_count() const { return class_sizes.size(); }
};

struct CharacterTableOptions
{
  /// Force a modulus (must be prime, ≡ 1 mod exp(G) and > 2|G|).
  std::optional<std::uint64_t> modulus;
};

/// The smallest prime p ≡ 1 (mod exp(G)) with p > 2|G|.
std::uint64_t choose_modulus(PermutationGroup const &g);

/// Dixon–Burnside: common eigenvectors of the class multiplication matrices
/// over F_p give the central characters, from which degrees and values follow.
/// Rows are sorted by degree, then by residue vector.
CharacterData character_table_mod_p(PermutationGroup const &g,
                                    CharacterTableOptions const &options = {});

/// Sorted multiset of irreducible degrees.
std::vector<std::uint64_t> character_degrees(PermutationGroup const &g);

/// Row and column orthogonality modulo p, plus sum of squared degrees = |G|.
bool satisfies_orthogonality(CharacterData const &chars);

/// fusion[c] = class of the parent containing class c of the subgroup group.
std::vector<std::uint32_t> class_fusion(PermutationGroup const &parent,
                                        PermutationGroup const &subgroup_group);

/// entry (i, j) = <χ_i restricted to N, θ_j> for χ_i in Irr(G), θ_j in Irr(N).
///
/// `n_group` is `n` as a stand-alone group and `chars_n` its table computed
/// with the modulus of `chars_g`. Throws DomainError on modulus mismatch or
/// when `n` is not normal.
std::vector<std::vector<std::uint64_t>>
restriction_multiplicities(PermutationGroup const &g,
                           Subgroup const &n,
                           PermutationGroup const &n_group,
                           CharacterData const &chars_g,
                           CharacterData const &chars_n);

} // namespace gds

#endif // GDS_CHARACTER_TABLE_HPP
