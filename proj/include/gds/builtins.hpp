#ifndef GDS_BUILTINS_HPP
#define GDS_BUILTINS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gds/group.hpp"

namespace gds
{

/// GF(q) for small prime powers q, with addition and multiplication tables.
/// Element 0 is zero, 1 is one; elements are polynomials over F_p in base-p digits.
class FiniteField
{
public:
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  /// A generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }
  /// Additive basis 1, x, ..., x^(k-1) over the prime field.
  std::vector<unsigned> basis() const;

private:
  unsigned q_, p_, k_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
};

PermutationGroup cyclic_group(unsigned n);
/// Dihedral group of order 2n acting on n points (n = 2 gives the Klein four-group).
PermutationGroup dihedral_group(unsigned n);
PermutationGroup symmetric_group(unsigned n);
PermutationGroup alternating_group(unsigned n);
/// Dicyclic group of order 4n; n a power of two gives the generalized quaternion group.
PermutationGroup dicyclic_group(unsigned n);
/// C_m ⋊ C_n with the generator of C_n acting as multiplication by r (r^n ≡ 1 mod m).
PermutationGroup metacyclic_group(unsigned m, unsigned n, unsigned r);
/// Extraspecial group of order 27 with the given exponent (3 or 9).
PermutationGroup extraspecial_27(unsigned exponent);
/// SL(2,q) on the nonzero vectors of GF(q)^2.
PermutationGroup sl2(unsigned q);
/// PSL(2,q) on the projective line.
PermutationGroup psl2(unsigned q);
/// PGL(2,q) on the projective line.
PermutationGroup pgl2(unsigned q);
/// PSL(3,q) on the points of the projective plane.
PermutationGroup psl3(unsigned q);

/// The right regular representation of a group given by a multiplication rule
/// on {0, ..., order-1} with 0 as identity.
PermutationGroup regular_representation(std::string name,
                                        unsigned order,
                                        std::function<unsigned(unsigned, unsigned)> const &multiply,
                                        std::vector<unsigned> const &generators);

/// Parses specs such as "symmetric:3", "psl2:7", "product:alternating:5,cyclic:2".
/// The left factor of a product may not itself be a product; the right may.
PermutationGroup builtin_group(std::string const &spec, GroupOptions const &options = {});

} // namespace gds

#endif // GDS_BUILTINS_HPP
