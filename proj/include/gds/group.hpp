#ifndef GDS_GROUP_HPP
#define GDS_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gds/permutation.hpp"

namespace gds
{

/// Index of an element in the enumerated (lexicographically sorted) element list.
using ElementId = std::uint32_t;

struct ConjugacyClass
{
  ElementId representative; // smallest element id in the class
  std::vector<ElementId> elements;

  std::size_t size() const { return elements.size(); }
};

struct GroupOptions
{
  std::size_t element_cap = 200000;
};

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image array, so the identity is
/// always element 0 and all derived data is reproducible. Conjugacy classes
/// are sorted by representative. Instances are immutable after construction
/// and safe to share between threads; they are move-only because the lookup
/// table refers into the element storage.
class PermutationGroup
{
public:
  PermutationGroup(std::string name,
                   std::size_t degree,
                   std::vector<Permutation> const &generators,
                   GroupOptions const &options = {});

  PermutationGroup(PermutationGroup const &) = delete;
  PermutationGroup &operator=(PermutationGroup const &) = delete;
  PermutationGroup(PermutationGroup &&) noexcept = default;
  PermutationGroup &operator=(PermutationGroup &&) noexcept = default;

  std::string const &name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }

  std::vector<Permutation> const &generators() const { return generators_; }
  std::vector<ElementId> const &generator_ids() const { return generator_ids_; }

  std::span<const Point> images(ElementId x) const
  { return {storage_.data() + std::size_t(x) * degree_, degree_}; }

  Permutation element(ElementId x) const;

  std::optional<ElementId> find(std::span<const Point> images) const;
  std::optional<ElementId> find(Permutation const &p) const { return find(p.images()); }

  /// Like find(), but throws DomainError for non-members.
  ElementId index_of(Permutation const &p) const;

  static constexpr ElementId identity() { return 0; }

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId x, ElementId g) const; // g^-1 x g
  ElementId commutator(ElementId a, ElementId b) const; // a^-1 b^-1 a b
  bool commute(ElementId a, ElementId b) const;

  unsigned element_order(ElementId x) const { return element_orders_[x]; }
  /// Least common multiple of all element orders.
  std::uint64_t exponent() const { return exponent_; }

  std::vector<ConjugacyClass> const &classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  std::uint32_t class_of(ElementId x) const { return class_of_[x]; }

  /// Class index of the class containing inverses of class `c`.
  std::uint32_t inverse_class(std::uint32_t c) const { return inverse_class_[c]; }

  bool is_abelian() const { return classes_.size() == order_; }

private:
  class Table
  {
  public:
    void rebuild(std::vector<Point> const &storage, std::size_t degree, std::size_t count);
    std::optional<ElementId> find(std::vector<Point> const &storage,
                                  std::size_t degree,
                                  std::span<const Point> key) const;
    void insert(std::vector<Point> const &storage, std::size_t degree, ElementId id);

  private:
    static std::uint64_t hash(std::span<const Point> key);
    std::vector<ElementId> slots_;
    std::size_t filled_ = 0;
  };

  void enumerate(GroupOptions const &options);
  void compute_inverses_and_orders();
  void compute_classes();

  std::string name_;
  std::size_t degree_;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> storage_;
  Table table_;
  std::vector<ElementId> inverse_;
  std::vector<unsigned> element_orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;
};

/// Enumerate the group generated by `generators` (image arrays on points 0..degree-1).
PermutationGroup group_from_generators(std::size_t degree,
                                       std::vector<Permutation> const &generators,
                                       std::string name = "G",
                                       GroupOptions const &options = {});

/// Same as above with one-based image arrays as found in group files.
PermutationGroup group_from_generators(std::size_t degree,
                                       std::vector<std::vector<long long>> const &generators,
                                       std::string name = "G",
                                       GroupOptions const &options = {});

/// G x H on degree(G) + degree(H) points.
PermutationGroup direct_product(PermutationGroup const &g,
                                PermutationGroup const &h,
                                GroupOptions const &options = {});

} // namespace gds

#endif // GDS_GROUP_HPP
