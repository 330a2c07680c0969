#ifndef GDS_PERMUTATION_HPP
#define GDS_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gds
{

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1} stored as an image array.
///
/// Permutations act on the right: `(a * b)(i) == b(a(i))`, so `a * b` means
/// "apply a, then b". Commutators are `[a, b] = a^-1 b^-1 a b` and conjugates
/// `a^b = b^-1 a b`.
class Permutation
{
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Zero-based images. Throws InputError if not a bijection.
  explicit Permutation(std::vector<Point> images);

  /// One-based images as they appear in group files. Throws InputError.
  static Permutation from_one_based(std::span<const long long> images);

  /// Product of disjoint or overlapping cycles given with one-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::vector<int>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;

  /// Direct sum: this acts on the first degree() points, rhs on the rest.
  Permutation direct_sum(Permutation const &rhs) const;

  std::vector<long long> one_based() const;
  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

} // namespace gds

#endif // GDS_PERMUTATION_HPP
