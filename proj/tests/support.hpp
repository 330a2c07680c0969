#ifndef GDS_TEST_SUPPORT_HPP
#define GDS_TEST_SUPPORT_HPP

#include <random>

#include "gds/builtins.hpp"
#include "gds/group.hpp"
#include "oracle.hpp"

namespace testing_support
{

inline oracle::Group to_oracle(gds::PermutationGroup const &g)
{
  std::vector<oracle::Perm> gens;
  for (auto const &p : g.generators())
    gens.push_back(oracle::from_one_based(p.one_based()));
  return oracle::enumerate(g.degree(), gens);
}

/// The group generated by `count` uniformly random permutations of `degree` points.
inline gds::PermutationGroup random_group(std::mt19937_64 &rng, std::size_t degree, std::size_t count)
{
  std::vector<gds::Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<gds::Point> images(degree);
    std::iota(images.begin(), images.end(), gds::Point(0));
    std::shuffle(images.begin(), images.end(), rng);
    gens.emplace_back(images);
  }
  return gds::PermutationGroup("random", degree, gens);
}

} // namespace testing_support

#endif // GDS_TEST_SUPPORT_HPP
