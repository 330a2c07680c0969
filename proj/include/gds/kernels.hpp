#ifndef GDS_KERNELS_HPP
#define GDS_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "gds/group.hpp"

/// Data-parallel inner loops. Every kernel has a serial reference version and
/// an OpenMP version; both return identical integer results. The parallel
/// versions are what the library calls; the serial ones back the tests and
/// the benchmark.
namespace gds::kernels
{

/// Row-major k x k matrix of structure-constant counts.
struct CountMatrix
{
  std::size_t size = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t operator()(std::size_t row, std::size_t col) const
  { return data[row * size + col]; }

  friend bool operator==(CountMatrix const &, CountMatrix const &) = default;
};

namespace serial
{

/// |{(x, y) in G x G : xy = yx}|
std::uint64_t commuting_pairs(PermutationGroup const &g);

/// |{x in G : x^2 = 1}|, identity included.
std::uint64_t involution_count(PermutationGroup const &g);

/// Class multiplication matrix for class j:
/// entry (i, k) = |{(x, y) in C_i x C_j : xy = z_k}| for the representative z_k of C_k.
CountMatrix class_matrix(PermutationGroup const &g, std::size_t j);

} // namespace serial

namespace parallel
{

std::uint64_t commuting_pairs(PermutationGroup const &g);
std::uint64_t involution_count(PermutationGroup const &g);
CountMatrix class_matrix(PermutationGroup const &g, std::size_t j);

} // namespace parallel

using parallel::class_matrix;
using parallel::commuting_pairs;
using parallel::involution_count;

} // namespace gds::kernels

#endif // GDS_KERNELS_HPP
