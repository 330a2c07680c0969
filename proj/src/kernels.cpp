#include "gds/kernels.hpp"

#include <omp.h>

namespace gds::kernels
{

namespace
{

bool squares_to_identity(PermutationGroup const &g, ElementId x)
{
  auto img = g.images(x);
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[img[i]] != i)
      return false;
  return true;
}

std::uint64_t commuting_row(PermutationGroup const &g, ElementId x)
{
  std::uint64_t count = 0;
  for (ElementId y = 0; y < g.order(); ++y)
    count += g.commute(x, y);
  return count;
}

// Fills column k: for every y in C_j, z_k y^-1 lies in C_i.
void class_matrix_column(PermutationGroup const &g, std::size_t j, std::size_t k,
                         CountMatrix &out)
{
  auto z = g.classes()[k].representative;
  for (auto y : g.classes()[j].elements) {
    auto i = g.class_of(g.multiply(z, g.inverse(y)));
    ++out.data[i * out.size + k];
  }
}

} // namespace

namespace serial
{

std::uint64_t commuting_pairs(PermutationGroup const &g)
{
  std::uint64_t total = 0;
  for (ElementId x = 0; x < g.order(); ++x)
    total += commuting_row(g, x);
  return total;
}

std::uint64_t involution_count(PermutationGroup const &g)
{
  std::uint64_t total = 0;
  for (ElementId x = 0; x < g.order(); ++x)
    total += squares_to_identity(g, x);
  return total;
}

CountMatrix class_matrix(PermutationGroup const &g, std::size_t j)
{
  auto k = g.class_count();
  CountMatrix out{k, std::vector<std::uint64_t>(k * k, 0)};
  for (std::size_t col = 0; col < k; ++col)
    class_matrix_column(g, j, col, out);
  return out;
}

} // namespace serial

namespace parallel
{

std::uint64_t commuting_pairs(PermutationGroup const &g)
{
  std::uint64_t total = 0;
  auto n = static_cast<long long>(g.order());
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16)
  for (long long x = 0; x < n; ++x)
    total += commuting_row(g, static_cast<ElementId>(x));
  return total;
}

std::uint64_t involution_count(PermutationGroup const &g)
{
  std::uint64_t total = 0;
  auto n = static_cast<long long>(g.order());
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (long long x = 0; x < n; ++x)
    total += squares_to_identity(g, static_cast<ElementId>(x));
  return total;
}

CountMatrix class_matrix(PermutationGroup const &g, std::size_t j)
{
  auto k = g.class_count();
  CountMatrix out{k, std::vector<std::uint64_t>(k * k, 0)};
  auto columns = static_cast<long long>(k);
  // Each column is written by exactly one thread.
#pragma omp parallel for schedule(dynamic, 1)
  for (long long col = 0; col < columns; ++col)
    class_matrix_column(g, j, static_cast<std::size_t>(col), out);
  return out;
}

} // namespace parallel

} // namespace gds::kernels
