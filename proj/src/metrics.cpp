#include "gds/metrics.hpp"

#include <numeric>

#include "gds/errors.hpp"
#include "gds/kernels.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

GroupMetrics compute_metrics(PermutationGroup const &g, std::span<const std::uint64_t> degrees)
{
  GroupMetrics m;
  m.order = g.order();
  m.class_number = g.class_count();
  m.degree_sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t(0));
  m.involution_count = kernels::involution_count(g);
  m.t = make_rational(m.degree_sum, m.order);
  m.d = make_rational(m.class_number, m.order);
  m.i = make_rational(m.involution_count, m.order);
  return m;
}

bool sandwich_holds(GroupMetrics const &m)
{
  return m.i * m.i <= m.t * m.t && m.t * m.t <= m.d;
}

Rational commuting_pairs_bruteforce(PermutationGroup const &g, BruteForceOptions const &options)
{
  if (g.order() > options.order_cap)
    throw CapacityError("commuting-pair enumeration capped at |G| <= " +
                        std::to_string(options.order_cap));
  auto pairs = kernels::commuting_pairs(g);
  Rational r(big(pairs), big(g.order()) * big(g.order()));
  r.canonicalize();
  return r;
}

HalfBoundWitness half_bound_witness(std::uint64_t order,
                                    std::span<const std::uint64_t> degrees,
                                    std::uint64_t derived_index)
{
  HalfBoundWitness w;
  std::uint64_t linear = 0;
  std::uint64_t sum = 0;
  for (auto d : degrees) {
    sum += d;
    if (d >= 3)
      w.lhs += d * d - 2 * d;
    if (d == 1)
      ++linear;
  }
  w.linear_characters = linear;
  w.rhs = derived_index;
  w.verdict = w.lhs < w.rhs;
  w.direct = 2 * sum > order;
  return w;
}

HalfBoundWitness half_bound_witness(PermutationGroup const &g, std::span<const std::uint64_t> degrees)
{
  auto derived = derived_and_center(g).derived;
  return half_bound_witness(g.order(), degrees, g.order() / derived.order());
}

} // namespace gds
