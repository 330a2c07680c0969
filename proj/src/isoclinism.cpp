#include "gds/isoclinism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gds/errors.hpp"

namespace gds
{

namespace
{

constexpr auto unset = ElementId(-1);

// Greedy small generating set: repeatedly add the element whose inclusion
// gives the largest closure.
std::vector<ElementId> small_generating_set(PermutationGroup const &q)
{
  std::vector<ElementId> gens;
  std::size_t size = 1;
  while (size < q.order()) {
    ElementId best = 0;
    std::size_t best_size = size;
    for (ElementId x = 1; x < q.order(); ++x) {
      auto trial = gens;
      trial.push_back(x);
      auto s = closure(q, trial).order();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    size = best_size;
  }
  return gens;
}

// Extends generator images to a homomorphism by walking the Cayley graph.
// Returns an empty vector if the assignment is inconsistent or not injective.
std::vector<ElementId> extend_isomorphism(PermutationGroup const &source,
                                          PermutationGroup const &target,
                                          std::span<const ElementId> gens,
                                          std::span<const ElementId> images)
{
  std::vector<ElementId> map(source.order(), unset);
  map[PermutationGroup::identity()] = PermutationGroup::identity();
  std::vector<ElementId> queue{PermutationGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = source.multiply(x, gens[k]);
      auto fy = target.multiply(map[x], images[k]);
      if (map[y] == unset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return {};
      }
    }
  }
  std::vector<char> hit(target.order(), 0);
  for (auto v : map) {
    if (v == unset || hit[v])
      return {};
    hit[v] = 1;
  }
  return map;
}

// Given φ on central quotients, checks that [a,b] -> [φa,φb] is a well-defined
// isomorphism G′ -> H′.
bool compatible_derived_map(PermutationGroup const &g,
                            PermutationGroup const &h,
                            CommutatorPairing const &pg,
                            CommutatorPairing const &ph,
                            std::vector<ElementId> const &phi)
{
  std::vector<ElementId> psi(g.order(), unset);
  std::vector<ElementId> commutator_gens;
  auto q = pg.quotient_order();
  for (ElementId a = 0; a < q; ++a)
    for (ElementId b = 0; b < q; ++b) {
      auto c = pg(a, b);
      auto image = ph(phi[a], phi[b]);
      if (psi[c] == unset) {
        psi[c] = image;
        commutator_gens.push_back(c);
      } else if (psi[c] != image) {
        return false;
      }
    }

  // ψ must be a homomorphism on G′: check every edge x -> x c of the Cayley graph.
  std::vector<ElementId> map(g.order(), unset);
  map[PermutationGroup::identity()] = PermutationGroup::identity();
  std::vector<ElementId> queue{PermutationGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto x = queue[i];
    for (auto c : commutator_gens) {
      auto y = g.multiply(x, c);
      auto fy = h.multiply(map[x], psi[c]);
      if (map[y] == unset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  if (queue.size() != pg.derived.order())
    return false;
  std::vector<ElementId> images;
  for (auto x : queue)
    images.push_back(map[x]);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end() &&
         std::all_of(images.begin(), images.end(),
                     [&](ElementId y) { return ph.derived.contains(y); });
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  while (n > 1 && n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

CommutatorPairing commutator_pairing(PermutationGroup const &g)
{
  auto dc = derived_and_center(g);
  auto quotient = quotient_group(g, dc.center);
  auto q = quotient.group.order();

  std::vector<ElementId> reps(q, unset);
  for (ElementId x = 0; x < g.order(); ++x)
    if (reps[quotient.projection[x]] == unset)
      reps[quotient.projection[x]] = x;

  std::vector<ElementId> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = g.commutator(reps[a], reps[b]);

  return CommutatorPairing{std::move(quotient), std::move(dc.center), std::move(dc.derived),
                           std::move(reps), std::move(table)};
}

bool pairing_well_defined(PermutationGroup const &g, CommutatorPairing const &pairing)
{
  auto q = pairing.quotient_order();
  for (ElementId a = 0; a < q; ++a)
    for (ElementId b = 0; b < q; ++b)
      for (auto z : pairing.center.elements) {
        auto az = g.multiply(pairing.representatives[a], z);
        auto bz = g.multiply(pairing.representatives[b], z);
        if (g.commutator(az, pairing.representatives[b]) != pairing(a, b) ||
            g.commutator(pairing.representatives[a], bz) != pairing(a, b))
          return false;
      }
  return true;
}

bool stem_check(PermutationGroup const &g)
{
  auto dc = derived_and_center(g);
  return dc.center.is_subset_of(dc.derived);
}

bool are_isoclinic(PermutationGroup const &g, PermutationGroup const &h, IsoclinismOptions const &options)
{
  auto dg = derived_and_center(g);
  auto dh = derived_and_center(h);
  auto qg = g.order() / dg.center.order();
  auto qh = h.order() / dh.center.order();
  if (qg != qh || dg.derived.order() != dh.derived.order())
    return false;
  if (qg > options.quotient_cap)
    throw CapacityError("isoclinism search capped at |G/Z(G)| <= " +
                        std::to_string(options.quotient_cap));
  if (qg == 1)
    return true;

  auto pg = commutator_pairing(g);
  auto ph = commutator_pairing(h);
  auto const &source = pg.central_quotient.group;
  auto const &target = ph.central_quotient.group;

  auto gens = small_generating_set(source);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (ElementId y = 0; y < target.order(); ++y)
      if (target.element_order(y) == source.element_order(gens[k]))
        candidates[k].push_back(y);

  std::vector<std::size_t> choice(gens.size(), 0);
  for (auto const &c : candidates)
    if (c.empty())
      return false;

  std::vector<ElementId> images(gens.size());
  for (;;) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      images[k] = candidates[k][choice[k]];
    auto phi = extend_isomorphism(source, target, gens, images);
    if (!phi.empty() && compatible_derived_map(g, h, pg, ph, phi))
      return true;

    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size()) {
      choice[k] = 0;
      ++k;
    }
    if (k == gens.size())
      return false;
  }
}

ProportionCheck multiplicity_proportion_check(std::uint64_t order_g,
                                              std::uint64_t order_h,
                                              std::span<const std::uint64_t> degrees_g,
                                              std::span<const std::uint64_t> degrees_h)
{
  ProportionCheck result;
  for (auto d : degrees_g)
    ++result.multiplicities[d].first;
  for (auto d : degrees_h)
    ++result.multiplicities[d].second;

  result.holds = true;
  for (auto const &[degree, counts] : result.multiplicities) {
    auto [m, n] = counts;
    if (m == 0 || n == 0 || m * order_h != n * order_g)
      result.holds = false;
  }

  auto tg = std::accumulate(degrees_g.begin(), degrees_g.end(), std::uint64_t(0));
  auto th = std::accumulate(degrees_h.begin(), degrees_h.end(), std::uint64_t(0));
  result.degree_sums_proportional = tg * order_h == th * order_g;
  return result;
}

std::string to_string(RusinCase c)
{
  switch (c) {
  case RusinCase::TwoGroup: return "TWO_GROUP";
  case RusinCase::ThreeGroup: return "THREE_GROUP";
  case RusinCase::S3Type: return "S3_TYPE";
  case RusinCase::D10Type: return "D10_TYPE";
  case RusinCase::None: return "NONE";
  }
  return "NONE";
}

RusinCase rusin_case_from_string(std::string const &s)
{
  for (auto c : {RusinCase::TwoGroup, RusinCase::ThreeGroup, RusinCase::S3Type,
                 RusinCase::D10Type, RusinCase::None})
    if (to_string(c) == s)
      return c;
  throw std::invalid_argument("unknown structure case \"" + s + "\"");
}

RusinClassification rusin_case_classify(std::uint64_t central_quotient_order,
                                        std::uint64_t derived_order)
{
  RusinClassification result{RusinCase::None, central_quotient_order, derived_order};
  // A non-trivial central quotient is never cyclic, so order 6 means S3 and
  // order 10 means D10.
  if (is_power_of(central_quotient_order, 2) && is_power_of(derived_order, 2))
    result.case_id = RusinCase::TwoGroup;
  else if (is_power_of(central_quotient_order, 3) && is_power_of(derived_order, 3))
    result.case_id = RusinCase::ThreeGroup;
  else if (central_quotient_order == 6 && derived_order == 3)
    result.case_id = RusinCase::S3Type;
  else if (central_quotient_order == 10 && derived_order == 5)
    result.case_id = RusinCase::D10Type;
  return result;
}

RusinClassification rusin_case_classify(PermutationGroup const &g)
{
  auto dc = derived_and_center(g);
  return rusin_case_classify(g.order() / dc.center.order(), dc.derived.order());
}

} // namespace gds
