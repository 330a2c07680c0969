#include "gds/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gds/errors.hpp"

namespace gds
{

namespace
{

/// Incrementally grown subgroup: adding a generator extends the element set
/// by a breadth-first search that only revisits products involving new data.
class ClosureBuilder
{
public:
  explicit ClosureBuilder(PermutationGroup const &g)
  : group_(g), member_(g.order(), 0), elements_{PermutationGroup::identity()}
  { member_[PermutationGroup::identity()] = 1; }

  bool contains(ElementId x) const { return member_[x] != 0; }

  /// Returns false if x was already a member.
  bool add_generator(ElementId x)
  {
    if (contains(x))
      return false;
    generators_.push_back(x);

    // old elements times the new generator
    auto old_count = elements_.size();
    for (std::size_t i = 0; i < old_count; ++i) {
      auto y = group_.multiply(elements_[i], x);
      if (!member_[y]) {
        member_[y] = 1;
        elements_.push_back(y);
      }
    }
    // new elements times all generators
    for (std::size_t i = old_count; i < elements_.size(); ++i) {
      for (auto s : generators_) {
        auto y = group_.multiply(elements_[i], s);
        if (!member_[y]) {
          member_[y] = 1;
          elements_.push_back(y);
        }
      }
    }
    return true;
  }

  Subgroup finish(bool normal) &&
  {
    std::sort(elements_.begin(), elements_.end());
    return Subgroup{std::move(elements_), std::move(generators_), normal};
  }

  std::vector<ElementId> const &generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }

private:
  PermutationGroup const &group_;
  std::vector<char> member_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
};

} // namespace

Subgroup subgroup_from_elements(PermutationGroup const &g, std::vector<ElementId> elements, bool normal)
{
  std::sort(elements.begin(), elements.end());
  ClosureBuilder builder(g);
  for (auto x : elements)
    builder.add_generator(x);
  auto result = std::move(builder).finish(normal);
  if (result.elements != elements)
    throw DomainError("element set is not closed under multiplication");
  return result;
}

namespace
{

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

} // namespace

bool Subgroup::contains(ElementId x) const
{
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::includes(other.elements.begin(), other.elements.end(),
                       elements.begin(), elements.end());
}

Subgroup trivial_subgroup(PermutationGroup const &)
{
  return Subgroup{{PermutationGroup::identity()}, {}, true};
}

Subgroup whole_group(PermutationGroup const &g)
{
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all), g.generator_ids(), true};
}

Subgroup closure(PermutationGroup const &g, std::span<const ElementId> gens)
{
  ClosureBuilder builder(g);
  for (auto x : gens)
    builder.add_generator(x);
  return std::move(builder).finish(false);
}

Subgroup normal_closure(PermutationGroup const &g, std::span<const ElementId> gens)
{
  ClosureBuilder builder(g);
  for (auto x : gens)
    builder.add_generator(x);

  // Every conjugate of a subgroup generator by a group generator must lie inside.
  for (std::size_t i = 0; i < builder.generators().size(); ++i) {
    auto s = builder.generators()[i];
    for (auto t : g.generator_ids())
      builder.add_generator(g.conjugate(s, t));
  }
  return std::move(builder).finish(true);
}

bool is_normal(PermutationGroup const &g, Subgroup const &h)
{
  auto const &test = h.generators.empty() ? h.elements : h.generators;
  for (auto s : test)
    for (auto t : g.generator_ids())
      if (!h.contains(g.conjugate(s, t)))
        return false;
  return true;
}

Subgroup commutator_subgroup(PermutationGroup const &g, Subgroup const &a, Subgroup const &b)
{
  std::vector<ElementId> commutators;
  for (auto x : a.generators)
    for (auto y : b.generators) {
      auto c = g.commutator(x, y);
      if (c != PermutationGroup::identity())
        commutators.push_back(c);
    }
  return normal_closure(g, commutators);
}

Subgroup intersection(PermutationGroup const &g, Subgroup const &a, Subgroup const &b)
{
  std::vector<ElementId> common;
  std::set_intersection(a.elements.begin(), a.elements.end(),
                        b.elements.begin(), b.elements.end(),
                        std::back_inserter(common));
  return subgroup_from_elements(g, std::move(common), a.normal && b.normal);
}

Subgroup join(PermutationGroup const &g, Subgroup const &a, Subgroup const &b)
{
  std::vector<ElementId> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  auto result = closure(g, gens);
  result.normal = a.normal && b.normal;
  return result;
}

DerivedAndCenter derived_and_center(PermutationGroup const &g)
{
  DerivedAndCenter result;

  std::vector<ElementId> central;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto t : g.generator_ids())
      if (!g.commute(x, t)) {
        ok = false;
        break;
      }
    if (ok)
      central.push_back(x);
  }
  result.center = subgroup_from_elements(g, std::move(central), true);

  result.derived_series.push_back(whole_group(g));
  for (;;) {
    auto const &last = result.derived_series.back();
    auto next = commutator_subgroup(g, last, last);
    if (next.order() == last.order())
      break;
    result.derived_series.push_back(std::move(next));
  }
  result.derived = result.derived_series.size() > 1 ? result.derived_series[1]
                                                    : result.derived_series[0];
  return result;
}

std::vector<Subgroup> lower_central_series(PermutationGroup const &g)
{
  std::vector<Subgroup> series{whole_group(g)};
  auto all = whole_group(g);
  for (;;) {
    auto next = commutator_subgroup(g, series.back(), all);
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

PermutationGroup subgroup_as_group(PermutationGroup const &g, Subgroup const &h, std::string name)
{
  std::vector<Permutation> gens;
  for (auto x : h.generators)
    gens.push_back(g.element(x));
  if (name.empty())
    name = g.name() + "_sub" + std::to_string(h.order());
  return PermutationGroup(std::move(name), g.degree(), gens);
}

Quotient quotient_group(PermutationGroup const &g, Subgroup const &n, std::string name)
{
  if (!is_normal(g, n))
    throw DomainError("quotient by a subgroup that is not normal");

  constexpr auto unassigned = std::uint32_t(-1);
  std::vector<std::uint32_t> coset_of(g.order(), unassigned);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unassigned)
      continue;
    auto index = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto m : n.elements)
      coset_of[g.multiply(m, x)] = index;
  }

  auto cosets = reps.size();
  auto act = [&](ElementId t) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c)
      images[c] = static_cast<Point>(coset_of[g.multiply(reps[c], t)]);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (auto t : g.generator_ids())
    gens.push_back(act(t));
  if (name.empty())
    name = g.name() + "/" + std::to_string(n.order());
  PermutationGroup q(std::move(name), cosets, gens);

  std::vector<ElementId> gen_images;
  for (auto const &p : gens)
    gen_images.push_back(q.index_of(p));

  // The projection is a homomorphism: propagate along the Cayley graph.
  constexpr auto unseen = ElementId(-1);
  std::vector<ElementId> projection(g.order(), unseen);
  projection[PermutationGroup::identity()] = PermutationGroup::identity();
  std::vector<ElementId> queue{PermutationGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto x = queue[i];
    for (std::size_t k = 0; k < g.generator_ids().size(); ++k) {
      auto y = g.multiply(x, g.generator_ids()[k]);
      if (projection[y] == unseen) {
        projection[y] = q.multiply(projection[x], gen_images[k]);
        queue.push_back(y);
      }
    }
  }

  return Quotient{std::move(q), std::move(projection), std::move(coset_of)};
}

std::vector<Subgroup> chief_series(PermutationGroup const &g)
{
  std::vector<Subgroup> series{trivial_subgroup(g)};
  while (series.back().order() < g.order()) {
    auto const &current = series.back();
    std::optional<Subgroup> best;
    for (auto const &cls : g.classes()) {
      if (current.contains(cls.representative))
        continue;
      auto gens = current.generators;
      gens.push_back(cls.representative);
      auto candidate = normal_closure(g, gens);
      if (!best || candidate.order() < best->order())
        best = std::move(candidate);
    }
    series.push_back(std::move(*best));
  }
  return series;
}

std::vector<std::uint64_t> chief_factor_orders(std::vector<Subgroup> const &series)
{
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 1; i < series.size(); ++i)
    orders.push_back(series[i].order() / series[i - 1].order());
  return orders;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

Subgroup sylow_subgroup(PermutationGroup const &g, std::uint64_t p)
{
  auto target = p_part(g.order(), p);
  ClosureBuilder builder(g);
  while (builder.size() < target) {
    bool grew = false;
    for (ElementId x = 0; x < g.order() && !grew; ++x) {
      if (builder.contains(x) || !is_prime_power_of(g.element_order(x), p))
        continue;
      bool normalizes = true;
      for (auto s : builder.generators())
        if (!builder.contains(g.conjugate(s, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;
      builder.add_generator(x);
      grew = true;
    }
    if (!grew)
      throw DomainError("Sylow search stalled (internal error)");
  }
  return std::move(builder).finish(false);
}

Subgroup p_core(PermutationGroup const &g, std::uint64_t p)
{
  auto sylow = sylow_subgroup(g, p);
  std::vector<ElementId> core;
  for (auto const &cls : g.classes()) {
    bool inside = std::all_of(cls.elements.begin(), cls.elements.end(),
                              [&](ElementId x) { return sylow.contains(x); });
    if (inside)
      core.insert(core.end(), cls.elements.begin(), cls.elements.end());
  }
  return subgroup_from_elements(g, std::move(core), true);
}

namespace
{

Subgroup fitting_subgroup(PermutationGroup const &g)
{
  auto result = trivial_subgroup(g);
  for (auto p : prime_divisors(g.order()))
    result = join(g, result, p_core(g, p));
  result.normal = true;
  return result;
}

bool derived_series_reaches_one(PermutationGroup const &g)
{
  return derived_and_center(g).derived_series.back().is_trivial();
}

} // namespace

FittingData fitting_data(PermutationGroup const &g)
{
  FittingData result{fitting_subgroup(g), std::nullopt};
  if (!derived_series_reaches_one(g))
    return result;

  unsigned height = 0;
  if (g.order() > 1) {
    height = 1;
    auto current = quotient_group(g, result.fitting).group;
    while (current.order() > 1) {
      auto next = quotient_group(current, fitting_subgroup(current)).group;
      current = std::move(next);
      ++height;
    }
  }
  result.height = height;
  return result;
}

unsigned fitting_height(PermutationGroup const &g)
{
  auto data = fitting_data(g);
  if (!data.height)
    throw DomainError("Fitting height undefined for non-solvable input");
  return *data.height;
}

bool StructuralProfile::is_p_solvable(std::uint64_t p) const
{
  auto it = p_solvable.find(p);
  return it == p_solvable.end() ? true : it->second;
}

StructuralProfile structural_predicates(PermutationGroup const &g)
{
  StructuralProfile profile;
  auto dc = derived_and_center(g);
  auto lower = lower_central_series(g);
  auto chief = chief_series(g);
  auto fit = fitting_data(g);

  profile.abelian = g.is_abelian();
  profile.solvable = dc.derived_series.back().is_trivial();
  profile.nilpotent = lower.back().is_trivial();
  profile.chief_factors = chief_factor_orders(chief);
  profile.supersolvable = std::all_of(profile.chief_factors.begin(),
                                      profile.chief_factors.end(),
                                      [](std::uint64_t n) { return is_prime(n); });
  for (auto p : prime_divisors(g.order())) {
    profile.p_solvable[p] = std::all_of(
      profile.chief_factors.begin(), profile.chief_factors.end(),
      [p](std::uint64_t n) { return is_prime_power_of(n, p) || n % p != 0; });
  }
  profile.fitting_height = fit.height;
  profile.fitting_order = fit.fitting.order();
  profile.center_order = dc.center.order();
  profile.derived_order = dc.derived.order();
  profile.derived_length = static_cast<unsigned>(dc.derived_series.size() - 1);
  return profile;
}

std::vector<Subgroup> normal_subgroups(PermutationGroup const &g, std::size_t cap)
{
  std::vector<Subgroup> class_closures;
  for (auto const &cls : g.classes()) {
    ElementId rep = cls.representative;
    class_closures.push_back(normal_closure(g, std::span<const ElementId>(&rep, 1)));
  }

  std::set<std::vector<ElementId>> seen;
  std::vector<Subgroup> found{trivial_subgroup(g)};
  seen.insert(found[0].elements);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      if (found[i].contains(g.classes()[c].representative))
        continue;
      auto m = join(g, found[i], class_closures[c]);
      if (seen.insert(m.elements).second) {
        if (found.size() >= cap)
          throw CapacityError("normal subgroup enumeration exceeds the cap of " +
                              std::to_string(cap));
        found.push_back(std::move(m));
      }
    }
  }
  for (auto &n : found)
    n.normal = true;
  std::sort(found.begin(), found.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

} // namespace gds
