#include "gds/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gds/errors.hpp"

namespace gds
{

namespace
{

thread_local std::vector<Point> scratch;

std::span<const Point> compose_into(std::vector<Point> &out,
                                    std::span<const Point> a,
                                    std::span<const Point> b)
{
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[a[i]];
  return out;
}

} // namespace

std::uint64_t PermutationGroup::Table::hash(std::span<const Point> key)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto p : key) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

void PermutationGroup::Table::rebuild(std::vector<Point> const &storage,
                                      std::size_t degree,
                                      std::size_t count)
{
  std::size_t capacity = 16;
  while (capacity < 2 * count + 2)
    capacity *= 2;
  slots_.assign(capacity, ElementId(-1));
  filled_ = 0;
  for (std::size_t i = 0; i < count; ++i)
    insert(storage, degree, static_cast<ElementId>(i));
}

std::optional<ElementId> PermutationGroup::Table::find(std::vector<Point> const &storage,
                                                       std::size_t degree,
                                                       std::span<const Point> key) const
{
  if (slots_.empty())
    return std::nullopt;
  auto mask = slots_.size() - 1;
  for (auto slot = hash(key) & mask;; slot = (slot + 1) & mask) {
    auto id = slots_[slot];
    if (id == ElementId(-1))
      return std::nullopt;
    auto const *base = storage.data() + std::size_t(id) * degree;
    if (std::equal(key.begin(), key.end(), base))
      return id;
  }
}

void PermutationGroup::Table::insert(std::vector<Point> const &storage,
                                     std::size_t degree,
                                     ElementId id)
{
  if (2 * (filled_ + 1) > slots_.size()) {
    rebuild(storage, degree, std::size_t(id));
  }
  auto mask = slots_.size() - 1;
  std::span<const Point> key(storage.data() + std::size_t(id) * degree, degree);
  auto slot = hash(key) & mask;
  while (slots_[slot] != ElementId(-1))
    slot = (slot + 1) & mask;
  slots_[slot] = id;
  ++filled_;
}

PermutationGroup::PermutationGroup(std::string name,
                                   std::size_t degree,
                                   std::vector<Permutation> const &generators,
                                   GroupOptions const &options)
: name_(std::move(name)), degree_(degree)
{
  if (degree == 0)
    throw InputError("group degree must be positive");
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw InputError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(g);
  }

  enumerate(options);
  compute_inverses_and_orders();
  compute_classes();
}

void PermutationGroup::enumerate(GroupOptions const &options)
{
  storage_.clear();
  auto identity = Permutation(degree_);
  storage_.assign(identity.images().begin(), identity.images().end());
  table_.rebuild(storage_, degree_, 1);

  std::size_t count = 1;
  std::vector<Point> product;
  for (std::size_t next = 0; next < count; ++next) {
    for (auto const &g : generators_) {
      std::span<const Point> x(storage_.data() + next * degree_, degree_);
      compose_into(product, x, g.images());
      if (table_.find(storage_, degree_, product))
        continue;
      if (count >= options.element_cap)
        throw CapacityError("group " + name_ + " exceeds the element cap of " +
                            std::to_string(options.element_cap));
      storage_.insert(storage_.end(), product.begin(), product.end());
      table_.insert(storage_, degree_, static_cast<ElementId>(count));
      ++count;
    }
  }
  order_ = count;

  // Lexicographic element order.
  std::vector<ElementId> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](ElementId a, ElementId b) {
    return std::lexicographical_compare(
      storage_.begin() + std::size_t(a) * degree_,
      storage_.begin() + std::size_t(a + 1) * degree_,
      storage_.begin() + std::size_t(b) * degree_,
      storage_.begin() + std::size_t(b + 1) * degree_);
  });
  std::vector<Point> sorted;
  sorted.reserve(storage_.size());
  for (auto id : perm)
    sorted.insert(sorted.end(),
                  storage_.begin() + std::size_t(id) * degree_,
                  storage_.begin() + std::size_t(id + 1) * degree_);
  storage_ = std::move(sorted);
  table_.rebuild(storage_, degree_, count);

  generator_ids_.clear();
  for (auto const &g : generators_)
    generator_ids_.push_back(*find(g.images()));
}

void PermutationGroup::compute_inverses_and_orders()
{
  inverse_.resize(order_);
  element_orders_.resize(order_);
  exponent_ = 1;
  std::vector<Point> inv(degree_);
  std::vector<bool> seen(degree_);
  for (std::size_t x = 0; x < order_; ++x) {
    auto img = images(static_cast<ElementId>(x));
    for (std::size_t i = 0; i < degree_; ++i)
      inv[img[i]] = static_cast<Point>(i);
    inverse_[x] = *find(inv);

    // order = lcm of cycle lengths
    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t ord = 1;
    for (std::size_t start = 0; start < degree_; ++start) {
      if (seen[start])
        continue;
      std::uint64_t len = 0;
      for (auto i = start; !seen[i]; i = img[i]) {
        seen[i] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    element_orders_[x] = static_cast<unsigned>(ord);
    exponent_ = std::lcm(exponent_, ord);
  }
}

void PermutationGroup::compute_classes()
{
  constexpr auto unassigned = std::uint32_t(-1);
  class_of_.assign(order_, unassigned);
  classes_.clear();

  std::vector<ElementId> inverse_generators;
  for (auto g : generator_ids_)
    inverse_generators.push_back(inverse_[g]);

  for (std::size_t start = 0; start < order_; ++start) {
    if (class_of_[start] != unassigned)
      continue;
    auto index = static_cast<std::uint32_t>(classes_.size());
    ConjugacyClass cls{static_cast<ElementId>(start), {static_cast<ElementId>(start)}};
    class_of_[start] = index;
    for (std::size_t next = 0; next < cls.elements.size(); ++next) {
      auto x = cls.elements[next];
      for (std::size_t gi = 0; gi < generator_ids_.size(); ++gi) {
        auto y = multiply(multiply(inverse_generators[gi], x), generator_ids_[gi]);
        if (class_of_[y] == unassigned) {
          class_of_[y] = index;
          cls.elements.push_back(y);
        }
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    classes_.push_back(std::move(cls));
  }

  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inverse_[classes_[c].representative]];
}

Permutation PermutationGroup::element(ElementId x) const
{
  auto img = images(x);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

std::optional<ElementId> PermutationGroup::find(std::span<const Point> key) const
{
  if (key.size() != degree_)
    return std::nullopt;
  return table_.find(storage_, degree_, key);
}

ElementId PermutationGroup::index_of(Permutation const &p) const
{
  auto id = find(p.images());
  if (!id)
    throw DomainError(p.to_cycle_string() + " is not an element of " + name_);
  return *id;
}

ElementId PermutationGroup::multiply(ElementId a, ElementId b) const
{
  return *find(compose_into(scratch, images(a), images(b)));
}

ElementId PermutationGroup::conjugate(ElementId x, ElementId g) const
{
  return multiply(multiply(inverse_[g], x), g);
}

ElementId PermutationGroup::commutator(ElementId a, ElementId b) const
{
  return multiply(multiply(inverse_[a], inverse_[b]), multiply(a, b));
}

bool PermutationGroup::commute(ElementId a, ElementId b) const
{
  auto x = images(a);
  auto y = images(b);
  for (std::size_t i = 0; i < degree_; ++i)
    if (y[x[i]] != x[y[i]])
      return false;
  return true;
}

PermutationGroup group_from_generators(std::size_t degree,
                                       std::vector<Permutation> const &generators,
                                       std::string name,
                                       GroupOptions const &options)
{
  return PermutationGroup(std::move(name), degree, generators, options);
}

PermutationGroup group_from_generators(std::size_t degree,
                                       std::vector<std::vector<long long>> const &generators,
                                       std::string name,
                                       GroupOptions const &options)
{
  std::vector<Permutation> perms;
  for (auto const &g : generators) {
    if (g.size() != degree)
      throw InputError("generator has " + std::to_string(g.size()) +
                       " images, expected degree " + std::to_string(degree));
    perms.push_back(Permutation::from_one_based(g));
  }
  return PermutationGroup(std::move(name), degree, perms, options);
}

PermutationGroup direct_product(PermutationGroup const &g,
                                PermutationGroup const &h,
                                GroupOptions const &options)
{
  std::vector<Permutation> generators;
  Permutation id_g(g.degree()), id_h(h.degree());
  for (auto const &x : g.generators())
    generators.push_back(x.direct_sum(id_h));
  for (auto const &y : h.generators())
    generators.push_back(id_g.direct_sum(y));
  return PermutationGroup(g.name() + "x" + h.name(), g.degree() + h.degree(),
                          generators, options);
}

} // namespace gds
