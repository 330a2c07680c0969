#include "gds/permutation.hpp"

#include <limits>
#include <sstream>

#include "gds/errors.hpp"

namespace gds
{

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  if (degree > std::numeric_limits<Point>::max())
    throw CapacityError("permutation degree exceeds 65535");
  for (std::size_t i = 0; i < degree; ++i)
    images_[i] = static_cast<Point>(i);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto img : images_) {
    if (img >= images_.size() || seen[img])
      throw InputError("image array is not a bijection of 1.." +
                       std::to_string(images_.size()));
    seen[img] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const long long> images)
{
  if (images.size() > std::numeric_limits<Point>::max())
    throw CapacityError("permutation degree exceeds 65535");

  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (auto img : images) {
    if (img < 1 || img > static_cast<long long>(images.size())) {
      std::ostringstream msg;
      msg << "image " << img << " out of range 1.." << images.size();
      throw InputError(msg.str());
    }
    zero_based.push_back(static_cast<Point>(img - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::vector<int>> cycles)
{
  Permutation result(degree);
  for (auto const &cycle : cycles) {
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = cycle[i] - 1;
      auto to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || to < 0 || from >= static_cast<int>(degree) ||
          to >= static_cast<int>(degree))
        throw InputError("cycle point out of range");
      c.images_[from] = static_cast<Point>(to);
    }
    result = result * Permutation(c.images_);
  }
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::direct_sum(Permutation const &rhs) const
{
  if (degree() + rhs.degree() > std::numeric_limits<Point>::max())
    throw CapacityError("permutation degree exceeds 65535");

  Permutation result;
  result.images_ = images_;
  auto shift = static_cast<Point>(degree());
  for (auto img : rhs.images_)
    result.images_.push_back(static_cast<Point>(img + shift));
  return result;
}

std::vector<long long> Permutation::one_based() const
{
  std::vector<long long> result;
  result.reserve(images_.size());
  for (auto img : images_)
    result.push_back(static_cast<long long>(img) + 1);
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    out << '(';
    for (auto i = start; !done[i]; i = images_[i]) {
      done[i] = true;
      if (i != start)
        out << ' ';
      out << i + 1;
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

} // namespace gds
