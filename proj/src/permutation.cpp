#include "twistspec/permutation.hpp"

#include <numeric>
#include <sstream>

#include "twistspec/errors.hpp"

namespace twistspec
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  if (degree == 0)
    throw InvalidArgument("permutation degree must be positive");
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  if (_images.empty())
    throw InvalidArgument("permutation degree must be positive");

  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    Point x = _images[i];
    if (x >= _images.size() || seen[x]) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << _images.size()
          << ": bad image at position " << (i + 1);
      throw InvalidArgument(msg.str());
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images)
{
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto x = images[i];
    if (x < 1 || x > static_cast<std::int64_t>(images.size())) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << images.size() << ": image " << x
          << " at position " << (i + 1) << " out of range";
      throw InvalidArgument(msg.str());
    }
    zero_based.push_back(static_cast<Point>(x - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  Permutation perm(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x < 1 || x > degree || used[x - 1])
        throw InvalidArgument("invalid cycle notation");
      used[x - 1] = true;
      perm._images[x - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return perm;
}

std::vector<std::int64_t> Permutation::one_based() const
{
  std::vector<std::int64_t> res(_images.begin(), _images.end());
  for (auto &x : res)
    ++x;
  return res;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation inv(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    inv._images[_images[i]] = static_cast<Point>(i);
  return inv;
}

std::string Permutation::to_string() const
{
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || _images[start] == start)
      continue;
    any = true;
    os << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        os << ' ';
      os << (x + 1);
      first = false;
      x = _images[x];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw InvalidArgument("cannot compose permutations of different degree");

  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = p._images[q._images[x]];

  return Permutation(std::move(images), Permutation::Unchecked{});
}

std::ostream &operator<<(std::ostream &os, Permutation const &perm)
{
  return os << perm.to_string();
}

} // namespace twistspec

std::size_t std::hash<twistspec::Permutation>::operator()(
  twistspec::Permutation const &perm) const noexcept
{
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ull;
  for (auto x : perm.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
