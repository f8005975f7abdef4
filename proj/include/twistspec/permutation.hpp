#ifndef TWISTSPEC_PERMUTATION_HPP
#define TWISTSPEC_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace twistspec
{

/// A bijection on {0, ..., degree-1}. Points are 0-based internally; the
/// 1-based form is used for files, cycle notation and printing.
class Permutation
{
public:
  using Point = std::uint32_t;

  Permutation() : Permutation(1) {}
  explicit Permutation(std::size_t degree);

  /// Validating constructor from 0-based images.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_one_based(std::span<const std::int64_t> images);

  /// Cycles are given 1-based, e.g. {{1, 2, 3}, {4, 5}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<const Point> images() const { return _images; }
  std::vector<std::int64_t> one_based() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycle notation with 1-based points; "()" for the identity.
  std::string to_string() const;

  bool operator==(Permutation const &) const = default;
  auto operator<=>(Permutation const &) const = default;

private:
  friend Permutation compose(Permutation const &p, Permutation const &q);

  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : _images(std::move(images)) {}

  std::vector<Point> _images;
};

/// compose(p, q) maps x to p(q(x)): q is applied first.
Permutation compose(Permutation const &p, Permutation const &q);

std::ostream &operator<<(std::ostream &os, Permutation const &perm);

} // namespace twistspec

template<>
struct std::hash<twistspec::Permutation>
{
  std::size_t operator()(twistspec::Permutation const &perm) const noexcept;
};

#endif // TWISTSPEC_PERMUTATION_HPP
