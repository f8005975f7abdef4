#ifndef TWISTSPEC_GROUP_HPP
#define TWISTSPEC_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "twistspec/errors.hpp"
#include "twistspec/permutation.hpp"

namespace twistspec
{

/// Position of an element in FiniteGroup::elements().
using ElementId = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group with all of its elements materialized.
///
/// Elements are numbered in breadth-first discovery order starting from the
/// identity (id 0), where x is expanded to x*g for each generator g in list
/// order. The numbering is therefore a function of the generator list alone.
/// The group product is a*b = compose(a, b), i.e. b is applied first.
///
/// All tables are built in the constructor; a FiniteGroup is immutable and
/// may be shared freely between threads.
class FiniteGroup
{
public:
  /// Groups up to this order get a full multiplication table.
  static constexpr std::size_t cayley_table_limit = 512;
  static constexpr ElementId identity = 0;

  FiniteGroup(std::size_t degree,
              std::vector<Permutation> generators,
              std::size_t order_cap = Budget::default_order_cap);

  std::size_t degree() const { return _degree; }
  std::size_t order() const { return _elements.size(); }

  std::span<const Permutation> generators() const { return _generators; }
  std::span<const ElementId> generator_ids() const { return _generator_ids; }

  std::span<const Permutation> elements() const { return _elements; }
  Permutation const &element(ElementId x) const { return _elements[x]; }

  std::optional<ElementId> find(Permutation const &perm) const;
  ElementId index_of(Permutation const &perm) const;

  ElementId mul(ElementId a, ElementId b) const
  {
    if (!_cayley.empty())
      return _cayley[static_cast<std::size_t>(a) * order() + b];
    return mul_uncached(a, b);
  }

  ElementId inv(ElementId x) const { return _inverses[x]; }

  /// h x h^-1
  ElementId conj(ElementId h, ElementId x) const
  { return mul(mul(h, x), _inverses[h]); }

  ElementId commutator(ElementId a, ElementId b) const
  { return mul(mul(a, b), mul(_inverses[a], _inverses[b])); }

  std::size_t element_order(ElementId x) const { return _orders[x]; }

  bool has_cayley_table() const { return !_cayley.empty(); }
  bool is_abelian() const;

private:
  ElementId mul_uncached(ElementId a, ElementId b) const;

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<ElementId> _generator_ids;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, ElementId> _index;
  std::vector<ElementId> _cayley;
  std::vector<ElementId> _inverses;
  std::vector<std::uint32_t> _orders;
};

/// Breadth-first closure of the generators. Throws BudgetExceeded when the
/// group turns out larger than order_cap.
GroupPtr closure(std::size_t degree,
                 std::vector<Permutation> generators,
                 std::size_t order_cap = Budget::default_order_cap);

std::size_t element_order(FiniteGroup const &group, ElementId x);

} // namespace twistspec

#endif // TWISTSPEC_GROUP_HPP
