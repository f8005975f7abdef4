#ifndef TWISTSPEC_SUBGROUP_HPP
#define TWISTSPEC_SUBGROUP_HPP

#include <span>
#include <vector>

#include "twistspec/group.hpp"

namespace twistspec
{

/// A subgroup of a materialized group, stored as a membership mask over the
/// parent's element ids.
class Subgroup
{
public:
  /// Validates closure and Lagrange; cost is quadratic in the subgroup order.
  Subgroup(GroupPtr parent, std::vector<bool> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  static Subgroup generated_by(GroupPtr parent, std::span<const ElementId> elements);

  GroupPtr const &parent() const { return _parent; }
  std::size_t order() const { return _order; }
  std::size_t index() const { return _parent->order() / _order; }

  bool contains(ElementId x) const { return _members[x]; }
  std::vector<bool> const &members() const { return _members; }
  std::vector<ElementId> elements() const;

  bool is_trivial() const { return _order == 1; }
  bool is_whole() const { return _order == _parent->order(); }
  bool is_normal() const;

  bool operator==(Subgroup const &other) const
  { return _parent == other._parent && _members == other._members; }

private:
  friend class SubgroupBuilder;

  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<bool> members, std::size_t order, Trusted);

  GroupPtr _parent;
  std::vector<bool> _members;
  std::size_t _order;
};

/// Grows a subgroup one generator at a time; each new generator triggers a
/// closure pass over the current elements.
class SubgroupBuilder
{
public:
  explicit SubgroupBuilder(GroupPtr parent);

  /// Returns true if x was not already a member.
  bool add(ElementId x);

  /// Extends to the normal closure in the parent.
  void make_normal();

  bool contains(ElementId x) const { return _members[x]; }
  std::size_t order() const { return _elements.size(); }
  std::span<const ElementId> generators() const { return _generators; }

  Subgroup build() const;

private:
  GroupPtr _parent;
  std::vector<bool> _members;
  std::vector<ElementId> _elements;
  std::vector<ElementId> _generators;
};

} // namespace twistspec

#endif // TWISTSPEC_SUBGROUP_HPP
