#ifndef TWISTSPEC_SRC_EXTENSION_HPP
#define TWISTSPEC_SRC_EXTENSION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "twistspec/group.hpp"

namespace twistspec::detail
{

/// Breadth-first spanning tree of a group's Cayley graph for a fixed list of
/// generators, plus the right-multiplication table needed to verify the
/// homomorphism law on every (element, generator) edge.
class ExtensionPlan
{
public:
  ExtensionPlan(GroupPtr group, std::vector<ElementId> generators);

  GroupPtr const &group() const { return _group; }
  std::span<const ElementId> generators() const { return _generators; }

  /// Cost in group products of one extend() call that runs to completion.
  std::uint64_t products_per_candidate() const
  { return _group->order() * (_generators.size() + 1); }

  /// Fills table with the unique candidate extension of gen_i -> images[i]
  /// and checks it. Returns false as soon as an edge fails; products is
  /// advanced by the work done either way.
  bool extend(FiniteGroup const &target,
              std::span<const ElementId> images,
              std::vector<ElementId> &table,
              std::uint64_t &products) const;

private:
  struct Step
  {
    ElementId node;
    ElementId parent;
    std::uint32_t generator;
  };

  GroupPtr _group;
  std::vector<ElementId> _generators;
  std::vector<Step> _tree;
  std::vector<ElementId> _right;
};

} // namespace twistspec::detail

#endif // TWISTSPEC_SRC_EXTENSION_HPP
