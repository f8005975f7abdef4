#ifndef TWISTSPEC_STRUCTURE_HPP
#define TWISTSPEC_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "twistspec/group.hpp"
#include "twistspec/morphism.hpp"
#include "twistspec/subgroup.hpp"

namespace twistspec
{

/// The conjugacy classes of a group. Class i has representative
/// representatives[i], the smallest element id in the class, so class 0 is
/// always {identity}.
struct ClassPartition
{
  GroupPtr group;
  std::vector<std::uint32_t> class_of;
  std::vector<ElementId> representatives;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return representatives.size(); }
};

ClassPartition conjugacy_classes(GroupPtr const &group);

Subgroup center(GroupPtr const &group);
Subgroup derived_subgroup(GroupPtr const &group);
Subgroup normal_closure(GroupPtr const &group, std::span<const ElementId> elements);

bool is_perfect(GroupPtr const &group);

/// The trivial group is not simple; groups of prime order are.
bool is_simple(GroupPtr const &group);
bool is_quasisimple(GroupPtr const &group);
bool is_nilpotent(GroupPtr const &group);

struct Quotient
{
  GroupPtr group;
  Morphism projection;
};

/// G/N realized as the action of G on the left cosets of N. Coset points are
/// numbered by the smallest element id they contain. Generator i of the
/// quotient is the image of generator i of G.
Quotient quotient(GroupPtr const &group, Subgroup const &normal);

} // namespace twistspec

#endif // TWISTSPEC_STRUCTURE_HPP
