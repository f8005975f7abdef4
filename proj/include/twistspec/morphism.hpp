#ifndef TWISTSPEC_MORPHISM_HPP
#define TWISTSPEC_MORPHISM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "twistspec/group.hpp"
#include "twistspec/subgroup.hpp"

namespace twistspec
{

struct ClassPartition;

/// A homomorphism between materialized groups, stored as a full element
/// table. Endomorphisms are morphisms whose source and target are the same
/// group object.
class Morphism
{
public:
  /// Wraps a table without verification. Use morphism_from_images or
  /// verify() for untrusted input.
  Morphism(GroupPtr source, GroupPtr target, std::vector<ElementId> table);

  static Morphism identity(GroupPtr group);
  static Morphism trivial(GroupPtr source, GroupPtr target);

  GroupPtr const &source() const { return _source; }
  GroupPtr const &target() const { return _target; }
  std::span<const ElementId> table() const { return _table; }

  ElementId operator()(ElementId x) const { return _table[x]; }

  bool is_endomorphism() const { return _source == _target; }
  bool is_trivial() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Images of the source group's generators.
  std::vector<Permutation> generator_images() const;

  /// Checks phi(x*s) = phi(x)*phi(s) on all (element, generator) pairs.
  bool verify() const;

  bool operator==(Morphism const &other) const
  {
    return _source == other._source && _target == other._target &&
           _table == other._table;
  }

private:
  GroupPtr _source;
  GroupPtr _target;
  std::vector<ElementId> _table;
};

/// Extends generator images along a breadth-first spanning tree of the
/// source and verifies the result. Throws NotAHomomorphism.
Morphism morphism_from_images(GroupPtr source, GroupPtr target,
                              std::span<const ElementId> images);
Morphism morphism_from_images(GroupPtr source, GroupPtr target,
                              std::span<const Permutation> images);

/// first(second(x)): second is applied first.
Morphism compose_morphisms(Morphism const &first, Morphism const &second);
Morphism power(Morphism const &phi, unsigned n);
Morphism inverse(Morphism const &phi);

Subgroup kernel(Morphism const &phi);
Subgroup image(Morphism const &phi);
Subgroup fixed_subgroup(Morphism const &phi);

bool is_fixed_point_free(Morphism const &phi);
bool is_class_preserving(Morphism const &phi, ClassPartition const &classes);

/// g -> h g h^-1
Morphism inner_automorphism(GroupPtr const &group, ElementId h);

/// Union of the kernels of phi, phi^2, ...
Subgroup n_phi(Morphism const &phi);

/// The endomorphism gN -> phi(g)N of the quotient by a normal,
/// phi-invariant subgroup.
Morphism induced_on_quotient(Morphism const &phi, Subgroup const &normal);

} // namespace twistspec

#endif // TWISTSPEC_MORPHISM_HPP
