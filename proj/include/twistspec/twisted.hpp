#ifndef TWISTSPEC_TWISTED_HPP
#define TWISTSPEC_TWISTED_HPP

#include <cstdint>
#include <vector>

#include "twistspec/morphism.hpp"
#include "twistspec/structure.hpp"

namespace twistspec
{

/// Orbits of the action h . g = h g phi(h)^-1, numbered by smallest member.
struct TwistedPartition
{
  GroupPtr group;
  Morphism morphism;
  std::vector<std::uint32_t> class_of;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return sizes.size(); }
};

TwistedPartition twisted_classes(Morphism const &phi);

/// The self-map [g] -> [phi(g)] on conjugacy classes.
struct ClassMap
{
  ClassPartition const *partition = nullptr;
  std::vector<std::uint32_t> map;

  std::size_t fixed_points() const;
  bool is_bijection() const;
};

ClassMap induced_class_map(Morphism const &phi, ClassPartition const &classes);

enum class ReidemeisterMethod
{
  fixed_classes, ///< fixed points of the induced class map
  orbits,        ///< twisted conjugacy orbits, straight from the definition
  checked        ///< both, throws MethodDisagreement if they differ
};

std::size_t reidemeister_number(Morphism const &phi,
                                ClassPartition const &classes,
                                ReidemeisterMethod method = ReidemeisterMethod::fixed_classes);

/// Convenience overload that computes the class partition itself.
std::size_t reidemeister_number(Morphism const &phi,
                                ReidemeisterMethod method = ReidemeisterMethod::fixed_classes);

/// R(phi) == R(induced automorphism on G/N_phi), both computed with the
/// checked method. Also fails if the induced map is not bijective.
bool reduction_check(Morphism const &phi);

} // namespace twistspec

#endif // TWISTSPEC_TWISTED_HPP
