#include "twistspec/twisted.hpp"

#include <limits>
#include <sstream>

namespace twistspec
{

TwistedPartition twisted_classes(Morphism const &phi)
{
  if (!phi.is_endomorphism())
    throw InvalidArgument("twisted conjugacy requires an endomorphism");

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  auto const &group = phi.source();

  // s . g = s g phi(s)^-1 for each generator s
  std::vector<std::pair<ElementId, ElementId>> moves;
  for (auto s : group->generator_ids())
    moves.emplace_back(s, group->inv(phi(s)));

  TwistedPartition res{group, phi, std::vector<std::uint32_t>(group->order(), unassigned), {}};
  std::vector<ElementId> orbit;

  for (std::size_t start = 0; start < group->order(); ++start) {
    if (res.class_of[start] != unassigned)
      continue;

    auto cls = static_cast<std::uint32_t>(res.sizes.size());
    orbit.assign(1, static_cast<ElementId>(start));
    res.class_of[start] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto [s, twist] : moves) {
        ElementId y = group->mul(group->mul(s, orbit[head]), twist);
        if (res.class_of[y] == unassigned) {
          res.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    res.sizes.push_back(orbit.size());
  }
  return res;
}

std::size_t ClassMap::fixed_points() const
{
  std::size_t count = 0;
  for (std::size_t c = 0; c < map.size(); ++c) {
    if (map[c] == c)
      ++count;
  }
  return count;
}

bool ClassMap::is_bijection() const
{
  std::vector<bool> hit(map.size(), false);
  for (auto c : map) {
    if (hit[c])
      return false;
    hit[c] = true;
  }
  return true;
}

ClassMap induced_class_map(Morphism const &phi, ClassPartition const &classes)
{
  if (!phi.is_endomorphism())
    throw InvalidArgument("induced class map requires an endomorphism");
  if (classes.group != phi.source())
    throw InvalidArgument("class partition belongs to a different group");

  ClassMap res{&classes, {}};
  res.map.reserve(classes.count());
  for (auto rep : classes.representatives)
    res.map.push_back(classes.class_of[phi(rep)]);
  return res;
}

std::size_t reidemeister_number(Morphism const &phi,
                                ClassPartition const &classes,
                                ReidemeisterMethod method)
{
  switch (method) {
  case ReidemeisterMethod::fixed_classes:
    return induced_class_map(phi, classes).fixed_points();
  case ReidemeisterMethod::orbits:
    return twisted_classes(phi).count();
  case ReidemeisterMethod::checked:
    break;
  }

  auto by_classes = induced_class_map(phi, classes).fixed_points();
  auto by_orbits = twisted_classes(phi).count();
  if (by_classes != by_orbits) {
    std::ostringstream msg;
    msg << "Reidemeister number mismatch: " << by_classes
        << " fixed classes but " << by_orbits << " twisted classes";
    throw MethodDisagreement(msg.str());
  }
  return by_classes;
}

std::size_t reidemeister_number(Morphism const &phi, ReidemeisterMethod method)
{
  return reidemeister_number(phi, conjugacy_classes(phi.source()), method);
}

bool reduction_check(Morphism const &phi)
{
  auto reduced = induced_on_quotient(phi, n_phi(phi));
  if (!reduced.is_bijective())
    return false;
  return reidemeister_number(phi, ReidemeisterMethod::checked) ==
         reidemeister_number(reduced, ReidemeisterMethod::checked);
}

} // namespace twistspec
