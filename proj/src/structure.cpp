#include "twistspec/structure.hpp"

#include <limits>

namespace twistspec
{

ClassPartition conjugacy_classes(GroupPtr const &group)
{
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();

  ClassPartition res;
  res.group = group;
  res.class_of.assign(group->order(), unassigned);

  auto gens = group->generator_ids();
  std::vector<ElementId> orbit;

  for (std::size_t start = 0; start < group->order(); ++start) {
    if (res.class_of[start] != unassigned)
      continue;

    auto cls = static_cast<std::uint32_t>(res.representatives.size());
    orbit.assign(1, static_cast<ElementId>(start));
    res.class_of[start] = cls;

    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto g : gens) {
        ElementId y = group->conj(g, orbit[head]);
        if (res.class_of[y] == unassigned) {
          res.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }

    res.representatives.push_back(static_cast<ElementId>(start));
    res.sizes.push_back(orbit.size());
  }

  return res;
}

Subgroup center(GroupPtr const &group)
{
  std::vector<bool> members(group->order(), false);
  std::size_t order = 0;
  for (std::size_t x = 0; x < group->order(); ++x) {
    bool central = true;
    for (auto g : group->generator_ids()) {
      if (group->mul(g, static_cast<ElementId>(x)) != group->mul(static_cast<ElementId>(x), g)) {
        central = false;
        break;
      }
    }
    if (central) {
      members[x] = true;
      ++order;
    }
  }

  SubgroupBuilder builder(group);
  for (std::size_t x = 0; x < members.size(); ++x) {
    if (members[x])
      builder.add(static_cast<ElementId>(x));
  }
  return builder.build();
}

Subgroup normal_closure(GroupPtr const &group, std::span<const ElementId> elements)
{
  SubgroupBuilder builder(group);
  for (auto x : elements)
    builder.add(x);
  builder.make_normal();
  return builder.build();
}

Subgroup derived_subgroup(GroupPtr const &group)
{
  // [G,G] is the normal closure of the commutators of a generating set.
  std::vector<ElementId> commutators;
  auto gens = group->generator_ids();
  for (auto a : gens) {
    for (auto b : gens)
      commutators.push_back(group->commutator(a, b));
  }
  return normal_closure(group, commutators);
}

bool is_perfect(GroupPtr const &group)
{
  return derived_subgroup(group).is_whole();
}

bool is_simple(GroupPtr const &group)
{
  if (group->order() == 1)
    return false;

  auto classes = conjugacy_classes(group);
  for (std::size_t c = 1; c < classes.count(); ++c) {
    ElementId rep = classes.representatives[c];
    if (!normal_closure(group, std::span(&rep, 1)).is_whole())
      return false;
  }
  return true;
}

bool is_quasisimple(GroupPtr const &group)
{
  if (!is_perfect(group))
    return false;
  return is_simple(quotient(group, center(group)).group);
}

bool is_nilpotent(GroupPtr const &group)
{
  // lower central series: gamma_{i+1} = [gamma_i, G]
  auto gens = group->generator_ids();
  SubgroupBuilder term(group);
  for (auto g : gens)
    term.add(g);

  std::size_t previous = 0;
  while (term.order() != previous) {
    if (term.order() == 1)
      return true;
    previous = term.order();

    SubgroupBuilder next(group);
    for (auto h : term.generators()) {
      for (auto g : gens)
        next.add(group->commutator(h, g));
    }
    next.make_normal();
    term = std::move(next);
  }
  return term.order() == 1;
}

Quotient quotient(GroupPtr const &group, Subgroup const &normal)
{
  if (normal.parent() != group)
    throw InvalidArgument("subgroup belongs to a different group");
  if (!normal.is_normal())
    throw InvalidArgument("cannot form a quotient by a subgroup that is not normal");

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset_of(group->order(), unassigned);
  std::vector<ElementId> coset_reps;
  auto members = normal.elements();

  for (std::size_t x = 0; x < group->order(); ++x) {
    if (coset_of[x] != unassigned)
      continue;
    auto coset = static_cast<std::uint32_t>(coset_reps.size());
    for (auto n : members)
      coset_of[group->mul(static_cast<ElementId>(x), n)] = coset;
    coset_reps.push_back(static_cast<ElementId>(x));
  }

  std::size_t points = coset_reps.size();
  auto action = [&](ElementId g) {
    std::vector<Permutation::Point> images(points);
    for (std::size_t c = 0; c < points; ++c)
      images[c] = coset_of[group->mul(g, coset_reps[c])];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (auto g : group->generator_ids())
    gens.push_back(action(g));

  auto result = closure(points, gens, group->order());

  std::vector<ElementId> images;
  for (auto const &gen : gens)
    images.push_back(result->index_of(gen));

  auto projection = morphism_from_images(group, result, images);
  if (kernel(projection) != normal)
    throw std::logic_error("quotient projection has the wrong kernel");

  return Quotient{std::move(result), std::move(projection)};
}

} // namespace twistspec
