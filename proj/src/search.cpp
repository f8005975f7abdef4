#include <algorithm>
#include <sstream>

#include "search_common.hpp"
#include "twistspec/structure.hpp"

namespace twistspec
{

std::vector<ElementId> search_generators(GroupPtr const &group)
{
  std::vector<ElementId> gens;
  for (auto g : group->generator_ids()) {
    if (g == FiniteGroup::identity)
      continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }
  if (gens.size() <= 3)
    return gens;

  // Greedy: keep adding the element whose addition grows the generated
  // subgroup the most, smallest id on ties.
  std::vector<ElementId> greedy;
  SubgroupBuilder current(group);
  while (current.order() < group->order() && greedy.size() < gens.size()) {
    std::size_t best_order = 0;
    ElementId best = 0;
    for (std::size_t x = 1; x < group->order(); ++x) {
      if (current.contains(static_cast<ElementId>(x)))
        continue;
      auto trial = current;
      trial.add(static_cast<ElementId>(x));
      if (trial.order() > best_order) {
        best_order = trial.order();
        best = static_cast<ElementId>(x);
      }
    }
    current.add(best);
    greedy.push_back(best);
  }

  if (current.order() == group->order() && greedy.size() < gens.size())
    return greedy;
  return gens;
}

std::vector<std::vector<ElementId>>
candidate_images(GroupPtr const &group,
                 std::span<const ElementId> generators,
                 MorphismKind kind)
{
  std::vector<std::size_t> class_size;
  if (kind == MorphismKind::automorphism) {
    auto classes = conjugacy_classes(group);
    class_size.resize(group->order());
    for (std::size_t x = 0; x < group->order(); ++x)
      class_size[x] = classes.sizes[classes.class_of[x]];
  }

  std::vector<std::vector<ElementId>> res;
  for (auto g : generators) {
    std::size_t n = group->element_order(g);
    auto &cand = res.emplace_back();
    for (std::size_t y = 0; y < group->order(); ++y) {
      std::size_t m = group->element_order(static_cast<ElementId>(y));
      bool ok = kind == MorphismKind::endomorphism
                  ? n % m == 0
                  : m == n && class_size[y] == class_size[g];
      if (ok)
        cand.push_back(static_cast<ElementId>(y));
    }
  }
  return res;
}

namespace detail
{

SearchSetup::SearchSetup(GroupPtr const &group_, MorphismKind kind_)
: group(group_),
  kind(kind_),
  plan(group_, search_generators(group_)),
  candidates(candidate_images(group_, plan.generators(), kind_))
{}

bool try_candidate(SearchSetup const &setup,
                   std::span<const ElementId> images,
                   std::vector<ElementId> &table,
                   std::uint64_t &products)
{
  bool automorphism = setup.kind == MorphismKind::automorphism;

  if (automorphism) {
    // distinct generators must have distinct images under a bijection
    for (std::size_t i = 1; i < images.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (images[i] == images[j])
          return false;
      }
    }
  }

  if (!setup.plan.extend(*setup.group, images, table, products))
    return false;

  if (automorphism) {
    for (std::size_t x = 1; x < table.size(); ++x) {
      if (table[x] == FiniteGroup::identity)
        return false;
    }
  }
  return true;
}

std::string budget_message(Budget const &budget)
{
  std::ostringstream msg;
  msg << "morphism search exceeded the budget of " << budget.max_products
      << " group products";
  return msg.str();
}

} // namespace detail

namespace serial
{

void search(GroupPtr const &group, MorphismKind kind, Budget const &budget,
            std::function<void(Morphism &&)> const &sink)
{
  detail::SearchSetup setup(group, kind);
  std::vector<ElementId> table;
  std::uint64_t products = 0;

  if (setup.candidates.empty()) {
    sink(Morphism::identity(group));
    return;
  }

  for (std::size_t first = 0; first < setup.candidates[0].size(); ++first) {
    detail::for_each_tuple(setup, first, [&](std::span<const ElementId> images) {
      if (detail::try_candidate(setup, images, table, products))
        sink(Morphism(group, group, table));
      if (products > budget.max_products)
        throw BudgetExceeded(detail::budget_message(budget));
      return true;
    });
  }
}

std::vector<Morphism> enumerate(GroupPtr const &group, MorphismKind kind,
                                Budget const &budget)
{
  std::vector<Morphism> res;
  search(group, kind, budget, [&](Morphism &&phi) { res.push_back(std::move(phi)); });
  return res;
}

} // namespace serial

std::vector<Morphism> enumerate_endomorphisms(GroupPtr const &group,
                                              Budget const &budget,
                                              Execution exec)
{
  return exec == Execution::serial
           ? serial::enumerate(group, MorphismKind::endomorphism, budget)
           : parallel::enumerate(group, MorphismKind::endomorphism, budget);
}

std::vector<Morphism> enumerate_automorphisms(GroupPtr const &group,
                                              Budget const &budget,
                                              Execution exec)
{
  return exec == Execution::serial
           ? serial::enumerate(group, MorphismKind::automorphism, budget)
           : parallel::enumerate(group, MorphismKind::automorphism, budget);
}

} // namespace twistspec
