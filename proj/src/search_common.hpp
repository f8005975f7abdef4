#ifndef TWISTSPEC_SRC_SEARCH_COMMON_HPP
#define TWISTSPEC_SRC_SEARCH_COMMON_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extension.hpp"
#include "twistspec/search.hpp"

namespace twistspec::detail
{

struct SearchSetup
{
  SearchSetup(GroupPtr const &group, MorphismKind kind);

  GroupPtr group;
  MorphismKind kind;
  ExtensionPlan plan;
  std::vector<std::vector<ElementId>> candidates;
};

/// Extends one candidate tuple; returns true if it yields a morphism of the
/// requested kind.
bool try_candidate(SearchSetup const &setup,
                   std::span<const ElementId> images,
                   std::vector<ElementId> &table,
                   std::uint64_t &products);

/// Visits every tuple whose first position is fixed to first_choice, in
/// lexicographic order. Requires at least one generator. visit(images)
/// returns false to stop early.
template<typename Visit>
bool for_each_tuple(SearchSetup const &setup, std::size_t first_choice, Visit &&visit)
{
  auto const &cand = setup.candidates;
  std::size_t k = cand.size();
  for (auto const &c : cand) {
    if (c.empty())
      return true;
  }

  std::vector<std::size_t> pos(k, 0);
  std::vector<ElementId> images(k);
  pos[0] = first_choice;
  for (std::size_t i = 0; i < k; ++i)
    images[i] = cand[i][pos[i]];

  for (;;) {
    if (!visit(std::span<const ElementId>(images)))
      return false;

    // odometer over positions 1..k-1
    std::size_t level = k;
    for (;;) {
      if (level <= 1)
        return true;
      --level;
      if (++pos[level] < cand[level].size()) {
        images[level] = cand[level][pos[level]];
        break;
      }
      pos[level] = 0;
      images[level] = cand[level][0];
    }
  }
}

std::string budget_message(Budget const &budget);

} // namespace twistspec::detail

#endif // TWISTSPEC_SRC_SEARCH_COMMON_HPP
