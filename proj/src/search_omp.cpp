#include <atomic>

#include "search_common.hpp"

namespace twistspec::parallel
{

std::vector<Morphism> enumerate(GroupPtr const &group, MorphismKind kind,
                                Budget const &budget)
{
  detail::SearchSetup setup(group, kind);
  if (setup.candidates.empty())
    return {Morphism::identity(group)};

  auto branches = static_cast<long>(setup.candidates[0].size());
  std::vector<std::vector<std::vector<ElementId>>> found(branches);
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> exceeded{false};

  #pragma omp parallel for schedule(dynamic, 1)
  for (long first = 0; first < branches; ++first) {
    if (exceeded.load(std::memory_order_relaxed))
      continue;

    std::vector<ElementId> table;
    std::uint64_t local = 0;
    detail::for_each_tuple(setup, static_cast<std::size_t>(first),
                           [&](std::span<const ElementId> images) {
      if (detail::try_candidate(setup, images, table, local))
        found[first].push_back(table);

      // publish in chunks to keep the shared counter cool
      if (local >= 4096) {
        auto total = spent.fetch_add(local, std::memory_order_relaxed) + local;
        local = 0;
        if (total > budget.max_products) {
          exceeded.store(true, std::memory_order_relaxed);
          return false;
        }
        if (exceeded.load(std::memory_order_relaxed))
          return false;
      }
      return true;
    });
    if (spent.fetch_add(local, std::memory_order_relaxed) + local > budget.max_products)
      exceeded.store(true, std::memory_order_relaxed);
  }

  if (exceeded.load())
    throw BudgetExceeded(detail::budget_message(budget));

  std::vector<Morphism> res;
  for (auto &branch : found) {
    for (auto &table : branch)
      res.emplace_back(group, group, std::move(table));
  }
  return res;
}

} // namespace twistspec::parallel
