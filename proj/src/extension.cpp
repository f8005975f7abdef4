#include "extension.hpp"

namespace twistspec::detail
{

ExtensionPlan::ExtensionPlan(GroupPtr group, std::vector<ElementId> generators)
: _group(std::move(group)),
  _generators(std::move(generators))
{
  std::size_t n = _group->order();
  std::size_t k = _generators.size();

  _right.resize(n * k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i)
      _right[x * k + i] = _group->mul(static_cast<ElementId>(x), _generators[i]);
  }

  std::vector<bool> seen(n, false);
  std::vector<ElementId> queue{FiniteGroup::identity};
  seen[FiniteGroup::identity] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementId x = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      ElementId y = _right[x * k + i];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        _tree.push_back({y, x, static_cast<std::uint32_t>(i)});
      }
    }
  }

  if (queue.size() != n)
    throw InvalidArgument("elements do not generate the group");
}

bool ExtensionPlan::extend(FiniteGroup const &target,
                           std::span<const ElementId> images,
                           std::vector<ElementId> &table,
                           std::uint64_t &products) const
{
  std::size_t n = _group->order();
  std::size_t k = _generators.size();

  table.resize(n);
  table[FiniteGroup::identity] = FiniteGroup::identity;
  for (auto const &step : _tree)
    table[step.node] = target.mul(table[step.parent], images[step.generator]);
  products += _tree.size();

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      ++products;
      if (table[_right[x * k + i]] != target.mul(table[x], images[i]))
        return false;
    }
  }
  return true;
}

} // namespace twistspec::detail
