#include "twistspec/group.hpp"

#include <sstream>

namespace twistspec
{

FiniteGroup::FiniteGroup(std::size_t degree,
                         std::vector<Permutation> generators,
                         std::size_t order_cap)
: _degree(degree),
  _generators(std::move(generators))
{
  if (degree == 0)
    throw InvalidArgument("group degree must be positive");

  for (auto const &gen : _generators) {
    if (gen.degree() != degree) {
      std::ostringstream msg;
      msg << "generator " << gen << " has degree " << gen.degree()
          << ", expected " << degree;
      throw InvalidArgument(msg.str());
    }
  }

  auto add = [&](Permutation perm) {
    auto [it, inserted] = _index.try_emplace(perm, static_cast<ElementId>(_elements.size()));
    if (inserted) {
      if (_elements.size() >= order_cap) {
        std::ostringstream msg;
        msg << "group order exceeds the order cap of " << order_cap;
        throw BudgetExceeded(msg.str());
      }
      _elements.push_back(std::move(perm));
    }
    return it->second;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < _elements.size(); ++head) {
    for (auto const &gen : _generators)
      add(compose(_elements[head], gen));
  }

  for (auto const &gen : _generators)
    _generator_ids.push_back(_index.at(gen));

  std::size_t n = _elements.size();

  if (n <= cayley_table_limit) {
    _cayley.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        _cayley[a * n + b] = _index.at(compose(_elements[a], _elements[b]));
    }
  }

  _inverses.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    _inverses[x] = _index.at(_elements[x].inverse());

  _orders.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t k = 1;
    for (ElementId y = static_cast<ElementId>(x); y != identity; y = mul(y, static_cast<ElementId>(x)))
      ++k;
    _orders[x] = k;
  }
}

std::optional<ElementId> FiniteGroup::find(Permutation const &perm) const
{
  auto it = _index.find(perm);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(Permutation const &perm) const
{
  auto x = find(perm);
  if (!x)
    throw InvalidArgument("permutation " + perm.to_string() + " is not a group element");
  return *x;
}

ElementId FiniteGroup::mul_uncached(ElementId a, ElementId b) const
{
  return _index.at(compose(_elements[a], _elements[b]));
}

bool FiniteGroup::is_abelian() const
{
  for (auto a : _generator_ids) {
    for (auto b : _generator_ids) {
      if (mul(a, b) != mul(b, a))
        return false;
    }
  }
  return true;
}

GroupPtr closure(std::size_t degree,
                 std::vector<Permutation> generators,
                 std::size_t order_cap)
{
  return std::make_shared<const FiniteGroup>(degree, std::move(generators), order_cap);
}

std::size_t element_order(FiniteGroup const &group, ElementId x)
{
  return group.element_order(x);
}

} // namespace twistspec
