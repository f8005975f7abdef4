#include "twistspec/subgroup.hpp"

#include <sstream>

namespace twistspec
{

namespace
{

void check_lagrange(FiniteGroup const &parent, std::size_t order)
{
  if (order == 0 || parent.order() % order != 0) {
    std::ostringstream msg;
    msg << "subgroup order " << order << " does not divide group order "
        << parent.order();
    throw std::logic_error(msg.str());
  }
}

} // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<bool> members)
: _parent(std::move(parent)),
  _members(std::move(members)),
  _order(0)
{
  if (_members.size() != _parent->order())
    throw InvalidArgument("membership mask does not match group order");
  if (!_members[FiniteGroup::identity])
    throw InvalidArgument("subgroup does not contain the identity");

  auto elems = elements();
  for (auto a : elems) {
    if (!_members[_parent->inv(a)])
      throw InvalidArgument("subgroup is not closed under inversion");
    for (auto b : elems) {
      if (!_members[_parent->mul(a, b)])
        throw InvalidArgument("subgroup is not closed under multiplication");
    }
  }
  _order = elems.size();
  check_lagrange(*_parent, _order);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<bool> members, std::size_t order, Trusted)
: _parent(std::move(parent)),
  _members(std::move(members)),
  _order(order)
{
  check_lagrange(*_parent, _order);
}

Subgroup Subgroup::trivial(GroupPtr parent)
{
  std::vector<bool> members(parent->order(), false);
  members[FiniteGroup::identity] = true;
  return Subgroup(std::move(parent), std::move(members), 1, Trusted{});
}

Subgroup Subgroup::whole(GroupPtr parent)
{
  std::size_t n = parent->order();
  return Subgroup(std::move(parent), std::vector<bool>(n, true), n, Trusted{});
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const ElementId> elements)
{
  SubgroupBuilder builder(std::move(parent));
  for (auto x : elements)
    builder.add(x);
  return builder.build();
}

std::vector<ElementId> Subgroup::elements() const
{
  std::vector<ElementId> res;
  for (std::size_t x = 0; x < _members.size(); ++x) {
    if (_members[x])
      res.push_back(static_cast<ElementId>(x));
  }
  return res;
}

bool Subgroup::is_normal() const
{
  for (auto g : _parent->generator_ids()) {
    for (std::size_t x = 0; x < _members.size(); ++x) {
      if (_members[x] && !_members[_parent->conj(g, static_cast<ElementId>(x))])
        return false;
    }
  }
  return true;
}

SubgroupBuilder::SubgroupBuilder(GroupPtr parent)
: _parent(std::move(parent)),
  _members(_parent->order(), false),
  _elements{FiniteGroup::identity}
{
  _members[FiniteGroup::identity] = true;
}

bool SubgroupBuilder::add(ElementId x)
{
  if (_members[x])
    return false;

  _generators.push_back(x);

  // Right-multiplying every element by every generator until nothing new
  // appears yields the generated subgroup.
  for (std::size_t head = 0; head < _elements.size(); ++head) {
    for (auto gen : _generators) {
      ElementId y = _parent->mul(_elements[head], gen);
      if (!_members[y]) {
        _members[y] = true;
        _elements.push_back(y);
      }
    }
  }
  return true;
}

void SubgroupBuilder::make_normal()
{
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      for (auto g : _parent->generator_ids()) {
        if (add(_parent->conj(g, _generators[i])))
          changed = true;
      }
    }
  }
}

Subgroup SubgroupBuilder::build() const
{
  return Subgroup(_parent, _members, _elements.size(), Subgroup::Trusted{});
}

} // namespace twistspec
