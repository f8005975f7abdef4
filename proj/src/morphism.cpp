#include "twistspec/morphism.hpp"

#include <sstream>

#include "extension.hpp"
#include "twistspec/structure.hpp"

namespace twistspec
{

namespace
{

/// Builds a subgroup from a set already known to be a subgroup, and fails
/// loudly if it is not.
Subgroup subgroup_from_mask(GroupPtr const &group, std::vector<bool> const &mask)
{
  SubgroupBuilder builder(group);
  std::size_t count = 0;
  for (std::size_t x = 0; x < mask.size(); ++x) {
    if (mask[x]) {
      ++count;
      builder.add(static_cast<ElementId>(x));
    }
  }
  if (builder.order() != count)
    throw std::logic_error("element set is not closed under the group product");
  return builder.build();
}

void require_endomorphism(Morphism const &phi, char const *what)
{
  if (!phi.is_endomorphism())
    throw InvalidArgument(std::string(what) + " requires an endomorphism");
}

} // namespace

Morphism::Morphism(GroupPtr source, GroupPtr target, std::vector<ElementId> table)
: _source(std::move(source)),
  _target(std::move(target)),
  _table(std::move(table))
{
  if (_table.size() != _source->order())
    throw InvalidArgument("morphism table does not cover the source group");
  for (auto y : _table) {
    if (y >= _target->order())
      throw InvalidArgument("morphism table refers outside the target group");
  }
}

Morphism Morphism::identity(GroupPtr group)
{
  std::vector<ElementId> table(group->order());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = static_cast<ElementId>(x);
  return Morphism(group, group, std::move(table));
}

Morphism Morphism::trivial(GroupPtr source, GroupPtr target)
{
  std::vector<ElementId> table(source->order(), FiniteGroup::identity);
  return Morphism(std::move(source), std::move(target), std::move(table));
}

bool Morphism::is_trivial() const
{
  for (auto y : _table) {
    if (y != FiniteGroup::identity)
      return false;
  }
  return true;
}

bool Morphism::is_injective() const
{
  if (_source->order() > _target->order())
    return false;
  // a homomorphism is injective iff its kernel is trivial
  for (std::size_t x = 1; x < _table.size(); ++x) {
    if (_table[x] == FiniteGroup::identity)
      return false;
  }
  return true;
}

bool Morphism::is_surjective() const
{
  std::vector<bool> hit(_target->order(), false);
  std::size_t count = 0;
  for (auto y : _table) {
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == _target->order();
}

std::vector<Permutation> Morphism::generator_images() const
{
  std::vector<Permutation> res;
  for (auto g : _source->generator_ids())
    res.push_back(_target->element(_table[g]));
  return res;
}

bool Morphism::verify() const
{
  if (_table[FiniteGroup::identity] != FiniteGroup::identity)
    return false;
  for (std::size_t x = 0; x < _table.size(); ++x) {
    for (auto g : _source->generator_ids()) {
      if (_table[_source->mul(static_cast<ElementId>(x), g)] != _target->mul(_table[x], _table[g]))
        return false;
    }
  }
  return true;
}

Morphism morphism_from_images(GroupPtr source, GroupPtr target,
                              std::span<const ElementId> images)
{
  auto gens = source->generator_ids();
  if (images.size() != gens.size()) {
    std::ostringstream msg;
    msg << "expected " << gens.size() << " generator images, got " << images.size();
    throw InvalidArgument(msg.str());
  }
  for (auto y : images) {
    if (y >= target->order())
      throw InvalidArgument("generator image is not an element of the target");
  }

  // Repeated or trivial generators must receive consistent images.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == FiniteGroup::identity && images[i] != FiniteGroup::identity)
      throw NotAHomomorphism("identity generator must map to the identity");
    for (std::size_t j = 0; j < i; ++j) {
      if (gens[i] == gens[j] && images[i] != images[j])
        throw NotAHomomorphism("repeated generator has two different images");
    }
  }

  detail::ExtensionPlan plan(source, {gens.begin(), gens.end()});
  std::vector<ElementId> table;
  std::uint64_t products = 0;
  if (!plan.extend(*target, images, table, products))
    throw NotAHomomorphism("generator images do not extend to a homomorphism");

  return Morphism(std::move(source), std::move(target), std::move(table));
}

Morphism morphism_from_images(GroupPtr source, GroupPtr target,
                              std::span<const Permutation> images)
{
  std::vector<ElementId> ids;
  for (auto const &perm : images)
    ids.push_back(target->index_of(perm));
  return morphism_from_images(std::move(source), std::move(target), ids);
}

Morphism compose_morphisms(Morphism const &first, Morphism const &second)
{
  if (second.target() != first.source())
    throw InvalidArgument("morphisms are not composable");

  std::vector<ElementId> table(second.source()->order());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = first(second(static_cast<ElementId>(x)));
  return Morphism(second.source(), first.target(), std::move(table));
}

Morphism power(Morphism const &phi, unsigned n)
{
  require_endomorphism(phi, "power");
  auto res = Morphism::identity(phi.source());
  for (unsigned i = 0; i < n; ++i)
    res = compose_morphisms(phi, res);
  return res;
}

Morphism inverse(Morphism const &phi)
{
  if (!phi.is_bijective())
    throw InvalidArgument("only bijective morphisms have an inverse");

  std::vector<ElementId> table(phi.target()->order());
  for (std::size_t x = 0; x < phi.table().size(); ++x)
    table[phi(static_cast<ElementId>(x))] = static_cast<ElementId>(x);
  return Morphism(phi.target(), phi.source(), std::move(table));
}

Subgroup kernel(Morphism const &phi)
{
  std::vector<bool> mask(phi.source()->order());
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = phi(static_cast<ElementId>(x)) == FiniteGroup::identity;
  return subgroup_from_mask(phi.source(), mask);
}

Subgroup image(Morphism const &phi)
{
  std::vector<bool> mask(phi.target()->order(), false);
  std::size_t kernel_order = 0;
  for (auto y : phi.table()) {
    mask[y] = true;
    if (y == FiniteGroup::identity)
      ++kernel_order;
  }
  auto res = subgroup_from_mask(phi.target(), mask);
  if (kernel_order * res.order() != phi.source()->order())
    throw std::logic_error("|ker| * |im| != |G|: table is not a homomorphism");
  return res;
}

Subgroup fixed_subgroup(Morphism const &phi)
{
  require_endomorphism(phi, "fixed_subgroup");
  std::vector<bool> mask(phi.source()->order());
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = phi(static_cast<ElementId>(x)) == x;
  return subgroup_from_mask(phi.source(), mask);
}

bool is_fixed_point_free(Morphism const &phi)
{
  require_endomorphism(phi, "is_fixed_point_free");
  for (std::size_t x = 1; x < phi.table().size(); ++x) {
    if (phi(static_cast<ElementId>(x)) == x)
      return false;
  }
  return true;
}

bool is_class_preserving(Morphism const &phi, ClassPartition const &classes)
{
  require_endomorphism(phi, "is_class_preserving");
  if (classes.group != phi.source())
    throw InvalidArgument("class partition belongs to a different group");

  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (classes.class_of[phi(classes.representatives[c])] != c)
      return false;
  }
  return true;
}

Morphism inner_automorphism(GroupPtr const &group, ElementId h)
{
  std::vector<ElementId> table(group->order());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = group->conj(h, static_cast<ElementId>(x));
  return Morphism(group, group, std::move(table));
}

Subgroup n_phi(Morphism const &phi)
{
  require_endomorphism(phi, "n_phi");

  // ker(phi^n) is an ascending chain, so equal orders mean equal subgroups
  auto iterate = phi;
  auto current = kernel(iterate);
  for (;;) {
    iterate = compose_morphisms(phi, iterate);
    auto next = kernel(iterate);
    if (next.order() == current.order())
      break;
    current = std::move(next);
  }

  if (!current.is_normal())
    throw std::logic_error("N_phi is not normal");
  for (auto x : current.elements()) {
    if (!current.contains(phi(x)))
      throw std::logic_error("N_phi is not phi-invariant");
  }
  return current;
}

Morphism induced_on_quotient(Morphism const &phi, Subgroup const &normal)
{
  require_endomorphism(phi, "induced_on_quotient");
  auto const &group = phi.source();
  if (normal.parent() != group)
    throw InvalidArgument("subgroup belongs to a different group");
  for (auto x : normal.elements()) {
    if (!normal.contains(phi(x)))
      throw InvalidArgument("subgroup is not invariant under the endomorphism");
  }

  auto q = quotient(group, normal);
  std::vector<ElementId> images;
  for (auto g : group->generator_ids())
    images.push_back(q.projection(phi(g)));
  return morphism_from_images(q.group, q.group, images);
}

} // namespace twistspec
