#ifndef TWISTSPEC_SEARCH_HPP
#define TWISTSPEC_SEARCH_HPP

#include <functional>
#include <vector>

#include "twistspec/errors.hpp"
#include "twistspec/group.hpp"
#include "twistspec/morphism.hpp"

namespace twistspec
{

enum class MorphismKind { endomorphism, automorphism };

enum class Execution { serial, parallel };

/// The generating set used by the search: the group's own generators with
/// duplicates and the identity removed, or, if that leaves more than three,
/// a greedily chosen smaller set when one is found.
std::vector<ElementId> search_generators(GroupPtr const &group);

/// Candidate images for each search generator. Endomorphisms: elements
/// whose order divides the generator's. Automorphisms: same order and same
/// conjugacy-class size.
std::vector<std::vector<ElementId>>
candidate_images(GroupPtr const &group,
                 std::span<const ElementId> generators,
                 MorphismKind kind);

namespace serial
{

/// Streams every morphism of the given kind exactly once, in lexicographic
/// order of candidate positions. Throws BudgetExceeded once more than
/// budget.max_products group products have been spent.
void search(GroupPtr const &group, MorphismKind kind, Budget const &budget,
            std::function<void(Morphism &&)> const &sink);

std::vector<Morphism> enumerate(GroupPtr const &group, MorphismKind kind,
                                Budget const &budget);

} // namespace serial

namespace parallel
{

/// Same output, in the same order, as serial::enumerate. Work is split over
/// the candidates of the first generator.
std::vector<Morphism> enumerate(GroupPtr const &group, MorphismKind kind,
                                Budget const &budget);

} // namespace parallel

std::vector<Morphism> enumerate_endomorphisms(GroupPtr const &group,
                                              Budget const &budget = {},
                                              Execution exec = Execution::parallel);

std::vector<Morphism> enumerate_automorphisms(GroupPtr const &group,
                                              Budget const &budget = {},
                                              Execution exec = Execution::parallel);

} // namespace twistspec

#endif // TWISTSPEC_SEARCH_HPP
