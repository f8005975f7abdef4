#ifndef TWISTSPEC_TESTS_HELPERS_HPP
#define TWISTSPEC_TESTS_HELPERS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "twistspec/catalog.hpp"
#include "twistspec/group.hpp"

namespace testing
{

using namespace twistspec;

inline Permutation cycles(std::size_t degree, std::vector<std::vector<Permutation::Point>> const &c)
{
  return Permutation::from_cycles(degree, c);
}

inline GroupPtr build(GroupDefinition const &def)
{
  return materialize(def);
}

inline std::vector<Permutation> generators_of(GroupDefinition const &def)
{
  std::vector<Permutation> gens;
  for (auto const &g : def.generators)
    gens.push_back(Permutation::from_one_based(g));
  return gens;
}

inline std::set<Permutation> brute_elements(GroupDefinition const &def)
{
  return oracle::closure(def.degree, generators_of(def));
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

/// Catalog groups up to the given order.
inline std::vector<GroupDefinition> catalog_up_to(std::size_t max_order)
{
  std::vector<GroupDefinition> res;
  for (auto const &def : shipped_catalog()) {
    if (*def.expected->order <= max_order)
      res.push_back(def);
  }
  return res;
}

} // namespace testing

#endif // TWISTSPEC_TESTS_HELPERS_HPP
