#ifndef TWISTSPEC_CATALOG_HPP
#define TWISTSPEC_CATALOG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twistspec/errors.hpp"
#include "twistspec/group.hpp"

namespace twistspec
{

/// Invariants a definition promises; materialize() enforces them.
struct ExpectedInvariants
{
  std::optional<std::size_t> order;
  std::optional<std::size_t> class_number;

  bool operator==(ExpectedInvariants const &) const = default;
};

/// A permutation group as stored on disk: 1-based image lists.
struct GroupDefinition
{
  std::string name;
  std::size_t degree = 1;
  std::vector<std::vector<std::int64_t>> generators;
  std::optional<ExpectedInvariants> expected;

  bool operator==(GroupDefinition const &) const = default;
};

/// Malformed definition file. what() carries the source, and a line or a
/// field path.
class ParseError : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

/// Validates the generators, builds the group and checks `expected`.
GroupPtr materialize(GroupDefinition const &def,
                     std::size_t order_cap = Budget::default_order_cap);

namespace builders
{

GroupDefinition trivial();
GroupDefinition cyclic(std::size_t n);
GroupDefinition abelian(std::vector<std::size_t> const &factors);
GroupDefinition dihedral(std::size_t n);       ///< order 2n, on n points
GroupDefinition symmetric(std::size_t n);
GroupDefinition alternating(std::size_t n);
GroupDefinition dicyclic(std::size_t n);       ///< order 4n, Dic2 = Q8
GroupDefinition metacyclic(std::size_t m, std::size_t n, std::size_t r);
GroupDefinition direct_product(GroupDefinition const &a, GroupDefinition const &b);
GroupDefinition holomorph_cyclic(std::size_t n);
GroupDefinition m9();
GroupDefinition sl2(std::size_t p);            ///< p in {3, 5}

} // namespace builders

/// The groups shipped in catalog/, all of order at most 120.
std::vector<GroupDefinition> shipped_catalog();

std::string to_json(GroupDefinition const &def);
GroupDefinition parse_definition(std::string_view text,
                                 std::string_view source = "<input>");

GroupDefinition load_definition(std::filesystem::path const &path);
void save_definition(GroupDefinition const &def, std::filesystem::path const &path);

/// "Hol(Z5)" -> "hol_z5.json"
std::string file_name_for(std::string_view name);

struct CatalogEntry
{
  std::filesystem::path path;
  std::variant<GroupDefinition, std::string> content;  ///< definition or error
};

/// Every *.json file of a directory, sorted by file name.
std::vector<CatalogEntry> load_directory(std::filesystem::path const &dir);

} // namespace twistspec

#endif // TWISTSPEC_CATALOG_HPP
