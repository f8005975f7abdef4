#ifndef TWISTSPEC_ERRORS_HPP
#define TWISTSPEC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistspec
{

/// Raised for malformed input: bad permutations, degree mismatches, invalid
/// builder parameters, preconditions on subgroups and morphisms.
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A group or a search exceeded one of the configured desk-scale limits.
class BudgetExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NotAHomomorphism : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The two Reidemeister-number routes disagreed. Always a bug.
class MethodDisagreement : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Limits shared by materialization and morphism search.
struct Budget
{
  static constexpr std::size_t default_order_cap = 20000;
  static constexpr std::uint64_t default_products = 100'000'000;

  std::size_t order_cap = default_order_cap;
  std::uint64_t max_products = default_products;
};

} // namespace twistspec

#endif // TWISTSPEC_ERRORS_HPP
