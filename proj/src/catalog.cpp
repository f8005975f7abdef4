#include "twistspec/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "twistspec/structure.hpp"

namespace twistspec
{

GroupPtr materialize(GroupDefinition const &def, std::size_t order_cap)
{
  if (def.degree == 0)
    throw InvalidArgument(def.name + ": degree must be positive");

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < def.generators.size(); ++i) {
    auto const &images = def.generators[i];
    if (images.size() != def.degree) {
      std::ostringstream msg;
      msg << def.name << ": generator " << (i + 1) << " has " << images.size()
          << " images, expected " << def.degree;
      throw InvalidArgument(msg.str());
    }
    try {
      gens.push_back(Permutation::from_one_based(images));
    } catch (InvalidArgument const &e) {
      std::ostringstream msg;
      msg << def.name << ": generator " << (i + 1) << ": " << e.what();
      throw InvalidArgument(msg.str());
    }
  }

  auto group = closure(def.degree, std::move(gens), order_cap);

  if (def.expected) {
    auto const &exp = *def.expected;
    if (exp.order && *exp.order != group->order()) {
      std::ostringstream msg;
      msg << def.name << ": expected order " << *exp.order << ", got " << group->order();
      throw InvalidArgument(msg.str());
    }
    if (exp.class_number) {
      auto k = conjugacy_classes(group).count();
      if (*exp.class_number != k) {
        std::ostringstream msg;
        msg << def.name << ": expected class number " << *exp.class_number << ", got " << k;
        throw InvalidArgument(msg.str());
      }
    }
  }
  return group;
}

namespace builders
{

namespace
{

using Images = std::vector<std::size_t>;

/// 0-based image lists to a definition.
GroupDefinition make(std::string name, std::size_t degree, std::vector<Images> gens,
                     std::optional<std::size_t> order,
                     std::optional<std::size_t> class_number = std::nullopt)
{
  GroupDefinition def;
  def.name = std::move(name);
  def.degree = degree;
  for (auto const &g : gens) {
    auto &out = def.generators.emplace_back();
    for (auto x : g)
      out.push_back(static_cast<std::int64_t>(x) + 1);
  }
  def.expected = ExpectedInvariants{order, class_number};
  return def;
}

Images from_map(std::size_t degree, std::function<std::size_t(std::size_t)> const &f)
{
  Images res(degree);
  for (std::size_t x = 0; x < degree; ++x)
    res[x] = f(x);
  return res;
}

std::size_t power_mod(std::size_t base, std::size_t exp, std::size_t mod)
{
  std::size_t res = 1 % mod;
  for (std::size_t i = 0; i < exp; ++i)
    res = res * base % mod;
  return res;
}

std::size_t multiplicative_order(std::size_t r, std::size_t m)
{
  std::size_t k = 1;
  for (std::size_t x = r % m; x != 1 % m; x = x * r % m)
    ++k;
  return k;
}

std::size_t partitions(std::size_t n)
{
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t s = part; s <= n; ++s)
      p[s] += p[s - part];
  }
  return p[n];
}

std::size_t factorial(std::size_t n)
{
  std::size_t res = 1;
  for (std::size_t i = 2; i <= n; ++i)
    res *= i;
  return res;
}

} // namespace

GroupDefinition trivial()
{
  return make("Trivial", 1, {}, 1, 1);
}

GroupDefinition cyclic(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("cyclic group order must be positive");
  if (n == 1)
    return make("Z1", 1, {}, 1, 1);
  return make("Z" + std::to_string(n), n,
              {from_map(n, [n](std::size_t x) { return (x + 1) % n; })}, n, n);
}

GroupDefinition abelian(std::vector<std::size_t> const &factors)
{
  if (factors.empty())
    throw InvalidArgument("abelian group needs at least one factor");
  auto res = cyclic(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    res = direct_product(res, cyclic(factors[i]));
  return res;
}

GroupDefinition dihedral(std::size_t n)
{
  if (n < 3)
    throw InvalidArgument("dihedral group needs n >= 3");
  std::size_t k = n % 2 == 1 ? (n + 3) / 2 : (n + 6) / 2;
  return make("D" + std::to_string(n), n,
              {from_map(n, [n](std::size_t x) { return (x + 1) % n; }),
               from_map(n, [n](std::size_t x) { return (n - x) % n; })},
              2 * n, k);
}

GroupDefinition symmetric(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("symmetric group degree must be positive");
  std::vector<Images> gens;
  if (n >= 3)
    gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
  if (n >= 2) {
    gens.push_back(from_map(n, [](std::size_t x) {
      return x == 0 ? std::size_t{1} : x == 1 ? std::size_t{0} : x;
    }));
  }
  return make("S" + std::to_string(n), n, std::move(gens), factorial(n), partitions(n));
}

GroupDefinition alternating(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("alternating group degree must be positive");
  std::vector<Images> gens;
  if (n >= 3) {
    // (1 2 3) with (1 2 ... n) for odd n, (2 3 ... n) for even n
    gens.push_back(from_map(n, [](std::size_t x) { return x < 3 ? (x + 1) % 3 : x; }));
    if (n > 3) {
      if (n % 2 == 1)
        gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
      else
        gens.push_back(from_map(n, [n](std::size_t x) {
          return x == 0 ? 0 : x == n - 1 ? 1 : x + 1;
        }));
    }
  }
  std::size_t order = n < 2 ? 1 : factorial(n) / 2;
  return make("A" + std::to_string(n), n, std::move(gens), order);
}

GroupDefinition dicyclic(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("dicyclic group needs n >= 1");

  // left regular action on a^i x^j, point i + 2n*j
  std::size_t m = 2 * n;
  std::size_t degree = 2 * m;
  auto a = from_map(degree, [m](std::size_t p) {
    std::size_t i = p % m, j = p / m;
    return (i + 1) % m + m * j;
  });
  auto x = from_map(degree, [m, n](std::size_t p) {
    std::size_t i = p % m, j = p / m;
    // x a^i = a^-i x and x^2 = a^n
    std::size_t neg = (m - i) % m;
    return j == 0 ? neg + m : (neg + n) % m;
  });
  std::string name = n == 2 ? "Q8" : "Dic" + std::to_string(n);
  return make(name, degree, {a, x}, 4 * n, n + 3);
}

GroupDefinition metacyclic(std::size_t m, std::size_t n, std::size_t r)
{
  if (m < 2 || n < 1)
    throw InvalidArgument("metacyclic group needs m >= 2 and n >= 1");
  if (std::gcd(r, m) != 1)
    throw InvalidArgument("metacyclic group needs gcd(r, m) = 1");
  if (power_mod(r % m, n, m) != 1 % m)
    throw InvalidArgument("metacyclic group needs r^n = 1 mod m");

  std::string name = "Z" + std::to_string(m) + ":Z" + std::to_string(n);
  r %= m;

  if (multiplicative_order(r, m) == n) {
    // affine action x -> x + 1, x -> r x on Z_m is faithful
    return make(name, m,
                {from_map(m, [m](std::size_t x) { return (x + 1) % m; }),
                 from_map(m, [m, r](std::size_t x) { return x * r % m; })},
                m * n);
  }

  // left regular action on a^i b^j, point i + m*j, with b a b^-1 = a^r
  std::size_t degree = m * n;
  auto a = from_map(degree, [m](std::size_t p) {
    return (p % m + 1) % m + m * (p / m);
  });
  auto b = from_map(degree, [m, n, r](std::size_t p) {
    std::size_t i = p % m, j = p / m;
    return i * r % m + m * ((j + 1) % n);
  });
  return make(name, degree, {a, b}, m * n);
}

GroupDefinition direct_product(GroupDefinition const &a, GroupDefinition const &b)
{
  GroupDefinition res;
  res.name = a.name + "x" + b.name;
  res.degree = a.degree + b.degree;

  auto da = static_cast<std::int64_t>(a.degree);
  for (auto const &g : a.generators) {
    auto &out = res.generators.emplace_back(g);
    for (std::int64_t x = da + 1; x <= static_cast<std::int64_t>(res.degree); ++x)
      out.push_back(x);
  }
  for (auto const &g : b.generators) {
    auto &out = res.generators.emplace_back();
    for (std::int64_t x = 1; x <= da; ++x)
      out.push_back(x);
    for (auto y : g)
      out.push_back(y + da);
  }

  if (a.expected && b.expected) {
    ExpectedInvariants exp;
    if (a.expected->order && b.expected->order)
      exp.order = *a.expected->order * *b.expected->order;
    if (a.expected->class_number && b.expected->class_number)
      exp.class_number = *a.expected->class_number * *b.expected->class_number;
    res.expected = exp;
  }
  return res;
}

GroupDefinition holomorph_cyclic(std::size_t n)
{
  if (n < 2)
    throw InvalidArgument("holomorph of Z_n needs n >= 2");

  std::vector<std::size_t> units;
  for (std::size_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1)
      units.push_back(a);
  }

  auto generated = [n](std::vector<std::size_t> const &gens) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> elems{1 % n};
    seen[1 % n] = true;
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (auto g : gens) {
        std::size_t y = elems[head] * g % n;
        if (!seen[y]) {
          seen[y] = true;
          elems.push_back(y);
        }
      }
    }
    return elems.size();
  };

  // smallest primitive root when the unit group is cyclic, otherwise a
  // greedy generating set
  std::vector<std::size_t> unit_gens;
  while (generated(unit_gens) < units.size()) {
    std::size_t best = 0, best_size = 0;
    for (auto u : units) {
      auto trial = unit_gens;
      trial.push_back(u);
      auto size = generated(trial);
      if (size > best_size) {
        best_size = size;
        best = u;
      }
    }
    unit_gens.push_back(best);
  }

  std::vector<Images> gens{from_map(n, [n](std::size_t x) { return (x + 1) % n; })};
  for (auto u : unit_gens)
    gens.push_back(from_map(n, [n, u](std::size_t x) { return x * u % n; }));

  return make("Hol(Z" + std::to_string(n) + ")", n, std::move(gens), n * units.size());
}

GroupDefinition m9()
{
  // the affine plane over F_3, point (x, y) numbered x + 3y
  auto point = [](int x, int y) {
    return static_cast<std::size_t>(((x % 3) + 3) % 3 + 3 * (((y % 3) + 3) % 3));
  };
  auto affine = [&](int a, int b, int c, int d, int tx, int ty) {
    return from_map(9, [&](std::size_t p) {
      int x = static_cast<int>(p % 3), y = static_cast<int>(p / 3);
      return point(a * x + b * y + tx, c * x + d * y + ty);
    });
  };

  return make("M9", 9,
              {affine(1, 0, 0, 1, 1, 0),
               affine(1, 0, 0, 1, 0, 1),
               affine(0, -1, 1, 0, 0, 0),
               affine(1, 1, 1, -1, 0, 0)},
              72, 6);
}

GroupDefinition sl2(std::size_t p)
{
  if (p != 3 && p != 5)
    throw InvalidArgument("sl2 is provided for p = 3 and p = 5 only");

  // nonzero vectors (x, y) numbered x + p*y - 1
  auto q = static_cast<int>(p);
  auto linear = [q](int a, int b, int c, int d) {
    return from_map(static_cast<std::size_t>(q * q - 1), [=](std::size_t i) {
      int v = static_cast<int>(i) + 1;
      int x = v % q, y = v / q;
      int nx = ((a * x + b * y) % q + q) % q;
      int ny = ((c * x + d * y) % q + q) % q;
      return static_cast<std::size_t>(nx + q * ny - 1);
    });
  };

  std::size_t order = p * (p * p - 1);
  std::size_t k = p == 3 ? 7 : 9;
  return make("SL(2," + std::to_string(p) + ")", p * p - 1,
              {linear(1, 1, 0, 1), linear(0, -1, 1, 0)}, order, k);
}

} // namespace builders

namespace
{

GroupDefinition with_class_number(GroupDefinition def, std::size_t k)
{
  if (!def.expected)
    def.expected = ExpectedInvariants{};
  def.expected->class_number = k;
  return def;
}

} // namespace

std::vector<GroupDefinition> shipped_catalog()
{
  using namespace builders;
  return {
    trivial(),
    cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), cyclic(7), cyclic(8),
    cyclic(9), cyclic(11), cyclic(13), cyclic(27),
    abelian({2, 2}), abelian({2, 4}), abelian({2, 2, 2}), abelian({3, 3}),
    abelian({5, 5}),
    symmetric(3), dihedral(4), dihedral(5), dihedral(6), dicyclic(2), dicyclic(3),
    with_class_number(alternating(4), 4),
    symmetric(4),
    with_class_number(alternating(5), 5),
    symmetric(5),
    with_class_number(holomorph_cyclic(5), 5),
    with_class_number(holomorph_cyclic(7), 7),
    with_class_number(holomorph_cyclic(9), 10),
    with_class_number(holomorph_cyclic(11), 11),
    with_class_number(holomorph_cyclic(15), 15),
    with_class_number(metacyclic(7, 3, 2), 5),
    with_class_number(metacyclic(4, 4, 3), 10),
    m9(), sl2(3), sl2(5),
    direct_product(symmetric(3), cyclic(3)),
    direct_product(symmetric(3), symmetric(3)),
    direct_product(cyclic(2), with_class_number(alternating(4), 4)),
    direct_product(cyclic(2), symmetric(4)),
  };
}

std::string file_name_for(std::string_view name)
{
  std::string res;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      res += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!res.empty() && res.back() != '_') {
      res += '_';
    }
  }
  while (!res.empty() && res.back() == '_')
    res.pop_back();
  if (res.empty())
    res = "group";
  return res + ".json";
}

} // namespace twistspec
