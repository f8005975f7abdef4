#include <doctest.h>

#include "helpers.hpp"
#include "twistspec/search.hpp"
#include "twistspec/spectra.hpp"
#include "twistspec/structure.hpp"
#include "twistspec/twisted.hpp"

using namespace testing;

namespace
{

using Values = std::vector<std::size_t>;

GroupDefinition named(std::string const &name)
{
  for (auto const &def : shipped_catalog())
    if (def.name == name)
      return def;
  throw std::runtime_error("no catalog group " + name);
}

CheckResult const *find_check(std::vector<CheckResult> const &battery, std::string const &name)
{
  for (auto const &c : battery)
    if (c.name == name)
      return &c;
  return nullptr;
}

} // namespace

TEST_CASE("spectrum examples")
{
  CHECK(spectrum(build(builders::symmetric(4))).values() == Values{5});
  CHECK(spectrum(build(builders::cyclic(2))).values() == Values{2});

  auto v4 = spectrum(build(builders::abelian({2, 2})));
  CHECK(v4.values() == Values{1, 2, 4});
  CHECK(v4.total() == 6);
  CHECK(v4.count(4) == 1);
  CHECK(v4.count(1) == 2);
  CHECK(v4.count(2) == 3);
  CHECK(v4.count(3) == 0);
}

TEST_CASE("extended spectrum examples")
{
  CHECK(extended_spectrum(build(builders::alternating(4))).values() == Values{1, 2, 3, 4});
  CHECK(extended_spectrum(build(builders::cyclic(5))).values() == Values{1, 5});
  CHECK(extended_spectrum(build(builders::symmetric(3))).values() == Values{1, 2, 3});
  CHECK(extended_spectrum(build(builders::dicyclic(2))).values() == Values{1, 2, 3, 5});
}

TEST_CASE("classify examples")
{
  auto hol5 = classify(build(builders::holomorph_cyclic(5)), "Hol(Z5)");
  CHECK(hol5.order == 20);
  CHECK(hol5.class_number == 5);
  CHECK(hol5.flags.trivial_spectrum);
  CHECK(hol5.out_order == 1);
  CHECK(hol5.battery_passed());

  auto m9 = classify(build(builders::m9()), "M9");
  CHECK(m9.class_number == 6);
  REQUIRE(m9.flags.full_extended_spectrum.has_value());
  CHECK(*m9.flags.full_extended_spectrum);
  CHECK(m9.end_count == 676u);
  CHECK(m9.aut_count == 432);

  auto z6 = classify(build(builders::cyclic(6)), "Z6");
  CHECK_FALSE(z6.flags.trivial_spectrum);
  CHECK(z6.spectrum.values() == Values{2, 6});
  CHECK(z6.flags.abelian);
  CHECK(z6.flags.nilpotent);

  auto triv = classify(build(builders::trivial()), "Trivial");
  CHECK(triv.spectrum.values() == Values{1});
  CHECK(triv.extended_spectrum->values() == Values{1});
  CHECK(*triv.flags.full_extended_spectrum);
  CHECK(triv.battery_passed());
}

TEST_CASE("report invariants on catalog groups")
{
  for (auto const &def : catalog_up_to(24)) {
    CAPTURE(def.name);
    auto group = build(def);
    auto report = classify(group, def.name);
    auto k = report.class_number;
    REQUIRE(report.extended_spectrum.has_value());
    auto const &ext = *report.extended_spectrum;

    CHECK(report.spectrum.contains(k));
    CHECK(ext.contains(1));
    for (auto r : report.spectrum.values())
      CHECK(ext.contains(r));
    CHECK(ext.values().back() <= k);
    CHECK(report.spectrum.total() == report.aut_count);
    CHECK(ext.total() == *report.end_count);
    if (k >= 2)
      CHECK_FALSE(report.spectrum.contains(k - 1));

    CHECK(report.spectrum.count(k) == report.class_preserving_aut_count);
    CHECK(ext.count(1) == *report.fixed_point_free_end_count);
    CHECK(report.flags.trivial_spectrum == (report.class_preserving_aut_count == report.aut_count));
    CHECK(report.out_order * report.order == report.aut_count * report.center_order);

    if (report.order > 2 && (report.flags.odd_order || report.flags.nilpotent || report.flags.quasisimple))
      CHECK_FALSE(*report.flags.full_extended_spectrum);

    CHECK(report.battery_passed());
  }
}

TEST_CASE("methods agree on spectra")
{
  for (auto const &def : catalog_up_to(24)) {
    CAPTURE(def.name);
    auto group = build(def);
    SpectrumOptions fixed, orbits;
    fixed.method = ReidemeisterMethod::fixed_classes;
    orbits.method = ReidemeisterMethod::orbits;
    CHECK(spectrum(group, fixed) == spectrum(group, orbits));
    CHECK(extended_spectrum(group, fixed) == extended_spectrum(group, orbits));
  }
}

TEST_CASE("serial and parallel sweeps agree")
{
  for (auto name : {"S4", "M9", "SL(2,3)"}) {
    CAPTURE(name);
    auto group = build(named(name));
    auto classes = conjugacy_classes(group);
    auto ends = enumerate_endomorphisms(group);
    for (auto method : {ReidemeisterMethod::fixed_classes, ReidemeisterMethod::orbits}) {
      CHECK(serial::reidemeister_sweep(ends, classes, method) ==
            parallel::reidemeister_sweep(ends, classes, method));
    }
    SpectrumOptions s, p;
    s.execution = Execution::serial;
    p.execution = Execution::parallel;
    CHECK(extended_spectrum(group, s) == extended_spectrum(group, p));
  }
}

TEST_CASE("outer class-preserving automorphisms of small simple groups")
{
  auto a5 = classify(build(builders::alternating(5)), "A5");
  CHECK(a5.class_preserving_aut_count == 60);
  CHECK(a5.flags.simple);

  // SL(2,5)/Z is A5
  auto sl = build(builders::sl2(5));
  auto q = quotient(sl, center(sl)).group;
  CHECK(q->order() == 60);
  CHECK(is_simple(q));
  CHECK(classify(q, "PSL(2,5)").class_preserving_aut_count == 60);
}

TEST_CASE("theorem battery")
{
  auto q8 = theorem_battery(build(builders::dicyclic(2)));
  auto excl = find_check(q8, "k(G)-1 excluded from extended spectrum");
  REQUIRE(excl != nullptr);
  CHECK(excl->passed);
  CHECK_FALSE(excl->skipped);

  auto frob = theorem_battery(build(builders::metacyclic(7, 3, 2)));
  auto parity = find_check(frob, "odd order: R odd");
  REQUIRE(parity != nullptr);
  CHECK(parity->passed);

  auto sl = theorem_battery(build(builders::sl2(5)));
  auto dich = find_check(sl, "quasisimple: endomorphisms trivial or bijective");
  REQUIRE(dich != nullptr);
  CHECK(dich->passed);
  for (auto const &c : sl)
    CHECK(c.passed);

  for (auto const &c : theorem_battery(build(builders::trivial())))
    CHECK(c.passed);

  // S3 is not nilpotent, so no extended exclusion is attempted
  CHECK(find_check(theorem_battery(build(builders::symmetric(3))),
                   "k(G)-1 excluded from extended spectrum") == nullptr);
}

TEST_CASE("classify marks the extended sweep skipped when over budget")
{
  SpectrumOptions opts;
  opts.budget.max_products = 100'000;
  auto group = build(named("Z2xS4"));
  auto report = classify(group, "Z2xS4", opts);
  CHECK(report.aut_count == 48);
  CHECK_FALSE(report.extended_spectrum.has_value());
  CHECK_FALSE(report.extended_skipped.empty());
  CHECK_FALSE(report.flags.full_extended_spectrum.has_value());
  CHECK(report.battery_passed());

  // D4 is nilpotent, so the extended exclusion has to be skipped
  SpectrumOptions small;
  small.execution = Execution::serial;
  small.budget.max_products = 600;
  auto d4 = classify(build(builders::dihedral(4)), "D4", small);
  CHECK_FALSE(d4.extended_spectrum.has_value());
  REQUIRE(d4.theorem_battery.has_value());
  auto excl = find_check(*d4.theorem_battery, "k(G)-1 excluded from extended spectrum");
  REQUIRE(excl != nullptr);
  CHECK(excl->skipped);
  CHECK(d4.battery_passed());

  opts.budget.max_products = 100;
  CHECK_THROWS_AS(classify(group, "Z2xS4", opts), BudgetExceeded);
}
