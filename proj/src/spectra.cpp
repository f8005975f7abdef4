#include "twistspec/spectra.hpp"

#include <exception>
#include <sstream>

namespace twistspec
{

std::vector<std::size_t> Spectrum::values() const
{
  std::vector<std::size_t> res;
  for (auto const &[r, mult] : multiplicities)
    res.push_back(r);
  return res;
}

std::size_t Spectrum::count(std::size_t r) const
{
  auto it = multiplicities.find(r);
  return it == multiplicities.end() ? 0 : it->second;
}

std::size_t Spectrum::total() const
{
  std::size_t n = 0;
  for (auto const &[r, mult] : multiplicities)
    n += mult;
  return n;
}

bool SpectrumReport::battery_passed() const
{
  if (!theorem_battery)
    return true;
  for (auto const &check : *theorem_battery) {
    if (!check.passed)
      return false;
  }
  return true;
}

std::string describe_images(Morphism const &phi)
{
  std::ostringstream os;
  os << '[';
  auto images = phi.generator_images();
  for (std::size_t i = 0; i < images.size(); ++i)
    os << (i ? ", " : "") << images[i];
  os << ']';
  return os.str();
}

Spectrum spectrum_of(std::span<const Morphism> morphisms,
                     ClassPartition const &classes,
                     ReidemeisterMethod method,
                     Execution exec)
{
  auto values = exec == Execution::serial
                  ? serial::reidemeister_sweep(morphisms, classes, method)
                  : parallel::reidemeister_sweep(morphisms, classes, method);
  Spectrum res;
  for (auto r : values)
    ++res.multiplicities[r];
  return res;
}

Spectrum spectrum(GroupPtr const &group, SpectrumOptions const &options)
{
  auto autos = enumerate_automorphisms(group, options.budget, options.execution);
  return spectrum_of(autos, conjugacy_classes(group), options.method, options.execution);
}

Spectrum extended_spectrum(GroupPtr const &group, SpectrumOptions const &options)
{
  auto endos = enumerate_endomorphisms(group, options.budget, options.execution);
  return spectrum_of(endos, conjugacy_classes(group), options.method, options.execution);
}

namespace
{

/// Per-morphism data the battery needs, computed with both Reidemeister
/// routes.
struct MorphismFacts
{
  std::size_t by_classes = 0;
  std::size_t by_orbits = 0;
  bool orbit_stabiliser = false;
  bool reduction = false;
  bool trivial = false;
  bool bijective = false;
  bool class_preserving = false;
  bool fixed_point_free = false;
};

/// light: only the class-map route and class preservation.
MorphismFacts facts_of(Morphism const &phi, ClassPartition const &classes, bool light)
{
  MorphismFacts f;
  f.by_classes = induced_class_map(phi, classes).fixed_points();
  f.class_preserving = is_class_preserving(phi, classes);
  if (light)
    return f;

  auto twisted = twisted_classes(phi);
  f.by_orbits = twisted.count();
  f.orbit_stabiliser =
    twisted.sizes[twisted.class_of[FiniteGroup::identity]] * fixed_subgroup(phi).order() ==
    phi.source()->order();
  f.reduction = reduction_check(phi);
  f.trivial = phi.is_trivial();
  f.bijective = phi.is_bijective();
  f.fixed_point_free = is_fixed_point_free(phi);
  return f;
}

std::vector<MorphismFacts> collect_facts(std::span<const Morphism> morphisms,
                                         ClassPartition const &classes,
                                         Execution exec,
                                         bool light)
{
  std::vector<MorphismFacts> res(morphisms.size());
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < morphisms.size(); ++i)
      res[i] = facts_of(morphisms[i], classes, light);
    return res;
  }

  auto n = static_cast<long>(morphisms.size());
  std::vector<std::exception_ptr> errors(morphisms.size());
  #pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      res[i] = facts_of(morphisms[i], classes, light);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto const &err : errors) {
    if (err)
      std::rethrow_exception(err);
  }
  return res;
}

struct Structure
{
  ClassPartition classes;
  std::size_t center_order = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool perfect = false;
  bool simple = false;
  bool quasisimple = false;
  bool odd_order = false;
};

Structure analyse(GroupPtr const &group)
{
  Structure s{conjugacy_classes(group)};
  s.center_order = center(group).order();
  s.abelian = group->is_abelian();
  s.nilpotent = is_nilpotent(group);
  s.perfect = is_perfect(group);
  s.simple = is_simple(group);
  s.quasisimple = s.perfect && is_quasisimple(group);
  s.odd_order = group->order() % 2 == 1;
  return s;
}

/// Checks a predicate over every morphism and records the first failure.
template<typename Pred>
CheckResult check_all(std::string name,
                      std::span<const Morphism> morphisms,
                      std::span<const MorphismFacts> facts,
                      Pred &&pred)
{
  CheckResult res{std::move(name)};
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (!pred(facts[i])) {
      res.passed = false;
      res.witness = describe_images(morphisms[i]);
      break;
    }
  }
  return res;
}

CheckResult skipped(std::string name)
{
  CheckResult res{std::move(name)};
  res.skipped = true;
  return res;
}

std::vector<CheckResult> run_battery(GroupPtr const &group,
                                     Structure const &s,
                                     std::span<const Morphism> autos,
                                     std::optional<std::span<const Morphism>> endos,
                                     Execution exec)
{
  auto const &classes = s.classes;
  std::size_t k = classes.count();
  std::size_t order = group->order();
  std::vector<CheckResult> res;

  auto auto_facts = collect_facts(autos, classes, exec, endos.has_value());
  std::vector<MorphismFacts> endo_facts;
  if (endos)
    endo_facts = collect_facts(*endos, classes, exec, false);

  // Morphism-level checks run over the endomorphisms when available.
  std::span<const Morphism> sweep = endos ? *endos : autos;
  std::span<const MorphismFacts> sweep_facts =
    endos ? std::span<const MorphismFacts>(endo_facts) : std::span<const MorphismFacts>(auto_facts);

  res.push_back(check_all("fixed classes = twisted orbits", sweep, sweep_facts,
                          [](auto const &f) { return f.by_classes == f.by_orbits; }));

  res.push_back(check_all("orbit-stabiliser identity", sweep, sweep_facts,
                          [](auto const &f) { return f.orbit_stabiliser; }));

  res.push_back(check_all("R bounds and extremes", sweep, sweep_facts, [k](auto const &f) {
    return f.by_classes >= 1 && f.by_classes <= k &&
           (f.by_classes == k) == f.class_preserving &&
           (f.by_classes == 1) == f.fixed_point_free;
  }));

  res.push_back(check_all("reduction to G/N_phi", sweep, sweep_facts,
                          [](auto const &f) { return f.reduction; }));

  {
    CheckResult inner{"inner automorphisms attain k(G)"};
    for (std::size_t h = 0; h < order; ++h) {
      auto phi = inner_automorphism(group, static_cast<ElementId>(h));
      if (reidemeister_number(phi, classes, ReidemeisterMethod::checked) != k) {
        inner.passed = false;
        inner.witness = describe_images(phi);
        break;
      }
    }
    res.push_back(std::move(inner));
  }

  {
    CheckResult cp{"class-preserving automorphisms contain Inn(G)"};
    std::size_t count = 0;
    for (auto const &f : auto_facts)
      count += f.class_preserving;
    std::size_t inn = order / s.center_order;
    cp.passed = count % inn == 0 && autos.size() % inn == 0;
    if (!cp.passed)
      cp.witness = "|Autc| = " + std::to_string(count) + ", |Inn| = " + std::to_string(inn);
    res.push_back(std::move(cp));
  }

  if (k >= 2) {
    res.push_back(check_all("k(G)-1 excluded from spectrum", autos, auto_facts,
                            [k](auto const &f) { return f.by_classes != k - 1; }));
  }

  if (s.odd_order && order > 1) {
    CheckResult inv{"odd order: [g] != [g^-1]"};
    for (std::size_t g = 1; g < order; ++g) {
      if (classes.class_of[g] == classes.class_of[group->inv(static_cast<ElementId>(g))]) {
        inv.passed = false;
        inv.witness = group->element(static_cast<ElementId>(g)).to_string();
        break;
      }
    }
    res.push_back(std::move(inv));

    res.push_back(check_all("odd order: R odd", sweep, sweep_facts,
                            [](auto const &f) { return f.by_classes % 2 == 1; }));
  }

  bool excluded_family = order > 2 && (s.odd_order || s.nilpotent || s.quasisimple);

  if (order > 2 && (s.nilpotent || s.quasisimple)) {
    std::string name = "k(G)-1 excluded from extended spectrum";
    if (endos) {
      res.push_back(check_all(name, *endos, endo_facts,
                              [k](auto const &f) { return f.by_classes != k - 1; }));
    } else {
      res.push_back(skipped(name));
    }
  }

  if (excluded_family) {
    std::string name = "no full extended spectrum";
    if (endos) {
      std::vector<bool> seen(k + 1, false);
      for (auto const &f : endo_facts)
        seen[f.by_classes] = true;
      CheckResult full{name};
      bool all = true;
      for (std::size_t r = 1; r <= k; ++r)
        all = all && seen[r];
      full.passed = !all;
      res.push_back(std::move(full));
    } else {
      res.push_back(skipped(name));
    }
  }

  if (s.quasisimple) {
    std::string name = "quasisimple: endomorphisms trivial or bijective";
    if (endos) {
      res.push_back(check_all(name, *endos, endo_facts,
                              [](auto const &f) { return f.trivial || f.bijective; }));
    } else {
      res.push_back(skipped(name));
    }
  }

  return res;
}

} // namespace

SpectrumReport classify(GroupPtr const &group, std::string name,
                        SpectrumOptions const &options)
{
  SpectrumReport report;
  report.name = std::move(name);
  report.order = group->order();

  auto s = analyse(group);
  auto const &classes = s.classes;
  std::size_t k = classes.count();

  report.class_number = k;
  report.class_sizes = classes.sizes;
  report.center_order = s.center_order;

  auto autos = enumerate_automorphisms(group, options.budget, options.execution);
  auto aut_r = options.execution == Execution::serial
                 ? serial::reidemeister_sweep(autos, classes, options.method)
                 : parallel::reidemeister_sweep(autos, classes, options.method);
  for (auto r : aut_r)
    ++report.spectrum.multiplicities[r];
  report.aut_count = autos.size();
  for (auto const &phi : autos)
    report.class_preserving_aut_count += is_class_preserving(phi, classes);
  report.out_order = report.aut_count * s.center_order / report.order;

  std::optional<std::vector<Morphism>> endos;
  if (options.extended) {
    try {
      endos = enumerate_endomorphisms(group, options.budget, options.execution);
    } catch (BudgetExceeded const &e) {
      report.extended_skipped = e.what();
    }
  } else {
    report.extended_skipped = "not requested";
  }

  auto &flags = report.flags;
  flags.trivial_spectrum = report.spectrum.values() == std::vector<std::size_t>{k};
  if (flags.trivial_spectrum != (report.class_preserving_aut_count == report.aut_count))
    throw std::logic_error("trivial spectrum disagrees with class-preserving count");

  if (endos) {
    report.extended_spectrum = spectrum_of(*endos, classes, options.method, options.execution);
    report.end_count = endos->size();
    std::size_t fpf = 0;
    for (auto const &phi : *endos)
      fpf += is_fixed_point_free(phi);
    report.fixed_point_free_end_count = fpf;

    auto values = report.extended_spectrum->values();
    std::vector<std::size_t> trivial_set{1};
    if (k > 1)
      trivial_set.push_back(k);
    std::vector<std::size_t> full_set;
    for (std::size_t r = 1; r <= k; ++r)
      full_set.push_back(r);
    flags.trivial_extended_spectrum = values == trivial_set;
    flags.full_extended_spectrum = values == full_set;
  }

  flags.abelian = s.abelian;
  flags.nilpotent = s.nilpotent;
  flags.perfect = s.perfect;
  flags.simple = s.simple;
  flags.quasisimple = s.quasisimple;
  flags.odd_order = s.odd_order;

  if (options.battery) {
    std::optional<std::span<const Morphism>> endo_span;
    if (endos)
      endo_span = std::span<const Morphism>(*endos);
    report.theorem_battery = run_battery(group, s, autos, endo_span, options.execution);
  }

  return report;
}

std::vector<CheckResult> theorem_battery(GroupPtr const &group,
                                         SpectrumOptions const &options)
{
  auto s = analyse(group);
  auto autos = enumerate_automorphisms(group, options.budget, options.execution);

  std::optional<std::vector<Morphism>> endos;
  try {
    endos = enumerate_endomorphisms(group, options.budget, options.execution);
  } catch (BudgetExceeded const &) {
  }

  std::optional<std::span<const Morphism>> endo_span;
  if (endos)
    endo_span = std::span<const Morphism>(*endos);
  return run_battery(group, s, autos, endo_span, options.execution);
}

} // namespace twistspec
