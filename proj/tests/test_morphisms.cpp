#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "twistspec/morphism.hpp"
#include "twistspec/search.hpp"
#include "twistspec/structure.hpp"

using namespace testing;

namespace
{

GroupPtr s3() { return closure(3, {cycles(3, {{1, 2}}), cycles(3, {{1, 2, 3}})}); }
GroupPtr z4() { return closure(4, {cycles(4, {{1, 2, 3, 4}})}); }
GroupPtr a4() { return closure(4, {cycles(4, {{1, 2, 3}}), cycles(4, {{1, 2}, {3, 4}})}); }

Morphism times(GroupPtr const &z4, unsigned a)
{
  ElementId g = z4->generator_ids()[0];
  ElementId img = FiniteGroup::identity;
  for (unsigned i = 0; i < a; ++i)
    img = z4->mul(img, g);
  return morphism_from_images(z4, z4, std::span(&img, 1));
}

// (1 2) -> (1 2), (1 2 3) -> identity
Morphism sign_like(GroupPtr const &s3)
{
  std::vector<Permutation> images{cycles(3, {{1, 2}}), Permutation::identity(3)};
  return morphism_from_images(s3, s3, images);
}

} // namespace

TEST_CASE("morphism_from_images")
{
  auto g = s3();
  std::vector<Permutation> ids{Permutation::identity(3), Permutation::identity(3)};
  CHECK(morphism_from_images(g, g, ids).is_trivial());

  std::vector<Permutation> images{cycles(3, {{1, 2}}), cycles(3, {{1, 3, 2}})};
  auto phi = morphism_from_images(g, g, images);
  CHECK(phi.verify());
  CHECK(phi.is_bijective());
  CHECK(phi.generator_images() == images);

  auto z3 = closure(3, {cycles(3, {{1, 2, 3}})});
  std::vector<Permutation> bad{cycles(3, {{1, 2, 3}})};
  CHECK_THROWS_AS(morphism_from_images(z4(), z3, bad), NotAHomomorphism);

  std::vector<Permutation> wrong_count{cycles(3, {{1, 2}})};
  CHECK_THROWS_AS(morphism_from_images(g, g, wrong_count), InvalidArgument);

  // a transposition cannot go to a 3-cycle
  std::vector<Permutation> not_hom{cycles(3, {{1, 2, 3}}), cycles(3, {{1, 2, 3}})};
  CHECK_THROWS_AS(morphism_from_images(g, g, not_hom), NotAHomomorphism);
}

TEST_CASE("composition and powers")
{
  auto g = z4();
  auto dbl = times(g, 2);
  CHECK(power(dbl, 1) == dbl);
  CHECK(power(dbl, 0) == Morphism::identity(g));
  CHECK(power(dbl, 2).is_trivial());
  CHECK(compose_morphisms(times(g, 3), times(g, 3)) == Morphism::identity(g));

  auto h = a4();
  for (auto const &phi : enumerate_automorphisms(h)) {
    CHECK(compose_morphisms(phi, inverse(phi)) == Morphism::identity(h));
    CHECK(compose_morphisms(inverse(phi), phi) == Morphism::identity(h));
  }
  CHECK_THROWS_AS(inverse(dbl), InvalidArgument);
  CHECK_THROWS_AS(compose_morphisms(dbl, Morphism::identity(h)), InvalidArgument);
}

TEST_CASE("kernel and image")
{
  auto g = s3();
  auto id = Morphism::identity(g);
  CHECK(kernel(id).is_trivial());
  CHECK(image(id).is_whole());

  auto triv = Morphism::trivial(g, g);
  CHECK(kernel(triv).is_whole());
  CHECK(image(triv).is_trivial());

  auto sign = sign_like(g);
  CHECK(kernel(sign).order() == 3);
  CHECK(kernel(sign) == derived_subgroup(g));
  CHECK(image(sign).order() == 2);
}

TEST_CASE("fixed subgroup and fixed-point freeness")
{
  auto g = s3();
  CHECK(fixed_subgroup(Morphism::identity(g)).is_whole());
  CHECK(fixed_subgroup(Morphism::trivial(g, g)).is_trivial());
  CHECK(is_fixed_point_free(Morphism::trivial(g, g)));
  CHECK_FALSE(is_fixed_point_free(Morphism::identity(g)));

  auto c = z4();
  auto fixed = fixed_subgroup(times(c, 3));
  CHECK(fixed.order() == 2);
  CHECK(fixed.contains(times(c, 2)(c->generator_ids()[0])));

  // cycling the three involutions of the Klein group
  auto v4 = closure(4, {cycles(4, {{1, 2}, {3, 4}}), cycles(4, {{1, 3}, {2, 4}})});
  std::vector<Permutation> rot{cycles(4, {{1, 3}, {2, 4}}), cycles(4, {{1, 4}, {2, 3}})};
  CHECK(is_fixed_point_free(morphism_from_images(v4, v4, rot)));
}

TEST_CASE("class preservation")
{
  auto h = a4();
  auto classes = conjugacy_classes(h);
  CHECK(is_class_preserving(Morphism::identity(h), classes));
  for (ElementId x = 0; x < h->order(); ++x)
    CHECK(is_class_preserving(inner_automorphism(h, x), classes));

  // conjugation by (1 2) inside S4
  std::vector<Permutation> images;
  auto t = cycles(4, {{1, 2}});
  for (auto const &gen : h->generators())
    images.push_back(compose(compose(t, gen), t));
  auto phi = morphism_from_images(h, h, images);
  CHECK(phi.is_bijective());
  CHECK_FALSE(is_class_preserving(phi, classes));
}

TEST_CASE("inner automorphisms")
{
  auto g = s3();
  CHECK(inner_automorphism(g, FiniteGroup::identity) == Morphism::identity(g));

  auto q8 = build(builders::dicyclic(2));
  auto z = center(q8).elements();
  for (auto c : z)
    CHECK(inner_automorphism(q8, c) == Morphism::identity(q8));

  ElementId t = g->index_of(cycles(3, {{1, 2}}));
  auto phi = inner_automorphism(g, t);
  CHECK(phi(t) == t);
  CHECK(fixed_subgroup(phi).order() == 2);
}

TEST_CASE("small endomorphism and automorphism counts")
{
  CHECK(enumerate_endomorphisms(build(builders::cyclic(2))).size() == 2);
  CHECK(enumerate_endomorphisms(s3()).size() == 10);
  CHECK(enumerate_endomorphisms(z4()).size() == 4);
  CHECK(enumerate_automorphisms(s3()).size() == 6);
  CHECK(enumerate_automorphisms(z4()).size() == 2);
  CHECK(enumerate_automorphisms(a4()).size() == 24);

  auto triv = build(builders::trivial());
  CHECK(enumerate_endomorphisms(triv).size() == 1);
  CHECK(enumerate_automorphisms(triv).size() == 1);
}

TEST_CASE("endomorphism counts against brute force")
{
  for (auto const &def : catalog_up_to(16)) {
    CAPTURE(def.name);
    auto group = build(def);
    auto gens = generators_of(def);
    auto brute = oracle::endomorphisms(brute_elements(def), gens);
    auto ends = enumerate_endomorphisms(group);
    CHECK(ends.size() == brute.size());
    auto auts = enumerate_automorphisms(group);
    CHECK(auts.size() == static_cast<std::size_t>(std::count_if(brute.begin(), brute.end(), oracle::bijective)));

    // each one matches a brute-force map on generators
    for (auto const &phi : ends) {
      std::vector<Permutation> images;
      for (auto const &g : gens)
        images.push_back(group->element(phi(group->index_of(g))));
      CHECK_FALSE(oracle::extend(brute_elements(def), gens, images).empty());
    }
  }
}

TEST_CASE("enumeration properties on small catalog groups")
{
  for (auto const &def : catalog_up_to(24)) {
    CAPTURE(def.name);
    auto group = build(def);
    auto ends = enumerate_endomorphisms(group);
    auto auts = enumerate_automorphisms(group);

    std::vector<std::vector<ElementId>> tables;
    for (auto const &phi : ends) {
      CHECK(phi.verify());
      CHECK(phi(FiniteGroup::identity) == FiniteGroup::identity);
      CHECK(kernel(phi).order() * image(phi).order() == group->order());
      tables.emplace_back(phi.table().begin(), phi.table().end());
    }
    std::sort(tables.begin(), tables.end());
    CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());

    std::vector<std::vector<ElementId>> bijective, aut_tables;
    for (auto const &phi : ends)
      if (phi.is_bijective())
        bijective.emplace_back(phi.table().begin(), phi.table().end());
    for (auto const &phi : auts)
      aut_tables.emplace_back(phi.table().begin(), phi.table().end());
    std::sort(bijective.begin(), bijective.end());
    std::sort(aut_tables.begin(), aut_tables.end());
    CHECK(bijective == aut_tables);

    auto inn = group->order() / center(group).order();
    CHECK(auts.size() % inn == 0);
    auto classes = conjugacy_classes(group);
    auto autc = std::count_if(auts.begin(), auts.end(),
                              [&](auto const &phi) { return is_class_preserving(phi, classes); });
    CHECK(static_cast<std::size_t>(autc) % inn == 0);
  }
}

TEST_CASE("quasisimple groups: endomorphisms are trivial or bijective")
{
  for (auto const &def : {builders::alternating(5), builders::sl2(5)}) {
    CAPTURE(def.name);
    auto group = build(def);
    REQUIRE(is_quasisimple(group));
    for (auto const &phi : enumerate_endomorphisms(group))
      CHECK((phi.is_trivial() || phi.is_bijective()));
  }
}

TEST_CASE("serial and parallel enumeration agree")
{
  for (auto name : {"S4", "SL(2,3)", "M9", "Z4:Z4", "Hol(Z9)"}) {
    CAPTURE(name);
    auto defs = shipped_catalog();
    auto it = std::find_if(defs.begin(), defs.end(), [&](auto const &d) { return d.name == name; });
    REQUIRE(it != defs.end());
    auto group = build(*it);
    for (auto kind : {MorphismKind::endomorphism, MorphismKind::automorphism}) {
      auto s = serial::enumerate(group, kind, Budget{});
      auto p = parallel::enumerate(group, kind, Budget{});
      CHECK(s == p);
    }
  }
}

TEST_CASE("search budget")
{
  Budget tiny;
  tiny.max_products = 1000;
  auto group = build(builders::symmetric(4));
  CHECK_THROWS_AS(serial::enumerate(group, MorphismKind::endomorphism, tiny), BudgetExceeded);
  CHECK_THROWS_AS(parallel::enumerate(group, MorphismKind::endomorphism, tiny), BudgetExceeded);
}

TEST_CASE("search generators and candidates")
{
  // generators with repeats and the identity
  auto g = closure(4, {Permutation::identity(4), cycles(4, {{1, 2, 3, 4}}),
                       cycles(4, {{1, 2, 3, 4}}), cycles(4, {{1, 2}})});
  auto gens = search_generators(g);
  CHECK(gens.size() == 2);
  CHECK(Subgroup::generated_by(g, gens).is_whole());

  auto s5 = build(builders::symmetric(5));
  auto cand = candidate_images(s5, search_generators(s5), MorphismKind::automorphism);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    auto gi = search_generators(s5)[i];
    for (auto c : cand[i])
      CHECK(s5->element_order(c) == s5->element_order(gi));
  }
}

TEST_CASE("n_phi and induced maps")
{
  auto c = z4();
  CHECK(n_phi(times(c, 3)).is_trivial());
  CHECK(n_phi(times(c, 2)).is_whole());

  auto g = s3();
  auto sign = sign_like(g);
  auto n = n_phi(sign);
  CHECK(n.order() == 3);
  CHECK(n.is_normal());

  auto bar = induced_on_quotient(sign, n);
  CHECK(bar.source()->order() == 2);
  CHECK(bar.is_bijective());

  auto triv_bar = induced_on_quotient(times(c, 2), n_phi(times(c, 2)));
  CHECK(triv_bar.source()->order() == 1);

  auto same = induced_on_quotient(Morphism::identity(g), Subgroup::trivial(g));
  CHECK(same.source()->order() == 6);
  CHECK(same.is_bijective());

  // <(1 2)> is invariant under the identity but not normal
  ElementId t = g->index_of(cycles(3, {{1, 2}}));
  CHECK_THROWS_AS(induced_on_quotient(Morphism::identity(g),
                                      Subgroup::generated_by(g, std::span(&t, 1))),
                  InvalidArgument);

  // every endomorphism: N_phi is phi-invariant and the induced map injective
  for (auto const &def : catalog_up_to(24)) {
    CAPTURE(def.name);
    auto group = build(def);
    for (auto const &phi : enumerate_endomorphisms(group)) {
      auto np = n_phi(phi);
      for (auto x : np.elements())
        CHECK(np.contains(phi(x)));
      CHECK(induced_on_quotient(phi, np).is_injective());
    }
  }
}

TEST_CASE("induced map needs an invariant subgroup")
{
  auto v4 = closure(4, {cycles(4, {{1, 2}, {3, 4}}), cycles(4, {{1, 3}, {2, 4}})});
  std::vector<Permutation> rot{cycles(4, {{1, 3}, {2, 4}}), cycles(4, {{1, 4}, {2, 3}})};
  auto phi = morphism_from_images(v4, v4, rot);
  ElementId a = v4->index_of(cycles(4, {{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(induced_on_quotient(phi, Subgroup::generated_by(v4, std::span(&a, 1))),
                  InvalidArgument);
}
