#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/errors.hpp"
#include "fincat/testkit.hpp"
#include "fincat/theorems.hpp"
#include "fixtures.hpp"

using namespace fincat;
using fixtures::A;

namespace {

CanonicalName gp(const char* a, const char* x) {
  return CanonicalName::pair(A(a), A(x));
}

FinCategory arrow_xy() {
  return FinCategory::make(
      {A("x"), A("y")},
      {{A("1_x"), A("x"), A("x")},
       {A("1_y"), A("y"), A("y")},
       {A("e"), A("x"), A("y")}},
      {{A("x"), A("1_x")}, {A("y"), A("1_y")}},
      {{A("1_x"), A("1_x"), A("1_x")},
       {A("e"), A("1_x"), A("e")},
       {A("1_y"), A("e"), A("e")},
       {A("1_y"), A("1_y"), A("1_y")}});
}

SetPresheaf mixed_bi_presheaf(const FinCategory& c, const FinCategory& d) {
  FinCategory prod = product_category(c, d);
  std::vector<FinSet> values(4);
  values[prod.object_index(gp("a", "x"))] = fixtures::set_of({"p0", "p1"});
  values[prod.object_index(gp("a", "y"))] = fixtures::set_of({"q0"});
  values[prod.object_index(gp("b", "x"))] = fixtures::set_of({"r0"});
  values[prod.object_index(gp("b", "y"))] = fixtures::set_of({"s0", "s1"});
  std::vector<SetFunction> actions;
  for (int m = 0; m < prod.morphism_count(); ++m) {
    const FinSet& from = values[prod.cod(m)];
    const FinSet& to = values[prod.dom(m)];
    if (prod.is_identity(m)) {
      actions.push_back(SetFunction::identity(from));
    } else {
      std::vector<CanonicalName> images(from.size(), to.element(0));
      actions.push_back(SetFunction::make(from, to, std::move(images)));
    }
  }
  return SetPresheaf::make(prod, std::move(values), std::move(actions));
}

CatPresheaf arrow_over_arrow() {
  FinCategory base = fixtures::walking_arrow();
  FinCategory fa = arrow_xy();
  FinCategory fb = fixtures::one_object();
  return CatPresheaf::make(
      base, {fa, fb},
      {identity_functor(fa), identity_functor(fb),
       Functor::make(fb, fa, {A("x")}, {A("1_x")})});
}

} // namespace

TEST_CASE("theorem reports collect named outcomes") {
  TheoremReport t;
  t.add("first", true);
  CHECK(t.ok());
  ValidationReport bad;
  bad.add("some-law", {A("w")}, "went wrong");
  t.add("second", bad);
  t.add("third", false, "expected 2, got 3");
  CHECK(!t.ok());
  std::string s = t.summary();
  CHECK(s.find("ok   first") != std::string::npos);
  CHECK(s.find("FAIL second") != std::string::npos);
  CHECK(s.find("FAIL third: expected 2, got 3") != std::string::npos);
}

TEST_CASE("choice equivalence on the mixed fixture") {
  FinCategory c = fixtures::walking_arrow();
  FinCategory d = arrow_xy();
  SetPresheaf r = mixed_bi_presheaf(c, d);

  ChoiceEquivalence eq = choice_equivalence(c, d, r);
  CHECK(eq.pairs.object_count() == 5);
  CHECK(eq.elements.object_count() == 5);
  CHECK(validate_functor(eq.to_elements).ok());
  CHECK(validate_functor(eq.to_pairs).ok());
  CHECK(check_strict_inverse_pair(eq.to_elements, eq.to_pairs));

  TheoremReport rep = check_choice(c, d, r);
  CHECK(rep.ok());
  REQUIRE(rep.checks.size() == 7);
  CHECK(rep.checks[0].name == "fiberwise-elements-strict");
  CHECK(rep.checks[5].name == "strictly-inverse");
  CHECK(rep.checks[6].name == "object-counts-match");
}

TEST_CASE("choice equivalence on degenerate shapes") {
  FinCategory one = fixtures::one_object();
  FinCategory two = fixtures::walking_arrow();

  // empty value sets: both sides still match (no compatible families)
  FinCategory prod = product_category(one, two);
  SetPresheaf empty_r = SetPresheaf::make(
      prod, {FinSet(), FinSet()},
      {SetFunction::identity(FinSet()), SetFunction::identity(FinSet()),
       SetFunction::make(FinSet(), FinSet(), {})});
  CHECK(check_choice(one, two, empty_r).ok());

  CHECK(check_choice(one, two,
                     constant_presheaf(prod, fixtures::set_of({"t"})))
            .ok());
  CHECK(check_choice(two, two,
                     constant_presheaf(product_category(two, two),
                                       fixtures::set_of({"t0", "t1"})))
            .ok());
}

TEST_CASE("choice equivalence holds on generated instances") {
  GenOptions g;
  g.max_objects = 2;
  g.max_extra_morphisms = 2;
  g.max_fiber = 2;
  for (std::uint64_t seed = 7001; seed < 7031; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    FinCategory c = gen_category(rng, g);
    FinCategory d = gen_category(rng, g);
    SetPresheaf r = gen_set_presheaf(rng, product_category(c, d), g);
    TheoremReport rep = check_choice(c, d, r);
    if (!rep.ok()) FAIL_CHECK(rep.summary());
  }
}

TEST_CASE("restricting a presheaf over the total to one fiber") {
  CatPresheaf p = arrow_over_arrow();
  FinCategory tot = grothendieck(p).cat;
  CatPresheaf q = discrete_cat_presheaf(
      constant_presheaf(tot, fixtures::set_of({"t0", "t1"})));
  REQUIRE(validate_cat_presheaf(q).ok());

  CatPresheaf qa = q_restriction(p, q, A("a"));
  CHECK(validate_cat_presheaf(qa).ok());
  CHECK(qa.base() == p.fiber(0));
  CHECK(qa.fiber(0).object_count() == 2);

  CHECK_THROWS_AS(q_restriction(p, q, A("nowhere")), InvalidArgument);
  CatPresheaf not_over_total = constant_cat_presheaf(
      fixtures::parallel_pair(), fixtures::one_object());
  CHECK_THROWS_AS(q_restriction(p, not_over_total, A("a")), InvalidArgument);
}

TEST_CASE("collapsing an iterated presheaf to the base") {
  CatPresheaf p = arrow_over_arrow();
  FinCategory tot = grothendieck(p).cat;
  CatPresheaf q = discrete_cat_presheaf(
      constant_presheaf(tot, fixtures::set_of({"t0", "t1"})));

  CatPresheaf spq = sigma_pq(p, q);
  CHECK(validate_cat_presheaf(spq).ok());
  CHECK(spq.base() == p.base());
  CHECK(spq.fiber(0).object_count() == 4); // two points over each of x, y
  CHECK(spq.fiber(0).morphism_count() == 6);
  CHECK(spq.fiber(1).object_count() == 2);

  // total object counts agree before we even look at the witness
  CHECK(grothendieck(q).cat.object_count() ==
        grothendieck(spq).cat.object_count());
}

TEST_CASE("associativity of stacking presheaves") {
  CatPresheaf p = arrow_over_arrow();
  FinCategory tot = grothendieck(p).cat;

  CatPresheaf q_discrete = discrete_cat_presheaf(
      constant_presheaf(tot, fixtures::set_of({"t0", "t1"})));
  TheoremReport rep = check_assoc(p, q_discrete);
  if (!rep.ok()) FAIL_CHECK(rep.summary());
  REQUIRE(rep.checks.size() == 8);
  CHECK(rep.checks[2].name == "combined-presheaf-strict");
  CHECK(rep.checks[7].name == "strictly-inverse");

  CatPresheaf q_arrow = constant_cat_presheaf(tot, arrow_xy());
  TheoremReport rep2 = check_assoc(p, q_arrow);
  if (!rep2.ok()) FAIL_CHECK(rep2.summary());
}

TEST_CASE("associativity holds on generated stacks") {
  GenOptions g;
  g.max_objects = 2;
  g.max_extra_morphisms = 2;
  g.max_fiber = 2;
  for (std::uint64_t seed = 9001; seed < 9013; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    FinCategory c = gen_category(rng, g);
    CatPresheaf p = gen_cat_presheaf(rng, c, g);
    CatPresheaf q = gen_cat_presheaf(rng, grothendieck(p).cat, g);
    TheoremReport rep = check_assoc(p, q);
    if (!rep.ok()) FAIL_CHECK(rep.summary());
  }
}

TEST_CASE("grouping by either variable gives the same total") {
  FinCategory c = fixtures::walking_arrow();
  FinCategory d = arrow_xy();
  SetPresheaf r = mixed_bi_presheaf(c, d);

  TheoremReport rep = check_commutativity(c, d, r);
  if (!rep.ok()) FAIL_CHECK(rep.summary());
  REQUIRE(rep.checks.size() == 8);
  CHECK(rep.checks[7].name == "object-count-is-element-count");

  CHECK_THROWS_AS(
      check_commutativity(c, d, fixtures::two_point_presheaf()),
      InvalidArgument);
}

TEST_CASE("commutativity holds on generated instances") {
  GenOptions g;
  g.max_objects = 2;
  g.max_extra_morphisms = 2;
  g.max_fiber = 2;
  for (std::uint64_t seed = 4001; seed < 4021; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    FinCategory c = gen_category(rng, g);
    FinCategory d = gen_category(rng, g);
    SetPresheaf r = gen_set_presheaf(rng, product_category(c, d), g);
    TheoremReport rep = check_commutativity(c, d, r);
    if (!rep.ok()) FAIL_CHECK(rep.summary());
  }
}
