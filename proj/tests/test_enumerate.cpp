#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fincat/enumerate.hpp"
#include "fincat/errors.hpp"
#include "fixtures.hpp"

using namespace fincat;
using fixtures::A;

namespace {

// Oracle: walk the full map space and keep what validates. Slow on
// purpose; only run on tiny categories.
std::vector<Functor> all_functors_by_force(const FinCategory& c,
                                           const FinCategory& d) {
  std::vector<Functor> out;
  int no = c.object_count(), nm = c.morphism_count();
  int to = d.object_count(), tm = d.morphism_count();
  if ((no > 0 && to == 0) || (nm > 0 && tm == 0)) return out;

  std::vector<int> om(no, 0), mm(nm, 0);
  for (;;) {
    for (;;) {
      Functor f = Functor::make_idx(c, d, om, mm);
      if (validate_functor(f).ok()) out.push_back(f);
      int i = nm - 1;
      while (i >= 0 && ++mm[i] == tm) mm[i--] = 0;
      if (i < 0) break;
    }
    int i = no - 1;
    while (i >= 0 && ++om[i] == to) om[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Functor& l, const Functor& r) {
    return l.name() < r.name();
  });
  return out;
}

void check_against_oracle(const FinCategory& c, const FinCategory& d) {
  std::vector<Functor> fast = enumerate_functors(c, d);
  std::vector<Functor> slow = all_functors_by_force(c, d);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
}

} // namespace

TEST_CASE("functor enumeration agrees with the brute force oracle") {
  FinCategory one = fixtures::one_object();
  FinCategory two = fixtures::walking_arrow();
  FinCategory pp = fixtures::parallel_pair();
  FinCategory loop = fixtures::idempotent_loop();

  check_against_oracle(one, two);
  check_against_oracle(two, one);
  check_against_oracle(two, two);
  check_against_oracle(two, pp);
  check_against_oracle(pp, two);
  check_against_oracle(loop, loop);
  check_against_oracle(two, loop);
  check_against_oracle(loop, two);
}

TEST_CASE("frozen functor counts") {
  FinCategory one = fixtures::one_object();
  FinCategory two = fixtures::walking_arrow();
  FinCategory three = fixtures::composable_pair();

  CHECK(enumerate_functors(one, two).size() == 2);
  CHECK(enumerate_functors(two, one).size() == 1);
  // constants at a and b, and the identity
  CHECK(enumerate_functors(two, two).size() == 3);
  // monotone maps from the two chain into the three chain
  CHECK(enumerate_functors(two, three).size() == 6);
  CHECK(enumerate_functors(FinCategory(), two).size() == 1);
  CHECK(enumerate_functors(two, FinCategory()).empty());
}

TEST_CASE("enumeration respects the size bound") {
  FinCategory two = fixtures::walking_arrow();
  Bounds tight;
  tight.max_objects = 1;
  CHECK_THROWS_AS(enumerate_functors(two, two, tight), BoundExceeded);
  Bounds morbound;
  morbound.max_morphisms = 2;
  CHECK_THROWS_AS(enumerate_functors(two, two, morbound), BoundExceeded);
}

TEST_CASE("natural transformation enumeration on the walking arrow") {
  FinCategory two = fixtures::walking_arrow();
  std::vector<Functor> fs = enumerate_functors(two, two);
  REQUIRE(fs.size() == 3);

  Functor ka = Functor::make(two, two, {A("a"), A("a")},
                             {A("1_a"), A("1_a"), A("1_a")});
  Functor kb = Functor::make(two, two, {A("b"), A("b")},
                             {A("1_b"), A("1_b"), A("1_b")});
  Functor id = identity_functor(two);

  CHECK(enumerate_nat_trans(id, id).size() == 1);
  CHECK(enumerate_nat_trans(ka, id).size() == 1);
  CHECK(enumerate_nat_trans(id, ka).empty());
  CHECK(enumerate_nat_trans(id, kb).size() == 1);
  CHECK(enumerate_nat_trans(kb, id).empty());
  CHECK(enumerate_nat_trans(ka, kb).size() == 1);
  CHECK(enumerate_nat_trans(kb, ka).empty());

  for (const auto& t : enumerate_nat_trans(ka, id))
    CHECK(validate_nat_trans(t).ok());
}

TEST_CASE("the functor category of the walking arrow in itself is a 3 chain") {
  FinCategory two = fixtures::walking_arrow();
  FunctorCategory fc = functor_category(two, two);
  CHECK(validate_category(fc.cat).ok());
  CHECK(fc.cat.object_count() == 3);
  CHECK(fc.cat.morphism_count() == 6);
  REQUIRE(fc.functors.size() == 3);
  REQUIRE(fc.transformations.size() == 6);

  // alignment: object i names functor i, morphism j names transformation j
  for (std::size_t i = 0; i < fc.functors.size(); ++i)
    CHECK(fc.cat.object(static_cast<int>(i)) == fc.functors[i].name());
  for (std::size_t j = 0; j < fc.transformations.size(); ++j) {
    CHECK(fc.cat.morphism(static_cast<int>(j)).id ==
          fc.transformations[j].name());
    CHECK(validate_nat_trans(fc.transformations[j]).ok());
  }

  // it is the linear order constant-a < identity < constant-b:
  // every hom set has at most one element and the chain composes
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(fc.cat.hom(i, j).size() <= 1);
}

TEST_CASE("functor category of a discrete shape is a power") {
  // functors one -> parallel_pair are the two objects, morphisms the four
  // arrows of the target
  FinCategory one = fixtures::one_object();
  FinCategory pp = fixtures::parallel_pair();
  FunctorCategory fc = functor_category(one, pp);
  CHECK(fc.cat.object_count() == 2);
  CHECK(fc.cat.morphism_count() == 4);
  CHECK(validate_category(fc.cat).ok());
}
