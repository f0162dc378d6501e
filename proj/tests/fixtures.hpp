#pragma once

#include <vector>

#include "fincat/cat_presheaf.hpp"
#include "fincat/set_presheaf.hpp"

// Small fixed instances shared across suites. All lawful unless the name
// says otherwise; expected counts in the tests are frozen against these.
namespace fixtures {

using fincat::CanonicalName;
using fincat::FinCategory;
using fincat::FinSet;
using fincat::MorRecord;
using fincat::SetFunction;
using fincat::SetPresheaf;

inline CanonicalName A(const char* s) { return CanonicalName::atom(s); }

inline FinSet set_of(std::initializer_list<const char*> xs) {
  std::vector<CanonicalName> v;
  for (const char* x : xs) v.push_back(A(x));
  return FinSet::make(std::move(v));
}

// single object z, single morphism 1_z
inline FinCategory one_object() {
  return FinCategory::make({A("z")}, {{A("1_z"), A("z"), A("z")}},
                           {{A("z"), A("1_z")}},
                           {{A("1_z"), A("1_z"), A("1_z")}});
}

// a --f--> b
inline FinCategory walking_arrow() {
  return FinCategory::make(
      {A("a"), A("b")},
      {{A("1_a"), A("a"), A("a")},
       {A("1_b"), A("b"), A("b")},
       {A("f"), A("a"), A("b")}},
      {{A("a"), A("1_a")}, {A("b"), A("1_b")}},
      {{A("1_a"), A("1_a"), A("1_a")},
       {A("f"), A("1_a"), A("f")},
       {A("1_b"), A("f"), A("f")},
       {A("1_b"), A("1_b"), A("1_b")}});
}

// a --f--> b --g--> c with composite gf
inline FinCategory composable_pair() {
  return FinCategory::make(
      {A("a"), A("b"), A("c")},
      {{A("1_a"), A("a"), A("a")},
       {A("1_b"), A("b"), A("b")},
       {A("1_c"), A("c"), A("c")},
       {A("f"), A("a"), A("b")},
       {A("g"), A("b"), A("c")},
       {A("gf"), A("a"), A("c")}},
      {{A("a"), A("1_a")}, {A("b"), A("1_b")}, {A("c"), A("1_c")}},
      {{A("1_a"), A("1_a"), A("1_a")},
       {A("1_b"), A("1_b"), A("1_b")},
       {A("1_c"), A("1_c"), A("1_c")},
       {A("f"), A("1_a"), A("f")},
       {A("1_b"), A("f"), A("f")},
       {A("g"), A("1_b"), A("g")},
       {A("1_c"), A("g"), A("g")},
       {A("gf"), A("1_a"), A("gf")},
       {A("1_c"), A("gf"), A("gf")},
       {A("g"), A("f"), A("gf")}});
}

// a ==u,v==> b, no relation between u and v
inline FinCategory parallel_pair() {
  return FinCategory::make(
      {A("a"), A("b")},
      {{A("1_a"), A("a"), A("a")},
       {A("1_b"), A("b"), A("b")},
       {A("u"), A("a"), A("b")},
       {A("v"), A("a"), A("b")}},
      {{A("a"), A("1_a")}, {A("b"), A("1_b")}},
      {{A("1_a"), A("1_a"), A("1_a")},
       {A("u"), A("1_a"), A("u")},
       {A("v"), A("1_a"), A("v")},
       {A("1_b"), A("u"), A("u")},
       {A("1_b"), A("v"), A("v")},
       {A("1_b"), A("1_b"), A("1_b")}});
}

// one object z with an idempotent loop s
inline FinCategory idempotent_loop() {
  return FinCategory::make(
      {A("z")}, {{A("1_z"), A("z"), A("z")}, {A("s"), A("z"), A("z")}},
      {{A("z"), A("1_z")}},
      {{A("1_z"), A("1_z"), A("1_z")},
       {A("s"), A("1_z"), A("s")},
       {A("1_z"), A("s"), A("s")},
       {A("s"), A("s"), A("s")}});
}

// on walking_arrow: value(a) = {u0}, value(b) = {v0, v1}, both collapse
inline SetPresheaf two_point_presheaf() {
  FinCategory base = walking_arrow();
  FinSet va = set_of({"u0"});
  FinSet vb = set_of({"v0", "v1"});
  std::vector<SetFunction> actions;
  actions.push_back(SetFunction::identity(va));            // 1_a
  actions.push_back(SetFunction::identity(vb));            // 1_b
  actions.push_back(SetFunction::make(vb, va, {A("u0"), A("u0")})); // f
  return SetPresheaf::make(base, {va, vb}, std::move(actions));
}

} // namespace fixtures
