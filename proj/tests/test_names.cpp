#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fincat/errors.hpp"
#include "fincat/names.hpp"

using namespace fincat;

using CN = CanonicalName;

TEST_CASE("atoms render as tokens and quote everything else") {
  CHECK(CN::atom("a0").str() == "a0");
  CHECK(CN::atom("le_0_1").str() == "le_0_1");
  CHECK(CN::atom("e0.e1").str() == "e0.e1");
  CHECK(CN::atom("a b").str() == "\"a b\"");
  CHECK(CN::atom("").str() == "\"\"");
  CHECK(CN::atom("x\"y").str() == "\"x\\\"y\"");
  CHECK(CN::atom("x\\y").str() == "\"x\\\\y\"");
  CHECK(CN::atom("(f,g)").str() == "\"(f,g)\"");
}

TEST_CASE("pairs and tags render with their structure") {
  CN p = CN::pair(CN::atom("a"), CN::atom("x"));
  CHECK(p.str() == "(a,x)");
  CHECK(CN::tagged("el", p).str() == "el:(a,x)");
  CHECK(CN::tagged("gr", CN::pair(p, p)).str() == "gr:((a,x),(a,x))");
  CHECK(CN::pair(CN::atom("weird pair"), CN::atom("y")).str() ==
        "(\"weird pair\",y)");
}

TEST_CASE("parse inverts str on nested names") {
  std::vector<CN> samples = {
      CN::atom("a"),
      CN::atom(""),
      CN::atom("has space"),
      CN::atom("quote\"and\\slash"),
      CN::atom("tup"), // bare tag word without colon stays an atom
      CN::pair(CN::atom("a"), CN::atom("b")),
      CN::pair(CN::pair(CN::atom("a"), CN::atom("b")), CN::atom("c")),
      CN::tagged("el", CN::atom("f")),
      CN::tagged("id", CN::pair(CN::atom("u"), CN::atom("v"))),
      make_arrow_name("gr", CN::pair(CN::atom("f"), CN::atom("p")),
                      CN::pair(CN::atom("a"), CN::atom("x")),
                      CN::pair(CN::atom("b"), CN::atom("y"))),
      name_tuple({}),
      name_tuple({CN::atom("a")}),
      name_tuple({CN::atom("a"), CN::tagged("t", CN::atom("b"))}),
  };
  for (const auto& n : samples) {
    CAPTURE(n.str());
    CHECK(CN::parse(n.str()) == n);
  }
}

TEST_CASE("parsing accepts plain and rejects malformed text") {
  CHECK(CN::parse("(a,b)") == CN::pair(CN::atom("a"), CN::atom("b")));
  CHECK(CN::parse("el:f").is_tagged("el"));
  // '-' is a token char but not a tag char, so this is one atom
  CHECK(CN::parse("el-x") == CN::atom("el-x"));

  CHECK_THROWS_AS(CN::parse(""), ParseError);
  CHECK_THROWS_AS(CN::parse("(a"), ParseError);
  CHECK_THROWS_AS(CN::parse("(a,b"), ParseError);
  CHECK_THROWS_AS(CN::parse("(a,b))"), ParseError);
  CHECK_THROWS_AS(CN::parse("a,b"), ParseError);
  CHECK_THROWS_AS(CN::parse("tag:"), ParseError);
  CHECK_THROWS_AS(CN::parse("\"unterminated"), ParseError);
  CHECK_THROWS_AS(CN::parse("el-x:a"), ParseError);
}

TEST_CASE("ordering is total and groups by kind") {
  CN a = CN::atom("a"), b = CN::atom("b");
  CHECK(a < b);
  CHECK(a == CN::atom("a"));
  // atoms before pairs before tagged
  CHECK(b < CN::pair(a, a));
  CHECK(CN::pair(b, b) < CN::tagged("a", a));
  // pairs lexicographic
  CHECK(CN::pair(a, b) < CN::pair(b, a));
  CHECK(CN::pair(a, a) < CN::pair(a, b));
  // tagged by tag then payload
  CHECK(CN::tagged("el", b) < CN::tagged("gr", a));
  CHECK(CN::tagged("el", a) < CN::tagged("el", b));

  std::vector<CN> v = {CN::tagged("z", a), CN::pair(b, a), b, a, CN::pair(a, b)};
  std::sort(v.begin(), v.end());
  CHECK(v.front() == a);
  CHECK(v.back() == CN::tagged("z", a));
}

TEST_CASE("component accessors guard their kind") {
  CN a = CN::atom("a");
  CN p = CN::pair(a, CN::atom("b"));
  CN t = CN::tagged("el", a);
  CHECK(p.first() == a);
  CHECK(t.tag() == "el");
  CHECK(t.inner() == a);
  CHECK_THROWS_AS(a.first(), InvalidArgument);
  CHECK_THROWS_AS(p.tag(), InvalidArgument);
  CHECK_THROWS_AS(t.atom_value(), InvalidArgument);
  CHECK_THROWS_AS(CN::tagged("no-dash", a), InvalidArgument);
}

TEST_CASE("tuples fold to the right and unfold back") {
  std::vector<CN> parts = {CN::atom("x"), CN::atom("y"), CN::atom("z")};
  CN t = name_tuple(parts);
  CHECK(t.str() == "tup:(x,(y,(z,nil)))");
  CHECK(tuple_parts(t) == parts);
  CHECK(tuple_parts(name_tuple({})).empty());
  CHECK_THROWS_AS(tuple_parts(CN::atom("tup")), InvalidArgument);
  CHECK_THROWS_AS(tuple_parts(CN::tagged("tup", CN::atom("x"))),
                  InvalidArgument);
}

TEST_CASE("arrow names carry core and endpoints") {
  CN src = CN::pair(CN::atom("a"), CN::atom("u"));
  CN tgt = CN::pair(CN::atom("b"), CN::atom("v"));
  CN m = make_arrow_name("el", CN::atom("f"), src, tgt);
  CHECK(m.str() == "el:(f,((a,u),(b,v)))");
  ArrowNameParts parts = arrow_name_parts(m);
  CHECK(parts.core == CN::atom("f"));
  CHECK(parts.src == src);
  CHECK(parts.tgt == tgt);
  CHECK_THROWS_AS(arrow_name_parts(CN::atom("f")), InvalidArgument);
  CHECK_THROWS_AS(arrow_name_parts(CN::tagged("el", CN::atom("f"))),
                  InvalidArgument);
}
