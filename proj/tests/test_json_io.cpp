#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fincat/errors.hpp"
#include "fincat/grothendieck.hpp"
#include "fincat/json_io.hpp"
#include "fixtures.hpp"

using namespace fincat;
namespace fs = std::filesystem;

namespace {

Json reparse(const Json& j) { return Json::parse(canonical_text(j)); }

} // namespace

TEST_CASE("json: category round trip") {
  FinCategory c = fixtures::composable_pair();
  Json j = to_json(c);
  CHECK(category_from_json(j) == c);

  // canonical text is a fixed point of parse + dump
  std::string text = canonical_text(j);
  CHECK(canonical_text(reparse(j)) == text);
  CHECK(category_from_json(reparse(j)) == c);
}

TEST_CASE("json: unit-forced composition entries are left implicit") {
  Json jw = to_json(fixtures::walking_arrow());
  CHECK(jw["composition"].size() == 0); // all four entries are unit-forced

  Json jc = to_json(fixtures::composable_pair());
  REQUIRE(jc["composition"].size() == 1);
  CHECK(jc["composition"][0]["after"] == "g");
  CHECK(jc["composition"][0]["before"] == "f");
  CHECK(jc["composition"][0]["composite"] == "gf");
}

TEST_CASE("json: unlawful unit entry survives the round trip") {
  using fixtures::A;
  FinCategory bad = FinCategory::make(
      {A("z")}, {{A("1_z"), A("z"), A("z")}, {A("s"), A("z"), A("z")}},
      {{A("z"), A("1_z")}},
      {{A("1_z"), A("1_z"), A("1_z")},
       {A("1_z"), A("s"), A("1_z")}, // disagrees with the unit law
       {A("s"), A("1_z"), A("s")},
       {A("s"), A("s"), A("s")}});
  REQUIRE(validate_category(bad).has("unit-left"));

  Json j = to_json(bad);
  CHECK(j["composition"].size() == 2); // the disagreement and s.s stay
  FinCategory back = category_from_json(j);
  CHECK(back == bad);
  CHECK(validate_category(back).has("unit-left"));
}

TEST_CASE("json: set presheaf round trip omits identity actions") {
  SetPresheaf p = fixtures::two_point_presheaf();
  Json j = to_json(p);
  CHECK(j["actions"].size() == 1);
  CHECK(j["actions"].contains("f"));
  CHECK(set_presheaf_from_json(j) == p);
  CHECK(canonical_text(reparse(j)) == canonical_text(j));
}

TEST_CASE("json: non-identity action at an identity morphism is kept") {
  using fixtures::A;
  FinCategory loop = fixtures::idempotent_loop();
  FinSet two = fixtures::set_of({"p", "q"});
  SetFunction swap =
      SetFunction::make(two, two, {A("q"), A("p")});
  SetPresheaf p = SetPresheaf::make(loop, {two}, {swap, swap});
  REQUIRE(validate_set_presheaf(p).has("identity-action"));

  Json j = to_json(p);
  CHECK(j["actions"].size() == 2); // the identity's action disagrees, so it stays
  SetPresheaf back = set_presheaf_from_json(j);
  CHECK(back == p);
  CHECK(validate_set_presheaf(back).has("identity-action"));
}

TEST_CASE("json: bi presheaf round trip") {
  using fixtures::A;
  FinCategory c = fixtures::one_object();
  FinCategory d = fixtures::walking_arrow();
  FinCategory prod = product_category(c, d);

  std::vector<FinSet> values;
  std::vector<SetFunction> actions;
  FinSet at_a = fixtures::set_of({"u"});
  FinSet at_b = fixtures::set_of({"v0", "v1"});
  for (int o = 0; o < prod.object_count(); ++o)
    values.push_back(prod.object(o).second() == A("a") ? at_a : at_b);
  for (int f = 0; f < prod.morphism_count(); ++f) {
    const FinSet& src = values[prod.cod(f)];
    const FinSet& tgt = values[prod.dom(f)];
    if (prod.is_identity(f)) {
      actions.push_back(SetFunction::identity(src));
    } else {
      std::vector<CanonicalName> images(src.size(), tgt.element(0));
      actions.push_back(SetFunction::make(src, tgt, std::move(images)));
    }
  }
  BiPresheaf b{c, d, SetPresheaf::make(prod, values, actions)};
  REQUIRE(validate_set_presheaf(b.presheaf).ok());

  Json j = to_json(b);
  BiPresheaf back = bi_presheaf_from_json(j);
  CHECK(back.base_c == b.base_c);
  CHECK(back.base_d == b.base_d);
  CHECK(back.presheaf == b.presheaf);
  CHECK(canonical_text(reparse(j)) == canonical_text(j));
}

TEST_CASE("json: cat presheaf round trip and q kind retention") {
  FinCategory base = fixtures::walking_arrow();
  CatPresheaf p = constant_cat_presheaf(base, fixtures::parallel_pair());
  REQUIRE(validate_cat_presheaf(p).ok());

  Json j = to_json(p);
  CHECK(j["kind"] == "cat_presheaf");
  CHECK(cat_presheaf_from_json(j) == p);
  CHECK(canonical_text(reparse(j)) == canonical_text(j));

  Json jq = to_json(p, "q_presheaf");
  CHECK(jq["kind"] == "q_presheaf");
  CHECK(cat_presheaf_from_json(jq) == p);

  Instance inst = instance_from_json(jq);
  CHECK(inst.kind == "q_presheaf");
  CHECK(std::holds_alternative<CatPresheaf>(inst.value));
  CHECK(std::get<CatPresheaf>(inst.value) == p);
}

TEST_CASE("json: instance dispatch") {
  Instance ic = instance_from_json(to_json(fixtures::walking_arrow()));
  CHECK(ic.kind == "category");
  CHECK(std::holds_alternative<FinCategory>(ic.value));

  Instance ip = instance_from_json(to_json(fixtures::two_point_presheaf()));
  CHECK(ip.kind == "set_presheaf");
  CHECK(std::holds_alternative<SetPresheaf>(ip.value));

  Json bogus = {{"kind", "poset"}};
  CHECK_THROWS_AS(instance_from_json(bogus), ParseError);
  CHECK_THROWS_AS(instance_from_json(Json::array()), ParseError);
}

TEST_CASE("json: malformed inputs raise parse errors") {
  Json good = to_json(fixtures::two_point_presheaf());

  Json j = good;
  j.erase("kind");
  CHECK_THROWS_AS(instance_from_json(j), ParseError);

  j = good;
  j.erase("values");
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  j = good;
  j["values"]["ghost"] = Json::array();
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  j = good;
  j["values"].erase("a");
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  j = good;
  j["actions"]["f"].erase("v0"); // action no longer covers its source
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  j = good;
  j["actions"]["ghost"] = Json::object();
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  j = good;
  j["base"]["objects"] = "a"; // not an array
  CHECK_THROWS_AS(set_presheaf_from_json(j), ParseError);

  Json cat = to_json(fixtures::composable_pair());
  cat["composition"][0].erase("composite");
  CHECK_THROWS_AS(category_from_json(cat), ParseError);
}

TEST_CASE("json: cat presheaf transition maps must be complete") {
  Json j = to_json(constant_cat_presheaf(fixtures::walking_arrow(),
                                         fixtures::parallel_pair()));
  REQUIRE(j["transitions"].contains("f"));
  j["transitions"]["f"]["obj_map"].erase("a");
  CHECK_THROWS_AS(cat_presheaf_from_json(j), ParseError);
}

TEST_CASE("json: file io") {
  fs::path dir = fs::temp_directory_path();
  fs::path ok_path = dir / "fincat_roundtrip.json";
  fs::path bad_path = dir / "fincat_invalid.json";

  Json j = to_json(fixtures::walking_arrow());
  write_text_file(ok_path.string(), canonical_text(j));
  Json back = read_json_file(ok_path.string());
  CHECK(category_from_json(back) == fixtures::walking_arrow());

  {
    std::ofstream out(bad_path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(bad_path.string()), ParseError);
  CHECK_THROWS_AS(read_json_file((dir / "fincat_missing.json").string()),
                  ParseError);

  std::remove(ok_path.string().c_str());
  std::remove(bad_path.string().c_str());
}
