#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "fincat/cat_presheaf.hpp"

namespace fincat {

using Json = nlohmann::ordered_json;

/// A presheaf in two variables, stored on the product of its bases.
struct BiPresheaf {
  FinCategory base_c;
  FinCategory base_d;
  SetPresheaf presheaf; // on product_category(base_c, base_d)
};

/// Serializers emit a stable canonical form: objects, morphisms, values
/// and actions in their internal sorted order, with composition entries
/// and actions that are forced by identity laws left out. Parsing puts
/// the omitted entries back, so canonical files round-trip byte for byte
/// and unlawful tables survive a round trip unchanged.
Json to_json(const FinCategory& c);
Json to_json(const SetPresheaf& p);
Json to_json(const BiPresheaf& b);
Json to_json(const CatPresheaf& p, const std::string& kind = "cat_presheaf");

FinCategory category_from_json(const Json& j);
SetPresheaf set_presheaf_from_json(const Json& j);
BiPresheaf bi_presheaf_from_json(const Json& j);
CatPresheaf cat_presheaf_from_json(const Json& j);

/// One value of any serializable kind, dispatched on the "kind" field.
/// "q_presheaf" marks a presheaf meant to live over a total category; it
/// loads as a CatPresheaf and keeps its kind string.
struct Instance {
  std::string kind;
  std::variant<FinCategory, SetPresheaf, BiPresheaf, CatPresheaf> value;
};
Instance instance_from_json(const Json& j);

std::string canonical_text(const Json& j); // indent 2, trailing newline

Json read_json_file(const std::string& path); // throws ParseError
void write_text_file(const std::string& path, const std::string& text);

} // namespace fincat
