#include "fincat/json_io.hpp"

#include <fstream>
#include <set>
#include <utility>

#include "fincat/errors.hpp"

namespace fincat {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str_of(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

CanonicalName name_of(const Json& j, const char* what) {
  return CanonicalName::parse(str_of(j, what));
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a json object");
  return str_of(field(j, "kind"), "kind");
}

void expect_kind(const Json& j, const char* kind) {
  if (kind_of(j) != kind)
    throw ParseError(std::string("expected kind \"") + kind + "\"");
}

} // namespace

Json to_json(const FinCategory& c) {
  Json j;
  j["kind"] = "category";
  Json objs = Json::array();
  for (const auto& o : c.objects()) objs.push_back(o.str());
  j["objects"] = std::move(objs);

  Json mors = Json::array();
  for (const auto& m : c.morphisms())
    mors.push_back(
        {{"id", m.id.str()}, {"dom", m.dom.str()}, {"cod", m.cod.str()}});
  j["morphisms"] = std::move(mors);

  Json ids = Json::object();
  for (int a = 0; a < c.object_count(); ++a)
    if (c.identity(a) >= 0)
      ids[c.object(a).str()] = c.morphism(c.identity(a)).id.str();
  j["identities"] = std::move(ids);

  // entries forced by the unit laws are implied; only disagreements stay
  Json comp = Json::array();
  for (const auto& e : c.compose_entries()) {
    bool composable = c.cod(e[1]) == c.dom(e[0]);
    if (composable && c.is_identity(e[1]) && e[2] == e[0]) continue;
    if (composable && c.is_identity(e[0]) && e[2] == e[1]) continue;
    comp.push_back({{"after", c.morphism(e[0]).id.str()},
                    {"before", c.morphism(e[1]).id.str()},
                    {"composite", c.morphism(e[2]).id.str()}});
  }
  j["composition"] = std::move(comp);
  return j;
}

FinCategory category_from_json(const Json& j) {
  expect_kind(j, "category");

  const Json& jo = field(j, "objects");
  if (!jo.is_array()) throw ParseError("objects must be an array");
  std::vector<CanonicalName> objects;
  objects.reserve(jo.size());
  for (const auto& o : jo) objects.push_back(name_of(o, "object"));

  const Json& jm = field(j, "morphisms");
  if (!jm.is_array()) throw ParseError("morphisms must be an array");
  std::vector<MorRecord> mors;
  mors.reserve(jm.size());
  for (const auto& m : jm) {
    if (!m.is_object()) throw ParseError("morphism must be an object");
    mors.push_back({name_of(field(m, "id"), "morphism id"),
                    name_of(field(m, "dom"), "morphism dom"),
                    name_of(field(m, "cod"), "morphism cod")});
  }

  const Json& ji = field(j, "identities");
  if (!ji.is_object()) throw ParseError("identities must be an object");
  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (auto it = ji.begin(); it != ji.end(); ++it)
    ids.emplace_back(CanonicalName::parse(it.key()),
                     name_of(it.value(), "identity"));

  const Json& jc = field(j, "composition");
  if (!jc.is_array()) throw ParseError("composition must be an array");
  std::vector<FinCategory::ComposeEntry> comp;
  std::set<std::pair<std::string, std::string>> given;
  for (const auto& e : jc) {
    if (!e.is_object()) throw ParseError("composition entry must be an object");
    CanonicalName after = name_of(field(e, "after"), "after");
    CanonicalName before = name_of(field(e, "before"), "before");
    given.emplace(after.str(), before.str());
    comp.push_back({after, before, name_of(field(e, "composite"), "composite")});
  }

  // restore the unit-law entries the canonical form leaves out
  std::set<std::string> idset;
  for (const auto& [o, m] : ids) idset.insert(m.str());
  for (const auto& g : mors)
    for (const auto& f : mors) {
      bool gi = idset.count(g.id.str()) > 0;
      bool fi = idset.count(f.id.str()) > 0;
      if (!gi && !fi) continue;
      if (!(f.cod == g.dom)) continue;
      if (given.count({g.id.str(), f.id.str()})) continue;
      comp.push_back({g.id, f.id, fi ? g.id : f.id});
    }

  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

namespace {

Json function_to_json(const SetFunction& fn) {
  Json m = Json::object();
  for (int i = 0; i < fn.source().size(); ++i)
    m[fn.source().element(i).str()] = fn.image_name(i).str();
  return m;
}

SetFunction function_from_json(const Json& j, const FinSet& source,
                               const FinSet& target, const std::string& at) {
  if (!j.is_object())
    throw ParseError("action of " + at + " must be an object");
  if (static_cast<int>(j.size()) != source.size())
    throw ParseError("action of " + at + " must map each source element");
  std::vector<CanonicalName> images;
  images.reserve(source.size());
  for (int i = 0; i < source.size(); ++i) {
    auto it = j.find(source.element(i).str());
    if (it == j.end())
      throw ParseError("action of " + at + " is missing element " +
                       source.element(i).str());
    images.push_back(name_of(*it, "image"));
  }
  return SetFunction::make(source, target, std::move(images));
}

FinSet set_from_json(const Json& j, const std::string& at) {
  if (!j.is_array())
    throw ParseError("value set at " + at + " must be an array");
  std::vector<CanonicalName> el;
  el.reserve(j.size());
  for (const auto& e : j) el.push_back(name_of(e, "element"));
  return FinSet::make(std::move(el));
}

} // namespace

Json to_json(const SetPresheaf& p) {
  Json j;
  j["kind"] = "set_presheaf";
  j["base"] = to_json(p.base());

  Json vals = Json::object();
  for (int a = 0; a < p.base().object_count(); ++a) {
    Json arr = Json::array();
    for (const auto& e : p.value(a).elements()) arr.push_back(e.str());
    vals[p.base().object(a).str()] = std::move(arr);
  }
  j["values"] = std::move(vals);

  Json acts = Json::object();
  for (int f = 0; f < p.base().morphism_count(); ++f) {
    const SetFunction& fn = p.action(f);
    if (p.base().is_identity(f) && fn == SetFunction::identity(fn.source()))
      continue;
    acts[p.base().morphism(f).id.str()] = function_to_json(fn);
  }
  j["actions"] = std::move(acts);
  return j;
}

SetPresheaf set_presheaf_from_json(const Json& j) {
  expect_kind(j, "set_presheaf");
  FinCategory base = category_from_json(field(j, "base"));

  const Json& jv = field(j, "values");
  if (!jv.is_object()) throw ParseError("values must be an object");
  for (auto it = jv.begin(); it != jv.end(); ++it)
    if (base.object_index(CanonicalName::parse(it.key())) < 0)
      throw ParseError("value set for unknown object " + it.key());
  std::vector<FinSet> values;
  values.reserve(base.object_count());
  for (int a = 0; a < base.object_count(); ++a) {
    std::string key = base.object(a).str();
    auto it = jv.find(key);
    if (it == jv.end()) throw ParseError("missing value set for " + key);
    values.push_back(set_from_json(*it, key));
  }

  const Json& ja = field(j, "actions");
  if (!ja.is_object()) throw ParseError("actions must be an object");
  for (auto it = ja.begin(); it != ja.end(); ++it)
    if (base.morphism_index(CanonicalName::parse(it.key())) < 0)
      throw ParseError("action for unknown morphism " + it.key());
  std::vector<SetFunction> actions;
  actions.reserve(base.morphism_count());
  for (int f = 0; f < base.morphism_count(); ++f) {
    std::string key = base.morphism(f).id.str();
    auto it = ja.find(key);
    if (it == ja.end()) {
      if (!base.is_identity(f))
        throw ParseError("missing action for morphism " + key);
      actions.push_back(SetFunction::identity(values[base.cod(f)]));
    } else {
      actions.push_back(function_from_json(*it, values[base.cod(f)],
                                           values[base.dom(f)], key));
    }
  }
  return SetPresheaf::make(std::move(base), std::move(values),
                           std::move(actions));
}

Json to_json(const BiPresheaf& b) {
  Json j;
  j["kind"] = "bi_presheaf";
  j["base_c"] = to_json(b.base_c);
  j["base_d"] = to_json(b.base_d);
  const FinCategory& prod = b.presheaf.base();

  Json vals = Json::array();
  for (int o = 0; o < prod.object_count(); ++o) {
    Json arr = Json::array();
    for (const auto& e : b.presheaf.value(o).elements()) arr.push_back(e.str());
    vals.push_back({{"at", Json::array({prod.object(o).first().str(),
                                        prod.object(o).second().str()})},
                    {"elements", std::move(arr)}});
  }
  j["values"] = std::move(vals);

  Json acts = Json::array();
  for (int f = 0; f < prod.morphism_count(); ++f) {
    const SetFunction& fn = b.presheaf.action(f);
    if (prod.is_identity(f) && fn == SetFunction::identity(fn.source()))
      continue;
    acts.push_back(
        {{"at", Json::array({prod.morphism(f).id.first().str(),
                             prod.morphism(f).id.second().str()})},
         {"map", function_to_json(fn)}});
  }
  j["actions"] = std::move(acts);
  return j;
}

namespace {

CanonicalName at_pair(const Json& j) {
  const Json& at = field(j, "at");
  if (!at.is_array() || at.size() != 2)
    throw ParseError("\"at\" must be a two element array");
  return CanonicalName::pair(name_of(at[0], "at"), name_of(at[1], "at"));
}

} // namespace

BiPresheaf bi_presheaf_from_json(const Json& j) {
  expect_kind(j, "bi_presheaf");
  BiPresheaf out;
  out.base_c = category_from_json(field(j, "base_c"));
  out.base_d = category_from_json(field(j, "base_d"));
  FinCategory prod = product_category(out.base_c, out.base_d);

  const Json& jv = field(j, "values");
  if (!jv.is_array()) throw ParseError("values must be an array");
  std::vector<FinSet> values(prod.object_count());
  std::vector<bool> seen(prod.object_count(), false);
  for (const auto& v : jv) {
    CanonicalName at = at_pair(v);
    int o = prod.object_index(at);
    if (o < 0) throw ParseError("value set for unknown object " + at.str());
    if (seen[o]) throw ParseError("duplicate value set for " + at.str());
    seen[o] = true;
    values[o] = set_from_json(field(v, "elements"), at.str());
  }
  for (int o = 0; o < prod.object_count(); ++o)
    if (!seen[o])
      throw ParseError("missing value set for " + prod.object(o).str());

  const Json& ja = field(j, "actions");
  if (!ja.is_array()) throw ParseError("actions must be an array");
  std::vector<SetFunction> actions(prod.morphism_count());
  std::vector<bool> have(prod.morphism_count(), false);
  for (const auto& a : ja) {
    CanonicalName at = at_pair(a);
    int f = prod.morphism_index(at);
    if (f < 0) throw ParseError("action for unknown morphism " + at.str());
    if (have[f]) throw ParseError("duplicate action for " + at.str());
    have[f] = true;
    actions[f] = function_from_json(field(a, "map"), values[prod.cod(f)],
                                    values[prod.dom(f)], at.str());
  }
  for (int f = 0; f < prod.morphism_count(); ++f) {
    if (have[f]) continue;
    if (!prod.is_identity(f))
      throw ParseError("missing action for morphism " +
                       prod.morphism(f).id.str());
    actions[f] = SetFunction::identity(values[prod.cod(f)]);
  }
  out.presheaf =
      SetPresheaf::make(std::move(prod), std::move(values), std::move(actions));
  return out;
}

Json to_json(const CatPresheaf& p, const std::string& kind) {
  Json j;
  j["kind"] = kind;
  j["base"] = to_json(p.base());

  Json fibs = Json::object();
  for (int a = 0; a < p.base().object_count(); ++a)
    fibs[p.base().object(a).str()] = to_json(p.fiber(a));
  j["fibers"] = std::move(fibs);

  Json trs = Json::object();
  for (int f = 0; f < p.base().morphism_count(); ++f) {
    const Functor& tr = p.transition(f);
    if (p.base().is_identity(f) && tr == identity_functor(tr.source()))
      continue;
    Json om = Json::object(), mm = Json::object();
    for (int i = 0; i < tr.source().object_count(); ++i)
      om[tr.source().object(i).str()] = tr.obj_image_name(i).str();
    for (int i = 0; i < tr.source().morphism_count(); ++i)
      mm[tr.source().morphism(i).id.str()] = tr.mor_image_name(i).str();
    trs[p.base().morphism(f).id.str()] = {{"obj_map", std::move(om)},
                                          {"mor_map", std::move(mm)}};
  }
  j["transitions"] = std::move(trs);
  return j;
}

CatPresheaf cat_presheaf_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind != "cat_presheaf" && kind != "q_presheaf")
    throw ParseError("expected kind \"cat_presheaf\" or \"q_presheaf\"");
  FinCategory base = category_from_json(field(j, "base"));

  const Json& jf = field(j, "fibers");
  if (!jf.is_object()) throw ParseError("fibers must be an object");
  for (auto it = jf.begin(); it != jf.end(); ++it)
    if (base.object_index(CanonicalName::parse(it.key())) < 0)
      throw ParseError("fiber for unknown object " + it.key());
  std::vector<FinCategory> fibers;
  fibers.reserve(base.object_count());
  for (int a = 0; a < base.object_count(); ++a) {
    std::string key = base.object(a).str();
    auto it = jf.find(key);
    if (it == jf.end()) throw ParseError("missing fiber for " + key);
    fibers.push_back(category_from_json(*it));
  }

  const Json& jt = field(j, "transitions");
  if (!jt.is_object()) throw ParseError("transitions must be an object");
  for (auto it = jt.begin(); it != jt.end(); ++it)
    if (base.morphism_index(CanonicalName::parse(it.key())) < 0)
      throw ParseError("transition for unknown morphism " + it.key());
  std::vector<Functor> transitions;
  transitions.reserve(base.morphism_count());
  for (int f = 0; f < base.morphism_count(); ++f) {
    std::string key = base.morphism(f).id.str();
    auto it = jt.find(key);
    if (it == jt.end()) {
      if (!base.is_identity(f))
        throw ParseError("missing transition for morphism " + key);
      transitions.push_back(identity_functor(fibers[base.dom(f)]));
      continue;
    }
    const FinCategory& src = fibers[base.cod(f)];
    const Json& om = field(*it, "obj_map");
    const Json& mm = field(*it, "mor_map");
    if (!om.is_object() || !mm.is_object())
      throw ParseError("transition maps of " + key + " must be objects");
    if (static_cast<int>(om.size()) != src.object_count() ||
        static_cast<int>(mm.size()) != src.morphism_count())
      throw ParseError("transition of " + key +
                       " must map each fiber object and morphism");
    std::vector<CanonicalName> oi, mi;
    oi.reserve(src.object_count());
    for (int i = 0; i < src.object_count(); ++i) {
      auto f2 = om.find(src.object(i).str());
      if (f2 == om.end())
        throw ParseError("transition of " + key + " is missing object " +
                         src.object(i).str());
      oi.push_back(name_of(*f2, "object image"));
    }
    mi.reserve(src.morphism_count());
    for (int i = 0; i < src.morphism_count(); ++i) {
      auto f2 = mm.find(src.morphism(i).id.str());
      if (f2 == mm.end())
        throw ParseError("transition of " + key + " is missing morphism " +
                         src.morphism(i).id.str());
      mi.push_back(name_of(*f2, "morphism image"));
    }
    transitions.push_back(
        Functor::make(src, fibers[base.dom(f)], std::move(oi), std::move(mi)));
  }
  return CatPresheaf::make(std::move(base), std::move(fibers),
                           std::move(transitions));
}

Instance instance_from_json(const Json& j) {
  std::string kind = kind_of(j);
  if (kind == "category") return {kind, category_from_json(j)};
  if (kind == "set_presheaf") return {kind, set_presheaf_from_json(j)};
  if (kind == "bi_presheaf") return {kind, bi_presheaf_from_json(j)};
  if (kind == "cat_presheaf" || kind == "q_presheaf")
    return {kind, cat_presheaf_from_json(j)};
  throw ParseError("unknown kind \"" + kind + "\"");
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("invalid json in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

} // namespace fincat
