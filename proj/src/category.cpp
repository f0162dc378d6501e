#include "fincat/category.hpp"

#include <algorithm>
#include <array>

#include "fincat/errors.hpp"

namespace fincat {

struct FinCategory::Data {
  std::vector<CanonicalName> objects; // sorted
  std::vector<MorRecord> morphisms;   // sorted by id
  std::map<CanonicalName, int> obj_index;
  std::map<CanonicalName, int> mor_index;
  std::vector<int> dom, cod;      // per morphism, object indices
  std::vector<int> identity;      // per object, morphism index or -1
  std::vector<bool> is_identity;  // per morphism
  std::vector<std::array<int, 3>> entries; // (after, before, composite), sorted
  std::unordered_map<std::uint64_t, int> comp; // key after<<32|before
  std::vector<std::vector<int>> by_dom, by_cod;
  std::vector<std::vector<int>> hom; // [a * n_obj + b]
};

namespace {

std::uint64_t comp_key(int g, int f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}

const std::vector<int>& empty_int_vec() {
  static const std::vector<int> v;
  return v;
}

} // namespace

FinCategory::FinCategory() {
  static const auto empty = std::make_shared<const Data>();
  d_ = empty;
}

FinCategory FinCategory::make(
    std::vector<CanonicalName> objects, std::vector<MorRecord> morphisms,
    std::vector<std::pair<CanonicalName, CanonicalName>> identities,
    std::vector<ComposeEntry> composition) {
  auto d = std::make_shared<Data>();
  std::sort(objects.begin(), objects.end());
  for (std::size_t i = 1; i < objects.size(); ++i)
    if (objects[i - 1] == objects[i])
      throw InvalidArgument("duplicate object: " + objects[i].str());
  d->objects = std::move(objects);
  for (int i = 0; i < static_cast<int>(d->objects.size()); ++i)
    d->obj_index.emplace(d->objects[i], i);

  std::sort(morphisms.begin(), morphisms.end(),
            [](const MorRecord& x, const MorRecord& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < morphisms.size(); ++i)
    if (morphisms[i - 1].id == morphisms[i].id)
      throw InvalidArgument("duplicate morphism id: " + morphisms[i].id.str());
  d->morphisms = std::move(morphisms);
  const int n_obj = static_cast<int>(d->objects.size());
  const int n_mor = static_cast<int>(d->morphisms.size());
  d->dom.resize(n_mor);
  d->cod.resize(n_mor);
  d->by_dom.resize(n_obj);
  d->by_cod.resize(n_obj);
  d->hom.resize(static_cast<std::size_t>(n_obj) * n_obj);
  for (int i = 0; i < n_mor; ++i) {
    const MorRecord& m = d->morphisms[i];
    d->mor_index.emplace(m.id, i);
    auto a = d->obj_index.find(m.dom);
    auto b = d->obj_index.find(m.cod);
    if (a == d->obj_index.end())
      throw InvalidArgument("morphism " + m.id.str() + " has unknown dom " + m.dom.str());
    if (b == d->obj_index.end())
      throw InvalidArgument("morphism " + m.id.str() + " has unknown cod " + m.cod.str());
    d->dom[i] = a->second;
    d->cod[i] = b->second;
    d->by_dom[a->second].push_back(i);
    d->by_cod[b->second].push_back(i);
    d->hom[static_cast<std::size_t>(a->second) * n_obj + b->second].push_back(i);
  }

  d->identity.assign(n_obj, -1);
  d->is_identity.assign(n_mor, false);
  for (const auto& [obj, mor] : identities) {
    auto a = d->obj_index.find(obj);
    if (a == d->obj_index.end())
      throw InvalidArgument("identity declared for unknown object " + obj.str());
    auto m = d->mor_index.find(mor);
    if (m == d->mor_index.end())
      throw InvalidArgument("identity of " + obj.str() + " is unknown morphism " + mor.str());
    if (d->identity[a->second] != -1)
      throw InvalidArgument("duplicate identity for object " + obj.str());
    d->identity[a->second] = m->second;
    d->is_identity[m->second] = true;
  }

  for (const auto& e : composition) {
    auto g = d->mor_index.find(e.after);
    auto f = d->mor_index.find(e.before);
    auto h = d->mor_index.find(e.composite);
    if (g == d->mor_index.end() || f == d->mor_index.end() || h == d->mor_index.end())
      throw InvalidArgument("composition entry mentions unknown morphism: (" +
                            e.after.str() + ", " + e.before.str() + ") -> " +
                            e.composite.str());
    auto [it, inserted] = d->comp.emplace(comp_key(g->second, f->second), h->second);
    if (!inserted) {
      if (it->second != h->second)
        throw InvalidArgument("conflicting composition entries for (" +
                              e.after.str() + ", " + e.before.str() + ")");
      continue;
    }
    d->entries.push_back({g->second, f->second, h->second});
  }
  std::sort(d->entries.begin(), d->entries.end());
  FinCategory c;
  c.d_ = std::move(d);
  return c;
}

int FinCategory::object_count() const { return static_cast<int>(d_->objects.size()); }
int FinCategory::morphism_count() const { return static_cast<int>(d_->morphisms.size()); }

const std::vector<CanonicalName>& FinCategory::objects() const { return d_->objects; }
const CanonicalName& FinCategory::object(int i) const { return d_->objects[i]; }
const MorRecord& FinCategory::morphism(int i) const { return d_->morphisms[i]; }
const std::vector<MorRecord>& FinCategory::morphisms() const { return d_->morphisms; }

int FinCategory::dom(int m) const { return d_->dom[m]; }
int FinCategory::cod(int m) const { return d_->cod[m]; }
int FinCategory::identity(int obj) const { return d_->identity[obj]; }
bool FinCategory::is_identity(int m) const { return d_->is_identity[m]; }

int FinCategory::compose(int g, int f) const {
  auto it = d_->comp.find(comp_key(g, f));
  return it == d_->comp.end() ? -1 : it->second;
}

int FinCategory::object_index(const CanonicalName& n) const {
  auto it = d_->obj_index.find(n);
  return it == d_->obj_index.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const CanonicalName& n) const {
  auto it = d_->mor_index.find(n);
  return it == d_->mor_index.end() ? -1 : it->second;
}

const std::vector<int>& FinCategory::hom(int a, int b) const {
  if (a < 0 || b < 0) return empty_int_vec();
  return d_->hom[static_cast<std::size_t>(a) * d_->objects.size() + b];
}

const std::vector<int>& FinCategory::mors_from(int a) const {
  return a < 0 ? empty_int_vec() : d_->by_dom[a];
}

const std::vector<int>& FinCategory::mors_into(int b) const {
  return b < 0 ? empty_int_vec() : d_->by_cod[b];
}

const std::vector<std::array<int, 3>>& FinCategory::compose_entries() const {
  return d_->entries;
}

bool FinCategory::operator==(const FinCategory& o) const {
  if (d_ == o.d_) return true;
  return d_->objects == o.d_->objects && d_->morphisms == o.d_->morphisms &&
         d_->identity == o.d_->identity && d_->entries == o.d_->entries;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r;
  const int n_obj = c.object_count();
  const int n_mor = c.morphism_count();

  for (int a = 0; a < n_obj; ++a) {
    int id = c.identity(a);
    if (id < 0) {
      r.add("identity-missing", {c.object(a)});
      continue;
    }
    if (c.dom(id) != a || c.cod(id) != a)
      r.add("identity-endpoints", {c.object(a), c.morphism(id).id},
            "identity morphism is not an endomorphism of its object");
  }

  // table entries only on composable pairs, with coherent endpoints
  for (const auto& e : c.compose_entries()) {
    int g = e[0], f = e[1], h = e[2];
    if (c.cod(f) != c.dom(g)) {
      r.add("compose-noncomposable", {c.morphism(g).id, c.morphism(f).id});
      continue;
    }
    if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
      r.add("compose-endpoints",
            {c.morphism(g).id, c.morphism(f).id, c.morphism(h).id});
  }

  // totality on composable pairs, unit laws
  for (int f = 0; f < n_mor; ++f) {
    for (int g : c.mors_from(c.cod(f))) {
      if (c.compose(g, f) < 0)
        r.add("compose-missing", {c.morphism(g).id, c.morphism(f).id});
    }
    int idc = c.identity(c.cod(f));
    if (idc >= 0) {
      int h = c.compose(idc, f);
      if (h >= 0 && h != f)
        r.add("unit-left", {c.morphism(f).id, c.morphism(h).id});
    }
    int idd = c.identity(c.dom(f));
    if (idd >= 0) {
      int h = c.compose(f, idd);
      if (h >= 0 && h != f)
        r.add("unit-right", {c.morphism(f).id, c.morphism(h).id});
    }
  }

  // associativity over composable triples
  for (int f = 0; f < n_mor; ++f) {
    for (int g : c.mors_from(c.cod(f))) {
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      for (int h : c.mors_from(c.cod(g))) {
        int hg = c.compose(h, g);
        if (hg < 0) continue;
        int left = c.compose(h, gf);
        int right = c.compose(hg, f);
        if (left < 0 || right < 0) continue; // reported as compose-missing
        if (left != right)
          r.add("associativity",
                {c.morphism(h).id, c.morphism(g).id, c.morphism(f).id},
                "h o (g o f) = " + c.morphism(left).id.str() +
                    " but (h o g) o f = " + c.morphism(right).id.str());
      }
    }
  }
  return r;
}

FinCategory opposite(const FinCategory& c) {
  std::vector<MorRecord> mors;
  mors.reserve(c.morphism_count());
  for (const auto& m : c.morphisms()) mors.push_back({m.id, m.cod, m.dom});
  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int a = 0; a < c.object_count(); ++a)
    if (c.identity(a) >= 0)
      ids.emplace_back(c.object(a), c.morphism(c.identity(a)).id);
  std::vector<FinCategory::ComposeEntry> comp;
  for (const auto& e : c.compose_entries())
    comp.push_back({c.morphism(e[1]).id, c.morphism(e[0]).id, c.morphism(e[2]).id});
  return FinCategory::make(c.objects(), std::move(mors), std::move(ids),
                           std::move(comp));
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  std::vector<CanonicalName> objects;
  for (const auto& a : c.objects())
    for (const auto& x : d.objects())
      objects.push_back(CanonicalName::pair(a, x));

  std::vector<MorRecord> mors;
  for (const auto& f : c.morphisms())
    for (const auto& p : d.morphisms())
      mors.push_back({CanonicalName::pair(f.id, p.id),
                      CanonicalName::pair(f.dom, p.dom),
                      CanonicalName::pair(f.cod, p.cod)});

  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int a = 0; a < c.object_count(); ++a)
    for (int x = 0; x < d.object_count(); ++x) {
      int ia = c.identity(a), ix = d.identity(x);
      if (ia < 0 || ix < 0) continue;
      ids.emplace_back(CanonicalName::pair(c.object(a), d.object(x)),
                       CanonicalName::pair(c.morphism(ia).id, d.morphism(ix).id));
    }

  std::vector<FinCategory::ComposeEntry> comp;
  for (const auto& e : c.compose_entries())
    for (const auto& e2 : d.compose_entries())
      comp.push_back(
          {CanonicalName::pair(c.morphism(e[0]).id, d.morphism(e2[0]).id),
           CanonicalName::pair(c.morphism(e[1]).id, d.morphism(e2[1]).id),
           CanonicalName::pair(c.morphism(e[2]).id, d.morphism(e2[2]).id)});
  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

FinCategory slice_category(const FinCategory& c, const CanonicalName& a) {
  int ai = c.object_index(a);
  if (ai < 0) throw InvalidArgument("slice over unknown object " + a.str());

  // objects: morphisms into a
  std::vector<int> over;
  std::vector<CanonicalName> objects;
  std::vector<CanonicalName> obj_name_by_mor(c.morphism_count());
  for (int h : c.mors_into(ai)) {
    CanonicalName n = CanonicalName::tagged(
        "slice", CanonicalName::pair(c.morphism(h).dom, c.morphism(h).id));
    obj_name_by_mor[h] = n;
    objects.push_back(n);
    over.push_back(h);
  }

  std::vector<MorRecord> mors;
  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  std::vector<FinCategory::ComposeEntry> comp;

  // f : h -> h' whenever h' o f = h
  auto lift_name = [&](int f, int h, int h2) {
    return make_arrow_name("slm", c.morphism(f).id, obj_name_by_mor[h],
                           obj_name_by_mor[h2]);
  };
  for (int h : over)
    for (int h2 : over)
      for (int f : c.hom(c.dom(h), c.dom(h2)))
        if (c.compose(h2, f) == h)
          mors.push_back({lift_name(f, h, h2), obj_name_by_mor[h], obj_name_by_mor[h2]});

  for (int h : over) {
    int id = c.identity(c.dom(h));
    if (id >= 0 && c.compose(h, id) == h)
      ids.emplace_back(obj_name_by_mor[h], lift_name(id, h, h));
  }

  // composition is composition of the underlying morphisms
  for (int h : over)
    for (int h2 : over)
      for (int f : c.hom(c.dom(h), c.dom(h2))) {
        if (c.compose(h2, f) != h) continue;
        for (int h3 : over)
          for (int g : c.hom(c.dom(h2), c.dom(h3))) {
            if (c.compose(h3, g) != h2) continue;
            int gf = c.compose(g, f);
            if (gf < 0) continue;
            comp.push_back({lift_name(g, h2, h3), lift_name(f, h, h2),
                            lift_name(gf, h, h3)});
          }
      }
  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

} // namespace fincat
