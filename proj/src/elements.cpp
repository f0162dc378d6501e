#include "fincat/elements.hpp"

#include <algorithm>

#include "fincat/errors.hpp"

namespace fincat {

namespace {

CanonicalName el_object(const CanonicalName& a, const CanonicalName& u) {
  return CanonicalName::pair(a, u);
}

// pullback of a presheaf on prod = c x d along f, without re-deriving prod
SetPresheaf restrict_core(const FinCategory& c, const FinCategory& prod,
                          const SetPresheaf& r, const Functor& f) {
  std::vector<FinSet> values;
  values.reserve(c.object_count());
  for (int a = 0; a < c.object_count(); ++a) {
    int pa = prod.object_index(
        CanonicalName::pair(c.object(a), f.obj_image_name(a)));
    if (pa < 0)
      throw InvalidArgument("restrict_presheaf: paired object missing from the product base");
    values.push_back(r.value(pa));
  }
  std::vector<SetFunction> actions;
  actions.reserve(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m) {
    int pm = prod.morphism_index(
        CanonicalName::pair(c.morphism(m).id, f.mor_image_name(m)));
    if (pm < 0)
      throw InvalidArgument("restrict_presheaf: paired morphism missing from the product base");
    actions.push_back(r.action(pm));
  }
  return SetPresheaf::make(c, std::move(values), std::move(actions));
}

} // namespace

ElementsCategory category_of_elements(const SetPresheaf& p) {
  const FinCategory& c = p.base();

  std::vector<CanonicalName> objects;
  for (int a = 0; a < c.object_count(); ++a)
    for (const auto& u : p.value(a).elements())
      objects.push_back(el_object(c.object(a), u));

  // the lift of f : a -> b into (b, v) starts at (a, action(f)(v))
  auto lift_src = [&](int f, int v_idx) {
    return el_object(c.object(c.dom(f)), p.action(f).image_name(v_idx));
  };
  auto lift_name = [&](int f, int v_idx) {
    return make_arrow_name(
        "el", c.morphism(f).id, lift_src(f, v_idx),
        el_object(c.object(c.cod(f)), p.value(c.cod(f)).element(v_idx)));
  };

  std::vector<MorRecord> mors;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int v = 0; v < p.value(c.cod(f)).size(); ++v)
      mors.push_back({lift_name(f, v), lift_src(f, v),
                      el_object(c.object(c.cod(f)), p.value(c.cod(f)).element(v))});

  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int a = 0; a < c.object_count(); ++a) {
    int id = c.identity(a);
    if (id < 0) continue;
    for (int u = 0; u < p.value(a).size(); ++u)
      ids.emplace_back(el_object(c.object(a), p.value(a).element(u)),
                       lift_name(id, u));
  }

  std::vector<FinCategory::ComposeEntry> comp;
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e[1]) != c.dom(e[0])) continue;
    int g = e[0], f = e[1], h = e[2];
    for (int w = 0; w < p.value(c.cod(g)).size(); ++w) {
      int v = p.action(g).image(w);
      if (v < 0) continue;
      comp.push_back({lift_name(g, w), lift_name(f, v), lift_name(h, w)});
    }
  }

  ElementsCategory out;
  out.cat = FinCategory::make(std::move(objects), std::move(mors),
                              std::move(ids), std::move(comp));

  std::vector<CanonicalName> obj_images, mor_images;
  obj_images.reserve(out.cat.object_count());
  for (const auto& o : out.cat.objects()) obj_images.push_back(o.first());
  mor_images.reserve(out.cat.morphism_count());
  for (const auto& m : out.cat.morphisms())
    mor_images.push_back(arrow_name_parts(m.id).core);
  out.projection = Functor::make(out.cat, c, std::move(obj_images),
                                 std::move(mor_images));
  return out;
}

Functor elements_on_nat(const PshNatTrans& eta) {
  const SetPresheaf& p = eta.source();
  const SetPresheaf& q = eta.target();
  const FinCategory& c = p.base();
  ElementsCategory ep = category_of_elements(p);
  ElementsCategory eq = category_of_elements(q);

  auto map_object = [&](const CanonicalName& o) {
    int a = c.object_index(o.first());
    int u = p.value(a).index_of(o.second());
    return el_object(o.first(), eta.component(a).image_name(u));
  };

  std::vector<CanonicalName> obj_images;
  obj_images.reserve(ep.cat.object_count());
  for (const auto& o : ep.cat.objects()) obj_images.push_back(map_object(o));

  std::vector<CanonicalName> mor_images;
  mor_images.reserve(ep.cat.morphism_count());
  for (const auto& m : ep.cat.morphisms()) {
    ArrowNameParts parts = arrow_name_parts(m.id);
    mor_images.push_back(make_arrow_name("el", parts.core, map_object(parts.src),
                                         map_object(parts.tgt)));
  }
  return Functor::make(ep.cat, eq.cat, std::move(obj_images), std::move(mor_images));
}

SetPresheaf yoneda_presheaf(const FinCategory& c, const CanonicalName& a) {
  int ai = c.object_index(a);
  if (ai < 0) throw InvalidArgument("yoneda_presheaf: unknown object " + a.str());
  std::vector<FinSet> values;
  values.reserve(c.object_count());
  for (int b = 0; b < c.object_count(); ++b) {
    std::vector<CanonicalName> elems;
    for (int h : c.hom(b, ai)) elems.push_back(c.morphism(h).id);
    values.push_back(FinSet::make(std::move(elems)));
  }
  std::vector<SetFunction> actions;
  actions.reserve(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    const FinSet& from = values[c.cod(f)];
    std::vector<CanonicalName> images;
    images.reserve(from.size());
    for (const auto& h : from.elements()) {
      int composite = c.compose(c.morphism_index(h), f);
      if (composite < 0)
        throw InvalidArgument("yoneda_presheaf: base category is not composition-total");
      images.push_back(c.morphism(composite).id);
    }
    actions.push_back(SetFunction::make(from, values[c.dom(f)], std::move(images)));
  }
  return SetPresheaf::make(c, std::move(values), std::move(actions));
}

std::pair<Functor, Functor> yoneda_slice_witness(const FinCategory& c,
                                                 const CanonicalName& a) {
  ElementsCategory e = category_of_elements(yoneda_presheaf(c, a));
  FinCategory s = slice_category(c, a);

  auto to_slice = [&](const CanonicalName& o) {
    return CanonicalName::tagged("slice", o);
  };
  std::vector<CanonicalName> fwd_obj, fwd_mor;
  for (const auto& o : e.cat.objects()) fwd_obj.push_back(to_slice(o));
  for (const auto& m : e.cat.morphisms()) {
    ArrowNameParts parts = arrow_name_parts(m.id);
    fwd_mor.push_back(make_arrow_name("slm", parts.core, to_slice(parts.src),
                                      to_slice(parts.tgt)));
  }
  std::vector<CanonicalName> bwd_obj, bwd_mor;
  for (const auto& o : s.objects()) bwd_obj.push_back(o.inner());
  for (const auto& m : s.morphisms()) {
    ArrowNameParts parts = arrow_name_parts(m.id);
    bwd_mor.push_back(make_arrow_name("el", parts.core, parts.src.inner(),
                                      parts.tgt.inner()));
  }
  return {Functor::make(e.cat, s, std::move(fwd_obj), std::move(fwd_mor)),
          Functor::make(s, e.cat, std::move(bwd_obj), std::move(bwd_mor))};
}

SetPresheaf restrict_presheaf(const FinCategory& c, const FinCategory& d,
                              const SetPresheaf& r, const Functor& f) {
  FinCategory prod = product_category(c, d);
  if (!(r.base() == prod))
    throw InvalidArgument("restrict_presheaf: presheaf base is not the product category");
  if (!(f.source() == c) || !(f.target() == d))
    throw InvalidArgument("restrict_presheaf: functor endpoints do not match");
  return restrict_core(c, prod, r, f);
}

std::vector<Family> product_set(const SetPresheaf& p, const Bounds& b) {
  const FinCategory& c = p.base();
  const int n = c.object_count();

  std::size_t candidates = 1;
  for (int a = 0; a < n; ++a) {
    candidates *= static_cast<std::size_t>(p.value(a).size());
    if (candidates > b.max_candidates)
      throw BoundExceeded("product_set: candidate families exceed bound of " +
                          std::to_string(b.max_candidates));
    if (candidates == 0) return {};
  }

  std::vector<Family> out;
  std::vector<int> pick(n, 0);
  while (true) {
    bool keep = true;
    for (int m = 0; m < c.morphism_count() && keep; ++m) {
      int img = p.action(m).image(pick[c.cod(m)]);
      if (img != pick[c.dom(m)]) keep = false;
    }
    if (keep) {
      Family fam;
      fam.index = c.objects();
      fam.values.reserve(n);
      for (int a = 0; a < n; ++a) fam.values.push_back(p.value(a).element(pick[a]));
      out.push_back(std::move(fam));
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] + 1 == p.value(pos).size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  std::sort(out.begin(), out.end(), [](const Family& x, const Family& y) {
    return family_name(x) < family_name(y);
  });
  return out;
}

CanonicalName family_name(const Family& fam) { return name_tuple(fam.values); }

SetPresheaf pi_presheaf(const FinCategory& c, const FinCategory& d,
                        const SetPresheaf& r, const Bounds& b) {
  FinCategory prod = product_category(c, d);
  if (!(r.base() == prod))
    throw InvalidArgument("pi_presheaf: presheaf base is not the product category");
  FunctorCategory fc = functor_category(c, d, b);
  const int nf = static_cast<int>(fc.functors.size());

  std::vector<std::vector<Family>> fams(nf);
  std::vector<FinSet> values;
  values.reserve(nf);
  for (int i = 0; i < nf; ++i) {
    fams[i] = product_set(restrict_core(c, prod, r, fc.functors[i]), b);
    std::vector<CanonicalName> elems;
    elems.reserve(fams[i].size());
    for (const auto& fam : fams[i]) elems.push_back(family_name(fam));
    values.push_back(FinSet::make(std::move(elems)));
  }

  std::vector<SetFunction> actions;
  actions.reserve(fc.cat.morphism_count());
  for (int m = 0; m < fc.cat.morphism_count(); ++m) {
    const NatTrans& eta = fc.transformations[m];
    int fi = fc.cat.dom(m), gi = fc.cat.cod(m);
    std::vector<CanonicalName> images;
    images.reserve(fams[gi].size());
    for (const auto& fam : fams[gi]) {
      std::vector<CanonicalName> mapped(c.object_count());
      for (int a = 0; a < c.object_count(); ++a) {
        int ida = c.identity(a);
        int pm = prod.morphism_index(CanonicalName::pair(
            c.morphism(ida).id, eta.component_name(a)));
        const SetFunction& act = r.action(pm);
        int v = act.source().index_of(fam.values[a]);
        mapped[a] = act.image_name(v);
      }
      images.push_back(name_tuple(mapped));
    }
    actions.push_back(SetFunction::make(values[gi], values[fi], std::move(images)));
  }
  return SetPresheaf::make(fc.cat, std::move(values), std::move(actions));
}

SetPresheaf presheaf_over_elements(const SetPresheaf& p) {
  ElementsCategory e = category_of_elements(p);
  const FinCategory& c = p.base();
  std::vector<FinSet> values;
  values.reserve(e.cat.object_count());
  for (const auto& o : e.cat.objects())
    values.push_back(p.value(c.object_index(o.first())));
  std::vector<SetFunction> actions;
  actions.reserve(e.cat.morphism_count());
  for (const auto& m : e.cat.morphisms()) {
    int f = c.morphism_index(arrow_name_parts(m.id).core);
    actions.push_back(p.action(f));
  }
  return SetPresheaf::make(e.cat, std::move(values), std::move(actions));
}

Family second_projection(const SetPresheaf& p) {
  ElementsCategory e = category_of_elements(p);
  Family fam;
  fam.index = e.cat.objects();
  fam.values.reserve(fam.index.size());
  for (const auto& o : fam.index) fam.values.push_back(o.second());
  return fam;
}

bool check_discrete_fibration(const Functor& p) {
  const FinCategory& e = p.source();
  const FinCategory& c = p.target();
  for (int obj = 0; obj < e.object_count(); ++obj) {
    int b = p.obj_image(obj);
    if (b < 0) return false;
    for (int f : c.mors_into(b)) {
      int lifts = 0;
      for (int m : e.mors_into(obj))
        if (p.mor_image(m) == f) ++lifts;
      if (lifts != 1) return false;
    }
  }
  return true;
}

} // namespace fincat
