#include "fincat/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "fincat/errors.hpp"

namespace fincat {

namespace {

CanonicalName gr_object(const CanonicalName& a, const CanonicalName& x) {
  return CanonicalName::pair(a, x);
}

// image of u under the action of the product morphism (fm, gm)
CanonicalName act_image(const FinCategory& prod, const SetPresheaf& r,
                        const CanonicalName& fm, const CanonicalName& gm,
                        const CanonicalName& u) {
  int pm = prod.morphism_index(CanonicalName::pair(fm, gm));
  if (pm < 0)
    throw InvalidArgument("presheaf base is missing the product morphism " +
                          CanonicalName::pair(fm, gm).str());
  const SetFunction& act = r.action(pm);
  int ui = act.source().index_of(u);
  if (ui < 0)
    throw InvalidArgument("element " + u.str() + " is not in the acted-on set");
  return act.image_name(ui);
}

CanonicalName identity_id(const FinCategory& k, int obj) {
  int m = k.identity(obj);
  if (m < 0)
    throw InvalidArgument("missing identity at " + k.object(obj).str());
  return k.morphism(m).id;
}

CanonicalName identity_id(const FinCategory& k, const CanonicalName& obj) {
  int i = k.object_index(obj);
  if (i < 0) throw InvalidArgument("unknown object " + obj.str());
  return identity_id(k, i);
}

SetPresheaf curry_left_core(const FinCategory& c, const FinCategory& d,
                            const FinCategory& prod, const SetPresheaf& r,
                            int ai) {
  CanonicalName ida = identity_id(c, ai);
  std::vector<FinSet> values;
  values.reserve(d.object_count());
  for (int x = 0; x < d.object_count(); ++x)
    values.push_back(r.value(prod.object_index(
        CanonicalName::pair(c.object(ai), d.object(x)))));
  std::vector<SetFunction> actions;
  actions.reserve(d.morphism_count());
  for (int m = 0; m < d.morphism_count(); ++m)
    actions.push_back(r.action(prod.morphism_index(
        CanonicalName::pair(ida, d.morphism(m).id))));
  return SetPresheaf::make(d, std::move(values), std::move(actions));
}

SetPresheaf curry_right_core(const FinCategory& c, const FinCategory& d,
                             const FinCategory& prod, const SetPresheaf& r,
                             int xi) {
  CanonicalName idx = identity_id(d, xi);
  std::vector<FinSet> values;
  values.reserve(c.object_count());
  for (int a = 0; a < c.object_count(); ++a)
    values.push_back(r.value(prod.object_index(
        CanonicalName::pair(c.object(a), d.object(xi)))));
  std::vector<SetFunction> actions;
  actions.reserve(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m)
    actions.push_back(r.action(prod.morphism_index(
        CanonicalName::pair(c.morphism(m).id, idx))));
  return SetPresheaf::make(c, std::move(values), std::move(actions));
}

void require_product_base(const FinCategory& c, const FinCategory& d,
                          const SetPresheaf& r) {
  if (!(r.base() == product_category(c, d)))
    throw InvalidArgument("presheaf base is not the product of the given categories");
}

} // namespace

GrothendieckCategory grothendieck(const CatPresheaf& p) {
  const FinCategory& base = p.base();

  std::vector<CanonicalName> objects;
  for (int a = 0; a < base.object_count(); ++a)
    for (const auto& x : p.fiber(a).objects())
      objects.push_back(gr_object(base.object(a), x));

  // a morphism over f : a -> b into (b, y) is a fiber morphism
  // phi : x -> transition(f)(y); it starts at (a, x)
  auto lift_name = [&](int f, int phi, int y) {
    const FinCategory& fa = p.fiber(base.dom(f));
    const FinCategory& fb = p.fiber(base.cod(f));
    return make_arrow_name(
        "gr",
        CanonicalName::pair(base.morphism(f).id, fa.morphism(phi).id),
        gr_object(base.object(base.dom(f)), fa.object(fa.dom(phi))),
        gr_object(base.object(base.cod(f)), fb.object(y)));
  };

  std::vector<MorRecord> mors;
  for (int f = 0; f < base.morphism_count(); ++f) {
    int a = base.dom(f), b = base.cod(f);
    const FinCategory& fa = p.fiber(a);
    const FinCategory& fb = p.fiber(b);
    const Functor& tf = p.transition(f);
    for (int y = 0; y < fb.object_count(); ++y) {
      int ty = tf.obj_image(y);
      if (ty < 0) continue;
      for (int phi : fa.mors_into(ty))
        mors.push_back({lift_name(f, phi, y),
                        gr_object(base.object(a), fa.object(fa.dom(phi))),
                        gr_object(base.object(b), fb.object(y))});
    }
  }

  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int a = 0; a < base.object_count(); ++a) {
    int ida = base.identity(a);
    if (ida < 0) continue;
    const FinCategory& fa = p.fiber(a);
    const Functor& t = p.transition(ida);
    for (int x = 0; x < fa.object_count(); ++x) {
      int tx = t.obj_image(x);
      if (tx < 0) continue;
      int ph = fa.identity(tx);
      if (ph < 0) continue;
      ids.emplace_back(gr_object(base.object(a), fa.object(x)),
                       lift_name(ida, ph, x));
    }
  }

  // (g, theta) o (f, phi) = (g o f, transition(f)(theta) o phi)
  std::vector<FinCategory::ComposeEntry> comp;
  for (const auto& e : base.compose_entries()) {
    int g = e[0], f = e[1], h = e[2];
    if (base.cod(f) != base.dom(g)) continue;
    const FinCategory& fa = p.fiber(base.dom(f));
    const FinCategory& fb = p.fiber(base.cod(f));
    const FinCategory& fc = p.fiber(base.cod(g));
    const Functor& tf = p.transition(f);
    const Functor& tg = p.transition(g);
    for (int th = 0; th < fb.morphism_count(); ++th) {
      int y = fb.dom(th);
      int ty = tf.obj_image(y);
      int tth = tf.mor_image(th);
      if (ty < 0 || tth < 0) continue;
      for (int z = 0; z < fc.object_count(); ++z) {
        if (tg.obj_image(z) != fb.cod(th)) continue;
        int thz = p.transition(h).obj_image(z);
        for (int phi : fa.mors_into(ty)) {
          int psi = fa.compose(tth, phi);
          if (psi < 0) continue;
          // with broken strictness the composite lift may not exist
          if (thz < 0 || fa.cod(psi) != thz) continue;
          comp.push_back({lift_name(g, th, z), lift_name(f, phi, y),
                          lift_name(h, psi, z)});
        }
      }
    }
  }

  GrothendieckCategory out;
  out.cat = FinCategory::make(std::move(objects), std::move(mors),
                              std::move(ids), std::move(comp));

  std::vector<CanonicalName> obj_images, mor_images;
  obj_images.reserve(out.cat.object_count());
  for (const auto& o : out.cat.objects()) obj_images.push_back(o.first());
  mor_images.reserve(out.cat.morphism_count());
  for (const auto& m : out.cat.morphisms())
    mor_images.push_back(arrow_name_parts(m.id).core.first());
  out.projection = Functor::make(out.cat, base, std::move(obj_images),
                                 std::move(mor_images));
  return out;
}

SetPresheaf curry_left(const FinCategory& c, const FinCategory& d,
                       const SetPresheaf& r, const CanonicalName& a) {
  require_product_base(c, d, r);
  int ai = c.object_index(a);
  if (ai < 0) throw InvalidArgument("unknown object " + a.str());
  return curry_left_core(c, d, r.base(), r, ai);
}

SetPresheaf curry_right(const FinCategory& c, const FinCategory& d,
                        const SetPresheaf& r, const CanonicalName& x) {
  require_product_base(c, d, r);
  int xi = d.object_index(x);
  if (xi < 0) throw InvalidArgument("unknown object " + x.str());
  return curry_right_core(c, d, r.base(), r, xi);
}

CatPresheaf sigma_dr(const FinCategory& c, const FinCategory& d,
                     const SetPresheaf& r) {
  require_product_base(c, d, r);
  const FinCategory& prod = r.base();

  std::vector<FinCategory> fibers;
  fibers.reserve(c.object_count());
  for (int a = 0; a < c.object_count(); ++a)
    fibers.push_back(
        category_of_elements(curry_left_core(c, d, prod, r, a)).cat);

  // transition of f : a -> b sends (x, u) to (x, action(f, 1_x)(u))
  std::vector<Functor> transitions;
  transitions.reserve(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    const FinCategory& src = fibers[c.cod(f)];
    const FinCategory& tgt = fibers[c.dom(f)];
    const CanonicalName& fid = c.morphism(f).id;
    auto map_obj = [&](const CanonicalName& o) {
      return CanonicalName::pair(
          o.first(),
          act_image(prod, r, fid, identity_id(d, o.first()), o.second()));
    };
    std::vector<CanonicalName> oi, mi;
    oi.reserve(src.object_count());
    for (const auto& o : src.objects()) oi.push_back(map_obj(o));
    mi.reserve(src.morphism_count());
    for (const auto& m : src.morphisms()) {
      ArrowNameParts parts = arrow_name_parts(m.id);
      mi.push_back(make_arrow_name("el", parts.core, map_obj(parts.src),
                                   map_obj(parts.tgt)));
    }
    transitions.push_back(Functor::make(src, tgt, std::move(oi), std::move(mi)));
  }
  return CatPresheaf::make(c, std::move(fibers), std::move(transitions));
}

CatPresheaf sigma_cr(const FinCategory& c, const FinCategory& d,
                     const SetPresheaf& r) {
  require_product_base(c, d, r);
  const FinCategory& prod = r.base();

  std::vector<FinCategory> fibers;
  fibers.reserve(d.object_count());
  for (int x = 0; x < d.object_count(); ++x)
    fibers.push_back(
        category_of_elements(curry_right_core(c, d, prod, r, x)).cat);

  // transition of p : x -> y sends (a, u) to (a, action(1_a, p)(u))
  std::vector<Functor> transitions;
  transitions.reserve(d.morphism_count());
  for (int m = 0; m < d.morphism_count(); ++m) {
    const FinCategory& src = fibers[d.cod(m)];
    const FinCategory& tgt = fibers[d.dom(m)];
    const CanonicalName& pid = d.morphism(m).id;
    auto map_obj = [&](const CanonicalName& o) {
      return CanonicalName::pair(
          o.first(),
          act_image(prod, r, identity_id(c, o.first()), pid, o.second()));
    };
    std::vector<CanonicalName> oi, mi;
    oi.reserve(src.object_count());
    for (const auto& o : src.objects()) oi.push_back(map_obj(o));
    mi.reserve(src.morphism_count());
    for (const auto& mm : src.morphisms()) {
      ArrowNameParts parts = arrow_name_parts(mm.id);
      mi.push_back(make_arrow_name("el", parts.core, map_obj(parts.src),
                                   map_obj(parts.tgt)));
    }
    transitions.push_back(Functor::make(src, tgt, std::move(oi), std::move(mi)));
  }
  return CatPresheaf::make(d, std::move(fibers), std::move(transitions));
}

std::pair<Functor, Functor> commutativity_witness(const FinCategory& c,
                                                  const FinCategory& d,
                                                  const SetPresheaf& r) {
  GrothendieckCategory A = grothendieck(sigma_dr(c, d, r));
  GrothendieckCategory B = grothendieck(sigma_cr(c, d, r));
  const FinCategory& prod = r.base();

  auto flip = [](const CanonicalName& o) {
    return CanonicalName::pair(
        o.second().first(),
        CanonicalName::pair(o.first(), o.second().second()));
  };

  std::vector<CanonicalName> fobj, bobj;
  fobj.reserve(A.cat.object_count());
  for (const auto& o : A.cat.objects()) fobj.push_back(flip(o));
  bobj.reserve(B.cat.object_count());
  for (const auto& o : B.cat.objects()) bobj.push_back(flip(o));

  // (f, lift of phi) : (a,(x,u)) -> (b,(y,v)) goes to
  // (phi, lift of f) : (x,(a,u)) -> (y,(b,v)); the lift of f ends at
  // (b, action(1_b, phi)(v)).
  std::vector<CanonicalName> fmor;
  fmor.reserve(A.cat.morphism_count());
  for (const auto& m : A.cat.morphisms()) {
    ArrowNameParts gp = arrow_name_parts(m.id);
    CanonicalName f = gp.core.first();
    CanonicalName phi = arrow_name_parts(gp.core.second()).core;
    CanonicalName a = gp.src.first(), u = gp.src.second().second();
    CanonicalName b = gp.tgt.first(), v = gp.tgt.second().second();
    CanonicalName w = act_image(prod, r, identity_id(c, b), phi, v);
    CanonicalName el = make_arrow_name("el", f, CanonicalName::pair(a, u),
                                       CanonicalName::pair(b, w));
    fmor.push_back(make_arrow_name("gr", CanonicalName::pair(phi, el),
                                   flip(gp.src), flip(gp.tgt)));
  }

  std::vector<CanonicalName> bmor;
  bmor.reserve(B.cat.morphism_count());
  for (const auto& m : B.cat.morphisms()) {
    ArrowNameParts gp = arrow_name_parts(m.id);
    CanonicalName phi = gp.core.first();
    CanonicalName f = arrow_name_parts(gp.core.second()).core;
    CanonicalName x = gp.src.first(), u = gp.src.second().second();
    CanonicalName y = gp.tgt.first(), v = gp.tgt.second().second();
    CanonicalName w = act_image(prod, r, f, identity_id(d, y), v);
    CanonicalName el = make_arrow_name("el", phi, CanonicalName::pair(x, u),
                                       CanonicalName::pair(y, w));
    bmor.push_back(make_arrow_name("gr", CanonicalName::pair(f, el),
                                   flip(gp.src), flip(gp.tgt)));
  }

  return {Functor::make(A.cat, B.cat, std::move(fobj), std::move(fmor)),
          Functor::make(B.cat, A.cat, std::move(bobj), std::move(bmor))};
}

std::vector<CatFamily> cat_product_set(const CatPresheaf& p, const Bounds& b) {
  const FinCategory& base = p.base();
  int n = base.object_count();

  double total = 1;
  for (int a = 0; a < n; ++a) total *= p.fiber(a).object_count();
  if (total > static_cast<double>(b.max_candidates))
    throw BoundExceeded("cat_product_set: candidate space exceeds the bound");

  std::vector<CatFamily> out;
  for (int a = 0; a < n; ++a)
    if (p.fiber(a).object_count() == 0) return out;

  std::vector<int> pick(n, 0);
  for (;;) {
    bool ok = true;
    for (int f = 0; ok && f < base.morphism_count(); ++f) {
      int ty = p.transition(f).obj_image(pick[base.cod(f)]);
      if (ty < 0 || p.fiber(base.dom(f)).hom(pick[base.dom(f)], ty).empty())
        ok = false;
    }
    if (ok) {
      CatFamily fam;
      fam.index = base.objects();
      fam.values.reserve(n);
      for (int a = 0; a < n; ++a)
        fam.values.push_back(p.fiber(a).object(pick[a]));
      out.push_back(std::move(fam));
    }
    int i = n - 1;
    while (i >= 0 && ++pick[i] == p.fiber(i).object_count()) pick[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const CatFamily& l, const CatFamily& r2) {
    return cat_family_name(l) < cat_family_name(r2);
  });
  return out;
}

std::vector<Functor> find_associates(const FinCategory& c, const FinCategory& d,
                                     const SetPresheaf& r, const CatFamily& phi,
                                     const Bounds& b) {
  require_product_base(c, d, r);
  const FinCategory& prod = r.base();
  int n = c.object_count();
  if (phi.index != c.objects() || static_cast<int>(phi.values.size()) != n)
    throw InvalidArgument("family index must be the base object list");

  std::vector<int> x(n);
  std::vector<CanonicalName> u;
  u.reserve(n);
  for (int a = 0; a < n; ++a) {
    const CanonicalName& val = phi.values[a];
    if (!val.is_pair())
      throw InvalidArgument("family value " + val.str() + " is not a fiber object");
    x[a] = d.object_index(val.first());
    if (x[a] < 0)
      throw InvalidArgument("family value " + val.str() + " is not a fiber object");
    int po = prod.object_index(CanonicalName::pair(c.object(a), val.first()));
    if (!r.value(po).contains(val.second()))
      throw InvalidArgument("family value " + val.str() + " is not a fiber object");
    u.push_back(val.second());
  }

  // candidates for f : a -> b are the p : x_a -> x_b that turn the family
  // into a cone: action(1_a, p)(action(f, 1)(u_b)) = u_a
  int mc = c.morphism_count();
  std::vector<std::vector<int>> cand(mc);
  double total = 1;
  for (int f = 0; f < mc; ++f) {
    int a = c.dom(f), bb = c.cod(f);
    CanonicalName w =
        act_image(prod, r, c.morphism(f).id, identity_id(d, x[bb]), u[bb]);
    auto fits = [&](int psi) {
      return act_image(prod, r, identity_id(c, a), d.morphism(psi).id, w) == u[a];
    };
    if (a == bb && f == c.identity(a)) {
      int idx = d.identity(x[a]);
      if (idx >= 0 && fits(idx)) cand[f].push_back(idx);
    } else {
      for (int psi : d.hom(x[a], x[bb]))
        if (fits(psi)) cand[f].push_back(psi);
    }
    if (cand[f].empty())
      throw InvalidArgument("family is not in the product set");
    total *= cand[f].size();
    if (total > static_cast<double>(b.max_candidates))
      throw BoundExceeded("find_associates: candidate space exceeds the bound");
  }

  // composition entries grouped by the last morphism they mention
  std::vector<std::vector<std::array<int, 3>>> entries_at(mc);
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e[1]) != c.dom(e[0])) continue;
    entries_at[std::max({e[0], e[1], e[2]})].push_back(e);
  }

  std::vector<Functor> out;
  std::vector<int> mor_map(mc, -1);
  auto search = [&](auto&& self, int f) -> void {
    if (f == mc) {
      out.push_back(Functor::make_idx(c, d, x, mor_map));
      return;
    }
    for (int psi : cand[f]) {
      mor_map[f] = psi;
      bool ok = true;
      for (const auto& e : entries_at[f])
        if (d.compose(mor_map[e[0]], mor_map[e[1]]) != mor_map[e[2]]) {
          ok = false;
          break;
        }
      if (ok) self(self, f + 1);
    }
    mor_map[f] = -1;
  };
  search(search, 0);
  std::sort(out.begin(), out.end(), [](const Functor& l, const Functor& r2) {
    return l.name() < r2.name();
  });
  return out;
}

FinCategory product_category_pi(const FinCategory& c, const FinCategory& d,
                                const SetPresheaf& r, const Bounds& b) {
  const FinCategory& prod = r.base();
  CatPresheaf sdr = sigma_dr(c, d, r);
  std::vector<CatFamily> fams = cat_product_set(sdr, b);

  struct Obj {
    CanonicalName name;
    Functor fun;
    std::vector<CanonicalName> u;
  };
  std::vector<Obj> obs;
  for (const auto& fam : fams)
    for (const auto& fn : find_associates(c, d, r, fam, b)) {
      Obj o;
      o.name = CanonicalName::pair(cat_family_name(fam), fn.name());
      o.fun = fn;
      o.u.reserve(fam.values.size());
      for (const auto& v : fam.values) o.u.push_back(v.second());
      obs.push_back(std::move(o));
    }

  std::map<std::pair<CanonicalName, CanonicalName>, std::vector<NatTrans>> cache;
  auto nats = [&](const Functor& f, const Functor& g)
      -> const std::vector<NatTrans>& {
    auto key = std::make_pair(f.name(), g.name());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, enumerate_nat_trans(f, g)).first;
    return it->second;
  };

  // morphisms (fam,F) -> (fam',G): nat trans t with
  // action(1_a, t_a)(u'_a) = u_a for every a
  struct Mor {
    int src, tgt;
    NatTrans t;
    CanonicalName id;
  };
  std::vector<Mor> morlist;
  int no = static_cast<int>(obs.size());
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      for (const auto& t : nats(obs[i].fun, obs[j].fun)) {
        bool ok = true;
        for (int a = 0; ok && a < c.object_count(); ++a)
          ok = act_image(prod, r, identity_id(c, a), t.component_name(a),
                         obs[j].u[a]) == obs[i].u[a];
        if (ok)
          morlist.push_back({i, j, t,
                             make_arrow_name("pi", t.name(), obs[i].name,
                                             obs[j].name)});
      }

  std::vector<CanonicalName> objects;
  objects.reserve(obs.size());
  for (const auto& o : obs) objects.push_back(o.name);

  std::vector<MorRecord> mors;
  std::set<CanonicalName> have;
  mors.reserve(morlist.size());
  for (const auto& m : morlist) {
    mors.push_back({m.id, obs[m.src].name, obs[m.tgt].name});
    have.insert(m.id);
  }

  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (const auto& o : obs) {
    CanonicalName idn =
        make_arrow_name("pi", identity_nat(o.fun).name(), o.name, o.name);
    if (have.count(idn)) ids.emplace_back(o.name, idn);
  }

  std::vector<FinCategory::ComposeEntry> comp;
  for (const auto& m1 : morlist)
    for (const auto& m2 : morlist) {
      if (m1.tgt != m2.src) continue;
      CanonicalName cn =
          make_arrow_name("pi", vertical_compose(m2.t, m1.t).name(),
                          obs[m1.src].name, obs[m2.tgt].name);
      if (have.count(cn)) comp.push_back({m2.id, m1.id, cn});
    }

  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

namespace {

bool split_core(const CatPresheaf& p, const FinCategory& e,
                const Functor& proj) {
  const FinCategory& base = p.base();

  // the designated lift of f into (b, y) is (f, identity of transition(f)(y))
  auto designated = [&](int f, int eo) -> int {
    const CanonicalName& on = e.object(eo);
    if (!on.is_pair()) return -1;
    int bi = base.object_index(on.first());
    if (bi < 0 || bi != base.cod(f)) return -1;
    int yi = p.fiber(bi).object_index(on.second());
    if (yi < 0) return -1;
    int a = base.dom(f);
    const FinCategory& fa = p.fiber(a);
    int ty = p.transition(f).obj_image(yi);
    if (ty < 0) return -1;
    int ph = fa.identity(ty);
    if (ph < 0) return -1;
    return e.morphism_index(make_arrow_name(
        "gr", CanonicalName::pair(base.morphism(f).id, fa.morphism(ph).id),
        CanonicalName::pair(base.object(a), fa.object(ty)), on));
  };

  for (int eo = 0; eo < e.object_count(); ++eo) {
    int b = proj.obj_image(eo);
    if (b < 0) return false;
    int idb = base.identity(b);
    if (idb < 0 || designated(idb, eo) != e.identity(eo)) return false;

    for (int f : base.mors_into(b)) {
      int chi = designated(f, eo);
      if (chi < 0 || proj.mor_image(chi) != f) return false;
      int esrc = e.dom(chi);

      // every map into (b, y) factors uniquely through chi over any
      // base-level factorization through f
      for (int psi = 0; psi < e.morphism_count(); ++psi) {
        if (e.cod(psi) != eo) continue;
        int g0 = proj.mor_image(psi);
        if (g0 < 0) return false;
        int csrc = e.dom(psi);
        for (int g : base.hom(proj.obj_image(csrc), base.dom(f))) {
          if (base.compose(f, g) != g0) continue;
          int hits = 0;
          for (int th : e.hom(csrc, esrc))
            if (proj.mor_image(th) == g && e.compose(chi, th) == psi) ++hits;
          if (hits != 1) return false;
        }
      }
    }
  }

  for (const auto& en : base.compose_entries()) {
    int g = en[0], f = en[1], h = en[2];
    if (base.cod(f) != base.dom(g)) continue;
    for (int eo = 0; eo < e.object_count(); ++eo) {
      if (proj.obj_image(eo) != base.cod(g)) continue;
      int lg = designated(g, eo);
      if (lg < 0) return false;
      int lf = designated(f, e.dom(lg));
      int lh = designated(h, eo);
      if (lf < 0 || lh < 0 || e.compose(lg, lf) != lh) return false;
    }
  }
  return true;
}

} // namespace

bool check_split_fibration(const CatPresheaf& p) {
  GrothendieckCategory g = grothendieck(p);
  return split_core(p, g.cat, g.projection);
}

bool check_split_fibration_within(const CatPresheaf& p, const FinCategory& e,
                                  const Functor& proj) {
  if (!(proj.source() == e) || !(proj.target() == p.base()))
    throw InvalidArgument("projection endpoints do not match");
  return split_core(p, e, proj);
}

bool grothendieck_constant_matches_product(const FinCategory& c,
                                           const FinCategory& d) {
  FinCategory g = grothendieck(constant_cat_presheaf(c, d)).cat;
  FinCategory p = product_category(c, d);
  if (g.objects() != p.objects() || g.morphism_count() != p.morphism_count())
    return false;

  std::vector<CanonicalName> fwd;
  fwd.reserve(g.morphism_count());
  for (const auto& m : g.morphisms()) {
    if (!m.id.is_tagged("gr")) return false;
    fwd.push_back(arrow_name_parts(m.id).core);
  }
  std::vector<CanonicalName> bwd;
  bwd.reserve(p.morphism_count());
  for (int i = 0; i < p.morphism_count(); ++i)
    bwd.push_back(make_arrow_name("gr", p.morphism(i).id,
                                  p.object(p.dom(i)), p.object(p.cod(i))));

  Functor to = Functor::make(g, p, g.objects(), std::move(fwd));
  Functor from = Functor::make(p, g, p.objects(), std::move(bwd));
  return validate_functor(to).ok() && validate_functor(from).ok() &&
         check_strict_inverse_pair(to, from);
}

bool grothendieck_matches_elements(const SetPresheaf& p) {
  FinCategory g = grothendieck(discrete_cat_presheaf(p)).cat;
  FinCategory e = category_of_elements(p).cat;
  if (g.objects() != e.objects() || g.morphism_count() != e.morphism_count())
    return false;

  std::vector<CanonicalName> fwd;
  fwd.reserve(g.morphism_count());
  for (const auto& m : g.morphisms()) {
    if (!m.id.is_tagged("gr")) return false;
    ArrowNameParts parts = arrow_name_parts(m.id);
    fwd.push_back(
        make_arrow_name("el", parts.core.first(), parts.src, parts.tgt));
  }
  std::vector<CanonicalName> bwd;
  bwd.reserve(e.morphism_count());
  for (const auto& m : e.morphisms()) {
    if (!m.id.is_tagged("el")) return false;
    ArrowNameParts parts = arrow_name_parts(m.id);
    bwd.push_back(make_arrow_name(
        "gr",
        CanonicalName::pair(parts.core,
                            CanonicalName::tagged("id", parts.src.second())),
        parts.src, parts.tgt));
  }

  Functor to = Functor::make(g, e, g.objects(), std::move(fwd));
  Functor from = Functor::make(e, g, e.objects(), std::move(bwd));
  return validate_functor(to).ok() && validate_functor(from).ok() &&
         check_strict_inverse_pair(to, from);
}

} // namespace fincat
