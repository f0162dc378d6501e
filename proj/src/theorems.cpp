#include "fincat/theorems.hpp"

#include <utility>

#include "fincat/errors.hpp"

namespace fincat {

namespace {

CanonicalName identity_id(const FinCategory& k, int obj) {
  int m = k.identity(obj);
  if (m < 0)
    throw InvalidArgument("missing identity at " + k.object(obj).str());
  return k.morphism(m).id;
}

} // namespace

bool TheoremReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

void TheoremReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void TheoremReport::add(std::string name, const ValidationReport& r) {
  checks.push_back({std::move(name), r.ok(), r.ok() ? "" : r.summary()});
}

std::string TheoremReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.ok ? "ok   " : "FAIL ";
    out += c.name;
    if (!c.ok && !c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += '\n';
  }
  return out;
}

ChoiceEquivalence choice_equivalence(const FinCategory& c, const FinCategory& d,
                                     const SetPresheaf& r, const Bounds& b) {
  ChoiceEquivalence out;
  out.pairs = product_category_pi(c, d, r, b);
  out.elements = category_of_elements(pi_presheaf(c, d, r, b)).cat;

  // (family of (x_a, u_a), F) -> (F, tuple of u_a)
  auto strip = [](const CanonicalName& o) {
    std::vector<CanonicalName> us;
    for (const auto& v : tuple_parts(o.first())) us.push_back(v.second());
    return CanonicalName::pair(o.second(), name_tuple(us));
  };
  // (F, tuple of u_a) -> (family of (F(a), u_a), F); object images of F
  // are the first half of its name
  auto dress = [](const CanonicalName& o) {
    std::vector<CanonicalName> xs = tuple_parts(o.first().inner().first());
    std::vector<CanonicalName> us = tuple_parts(o.second());
    if (xs.size() != us.size())
      throw InvalidArgument("element tuple does not match the functor");
    std::vector<CanonicalName> vals;
    vals.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      vals.push_back(CanonicalName::pair(xs[i], us[i]));
    return CanonicalName::pair(name_tuple(vals), o.first());
  };

  std::vector<CanonicalName> fobj, fmor, bobj, bmor;
  fobj.reserve(out.pairs.object_count());
  for (const auto& o : out.pairs.objects()) fobj.push_back(strip(o));
  fmor.reserve(out.pairs.morphism_count());
  for (const auto& m : out.pairs.morphisms()) {
    ArrowNameParts parts = arrow_name_parts(m.id);
    fmor.push_back(
        make_arrow_name("el", parts.core, strip(parts.src), strip(parts.tgt)));
  }
  bobj.reserve(out.elements.object_count());
  for (const auto& o : out.elements.objects()) bobj.push_back(dress(o));
  bmor.reserve(out.elements.morphism_count());
  for (const auto& m : out.elements.morphisms()) {
    ArrowNameParts parts = arrow_name_parts(m.id);
    bmor.push_back(
        make_arrow_name("pi", parts.core, dress(parts.src), dress(parts.tgt)));
  }

  out.to_elements = Functor::make(out.pairs, out.elements, std::move(fobj),
                                  std::move(fmor));
  out.to_pairs = Functor::make(out.elements, out.pairs, std::move(bobj),
                               std::move(bmor));
  return out;
}

TheoremReport check_choice(const FinCategory& c, const FinCategory& d,
                           const SetPresheaf& r, const Bounds& b) {
  TheoremReport t;
  t.add("fiberwise-elements-strict", validate_cat_presheaf(sigma_dr(c, d, r)));
  ChoiceEquivalence eq = choice_equivalence(c, d, r, b);
  t.add("pair-category-lawful", validate_category(eq.pairs));
  t.add("element-category-lawful", validate_category(eq.elements));
  ValidationReport fr = validate_functor(eq.to_elements);
  ValidationReport br = validate_functor(eq.to_pairs);
  t.add("forward-functor-lawful", fr);
  t.add("backward-functor-lawful", br);
  // composing unlawful witnesses would throw on unresolved images
  if (fr.ok() && br.ok())
    t.add("strictly-inverse",
          check_strict_inverse_pair(eq.to_elements, eq.to_pairs));
  else
    t.add("strictly-inverse", false, "not attempted: witness functors unlawful");
  t.add("object-counts-match",
        eq.pairs.object_count() == eq.elements.object_count(),
        std::to_string(eq.pairs.object_count()) + " vs " +
            std::to_string(eq.elements.object_count()));
  return t;
}

CatPresheaf q_restriction(const CatPresheaf& p, const CatPresheaf& q,
                          const CanonicalName& a) {
  int ai = p.base().object_index(a);
  if (ai < 0) throw InvalidArgument("unknown object " + a.str());
  const FinCategory& fib = p.fiber(ai);
  const FinCategory& tot = q.base();
  CanonicalName ida = identity_id(p.base(), ai);

  std::vector<FinCategory> fibers;
  fibers.reserve(fib.object_count());
  for (int x = 0; x < fib.object_count(); ++x) {
    int to = tot.object_index(CanonicalName::pair(a, fib.object(x)));
    if (to < 0)
      throw InvalidArgument("presheaf base is not the expected total category");
    fibers.push_back(q.fiber(to));
  }

  std::vector<Functor> transitions;
  transitions.reserve(fib.morphism_count());
  for (int j = 0; j < fib.morphism_count(); ++j) {
    CanonicalName over_id = make_arrow_name(
        "gr", CanonicalName::pair(ida, fib.morphism(j).id),
        CanonicalName::pair(a, fib.object(fib.dom(j))),
        CanonicalName::pair(a, fib.object(fib.cod(j))));
    int tm = tot.morphism_index(over_id);
    if (tm < 0)
      throw InvalidArgument("presheaf base is not the expected total category");
    transitions.push_back(q.transition(tm));
  }
  return CatPresheaf::make(fib, std::move(fibers), std::move(transitions));
}

CatPresheaf sigma_pq(const CatPresheaf& p, const CatPresheaf& q) {
  const FinCategory& c = p.base();
  const FinCategory& tot = q.base();

  std::vector<FinCategory> fibers;
  fibers.reserve(c.object_count());
  for (int a = 0; a < c.object_count(); ++a)
    fibers.push_back(grothendieck(q_restriction(p, q, c.object(a))).cat);

  std::vector<Functor> transitions;
  transitions.reserve(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    int a = c.dom(f), bb = c.cod(f);
    const FinCategory& src = fibers[bb];
    const FinCategory& tgt = fibers[a];
    const Functor& tf = p.transition(f);
    const FinCategory& pa = p.fiber(a);
    const FinCategory& pb = p.fiber(bb);

    // transition of q at the designated lift of f into (b, y)
    auto lift_transition = [&](const CanonicalName& y) -> const Functor& {
      int yi = pb.object_index(y);
      int xi = yi < 0 ? -1 : tf.obj_image(yi);
      if (xi < 0)
        throw InvalidArgument("transition image unresolved at " + y.str());
      CanonicalName chi = make_arrow_name(
          "gr", CanonicalName::pair(c.morphism(f).id, identity_id(pa, xi)),
          CanonicalName::pair(c.object(a), pa.object(xi)),
          CanonicalName::pair(c.object(bb), y));
      int tm = tot.morphism_index(chi);
      if (tm < 0)
        throw InvalidArgument("presheaf base is not the expected total category");
      return q.transition(tm);
    };

    // (y, t) -> (transition(f)(y), transition(lift of f)(t))
    auto map_obj = [&](const CanonicalName& o) {
      const Functor& qt = lift_transition(o.first());
      int ti = qt.source().object_index(o.second());
      if (ti < 0)
        throw InvalidArgument("object not in the expected fiber: " + o.str());
      int yi = pb.object_index(o.first());
      return CanonicalName::pair(tf.obj_image_name(yi), qt.obj_image_name(ti));
    };

    std::vector<CanonicalName> oi, mi;
    oi.reserve(src.object_count());
    for (const auto& o : src.objects()) oi.push_back(map_obj(o));
    mi.reserve(src.morphism_count());
    for (const auto& m : src.morphisms()) {
      ArrowNameParts parts = arrow_name_parts(m.id);
      int ji = pb.morphism_index(parts.core.first());
      if (ji < 0)
        throw InvalidArgument("morphism not in the expected fiber: " +
                              parts.core.first().str());
      const Functor& qt = lift_transition(parts.src.first());
      int mui = qt.source().morphism_index(parts.core.second());
      if (mui < 0)
        throw InvalidArgument("morphism not in the expected fiber: " +
                              parts.core.second().str());
      mi.push_back(make_arrow_name(
          "gr",
          CanonicalName::pair(tf.mor_image_name(ji), qt.mor_image_name(mui)),
          map_obj(parts.src), map_obj(parts.tgt)));
    }
    transitions.push_back(Functor::make(src, tgt, std::move(oi), std::move(mi)));
  }
  return CatPresheaf::make(c, std::move(fibers), std::move(transitions));
}

std::pair<Functor, Functor> assoc_witness(const CatPresheaf& p,
                                          const CatPresheaf& q) {
  FinCategory lhs = grothendieck(q).cat;
  CatPresheaf spq = sigma_pq(p, q);
  FinCategory rhs = grothendieck(spq).cat;
  const FinCategory& c = p.base();

  auto fwd_obj = [](const CanonicalName& o) {
    return CanonicalName::pair(
        o.first().first(),
        CanonicalName::pair(o.first().second(), o.second()));
  };
  auto bwd_obj = [](const CanonicalName& o) {
    return CanonicalName::pair(
        CanonicalName::pair(o.first(), o.second().first()),
        o.second().second());
  };

  std::vector<CanonicalName> fobj, bobj;
  fobj.reserve(lhs.object_count());
  for (const auto& o : lhs.objects()) fobj.push_back(fwd_obj(o));
  bobj.reserve(rhs.object_count());
  for (const auto& o : rhs.objects()) bobj.push_back(bwd_obj(o));

  // (lift over (f,j), mu) : ((a,x),t1) -> ((b,y),t2) goes to
  // (f, (j, mu)) : (a,(x,t1)) -> (b,(y,t2)); the inner lift's target is
  // read off the combined presheaf's transition of f.
  std::vector<CanonicalName> fmor;
  fmor.reserve(lhs.morphism_count());
  for (const auto& m : lhs.morphisms()) {
    ArrowNameParts gp = arrow_name_parts(m.id);
    ArrowNameParts bp = arrow_name_parts(gp.core.first());
    CanonicalName f = bp.core.first(), j = bp.core.second();
    CanonicalName mu = gp.core.second();
    int fi = c.morphism_index(f);
    if (fi < 0) throw InvalidArgument("unknown base morphism " + f.str());
    const Functor& tr = spq.transition(fi);
    int oi = tr.source().object_index(
        CanonicalName::pair(gp.tgt.first().second(), gp.tgt.second()));
    if (oi < 0)
      throw InvalidArgument("object not in the expected fiber: " +
                            gp.tgt.second().str());
    CanonicalName inner = make_arrow_name(
        "gr", CanonicalName::pair(j, mu),
        CanonicalName::pair(gp.src.first().second(), gp.src.second()),
        tr.obj_image_name(oi));
    fmor.push_back(make_arrow_name("gr", CanonicalName::pair(f, inner),
                                   fwd_obj(gp.src), fwd_obj(gp.tgt)));
  }

  std::vector<CanonicalName> bmor;
  bmor.reserve(rhs.morphism_count());
  for (const auto& m : rhs.morphisms()) {
    ArrowNameParts gp = arrow_name_parts(m.id);
    ArrowNameParts ip = arrow_name_parts(gp.core.second());
    CanonicalName f = gp.core.first();
    CanonicalName j = ip.core.first(), mu = ip.core.second();
    CanonicalName base_mor = make_arrow_name(
        "gr", CanonicalName::pair(f, j),
        CanonicalName::pair(gp.src.first(), gp.src.second().first()),
        CanonicalName::pair(gp.tgt.first(), gp.tgt.second().first()));
    bmor.push_back(make_arrow_name("gr", CanonicalName::pair(base_mor, mu),
                                   bwd_obj(gp.src), bwd_obj(gp.tgt)));
  }

  return {Functor::make(lhs, rhs, std::move(fobj), std::move(fmor)),
          Functor::make(rhs, lhs, std::move(bobj), std::move(bmor))};
}

TheoremReport check_assoc(const CatPresheaf& p, const CatPresheaf& q) {
  TheoremReport t;
  t.add("inner-presheaf-strict", validate_cat_presheaf(p));
  t.add("outer-presheaf-strict", validate_cat_presheaf(q));
  t.add("combined-presheaf-strict", validate_cat_presheaf(sigma_pq(p, q)));
  auto [fwd, bwd] = assoc_witness(p, q);
  t.add("iterated-total-lawful", validate_category(fwd.source()));
  t.add("combined-total-lawful", validate_category(fwd.target()));
  ValidationReport fr = validate_functor(fwd);
  ValidationReport br = validate_functor(bwd);
  t.add("forward-functor-lawful", fr);
  t.add("backward-functor-lawful", br);
  if (fr.ok() && br.ok())
    t.add("strictly-inverse", check_strict_inverse_pair(fwd, bwd));
  else
    t.add("strictly-inverse", false, "not attempted: witness functors unlawful");
  return t;
}

TheoremReport check_commutativity(const FinCategory& c, const FinCategory& d,
                                  const SetPresheaf& r) {
  TheoremReport t;
  t.add("grouped-by-first-strict", validate_cat_presheaf(sigma_dr(c, d, r)));
  t.add("grouped-by-second-strict", validate_cat_presheaf(sigma_cr(c, d, r)));
  auto [fwd, bwd] = commutativity_witness(c, d, r);
  t.add("first-total-lawful", validate_category(fwd.source()));
  t.add("second-total-lawful", validate_category(fwd.target()));
  ValidationReport fr = validate_functor(fwd);
  ValidationReport br = validate_functor(bwd);
  t.add("forward-functor-lawful", fr);
  t.add("backward-functor-lawful", br);
  if (fr.ok() && br.ok())
    t.add("strictly-inverse", check_strict_inverse_pair(fwd, bwd));
  else
    t.add("strictly-inverse", false, "not attempted: witness functors unlawful");

  std::size_t elems = 0;
  const FinCategory& prod = r.base();
  for (int o = 0; o < prod.object_count(); ++o)
    elems += static_cast<std::size_t>(r.value(o).size());
  bool counts =
      static_cast<std::size_t>(fwd.source().object_count()) == elems &&
      static_cast<std::size_t>(fwd.target().object_count()) == elems;
  t.add("object-count-is-element-count", counts,
        std::to_string(fwd.source().object_count()) + " and " +
            std::to_string(fwd.target().object_count()) + " vs " +
            std::to_string(elems));
  return t;
}

} // namespace fincat
