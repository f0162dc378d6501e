#include "fincat/cat_presheaf.hpp"

#include "fincat/errors.hpp"

namespace fincat {

struct CatPresheaf::Data {
  FinCategory base;
  std::vector<FinCategory> fibers;
  std::vector<Functor> transitions;
};

CatPresheaf CatPresheaf::make(FinCategory base, std::vector<FinCategory> fibers,
                              std::vector<Functor> transitions) {
  if (static_cast<int>(fibers.size()) != base.object_count() ||
      static_cast<int>(transitions.size()) != base.morphism_count())
    throw InvalidArgument("cat presheaf data does not match the base category");
  for (int m = 0; m < base.morphism_count(); ++m) {
    // contravariant: transition(f : a -> b) goes fiber(b) -> fiber(a)
    if (!(transitions[m].source() == fibers[base.cod(m)]) ||
        !(transitions[m].target() == fibers[base.dom(m)]))
      throw InvalidArgument("transition of " + base.morphism(m).id.str() +
                            " does not map fiber(cod) to fiber(dom)");
  }
  auto d = std::make_shared<Data>();
  d->base = std::move(base);
  d->fibers = std::move(fibers);
  d->transitions = std::move(transitions);
  CatPresheaf p;
  p.d_ = std::move(d);
  return p;
}

const FinCategory& CatPresheaf::base() const { return d_->base; }
const FinCategory& CatPresheaf::fiber(int obj) const { return d_->fibers[obj]; }
const Functor& CatPresheaf::transition(int mor) const { return d_->transitions[mor]; }

bool CatPresheaf::operator==(const CatPresheaf& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->base == o.d_->base && d_->fibers == o.d_->fibers &&
         d_->transitions == o.d_->transitions;
}

static bool images_resolved(const Functor& f) {
  for (int i = 0; i < f.source().object_count(); ++i)
    if (f.obj_image(i) < 0) return false;
  for (int i = 0; i < f.source().morphism_count(); ++i)
    if (f.mor_image(i) < 0) return false;
  return true;
}

ValidationReport validate_cat_presheaf(const CatPresheaf& p) {
  ValidationReport r;
  const FinCategory& c = p.base();
  for (int m = 0; m < c.morphism_count(); ++m)
    r.merge(validate_functor(p.transition(m)),
            "transition(" + c.morphism(m).id.str() + ")-");
  for (int a = 0; a < c.object_count(); ++a) {
    int id = c.identity(a);
    if (id < 0) continue;
    if (!(p.transition(id) == identity_functor(p.fiber(a))))
      r.add("identity-transition", {c.object(a), c.morphism(id).id},
            "transition of an identity must be the identity functor");
  }
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e[1]) != c.dom(e[0])) continue;
    // unresolved images are already violations above; composing would throw
    if (!images_resolved(p.transition(e[0])) ||
        !images_resolved(p.transition(e[1])))
      continue;
    // transition(g o f) = transition(f) o transition(g), strictly
    if (!(p.transition(e[2]) ==
          compose_functors(p.transition(e[1]), p.transition(e[0]))))
      r.add("transition-composition",
            {c.morphism(e[0]).id, c.morphism(e[1]).id, c.morphism(e[2]).id});
  }
  return r;
}

CatPresheaf constant_cat_presheaf(const FinCategory& c, const FinCategory& d) {
  std::vector<FinCategory> fibers(c.object_count(), d);
  std::vector<Functor> transitions(c.morphism_count(), identity_functor(d));
  return CatPresheaf::make(c, std::move(fibers), std::move(transitions));
}

CatPresheaf discrete_cat_presheaf(const SetPresheaf& p) {
  const FinCategory& c = p.base();

  auto discrete = [](const FinSet& s) {
    std::vector<CanonicalName> objects = s.elements();
    std::vector<MorRecord> mors;
    std::vector<std::pair<CanonicalName, CanonicalName>> ids;
    std::vector<FinCategory::ComposeEntry> comp;
    for (const auto& u : objects) {
      CanonicalName id = CanonicalName::tagged("id", u);
      mors.push_back({id, u, u});
      ids.emplace_back(u, id);
      comp.push_back({id, id, id});
    }
    return FinCategory::make(std::move(objects), std::move(mors),
                             std::move(ids), std::move(comp));
  };

  std::vector<FinCategory> fibers;
  fibers.reserve(c.object_count());
  for (int a = 0; a < c.object_count(); ++a) fibers.push_back(discrete(p.value(a)));

  std::vector<Functor> transitions;
  transitions.reserve(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m) {
    const SetFunction& act = p.action(m);
    std::vector<CanonicalName> obj_images, mor_images;
    for (int i = 0; i < act.source().size(); ++i) {
      obj_images.push_back(act.image_name(i));
      mor_images.push_back(CanonicalName::tagged("id", act.image_name(i)));
    }
    transitions.push_back(Functor::make(fibers[c.cod(m)], fibers[c.dom(m)],
                                        std::move(obj_images),
                                        std::move(mor_images)));
  }
  return CatPresheaf::make(c, std::move(fibers), std::move(transitions));
}

CanonicalName cat_family_name(const CatFamily& fam) {
  return name_tuple(fam.values);
}

} // namespace fincat
