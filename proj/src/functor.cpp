#include "fincat/functor.hpp"

#include "fincat/errors.hpp"

namespace fincat {

struct Functor::Data {
  FinCategory source, target;
  std::vector<CanonicalName> obj_names, mor_names;
  std::vector<int> obj_idx, mor_idx;
};

Functor Functor::make(FinCategory source, FinCategory target,
                      std::vector<CanonicalName> obj_images,
                      std::vector<CanonicalName> mor_images) {
  if (static_cast<int>(obj_images.size()) != source.object_count() ||
      static_cast<int>(mor_images.size()) != source.morphism_count())
    throw InvalidArgument("functor image counts do not match the source");
  auto d = std::make_shared<Data>();
  d->source = std::move(source);
  d->target = std::move(target);
  d->obj_idx.reserve(obj_images.size());
  d->mor_idx.reserve(mor_images.size());
  for (const auto& n : obj_images) d->obj_idx.push_back(d->target.object_index(n));
  for (const auto& n : mor_images) d->mor_idx.push_back(d->target.morphism_index(n));
  d->obj_names = std::move(obj_images);
  d->mor_names = std::move(mor_images);
  Functor f;
  f.d_ = std::move(d);
  return f;
}

Functor Functor::make_idx(FinCategory source, FinCategory target,
                          std::vector<int> obj_map, std::vector<int> mor_map) {
  if (static_cast<int>(obj_map.size()) != source.object_count() ||
      static_cast<int>(mor_map.size()) != source.morphism_count())
    throw InvalidArgument("functor image counts do not match the source");
  auto d = std::make_shared<Data>();
  d->obj_names.reserve(obj_map.size());
  d->mor_names.reserve(mor_map.size());
  for (int i : obj_map) d->obj_names.push_back(target.object(i));
  for (int i : mor_map) d->mor_names.push_back(target.morphism(i).id);
  d->source = std::move(source);
  d->target = std::move(target);
  d->obj_idx = std::move(obj_map);
  d->mor_idx = std::move(mor_map);
  Functor f;
  f.d_ = std::move(d);
  return f;
}

const FinCategory& Functor::source() const { return d_->source; }
const FinCategory& Functor::target() const { return d_->target; }
int Functor::obj_image(int i) const { return d_->obj_idx[i]; }
int Functor::mor_image(int i) const { return d_->mor_idx[i]; }
const CanonicalName& Functor::obj_image_name(int i) const { return d_->obj_names[i]; }
const CanonicalName& Functor::mor_image_name(int i) const { return d_->mor_names[i]; }

bool Functor::operator==(const Functor& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->obj_names == o.d_->obj_names && d_->mor_names == o.d_->mor_names &&
         d_->source == o.d_->source && d_->target == o.d_->target;
}

CanonicalName Functor::name() const {
  return CanonicalName::tagged(
      "fun", CanonicalName::pair(name_tuple(d_->obj_names), name_tuple(d_->mor_names)));
}

Functor identity_functor(const FinCategory& c) {
  std::vector<int> obj(c.object_count()), mor(c.morphism_count());
  for (int i = 0; i < c.object_count(); ++i) obj[i] = i;
  for (int i = 0; i < c.morphism_count(); ++i) mor[i] = i;
  return Functor::make_idx(c, c, std::move(obj), std::move(mor));
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(f.target() == g.source()))
    throw InvalidArgument("compose_functors: target of f is not source of g");
  std::vector<int> obj(f.source().object_count()), mor(f.source().morphism_count());
  for (int i = 0; i < f.source().object_count(); ++i) {
    int mid = f.obj_image(i);
    obj[i] = mid < 0 ? -1 : g.obj_image(mid);
    if (obj[i] < 0)
      throw InvalidArgument("compose_functors: unresolved object image");
  }
  for (int i = 0; i < f.source().morphism_count(); ++i) {
    int mid = f.mor_image(i);
    mor[i] = mid < 0 ? -1 : g.mor_image(mid);
    if (mor[i] < 0)
      throw InvalidArgument("compose_functors: unresolved morphism image");
  }
  return Functor::make_idx(f.source(), g.target(), std::move(obj), std::move(mor));
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport r;
  const FinCategory& c = f.source();
  const FinCategory& d = f.target();

  for (int i = 0; i < c.object_count(); ++i)
    if (f.obj_image(i) < 0)
      r.add("object-image-unresolved", {c.object(i), f.obj_image_name(i)});
  for (int i = 0; i < c.morphism_count(); ++i)
    if (f.mor_image(i) < 0)
      r.add("morphism-image-unresolved", {c.morphism(i).id, f.mor_image_name(i)});
  if (!r.ok()) return r;

  for (int i = 0; i < c.morphism_count(); ++i) {
    int m = f.mor_image(i);
    if (d.dom(m) != f.obj_image(c.dom(i)) || d.cod(m) != f.obj_image(c.cod(i)))
      r.add("endpoints-not-preserved", {c.morphism(i).id, d.morphism(m).id});
  }
  for (int a = 0; a < c.object_count(); ++a) {
    int id = c.identity(a);
    if (id < 0) continue;
    int target_id = d.identity(f.obj_image(a));
    if (target_id < 0 || f.mor_image(id) != target_id)
      r.add("identity-not-preserved", {c.object(a)});
  }
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e[1]) != c.dom(e[0])) continue; // unlawful source entry
    int gg = f.mor_image(e[0]), ff = f.mor_image(e[1]);
    int composite = d.compose(gg, ff);
    if (composite < 0 || composite != f.mor_image(e[2]))
      r.add("composition-not-preserved",
            {c.morphism(e[0]).id, c.morphism(e[1]).id},
            composite < 0 ? "image pair has no composite"
                          : "image of composite differs");
  }
  return r;
}

bool check_strict_inverse_pair(const Functor& f, const Functor& g) {
  if (!(f.source() == g.target()) || !(f.target() == g.source()))
    throw InvalidArgument("check_strict_inverse_pair: endpoints do not match");
  return compose_functors(g, f) == identity_functor(f.source()) &&
         compose_functors(f, g) == identity_functor(g.source());
}

struct NatTrans::Data {
  Functor source, target;
  std::vector<CanonicalName> comp_names;
  std::vector<int> comp_idx;
};

NatTrans NatTrans::make(Functor source, Functor target,
                        std::vector<CanonicalName> components) {
  if (static_cast<int>(components.size()) != source.source().object_count())
    throw InvalidArgument("component count does not match the base category");
  auto d = std::make_shared<Data>();
  d->comp_idx.reserve(components.size());
  for (const auto& n : components)
    d->comp_idx.push_back(source.target().morphism_index(n));
  d->source = std::move(source);
  d->target = std::move(target);
  d->comp_names = std::move(components);
  NatTrans n;
  n.d_ = std::move(d);
  return n;
}

NatTrans NatTrans::make_idx(Functor source, Functor target,
                            std::vector<int> components) {
  if (static_cast<int>(components.size()) != source.source().object_count())
    throw InvalidArgument("component count does not match the base category");
  auto d = std::make_shared<Data>();
  d->comp_names.reserve(components.size());
  for (int i : components)
    d->comp_names.push_back(source.target().morphism(i).id);
  d->source = std::move(source);
  d->target = std::move(target);
  d->comp_idx = std::move(components);
  NatTrans n;
  n.d_ = std::move(d);
  return n;
}

const Functor& NatTrans::source() const { return d_->source; }
const Functor& NatTrans::target() const { return d_->target; }
int NatTrans::component(int obj) const { return d_->comp_idx[obj]; }
const CanonicalName& NatTrans::component_name(int obj) const {
  return d_->comp_names[obj];
}

bool NatTrans::operator==(const NatTrans& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->comp_names == o.d_->comp_names && d_->source == o.d_->source &&
         d_->target == o.d_->target;
}

CanonicalName NatTrans::name() const {
  return CanonicalName::tagged(
      "nat", CanonicalName::pair(
                 name_tuple(d_->comp_names),
                 CanonicalName::pair(d_->source.name(), d_->target.name())));
}

NatTrans identity_nat(const Functor& f) {
  std::vector<int> comps(f.source().object_count());
  for (int a = 0; a < f.source().object_count(); ++a) {
    int id = f.target().identity(f.obj_image(a));
    if (id < 0) throw InvalidArgument("identity_nat: target object lacks identity");
    comps[a] = id;
  }
  return NatTrans::make_idx(f, f, std::move(comps));
}

NatTrans vertical_compose(const NatTrans& t, const NatTrans& s) {
  if (!(s.target() == t.source()))
    throw InvalidArgument("vertical_compose: target of s is not source of t");
  const FinCategory& d = s.source().target();
  std::vector<int> comps(s.source().source().object_count());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    int m = d.compose(t.component(static_cast<int>(a)), s.component(static_cast<int>(a)));
    if (m < 0)
      throw InvalidArgument("vertical_compose: components do not compose");
    comps[a] = m;
  }
  return NatTrans::make_idx(s.source(), t.target(), std::move(comps));
}

ValidationReport validate_nat_trans(const NatTrans& n) {
  ValidationReport r;
  const Functor& f = n.source();
  const Functor& g = n.target();
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    r.add("not-parallel", {});
    return r;
  }
  const FinCategory& c = f.source();
  const FinCategory& d = f.target();
  for (int a = 0; a < c.object_count(); ++a) {
    int m = n.component(a);
    if (m < 0) {
      r.add("component-unresolved", {c.object(a), n.component_name(a)});
      continue;
    }
    if (d.dom(m) != f.obj_image(a) || d.cod(m) != g.obj_image(a))
      r.add("component-endpoints", {c.object(a), d.morphism(m).id});
  }
  if (!r.ok()) return r;
  for (int m = 0; m < c.morphism_count(); ++m) {
    int a = c.dom(m), b = c.cod(m);
    int left = d.compose(g.mor_image(m), n.component(a));
    int right = d.compose(n.component(b), f.mor_image(m));
    if (left < 0 || right < 0 || left != right)
      r.add("naturality", {c.morphism(m).id},
            "G(f) o component(dom) must equal component(cod) o F(f)");
  }
  return r;
}

} // namespace fincat
