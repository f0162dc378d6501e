#include "fincat/set_presheaf.hpp"

#include <algorithm>
#include <map>

#include "fincat/errors.hpp"

namespace fincat {

struct FinSet::Data {
  std::vector<CanonicalName> elements;
  std::map<CanonicalName, int> index;
};

FinSet::FinSet() {
  static const auto empty = std::make_shared<const Data>();
  d_ = empty;
}

FinSet FinSet::make(std::vector<CanonicalName> elements) {
  auto d = std::make_shared<Data>();
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i - 1] == elements[i])
      throw InvalidArgument("duplicate set element: " + elements[i].str());
  d->elements = std::move(elements);
  for (int i = 0; i < static_cast<int>(d->elements.size()); ++i)
    d->index.emplace(d->elements[i], i);
  FinSet s;
  s.d_ = std::move(d);
  return s;
}

int FinSet::size() const { return static_cast<int>(d_->elements.size()); }
const CanonicalName& FinSet::element(int i) const { return d_->elements[i]; }
const std::vector<CanonicalName>& FinSet::elements() const { return d_->elements; }

int FinSet::index_of(const CanonicalName& n) const {
  auto it = d_->index.find(n);
  return it == d_->index.end() ? -1 : it->second;
}

bool FinSet::operator==(const FinSet& o) const {
  return d_ == o.d_ || d_->elements == o.d_->elements;
}

struct SetFunction::Data {
  FinSet source, target;
  std::vector<CanonicalName> images;
  std::vector<int> idx;
};

SetFunction SetFunction::make(FinSet source, FinSet target,
                              std::vector<CanonicalName> images) {
  if (static_cast<int>(images.size()) != source.size())
    throw InvalidArgument("set function image count does not match its source");
  auto d = std::make_shared<Data>();
  d->idx.reserve(images.size());
  for (const auto& n : images) d->idx.push_back(target.index_of(n));
  d->source = std::move(source);
  d->target = std::move(target);
  d->images = std::move(images);
  SetFunction f;
  f.d_ = std::move(d);
  return f;
}

SetFunction SetFunction::identity(const FinSet& s) {
  return make(s, s, s.elements());
}

const FinSet& SetFunction::source() const { return d_->source; }
const FinSet& SetFunction::target() const { return d_->target; }
int SetFunction::image(int i) const { return d_->idx[i]; }
const CanonicalName& SetFunction::image_name(int i) const { return d_->images[i]; }

bool SetFunction::operator==(const SetFunction& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->images == o.d_->images && d_->source == o.d_->source &&
         d_->target == o.d_->target;
}

SetFunction compose_set_functions(const SetFunction& h, const SetFunction& g) {
  if (!(g.target() == h.source()))
    throw InvalidArgument("compose_set_functions: target of g is not source of h");
  std::vector<CanonicalName> images;
  images.reserve(g.source().size());
  for (int i = 0; i < g.source().size(); ++i) {
    int mid = g.image(i);
    if (mid < 0)
      throw InvalidArgument("compose_set_functions: unresolved image " +
                            g.image_name(i).str());
    images.push_back(h.image_name(mid));
  }
  return SetFunction::make(g.source(), h.target(), std::move(images));
}

ValidationReport validate_set_function(const SetFunction& f) {
  ValidationReport r;
  for (int i = 0; i < f.source().size(); ++i)
    if (f.image(i) < 0)
      r.add("image-outside-target", {f.source().element(i), f.image_name(i)});
  return r;
}

struct SetPresheaf::Data {
  FinCategory base;
  std::vector<FinSet> values;
  std::vector<SetFunction> actions;
};

SetPresheaf SetPresheaf::make(FinCategory base, std::vector<FinSet> values,
                              std::vector<SetFunction> actions) {
  if (static_cast<int>(values.size()) != base.object_count() ||
      static_cast<int>(actions.size()) != base.morphism_count())
    throw InvalidArgument("presheaf data does not match the base category");
  for (int m = 0; m < base.morphism_count(); ++m) {
    // contravariant: action(f : a -> b) maps value(b) to value(a)
    if (!(actions[m].source() == values[base.cod(m)]) ||
        !(actions[m].target() == values[base.dom(m)]))
      throw InvalidArgument("action of " + base.morphism(m).id.str() +
                            " does not map value(cod) to value(dom)");
  }
  auto d = std::make_shared<Data>();
  d->base = std::move(base);
  d->values = std::move(values);
  d->actions = std::move(actions);
  SetPresheaf p;
  p.d_ = std::move(d);
  return p;
}

const FinCategory& SetPresheaf::base() const { return d_->base; }
const FinSet& SetPresheaf::value(int obj) const { return d_->values[obj]; }
const SetFunction& SetPresheaf::action(int mor) const { return d_->actions[mor]; }

bool SetPresheaf::operator==(const SetPresheaf& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->base == o.d_->base && d_->values == o.d_->values &&
         d_->actions == o.d_->actions;
}

ValidationReport validate_set_presheaf(const SetPresheaf& p) {
  ValidationReport r;
  const FinCategory& c = p.base();
  for (int m = 0; m < c.morphism_count(); ++m) {
    ValidationReport fr = validate_set_function(p.action(m));
    for (auto& v : fr.violations) {
      v.names.insert(v.names.begin(), c.morphism(m).id);
      r.violations.push_back(std::move(v));
    }
  }
  for (int a = 0; a < c.object_count(); ++a) {
    int id = c.identity(a);
    if (id < 0) continue;
    const SetFunction& act = p.action(id);
    for (int i = 0; i < act.source().size(); ++i)
      if (!(act.image_name(i) == act.source().element(i))) {
        r.add("identity-action", {c.object(a), c.morphism(id).id},
              "action of an identity morphism must be the identity function");
        break;
      }
  }
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e[1]) != c.dom(e[0])) continue;
    // action(g o f) = action(f) o action(g)
    const SetFunction& ag = p.action(e[0]);
    const SetFunction& af = p.action(e[1]);
    const SetFunction& ah = p.action(e[2]);
    for (int i = 0; i < ag.source().size(); ++i) {
      int mid = ag.image(i);
      if (mid < 0) continue; // already reported
      if (!(af.image_name(mid) == ah.image_name(i))) {
        r.add("action-composition",
              {c.morphism(e[0]).id, c.morphism(e[1]).id, ag.source().element(i)},
              "action of the composite disagrees with the composite of actions");
        break;
      }
    }
  }
  return r;
}

SetPresheaf constant_presheaf(const FinCategory& base, const FinSet& s) {
  std::vector<FinSet> values(base.object_count(), s);
  std::vector<SetFunction> actions(base.morphism_count(), SetFunction::identity(s));
  return SetPresheaf::make(base, std::move(values), std::move(actions));
}

struct PshNatTrans::Data {
  SetPresheaf source, target;
  std::vector<SetFunction> components;
};

PshNatTrans PshNatTrans::make(SetPresheaf source, SetPresheaf target,
                              std::vector<SetFunction> components) {
  if (static_cast<int>(components.size()) != source.base().object_count())
    throw InvalidArgument("presheaf map component count does not match the base");
  auto d = std::make_shared<Data>();
  d->source = std::move(source);
  d->target = std::move(target);
  d->components = std::move(components);
  PshNatTrans n;
  n.d_ = std::move(d);
  return n;
}

const SetPresheaf& PshNatTrans::source() const { return d_->source; }
const SetPresheaf& PshNatTrans::target() const { return d_->target; }
const SetFunction& PshNatTrans::component(int obj) const {
  return d_->components[obj];
}

PshNatTrans identity_psh_nat(const SetPresheaf& p) {
  std::vector<SetFunction> comps;
  comps.reserve(p.base().object_count());
  for (int a = 0; a < p.base().object_count(); ++a)
    comps.push_back(SetFunction::identity(p.value(a)));
  return PshNatTrans::make(p, p, std::move(comps));
}

PshNatTrans compose_psh_nat(const PshNatTrans& t, const PshNatTrans& s) {
  if (!(s.target() == t.source()))
    throw InvalidArgument("compose_psh_nat: target of s is not source of t");
  std::vector<SetFunction> comps;
  comps.reserve(s.source().base().object_count());
  for (int a = 0; a < s.source().base().object_count(); ++a)
    comps.push_back(compose_set_functions(t.component(a), s.component(a)));
  return PshNatTrans::make(s.source(), t.target(), std::move(comps));
}

ValidationReport validate_psh_nat(const PshNatTrans& n) {
  ValidationReport r;
  if (!(n.source().base() == n.target().base())) {
    r.add("base-mismatch", {});
    return r;
  }
  const FinCategory& c = n.source().base();
  for (int a = 0; a < c.object_count(); ++a) {
    const SetFunction& comp = n.component(a);
    if (!(comp.source() == n.source().value(a)) ||
        !(comp.target() == n.target().value(a)))
      r.add("component-shape", {c.object(a)});
    r.merge(validate_set_function(comp), "component-");
  }
  if (!r.ok()) return r;
  for (int m = 0; m < c.morphism_count(); ++m) {
    // component(a) o p_action(f) = q_action(f) o component(b) on value_p(b)
    int a = c.dom(m), b = c.cod(m);
    const SetFunction& pf = n.source().action(m);
    const SetFunction& qf = n.target().action(m);
    for (int i = 0; i < pf.source().size(); ++i) {
      int pi = pf.image(i);
      int qi = n.component(b).image(i);
      if (pi < 0 || qi < 0) continue;
      if (!(n.component(a).image_name(pi) == qf.image_name(qi))) {
        r.add("naturality", {c.morphism(m).id, pf.source().element(i)});
        break;
      }
    }
  }
  return r;
}

} // namespace fincat
