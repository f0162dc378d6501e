#include "fincat/enumerate.hpp"

#include <algorithm>

#include "fincat/errors.hpp"

namespace fincat {

namespace {

void check_enumeration_bound(const FinCategory& c, const Bounds& b,
                             const char* which) {
  if (static_cast<std::size_t>(c.object_count()) > b.max_objects ||
      static_cast<std::size_t>(c.morphism_count()) > b.max_morphisms)
    throw BoundExceeded(std::string("functor enumeration bound exceeded by ") +
                        which + " category (" +
                        std::to_string(c.object_count()) + " objects, " +
                        std::to_string(c.morphism_count()) + " morphisms)");
}

struct FunctorSearch {
  const FinCategory& c;
  const FinCategory& d;
  std::vector<int> obj_map, mor_map;
  std::vector<Functor> out;

  // composition entries of c restricted to lawful pairs
  std::vector<std::array<int, 3>> entries;

  FunctorSearch(const FinCategory& c_, const FinCategory& d_) : c(c_), d(d_) {
    obj_map.assign(c.object_count(), -1);
    mor_map.assign(c.morphism_count(), -1);
    for (const auto& e : c.compose_entries())
      if (c.cod(e[1]) == c.dom(e[0])) entries.push_back(e);
  }

  bool entries_consistent(int changed) const {
    for (const auto& e : entries) {
      if (e[0] != changed && e[1] != changed && e[2] != changed) continue;
      int g = mor_map[e[0]], f = mor_map[e[1]], h = mor_map[e[2]];
      if (g < 0 || f < 0 || h < 0) continue;
      if (d.compose(g, f) != h) return false;
    }
    return true;
  }

  void assign_morphisms(int m) {
    if (m == c.morphism_count()) {
      out.push_back(Functor::make_idx(c, d, obj_map, mor_map));
      return;
    }
    int da = obj_map[c.dom(m)], db = obj_map[c.cod(m)];
    if (c.is_identity(m)) {
      int id = d.identity(da);
      if (id < 0) return;
      mor_map[m] = id;
      if (entries_consistent(m)) assign_morphisms(m + 1);
      mor_map[m] = -1;
      return;
    }
    for (int cand : d.hom(da, db)) {
      mor_map[m] = cand;
      if (entries_consistent(m)) assign_morphisms(m + 1);
    }
    mor_map[m] = -1;
  }

  void assign_objects(int a) {
    if (a == c.object_count()) {
      assign_morphisms(0);
      return;
    }
    for (int img = 0; img < d.object_count(); ++img) {
      obj_map[a] = img;
      bool viable = true;
      // a morphism whose endpoints are both placed needs a nonempty hom set
      for (int m = 0; m < c.morphism_count() && viable; ++m) {
        int x = obj_map[c.dom(m)], y = obj_map[c.cod(m)];
        if (x >= 0 && y >= 0 && d.hom(x, y).empty()) viable = false;
      }
      if (viable) assign_objects(a + 1);
    }
    obj_map[a] = -1;
  }
};

} // namespace

std::vector<Functor> enumerate_functors(const FinCategory& c,
                                        const FinCategory& d, const Bounds& b) {
  check_enumeration_bound(c, b, "source");
  check_enumeration_bound(d, b, "target");
  FunctorSearch search(c, d);
  search.assign_objects(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const Functor& x, const Functor& y) { return x.name() < y.name(); });
  return std::move(search.out);
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw InvalidArgument("enumerate_nat_trans: functors are not parallel");
  const FinCategory& c = f.source();
  const FinCategory& d = f.target();
  std::vector<int> comps(c.object_count(), -1);
  std::vector<NatTrans> out;

  auto natural_so_far = [&](int placed) {
    for (int m = 0; m < c.morphism_count(); ++m) {
      int a = c.dom(m), bb = c.cod(m);
      if (a != placed && bb != placed) continue;
      if (comps[a] < 0 || comps[bb] < 0) continue;
      int left = d.compose(g.mor_image(m), comps[a]);
      int right = d.compose(comps[bb], f.mor_image(m));
      if (left < 0 || right < 0 || left != right) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int a) -> void {
    if (a == c.object_count()) {
      out.push_back(NatTrans::make_idx(f, g, comps));
      return;
    }
    for (int cand : d.hom(f.obj_image(a), g.obj_image(a))) {
      comps[a] = cand;
      if (natural_so_far(a)) self(self, a + 1);
    }
    comps[a] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const NatTrans& x, const NatTrans& y) {
    return x.name() < y.name();
  });
  return out;
}

FunctorCategory functor_category(const FinCategory& c, const FinCategory& d,
                                 const Bounds& b) {
  FunctorCategory result;
  result.functors = enumerate_functors(c, d, b);
  const auto& fns = result.functors;
  const int n = static_cast<int>(fns.size());

  std::vector<CanonicalName> objects;
  objects.reserve(n);
  for (const auto& fn : fns) objects.push_back(fn.name());

  // nats[i][j]: transformations F_i => F_j
  std::vector<std::vector<std::vector<NatTrans>>> nats(n);
  std::vector<MorRecord> mors;
  for (int i = 0; i < n; ++i) {
    nats[i].resize(n);
    for (int j = 0; j < n; ++j) {
      nats[i][j] = enumerate_nat_trans(fns[i], fns[j]);
      for (const auto& t : nats[i][j]) {
        mors.push_back({t.name(), objects[i], objects[j]});
        result.transformations.push_back(t);
      }
    }
  }

  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int i = 0; i < n; ++i)
    ids.emplace_back(objects[i], identity_nat(fns[i]).name());

  std::vector<FinCategory::ComposeEntry> comp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& s : nats[i][j])
        for (int k = 0; k < n; ++k)
          for (const auto& t : nats[j][k])
            comp.push_back({t.name(), s.name(), vertical_compose(t, s).name()});

  result.cat = FinCategory::make(std::move(objects), std::move(mors),
                                 std::move(ids), std::move(comp));
  std::sort(result.transformations.begin(), result.transformations.end(),
            [](const NatTrans& x, const NatTrans& y) { return x.name() < y.name(); });
  return result;
}

} // namespace fincat
