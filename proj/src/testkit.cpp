#include "fincat/testkit.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "fincat/enumerate.hpp"
#include "fincat/errors.hpp"

namespace fincat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

std::uint64_t Rng::next() { return eng_(); }

std::size_t Rng::below(std::size_t n) {
  if (n <= 1) return 0;
  std::uint64_t limit = ~0ull - ~0ull % n;
  for (;;) {
    std::uint64_t v = eng_();
    if (v < limit) return static_cast<std::size_t>(v % n);
  }
}

bool Rng::chance(std::size_t num, std::size_t den) {
  return den != 0 && below(den) < num;
}

Rng Rng::split(std::uint64_t salt) const {
  return Rng(splitmix64(seed_ ^ splitmix64(salt)));
}

namespace {

CanonicalName obj_name(int i) {
  return CanonicalName::atom("a" + std::to_string(i));
}
CanonicalName obj_identity(int i) {
  return CanonicalName::atom("1_a" + std::to_string(i));
}

FinCategory terminal_category() {
  return FinCategory::make(
      {obj_name(0)}, {{obj_identity(0), obj_name(0), obj_name(0)}},
      {{obj_name(0), obj_identity(0)}},
      {{obj_identity(0), obj_identity(0), obj_identity(0)}});
}

// free category on a small acyclic multigraph; morphisms are edge paths
FinCategory free_path_category(Rng& rng, const GenOptions& o) {
  int n = 1 + static_cast<int>(rng.below(o.max_objects));
  struct Edge {
    int src, tgt;
  };
  std::vector<Edge> edges;

  auto collect_paths = [&](std::size_t cap, bool* over) {
    std::vector<std::vector<int>> out;
    *over = false;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int node) -> bool {
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].src != node) continue;
        if (out.size() == cap) {
          *over = true;
          return false;
        }
        cur.push_back(e);
        out.push_back(cur);
        bool more = self(self, edges[e].tgt);
        cur.pop_back();
        if (!more) return false;
      }
      return true;
    };
    for (int a = 0; a < n && !*over; ++a) dfs(dfs, a);
    return out;
  };

  std::size_t want = rng.below(o.max_extra_morphisms + 1);
  for (std::size_t t = 0; t < want && n >= 2; ++t) {
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    edges.push_back({i, j});
    bool over = false;
    collect_paths(o.max_extra_morphisms, &over);
    if (over) {
      edges.pop_back();
      break;
    }
  }
  bool over = false;
  auto paths = collect_paths(o.max_extra_morphisms, &over);

  // morphism k: edge sequence (empty for identities) with endpoints
  std::vector<std::vector<int>> seqs;
  std::vector<int> srcs, tgts;
  for (int a = 0; a < n; ++a) {
    seqs.push_back({});
    srcs.push_back(a);
    tgts.push_back(a);
  }
  for (const auto& p : paths) {
    seqs.push_back(p);
    srcs.push_back(edges[p.front()].src);
    tgts.push_back(edges[p.back()].tgt);
  }
  auto mor_name = [&](int k) {
    if (seqs[k].empty()) return obj_identity(srcs[k]);
    std::string s = "e" + std::to_string(seqs[k][0]);
    for (std::size_t i = 1; i < seqs[k].size(); ++i)
      s += ".e" + std::to_string(seqs[k][i]);
    return CanonicalName::atom(s);
  };

  std::vector<CanonicalName> objects;
  std::vector<MorRecord> mors;
  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  for (int a = 0; a < n; ++a) {
    objects.push_back(obj_name(a));
    ids.emplace_back(obj_name(a), obj_identity(a));
  }
  for (std::size_t k = 0; k < seqs.size(); ++k)
    mors.push_back({mor_name(static_cast<int>(k)), obj_name(srcs[k]),
                    obj_name(tgts[k])});

  std::vector<FinCategory::ComposeEntry> comp;
  auto seq_name = [&](const std::vector<int>& s, int at) {
    if (s.empty()) return obj_identity(at);
    std::string nm = "e" + std::to_string(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) nm += ".e" + std::to_string(s[i]);
    return CanonicalName::atom(nm);
  };
  for (std::size_t k1 = 0; k1 < seqs.size(); ++k1)
    for (std::size_t k2 = 0; k2 < seqs.size(); ++k2) {
      if (tgts[k1] != srcs[k2]) continue;
      std::vector<int> cat = seqs[k1];
      cat.insert(cat.end(), seqs[k2].begin(), seqs[k2].end());
      comp.push_back({mor_name(static_cast<int>(k2)),
                      mor_name(static_cast<int>(k1)), seq_name(cat, srcs[k1])});
    }
  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

FinCategory preorder_category(Rng& rng, const GenOptions& o) {
  int n = 1 + static_cast<int>(rng.below(o.max_objects));
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;

  auto closed = [&](std::vector<std::vector<bool>> r) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
  };
  auto offdiag = [&](const std::vector<std::vector<bool>>& r) {
    std::size_t c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && r[i][j]) ++c;
    return c;
  };

  std::size_t want = rng.below(o.max_extra_morphisms + 1);
  for (std::size_t t = 0; t < want && n >= 2; ++t) {
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n));
    if (i == j || rel[i][j]) continue;
    auto cand = rel;
    cand[i][j] = true;
    cand = closed(cand);
    if (offdiag(cand) > o.max_extra_morphisms) break;
    rel = std::move(cand);
  }

  auto le = [&](int i, int j) {
    return CanonicalName::atom("le_" + std::to_string(i) + "_" +
                               std::to_string(j));
  };
  std::vector<CanonicalName> objects;
  std::vector<MorRecord> mors;
  std::vector<std::pair<CanonicalName, CanonicalName>> ids;
  std::vector<FinCategory::ComposeEntry> comp;
  for (int i = 0; i < n; ++i) {
    objects.push_back(obj_name(i));
    ids.emplace_back(obj_name(i), le(i, i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) mors.push_back({le(i, j), obj_name(i), obj_name(j)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k])
          comp.push_back({le(j, k), le(i, j), le(i, k)});
  return FinCategory::make(std::move(objects), std::move(mors), std::move(ids),
                           std::move(comp));
}

// one object, two or three endomorphisms with a fixed multiplication
FinCategory loop_category(Rng& rng, const GenOptions& o) {
  int kind = (o.max_extra_morphisms >= 2 && rng.chance(1, 2)) ? 2
             : rng.chance(1, 2)                               ? 0
                                                              : 1;
  std::vector<CanonicalName> ms = {obj_identity(0), CanonicalName::atom("s")};
  if (kind == 2) ms.push_back(CanonicalName::atom("t"));
  auto mult = [&](int i, int j) {
    if (kind == 0) return (i + j) % 2;
    if (kind == 2) return (i + j) % 3;
    return std::max(i, j);
  };
  std::vector<MorRecord> mors;
  for (const auto& m : ms) mors.push_back({m, obj_name(0), obj_name(0)});
  std::vector<FinCategory::ComposeEntry> comp;
  int k = static_cast<int>(ms.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) comp.push_back({ms[j], ms[i], ms[mult(i, j)]});
  return FinCategory::make({obj_name(0)}, std::move(mors),
                           {{obj_name(0), obj_identity(0)}}, std::move(comp));
}

} // namespace

FinCategory gen_category(Rng& rng, const GenOptions& o) {
  if (o.max_objects <= 1) return terminal_category();
  std::size_t mode = rng.below(8);
  if (mode == 7 && o.max_extra_morphisms >= 1) return loop_category(rng, o);
  if (mode >= 4) return preorder_category(rng, o);
  return free_path_category(rng, o);
}

namespace {

// level of an object: how many objects reach it one-way
std::vector<int> reach_levels(const FinCategory& c) {
  int n = c.object_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a][b] = (a == b) || !c.hom(a, b).empty();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  std::vector<int> lv(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r[b][a] && !r[a][b]) ++lv[a];
  return lv;
}

FinSet chain_set(std::size_t size) {
  std::vector<CanonicalName> el;
  el.reserve(size);
  for (std::size_t i = 0; i < size; ++i)
    el.push_back(CanonicalName::atom("v" + std::to_string(i)));
  return FinSet::make(std::move(el));
}

// nested subsets along the reachability order; actions are inclusions
SetPresheaf nested_chain_presheaf(Rng& rng, const FinCategory& base,
                                  const GenOptions& o) {
  std::vector<int> lv = reach_levels(base);
  int levels = 1;
  for (int v : lv) levels = std::max(levels, v + 1);
  std::vector<FinSet> tiers(levels);
  std::size_t size = rng.below(o.max_fiber + 1);
  for (int i = 0; i < levels; ++i) {
    tiers[i] = chain_set(size);
    size = rng.below(size + 1);
  }
  std::vector<FinSet> values;
  values.reserve(base.object_count());
  for (int a = 0; a < base.object_count(); ++a) values.push_back(tiers[lv[a]]);
  std::vector<SetFunction> actions;
  actions.reserve(base.morphism_count());
  for (int f = 0; f < base.morphism_count(); ++f) {
    const FinSet& src = values[base.cod(f)];
    actions.push_back(
        SetFunction::make(src, values[base.dom(f)], src.elements()));
  }
  return SetPresheaf::make(base, std::move(values), std::move(actions));
}

std::optional<SetPresheaf> representable_sum(Rng& rng, const FinCategory& base,
                                             const GenOptions& o) {
  if (base.object_count() == 0) return std::nullopt;
  int parts = 1 + static_cast<int>(rng.below(2));
  std::vector<int> tg;
  for (int p = 0; p < parts; ++p)
    tg.push_back(static_cast<int>(rng.below(base.object_count())));

  std::vector<FinSet> values;
  for (int b = 0; b < base.object_count(); ++b) {
    std::vector<CanonicalName> el;
    for (int p = 0; p < parts; ++p)
      for (int m : base.hom(b, tg[p]))
        el.push_back(CanonicalName::tagged("y" + std::to_string(p),
                                           base.morphism(m).id));
    if (el.size() > o.max_fiber) return std::nullopt;
    values.push_back(FinSet::make(std::move(el)));
  }
  std::vector<SetFunction> actions;
  for (int f = 0; f < base.morphism_count(); ++f) {
    const FinSet& src = values[base.cod(f)];
    std::vector<CanonicalName> im;
    im.reserve(src.size());
    for (const auto& e : src.elements()) {
      int h = base.morphism_index(e.inner());
      int c = h < 0 ? -1 : base.compose(h, f);
      if (c < 0) return std::nullopt;
      im.push_back(CanonicalName::tagged(e.tag(), base.morphism(c).id));
    }
    actions.push_back(SetFunction::make(src, values[base.dom(f)], std::move(im)));
  }
  return SetPresheaf::make(base, std::move(values), std::move(actions));
}

std::optional<SetPresheaf> free_presentation(Rng& rng, const FinCategory& base,
                                             const GenOptions& o) {
  if (o.max_fiber == 0) return std::nullopt;
  std::vector<FinSet> values;
  values.reserve(base.object_count());
  for (int a = 0; a < base.object_count(); ++a)
    values.push_back(chain_set(1 + rng.below(o.max_fiber)));

  int m = base.morphism_count();
  // first honest factorization of each composite
  std::vector<std::array<int, 2>> decomp(m, {-1, -1});
  for (const auto& e : base.compose_entries()) {
    if (base.cod(e[1]) != base.dom(e[0])) continue;
    if (base.is_identity(e[0]) || base.is_identity(e[1])) continue;
    if (e[2] == e[0] || e[2] == e[1]) continue;
    if (decomp[e[2]][0] < 0) decomp[e[2]] = {e[0], e[1]};
  }

  std::vector<SetFunction> acts(m);
  std::vector<int> state(m, 0); // 0 fresh, 1 in progress, 2 done
  auto rand_fn = [&](int f) {
    const FinSet& src = values[base.cod(f)];
    const FinSet& tgt = values[base.dom(f)];
    std::vector<CanonicalName> im;
    im.reserve(src.size());
    for (int i = 0; i < src.size(); ++i)
      im.push_back(tgt.element(static_cast<int>(rng.below(tgt.size()))));
    return SetFunction::make(src, tgt, std::move(im));
  };
  auto assign = [&](auto&& self, int f) -> void {
    if (state[f] == 2) return;
    if (state[f] == 1) { // factorization loop, cut it with a fresh draw
      acts[f] = rand_fn(f);
      state[f] = 2;
      return;
    }
    state[f] = 1;
    if (base.is_identity(f))
      acts[f] = SetFunction::identity(values[base.dom(f)]);
    else if (decomp[f][0] < 0)
      acts[f] = rand_fn(f);
    else {
      self(self, decomp[f][0]);
      self(self, decomp[f][1]);
      acts[f] = compose_set_functions(acts[decomp[f][1]], acts[decomp[f][0]]);
    }
    state[f] = 2;
  };
  for (int f = 0; f < m; ++f) assign(assign, f);

  SetPresheaf p = SetPresheaf::make(base, std::move(values), std::move(acts));
  if (!validate_set_presheaf(p).ok()) return std::nullopt;
  return p;
}

} // namespace

SetPresheaf gen_set_presheaf(Rng& rng, const FinCategory& base,
                             const GenOptions& o) {
  std::size_t mode = rng.below(8);
  if (mode <= 2) return nested_chain_presheaf(rng, base, o);
  if (mode <= 4) {
    if (auto p = representable_sum(rng, base, o)) return *p;
    return nested_chain_presheaf(rng, base, o);
  }
  if (mode == 7)
    return constant_presheaf(base, chain_set(rng.below(o.max_fiber + 1)));
  for (int t = 0; t < o.retry_budget; ++t)
    if (auto p = free_presentation(rng, base, o)) return *p;
  if (o.fallback_on_exhaustion) return nested_chain_presheaf(rng, base, o);
  throw RetryExhausted(
      "gen_set_presheaf: no lawful presentation within the retry budget");
}

CatPresheaf gen_cat_presheaf(Rng& rng, const FinCategory& base,
                             const GenOptions& o) {
  GenOptions small = o;
  small.max_objects = std::max<std::size_t>(
      1, std::min<std::size_t>(o.max_fiber, 2));
  small.max_extra_morphisms = std::min<std::size_t>(o.max_extra_morphisms, 2);

  std::size_t mode = rng.below(4);
  if (mode == 0) return constant_cat_presheaf(base, gen_category(rng, small));
  if (mode == 1) return discrete_cat_presheaf(gen_set_presheaf(rng, base, o));

  // chain of small categories along the reachability order; transitions
  // compose the per-step functors, so strictness holds by construction
  std::vector<int> lv = reach_levels(base);
  int levels = 1;
  for (int v : lv) levels = std::max(levels, v + 1);
  std::vector<FinCategory> tiers;
  tiers.reserve(levels);
  for (int i = 0; i < levels; ++i) tiers.push_back(gen_category(rng, small));
  std::vector<Functor> step; // step[i] : tiers[i+1] -> tiers[i]
  for (int i = 0; i + 1 < levels; ++i) {
    auto fs = enumerate_functors(tiers[i + 1], tiers[i]);
    step.push_back(fs[rng.below(fs.size())]);
  }
  std::vector<std::vector<Functor>> t(levels, std::vector<Functor>(levels));
  for (int i = 0; i < levels; ++i) {
    t[i][i] = identity_functor(tiers[i]);
    for (int j = i + 1; j < levels; ++j)
      t[i][j] = compose_functors(t[i][j - 1], step[j - 1]);
  }

  std::vector<FinCategory> fibers;
  fibers.reserve(base.object_count());
  for (int a = 0; a < base.object_count(); ++a) fibers.push_back(tiers[lv[a]]);
  std::vector<Functor> transitions;
  transitions.reserve(base.morphism_count());
  for (int f = 0; f < base.morphism_count(); ++f)
    transitions.push_back(t[lv[base.dom(f)]][lv[base.cod(f)]]);
  return CatPresheaf::make(base, std::move(fibers), std::move(transitions));
}

} // namespace fincat
