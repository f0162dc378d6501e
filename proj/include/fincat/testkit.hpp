#pragma once

#include <cstdint>
#include <random>

#include "fincat/cat_presheaf.hpp"

namespace fincat {

/// Deterministic seeded source. Bounded draws use rejection sampling on
/// the raw 64-bit stream, so a seed produces the same values on every
/// platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::size_t below(std::size_t n); // uniform in [0, n); below(0) is 0
  bool chance(std::size_t num, std::size_t den);

  /// Independent stream derived from this one's seed and the salt.
  Rng split(std::uint64_t salt) const;

private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

/// Size knobs for generated instances. Generated categories are always
/// lawful and generated presheaves always validate on their base; the
/// rejection-sampled mode falls back to an always-lawful construction
/// when its retry budget runs out, unless fallback is disabled.
struct GenOptions {
  std::size_t max_objects = 3;
  std::size_t max_extra_morphisms = 5; // morphisms beyond the identities
  std::size_t max_fiber = 3;           // value set / fiber size cap
  int retry_budget = 64;
  bool fallback_on_exhaustion = true;  // false: throw RetryExhausted
};

/// Draws one of: the free category on a small acyclic multigraph, a finite
/// preorder, or a one-object category with a small composition table.
/// max_objects of 1 pins the one-object one-morphism category.
FinCategory gen_category(Rng& rng, const GenOptions& o = {});

/// Draws one of: a nested chain of subsets along the reachability order,
/// a sum of at most two representables, a constant presheaf, or a random
/// presentation on the irreducible morphisms (validated, retried).
SetPresheaf gen_set_presheaf(Rng& rng, const FinCategory& base,
                             const GenOptions& o = {});

/// Draws one of: a constant presheaf at a small category, the discrete
/// lift of a generated Set-valued presheaf, or a chain of small categories
/// along the reachability order with composed transition functors.
CatPresheaf gen_cat_presheaf(Rng& rng, const FinCategory& base,
                             const GenOptions& o = {});

} // namespace fincat
