#pragma once

#include <vector>

#include "fincat/bounds.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// All functors C -> D, duplicate-free, sorted by canonical functor name.
/// Throws BoundExceeded when either category is larger than the bound allows.
std::vector<Functor> enumerate_functors(const FinCategory& c,
                                        const FinCategory& d,
                                        const Bounds& b = {});

/// All natural transformations F => G for parallel functors, sorted by name.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g);

/// The category of functors C -> D and natural transformations.
/// objects[i] of cat corresponds to functors[i], morphisms[j] to
/// transformations[j]; both lists are sorted by canonical name.
struct FunctorCategory {
  FinCategory cat;
  std::vector<Functor> functors;
  std::vector<NatTrans> transformations;
};

FunctorCategory functor_category(const FinCategory& c, const FinCategory& d,
                                 const Bounds& b = {});

} // namespace fincat
