#pragma once

#include <cstddef>

namespace fincat {

/// Resource limits for the exhaustive searches. Exceeding a bound raises
/// BoundExceeded; nothing is ever truncated silently.
struct Bounds {
  // per input category of a functor enumeration
  std::size_t max_objects = 4;
  std::size_t max_morphisms = 12;
  // candidate cap for product-set style searches
  std::size_t max_candidates = 1000000;
};

} // namespace fincat
