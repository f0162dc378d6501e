#pragma once

#include <vector>

#include "fincat/functor.hpp"
#include "fincat/set_presheaf.hpp"

namespace fincat {

/// Strictly functorial Cat-valued presheaf: a fiber category per object
/// and, for f : a -> b, a transition functor fiber(b) -> fiber(a).
/// Transitions of identities must be identity functors and transitions of
/// composites the composites of transitions, on the nose.
class CatPresheaf {
public:
  CatPresheaf() = default;
  static CatPresheaf make(FinCategory base, std::vector<FinCategory> fibers,
                          std::vector<Functor> transitions);

  const FinCategory& base() const;
  const FinCategory& fiber(int obj) const;
  const Functor& transition(int mor) const;
  bool operator==(const CatPresheaf& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Strict functoriality plus the functor laws of every transition.
ValidationReport validate_cat_presheaf(const CatPresheaf& p);

/// Every fiber d, every transition the identity.
CatPresheaf constant_cat_presheaf(const FinCategory& c, const FinCategory& d);

/// Fibers are discrete categories on the value sets; element u becomes an
/// object u with identity tagged("id", u).
CatPresheaf discrete_cat_presheaf(const SetPresheaf& p);

/// A family of fiber objects indexed by the base objects.
struct CatFamily {
  std::vector<CanonicalName> index;
  std::vector<CanonicalName> values;
  bool operator==(const CatFamily&) const = default;
};

CanonicalName cat_family_name(const CatFamily& fam);

} // namespace fincat
