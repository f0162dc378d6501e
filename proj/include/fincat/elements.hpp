#pragma once

#include "fincat/bounds.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/set_presheaf.hpp"

namespace fincat {

/// Total category of a Set-valued presheaf together with its projection.
/// Objects are pair(a, u) for u in value(a); the lift of f : a -> b to
/// (b, v) starts at (a, action(f)(v)) and is named
/// tagged("el", pair(f, pair(source object, target object))).
struct ElementsCategory {
  FinCategory cat;
  Functor projection;
};

ElementsCategory category_of_elements(const SetPresheaf& p);

/// The functor between total categories induced by a presheaf map:
/// (a, u) goes to (a, component_a(u)).
Functor elements_on_nat(const PshNatTrans& eta);

/// value(b) = all morphisms b -> a, action by precomposition.
SetPresheaf yoneda_presheaf(const FinCategory& c, const CanonicalName& a);

/// Strict isomorphism between the total category of yoneda_presheaf(c, a)
/// and slice_category(c, a): (forward, backward).
std::pair<Functor, Functor> yoneda_slice_witness(const FinCategory& c,
                                                 const CanonicalName& a);

/// Pull a presheaf on c x d back along a functor f : c -> d, pairing each
/// object a with f(a) and each morphism g with f(g).
/// r must be a presheaf on product_category(c, d).
SetPresheaf restrict_presheaf(const FinCategory& c, const FinCategory& d,
                              const SetPresheaf& r, const Functor& f);

/// All families u with action(f)(u_b) = u_a for every f : a -> b,
/// ordered by the value tuple. Candidate count is bounded.
std::vector<Family> product_set(const SetPresheaf& p, const Bounds& b = {});

CanonicalName family_name(const Family& fam);

/// Presheaf on the functor category: at F the product set of the pullback
/// of r along F (elements encoded as value tuples), at eta : F => G the map
/// taking a family u to a |-> action(1_a, eta_a)(u_a).
SetPresheaf pi_presheaf(const FinCategory& c, const FinCategory& d,
                        const SetPresheaf& r, const Bounds& b = {});

/// The presheaf on the total category with value(a, u) = value(a) and
/// action of each lift the action of its underlying morphism.
SetPresheaf presheaf_over_elements(const SetPresheaf& p);

/// The family (a, u) |-> u over the objects of the total category.
Family second_projection(const SetPresheaf& p);

/// Every f : a -> p(e) in the target has exactly one lift into e.
bool check_discrete_fibration(const Functor& p);

} // namespace fincat
