#pragma once

#include "fincat/cat_presheaf.hpp"
#include "fincat/elements.hpp"

namespace fincat {

/// Total category of a Cat-valued presheaf with its projection.
/// Objects are pair(a, x); a morphism over f : a -> b from (a, x) to (b, y)
/// is a fiber morphism p : x -> transition(f)(y) and is named
/// tagged("gr", pair(pair(f, p), pair(source object, target object))).
struct GrothendieckCategory {
  FinCategory cat;
  Functor projection;
};

GrothendieckCategory grothendieck(const CatPresheaf& p);

/// Presheaf on d with value(x) = r(a, x), action of p the action of (1_a, p).
/// r must live on product_category(c, d).
SetPresheaf curry_left(const FinCategory& c, const FinCategory& d,
                       const SetPresheaf& r, const CanonicalName& a);

/// Presheaf on c with value(a) = r(a, x), action of f the action of (f, 1_x).
SetPresheaf curry_right(const FinCategory& c, const FinCategory& d,
                        const SetPresheaf& r, const CanonicalName& x);

/// Cat-valued presheaf on c whose fiber at a is the total category of
/// curry_left(r, a); the transition of f : a -> b reindexes second
/// components by the action of (f, 1).
CatPresheaf sigma_dr(const FinCategory& c, const FinCategory& d,
                     const SetPresheaf& r);

/// The mirror image of sigma_dr, a presheaf on d with fibers the total
/// categories of curry_right(r, x).
CatPresheaf sigma_cr(const FinCategory& c, const FinCategory& d,
                     const SetPresheaf& r);

/// Strict isomorphism between the total categories of sigma_dr and
/// sigma_cr: (a,(x,u)) <-> (x,(a,u)). Returns (forward, backward).
std::pair<Functor, Functor> commutativity_witness(const FinCategory& c,
                                                  const FinCategory& d,
                                                  const SetPresheaf& r);

/// Families of fiber objects with a nonempty hom from pick(a) to the
/// reindexed pick(b) for every f : a -> b. Ordered by value tuple.
std::vector<CatFamily> cat_product_set(const CatPresheaf& p, const Bounds& b = {});

/// Functors F : c -> d whose object part is forced by the family's first
/// components and whose morphism part turns the family into a cone:
/// u_a = action(1_a, F(f))(action(f, 1)(u_b)) for every f : a -> b.
/// Throws InvalidArgument when the family is not in the product set.
std::vector<Functor> find_associates(const FinCategory& c, const FinCategory& d,
                                     const SetPresheaf& r, const CatFamily& phi,
                                     const Bounds& b = {});

/// Category of pairs (family, associate); morphisms are natural
/// transformations between associates compatible with the families,
/// named tagged("pi", pair(nat name, pair(source, target))).
FinCategory product_category_pi(const FinCategory& c, const FinCategory& d,
                                const SetPresheaf& r, const Bounds& b = {});

/// The projection of grothendieck(p) is a split fibration: designated
/// lifts (f, identity) exist, are cartesian, and compose on the nose.
bool check_split_fibration(const CatPresheaf& p);

/// Same checks, but run inside a subcategory e of the total category with
/// projection proj. A missing designated lift makes this false.
bool check_split_fibration_within(const CatPresheaf& p, const FinCategory& e,
                                  const Functor& proj);

/// The total category of the constant presheaf at d is the product
/// category up to the fixed morphism renaming gr(pair(f,p)) <-> pair(f,p);
/// objects agree on the nose. Checked by an explicit inverse pair.
bool grothendieck_constant_matches_product(const FinCategory& c,
                                           const FinCategory& d);

/// With discrete fibers the total category is the category of elements up
/// to the renaming gr(pair(f, id_u)) <-> el(f); objects agree on the nose.
bool grothendieck_matches_elements(const SetPresheaf& p);

} // namespace fincat
