#pragma once

#include <string>

#include "fincat/grothendieck.hpp"

namespace fincat {

struct CheckOutcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Outcome of one theorem-level check, one line per sub-check.
struct TheoremReport {
  std::vector<CheckOutcome> checks;

  bool ok() const;
  void add(std::string name, bool ok, std::string detail = "");
  void add(std::string name, const ValidationReport& r);
  std::string summary() const;
};

/// The two equivalent presentations of a choice datum for r on c x d:
/// pairs (compatible family, associated functor) on one side, elements
/// (functor, element of its product set) on the other, with the renaming
/// functors between them.
struct ChoiceEquivalence {
  FinCategory pairs;
  FinCategory elements;
  Functor to_elements;
  Functor to_pairs;
};

ChoiceEquivalence choice_equivalence(const FinCategory& c, const FinCategory& d,
                                     const SetPresheaf& r, const Bounds& b = {});

/// Both sides are lawful categories, both renaming functors are lawful and
/// strictly inverse.
TheoremReport check_choice(const FinCategory& c, const FinCategory& d,
                           const SetPresheaf& r, const Bounds& b = {});

/// Restriction of a presheaf q on the total category of p to the fiber of
/// p at a, along x |-> (a, x), j |-> the lift of the identity.
CatPresheaf q_restriction(const CatPresheaf& p, const CatPresheaf& q,
                          const CanonicalName& a);

/// Collapse of a presheaf q on the total category of p to a presheaf on
/// the base of p: the fiber at a is the total category of the restriction
/// of q to the fiber of p at a; the transition of f pairs the transition
/// of p with the transition of q at the designated lift of f.
CatPresheaf sigma_pq(const CatPresheaf& p, const CatPresheaf& q);

/// Strict isomorphism between the total category of q and the total
/// category of sigma_pq(p, q): ((a,x),t) <-> (a,(x,t)).
/// Returns (forward, backward).
std::pair<Functor, Functor> assoc_witness(const CatPresheaf& p,
                                          const CatPresheaf& q);

/// sigma_pq is strict, both total categories are lawful, the witness pair
/// is lawful and strictly inverse.
TheoremReport check_assoc(const CatPresheaf& p, const CatPresheaf& q);

/// sigma_dr and sigma_cr are strict, both total categories are lawful, the
/// swap pair is lawful and strictly inverse, and both totals have exactly
/// one object per element of r.
TheoremReport check_commutativity(const FinCategory& c, const FinCategory& d,
                                  const SetPresheaf& r);

} // namespace fincat
