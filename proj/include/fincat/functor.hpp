#pragma once

#include <memory>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Explicit object and morphism maps between finite categories.
///
/// Images are stored as names; an image that does not exist in the target
/// resolves to index -1 and is reported by validate_functor rather than
/// rejected up front, so broken witnesses stay inspectable.
class Functor {
public:
  Functor() = default;

  static Functor make(FinCategory source, FinCategory target,
                      std::vector<CanonicalName> obj_images,
                      std::vector<CanonicalName> mor_images);
  static Functor make_idx(FinCategory source, FinCategory target,
                          std::vector<int> obj_map, std::vector<int> mor_map);

  const FinCategory& source() const;
  const FinCategory& target() const;

  int obj_image(int i) const; // target object index, -1 unresolved
  int mor_image(int i) const;
  const CanonicalName& obj_image_name(int i) const;
  const CanonicalName& mor_image_name(int i) const;

  bool operator==(const Functor& o) const;

  /// Name for use as an object of a functor category:
  /// tagged("fun", pair(tuple of object images, tuple of morphism images)).
  CanonicalName name() const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

Functor identity_functor(const FinCategory& c);

/// g after f; throws InvalidArgument unless target(f) equals source(g).
Functor compose_functors(const Functor& g, const Functor& f);

ValidationReport validate_functor(const Functor& f);

/// True iff g o f and f o g are both identity functors on the nose.
/// Throws InvalidArgument when sources and targets do not line up.
bool check_strict_inverse_pair(const Functor& f, const Functor& g);

/// A family of components F(a) -> G(a), one per source object.
class NatTrans {
public:
  NatTrans() = default;

  static NatTrans make(Functor source, Functor target,
                       std::vector<CanonicalName> components);
  static NatTrans make_idx(Functor source, Functor target,
                           std::vector<int> components);

  const Functor& source() const;
  const Functor& target() const;
  int component(int obj) const; // morphism index in the target category
  const CanonicalName& component_name(int obj) const;

  bool operator==(const NatTrans& o) const;

  /// tagged("nat", pair(component tuple, pair(source name, target name))).
  CanonicalName name() const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

NatTrans identity_nat(const Functor& f);

/// Vertical composition, t after s.
NatTrans vertical_compose(const NatTrans& t, const NatTrans& s);

ValidationReport validate_nat_trans(const NatTrans& n);

} // namespace fincat
