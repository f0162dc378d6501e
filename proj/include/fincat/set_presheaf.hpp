#pragma once

#include <memory>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Immutable finite set of canonical names, kept sorted.
class FinSet {
public:
  FinSet(); // empty
  static FinSet make(std::vector<CanonicalName> elements); // rejects duplicates

  int size() const;
  const CanonicalName& element(int i) const;
  const std::vector<CanonicalName>& elements() const;
  int index_of(const CanonicalName& n) const; // -1 if absent
  bool contains(const CanonicalName& n) const { return index_of(n) >= 0; }
  bool operator==(const FinSet& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Total function between finite sets. Images are names; an image outside
/// the target stays representable and is flagged by validation.
class SetFunction {
public:
  SetFunction() = default;
  static SetFunction make(FinSet source, FinSet target,
                          std::vector<CanonicalName> images);
  static SetFunction identity(const FinSet& s);

  const FinSet& source() const;
  const FinSet& target() const;
  int image(int i) const; // target index, -1 when the image is not a member
  const CanonicalName& image_name(int i) const;
  bool operator==(const SetFunction& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// h after g; throws InvalidArgument unless target(g) equals source(h).
SetFunction compose_set_functions(const SetFunction& h, const SetFunction& g);

/// images land in the target set; emptiness handled trivially
ValidationReport validate_set_function(const SetFunction& f);

/// Contravariant Set-valued presheaf on a finite base category:
/// a value set per object and, for f : a -> b, an action value(b) -> value(a).
class SetPresheaf {
public:
  SetPresheaf() = default;
  /// values by object index, actions by morphism index.
  /// Throws InvalidArgument when an action's source/target sets do not
  /// match the declared values (that is a shape error, not a law error).
  static SetPresheaf make(FinCategory base, std::vector<FinSet> values,
                          std::vector<SetFunction> actions);

  const FinCategory& base() const;
  const FinSet& value(int obj) const;
  const SetFunction& action(int mor) const;
  bool operator==(const SetPresheaf& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// identity actions are identities; action(g o f) = action(f) o action(g).
ValidationReport validate_set_presheaf(const SetPresheaf& p);

SetPresheaf constant_presheaf(const FinCategory& base, const FinSet& s);

/// An element of a product set: one value per index name, index sorted.
struct Family {
  std::vector<CanonicalName> index;
  std::vector<CanonicalName> values;
  bool operator==(const Family&) const = default;
};

/// A presheaf map: components value_p(a) -> value_q(a), natural in a.
class PshNatTrans {
public:
  PshNatTrans() = default;
  static PshNatTrans make(SetPresheaf source, SetPresheaf target,
                          std::vector<SetFunction> components);

  const SetPresheaf& source() const;
  const SetPresheaf& target() const;
  const SetFunction& component(int obj) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

PshNatTrans identity_psh_nat(const SetPresheaf& p);
PshNatTrans compose_psh_nat(const PshNatTrans& t, const PshNatTrans& s);

/// bases agree and every naturality square commutes.
ValidationReport validate_psh_nat(const PshNatTrans& n);

} // namespace fincat
