#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fincat {

/// Structured identifier for objects, morphisms and set elements.
///
/// Names are immutable trees. Atoms carry a token; pairs and tagged nodes
/// build identifiers for constructed data, e.g. the object (a,u) of a
/// category of elements is pair(a, u). Structural equality on names is the
/// notion of equality used throughout the library, and the total order on
/// names fixes every enumeration order.
class CanonicalName {
public:
  enum class Kind : std::uint8_t { Atom, Pair, Tagged };

  CanonicalName(); // Atom("")

  static CanonicalName atom(std::string token);
  static CanonicalName pair(CanonicalName first, CanonicalName second);
  // tag must be a plain token: letters, digits, '_'
  static CanonicalName tagged(std::string tag, CanonicalName inner);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_tagged() const { return kind() == Kind::Tagged; }
  bool is_tagged(const char* tag) const;

  const std::string& atom_value() const; // Atom only
  const std::string& tag() const;        // Tagged only
  CanonicalName first() const;           // Pair only
  CanonicalName second() const;          // Pair only
  CanonicalName inner() const;           // Tagged only

  std::strong_ordering operator<=>(const CanonicalName& o) const;
  bool operator==(const CanonicalName& o) const;

  /// Injective rendering; parse() is its exact inverse.
  std::string str() const;
  static CanonicalName parse(const std::string& s); // throws ParseError

private:
  struct Node;
  explicit CanonicalName(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Fixed tuple encoding: tagged("tup", pair(x0, pair(x1, ... atom("nil")))).
/// Used wherever a family keyed by a sorted index set is itself a value.
CanonicalName name_tuple(const std::vector<CanonicalName>& parts);
std::vector<CanonicalName> tuple_parts(const CanonicalName& n); // throws InvalidArgument

/// Morphism ids of constructed categories all share one shape:
/// tagged(tag, pair(core, pair(source_object, target_object))).
CanonicalName make_arrow_name(const char* tag, const CanonicalName& core,
                              const CanonicalName& src, const CanonicalName& tgt);
struct ArrowNameParts {
  CanonicalName core, src, tgt;
};
ArrowNameParts arrow_name_parts(const CanonicalName& n); // throws InvalidArgument

} // namespace fincat
