#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "fincat/names.hpp"
#include "fincat/report.hpp"

namespace fincat {

struct MorRecord {
  CanonicalName id, dom, cod;
  bool operator==(const MorRecord&) const = default;
};

/// A finite category as a validated composition table.
///
/// Immutable after make(); copies share data. Objects are kept sorted by
/// canonical name and morphisms by id, so indices are reproducible and all
/// derived enumerations are deterministic. make() rejects structurally
/// malformed input (dangling references, duplicates); broken laws are the
/// validator's business, so an unlawful table is representable.
class FinCategory {
public:
  struct ComposeEntry {
    CanonicalName after, before, composite; // after o before = composite
  };

  FinCategory(); // the empty category

  static FinCategory make(std::vector<CanonicalName> objects,
                          std::vector<MorRecord> morphisms,
                          std::vector<std::pair<CanonicalName, CanonicalName>> identities,
                          std::vector<ComposeEntry> composition);

  int object_count() const;
  int morphism_count() const;

  const std::vector<CanonicalName>& objects() const;
  const CanonicalName& object(int i) const;
  const MorRecord& morphism(int i) const;
  const std::vector<MorRecord>& morphisms() const;

  int dom(int m) const; // object index
  int cod(int m) const;
  int identity(int obj) const; // morphism index, -1 if missing
  bool is_identity(int m) const;

  /// Composite index of (g o f), -1 when no table entry.
  int compose(int g, int f) const;

  int object_index(const CanonicalName& n) const;   // -1 if absent
  int morphism_index(const CanonicalName& n) const; // -1 if absent

  const std::vector<int>& hom(int a, int b) const; // sorted morphism indices
  const std::vector<int>& mors_from(int a) const;
  const std::vector<int>& mors_into(int b) const;

  /// Raw composition entries as given (indices), sorted by (after, before).
  /// Includes unlawful entries; serialization and validation both read this.
  const std::vector<std::array<int, 3>>& compose_entries() const;

  bool operator==(const FinCategory& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Checks the category laws: identities present with correct endpoints,
/// composition total on composable pairs and only on them, endpoint
/// coherence, unit laws, associativity. Empty report means lawful.
ValidationReport validate_category(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

/// Objects pair(a,x), morphisms pair(f,p), componentwise structure.
FinCategory product_category(const FinCategory& c, const FinCategory& d);

/// Objects tagged("slice", pair(dom h, h)) for each h with cod h = a;
/// a morphism h -> h' for each f with h' o f = h.
FinCategory slice_category(const FinCategory& c, const CanonicalName& a);

} // namespace fincat
