#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitgroup/perm.hpp"

namespace unitgroup {

// Cayley tables above this size are not materialized; multiplication is
// computed on demand (|A8| = 20160 would need ~4e8 table entries).
inline constexpr std::size_t kDefaultTableBound = 5040;

struct IndexOptions {
  std::size_t table_bound = kDefaultTableBound;
  bool allow_on_the_fly = false;
};

/// Canonically indexed finite group: element list in canonical order plus
/// multiplication by index, either from a materialized Cayley table or
/// computed on the fly. Backed by a PermSet or by opaque uint64 values with
/// a supplied multiplication.
class IndexedGroup {
 public:
  using Options = IndexOptions;

  using MulValueFn = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;
  using LabelFn = std::function<std::string(std::uint64_t)>;

  static IndexedGroup from_perms(PermSet group, Options opts = {});
  /// values must be sorted ascending and closed under mul; identity_value
  /// must be a member.
  static IndexedGroup from_values(std::vector<std::uint64_t> values,
                                  std::uint64_t identity_value, MulValueFn mul,
                                  Options opts = {}, LabelFn label = nullptr);

  std::size_t size() const { return size_; }
  unsigned identity() const { return id_; }
  bool materialized() const { return !table_.empty(); }

  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned order_of(unsigned a) const;

  const PermSet* perms() const { return perms_ ? perms_.get() : nullptr; }
  std::uint64_t value(unsigned i) const { return values_[i]; }
  std::string label(unsigned i) const;

  std::vector<unsigned> small_generating_set() const;
  bool has_trivial_center() const;

  // Invariant checks used by the test and property suites.
  bool check_latin_square() const;  // requires a materialized table
  bool check_identity_inverse() const;
  /// Exhaustive when size^3 <= samples, otherwise that many seeded random
  /// triples.
  bool check_associativity(std::size_t samples = 1'000'000,
                           std::uint64_t seed = 0) const;

 private:
  std::size_t size_ = 0;
  unsigned id_ = 0;
  std::vector<std::uint16_t> table_;  // flattened size*size when materialized
  std::vector<unsigned> inv_;
  std::shared_ptr<const PermSet> perms_;
  std::vector<std::uint64_t> values_;
  MulValueFn mul_fn_;
  LabelFn label_fn_;

  unsigned index_of_value(std::uint64_t v) const;
  unsigned mul_slow(unsigned a, unsigned b) const;
  void materialize_table();
};

using GroupPtr = std::shared_ptr<const IndexedGroup>;

/// Canonical indexing of a permutation group, shared ownership.
GroupPtr index_group(const PermSet& G, IndexedGroup::Options opts = {});

bool has_trivial_center(const IndexedGroup& G);

std::vector<std::vector<unsigned>> conjugacy_classes(const IndexedGroup& G);
std::map<unsigned, std::size_t> order_spectrum(const IndexedGroup& G);

struct IndexedSimplicityResult {
  bool simple = false;
  std::optional<std::vector<unsigned>> witness;
};
IndexedSimplicityResult is_simple(const IndexedGroup& G,
                                  std::size_t class_bound = kDefaultClassBound);

/// All group isomorphisms A -> B as index maps (empty when none exist).
/// Intended for small groups; throws once more than `limit` are found.
std::vector<std::vector<unsigned>> group_isomorphisms(const IndexedGroup& A,
                                                      const IndexedGroup& B,
                                                      std::size_t limit = 1024);

}  // namespace unitgroup
