#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unitgroup {

// Full enumeration (symmetric_group/alternating_group) is bounded here;
// |S9| = 362880 is the largest group the verifications enumerate.
inline constexpr unsigned kDefaultEnumerationDegree = 9;

// Subset-of-classes simplicity scan refuses groups with more classes than
// this (the scan is exponential in the class count).
inline constexpr std::size_t kDefaultClassBound = 24;

/// Permutation of {0..n-1}, stored as its image array. Text I/O is 1-based
/// cycle notation, see parse_cycles/print_cycles.
///
/// Composition convention, used everywhere in this library:
///   compose(a, b)(i) = a(b(i)),  i.e. b acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity
  explicit Permutation(std::vector<std::uint8_t> image);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const { return static_cast<unsigned>(image_.size()); }
  unsigned operator()(unsigned i) const { return image_[i]; }
  const std::vector<std::uint8_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;        // +1 even, -1 odd
  unsigned order() const;  // lcm of cycle lengths
  Permutation pow(unsigned long long e) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> image_;
};

Permutation compose(const Permutation& a, const Permutation& b);
/// g x g^-1 under the fixed composition convention.
Permutation conjugate(const Permutation& g, const Permutation& x);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Cycle-notation grammar: a product of parenthesized cycles over 1-based
/// points, multiplied left to right; "e" (or an empty string) is the
/// identity. Within one cycle the points are comma-separated numbers, or,
/// when no comma appears, a run of single digits: "(1,2)(3,4)" == "(12)(34)".
/// Errors: malformed tokens, points outside 1..n, a point repeated within
/// one cycle.
Permutation parse_cycles(std::string_view text, unsigned degree);
std::string print_cycles(const Permutation& p);

/// Deduplicated, canonically sorted (lexicographic on image arrays) set of
/// permutations of one degree. group() is a flag set by the operations that
/// guarantee closure.
class PermSet {
 public:
  PermSet() = default;
  PermSet(unsigned degree, std::vector<Permutation> members);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Permutation& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Permutation>& members() const { return members_; }

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool subset_of(const PermSet& other) const;

  bool group() const { return is_group_; }
  /// Verifies identity/closure/inverse membership (used by tests and by
  /// callers constructing sets by hand).
  bool check_group_axioms() const;
  PermSet& mark_group(bool checked = true);

  bool operator==(const PermSet& o) const {
    return degree_ == o.degree_ && members_ == o.members_;
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  unsigned degree_ = 0;
  bool is_group_ = false;
  std::vector<Permutation> members_;
};

PermSet symmetric_group(unsigned n, unsigned enumeration_bound = kDefaultEnumerationDegree);
PermSet alternating_group(unsigned n, unsigned enumeration_bound = kDefaultEnumerationDegree);

/// Closure of a nonempty generating set under composition.
PermSet generated_subgroup(const PermSet& gens);

/// Setwise normalizer {g in G : g T g^-1 = T} of the subset T (not of <T>).
PermSet normalizer_of_set(const PermSet& G, const PermSet& T, unsigned threads = 1);
/// {g in G : gs = sg for every s in S}.
PermSet centralizer_of_set(const PermSet& G, const PermSet& S, unsigned threads = 1);

/// Orbits of G under conjugation by itself, sorted by (size, minimal member).
std::vector<PermSet> conjugacy_classes(const PermSet& G);

/// Element order -> number of elements of exactly that order.
std::map<unsigned, std::size_t> order_spectrum(const PermSet& G);

struct SimplicityResult {
  bool simple = false;
  std::optional<PermSet> witness;  // a proper nontrivial normal subgroup
};

/// Scans unions of conjugacy classes that contain the identity class and
/// whose sizes sum to a proper nontrivial divisor of |G|, testing each union
/// for closure (equivalently: whether the subgroup it generates equals it).
SimplicityResult is_simple(const PermSet& G, std::size_t class_bound = kDefaultClassBound);

/// Greedy small generating set of a group, deterministic (canonical order).
std::vector<Permutation> small_generating_set(const PermSet& G);

}  // namespace unitgroup
