#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitgroup/f2la.hpp"
#include "unitgroup/findex.hpp"

namespace unitgroup {

// Largest group algebra whose left-regular representation is materialized
// for unit testing (|S7| = 5040); larger algebras only ever see sparse
// products and the closed-form characteristic-2 powering.
inline constexpr std::size_t kDefaultUnitMatrixBound = 5040;

/// Element of F2[G]: coefficient bit per group element, indexed by the
/// group's canonical order.
class AlgebraElement {
 public:
  AlgebraElement(GroupPtr group, BitVector coeffs);

  static AlgebraElement zero(const GroupPtr& group);
  static AlgebraElement identity(const GroupPtr& group);
  static AlgebraElement from_subset(const GroupPtr& group,
                                    std::span<const unsigned> indices);
  /// Indicator of a set of group members given as permutations
  /// (perm-backed groups only).
  static AlgebraElement from_perms(const GroupPtr& group,
                                   const std::vector<Permutation>& members);
  static AlgebraElement from_set(const GroupPtr& group, const PermSet& members);

  const GroupPtr& group() const { return group_; }
  const BitVector& coeffs() const { return coeffs_; }

  bool operator==(const AlgebraElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
  }

  /// Terms in canonical element order, e.g. "e + (2,4) + (1,2)(3,4)";
  /// "0" for the zero element.
  std::string to_text() const;

 private:
  GroupPtr group_;
  BitVector coeffs_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
/// Convolution product: XOR-accumulated basis products over all set-bit
/// pairs.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
std::size_t weight(const AlgebraElement& x);
/// x^e by repeated squaring, e >= 1.
AlgebraElement power(const AlgebraElement& x, unsigned long long e);

struct UnitCheck {
  bool unit = false;
  std::optional<AlgebraElement> inverse;
};

/// Unit test via the left-regular matrix: x is a unit iff left
/// multiplication by x is invertible, in which case the inverse is the
/// preimage of the identity (two-sided, by finite dimensionality).
UnitCheck is_unit(const AlgebraElement& x,
                  std::size_t dim_bound = kDefaultUnitMatrixBound);

/// Closed form (sum g_i)^(2^k) = sum g_i^(2^k), valid when the terms
/// pairwise commute in characteristic 2. Throws if they do not.
AlgebraElement frobenius_power_of_commuting_sum(const GroupPtr& group,
                                                const std::vector<Permutation>& terms,
                                                unsigned k);

}  // namespace unitgroup
