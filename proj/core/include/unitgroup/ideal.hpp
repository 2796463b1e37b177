#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unitgroup/galg.hpp"

namespace unitgroup {

// Closure materializes |G|-bit rows; F2[S7] (5040) is the largest algebra
// any verification closes over.
inline constexpr std::size_t kDefaultClosureBound = 5040;

/// Two-sided ideal of F2[G]: generator list plus the fully reduced echelon
/// basis of its span. When closed(), the span absorbs left and right
/// multiplication by every element of G.
class Ideal {
 public:
  const GroupPtr& group() const { return group_; }
  const std::vector<AlgebraElement>& generators() const { return generators_; }
  const PermSet& group_generators() const { return group_gens_; }
  const EchelonBasis& basis() const { return basis_; }
  bool closed() const { return closed_; }
  std::size_t dim() const { return basis_.rank(); }

  friend Ideal close(const GroupPtr&, const PermSet&, std::vector<AlgebraElement>,
                     std::size_t);
  friend Ideal conjugate_ideal(const Ideal&, const Permutation&);
  friend Ideal antipode_ideal(const Ideal&);

 private:
  Ideal() = default;
  GroupPtr group_;
  std::vector<AlgebraElement> generators_;
  PermSet group_gens_;
  EchelonBasis basis_;
  bool closed_ = false;
};

/// Smallest F2-subspace containing gens and closed under left and right
/// multiplication by G. Worklist closure multiplies only by the given group
/// generators; products of generators cover the whole multiplicative action,
/// so the resulting span is the full two-sided ideal.
Ideal close(const GroupPtr& G, const PermSet& group_gens,
            std::vector<AlgebraElement> gens,
            std::size_t dim_bound = kDefaultClosureBound);

bool contains(const Ideal& I, const AlgebraElement& x);

/// Distinct group elements g, h with g + h in the ideal, if any exist:
/// canonical forms of the |G| basis vectors collide exactly on weight-2
/// members. Returns the first collision in canonical order.
std::optional<std::pair<unsigned, unsigned>> weight2_witness(const Ideal& I);

/// Complete candidate list for the group element congruent to a unit with
/// support T: the centralizer of the setwise normalizer of T in G. That the
/// algebra element of T is a unit is the caller's precondition.
PermSet sigma_candidates(const PermSet& G, const PermSet& T, unsigned threads = 1);

/// Basis transported by x -> t x t^-1; conjugation is an algebra
/// automorphism, so closedness is preserved.
Ideal conjugate_ideal(const Ideal& I, const Permutation& t);

/// Basis transported by the linear extension of g -> g^-1. This map is an
/// anti-automorphism of F2[G], so it carries two-sided ideals to two-sided
/// ideals and F2[G]/antipode(I) is the opposite ring of F2[G]/I.
Ideal antipode_ideal(const Ideal& I);

}  // namespace unitgroup
