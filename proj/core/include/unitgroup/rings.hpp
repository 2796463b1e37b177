#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitgroup/quotient.hpp"

namespace unitgroup {

/// Matrix ring M_k(F2) on the matrix-unit basis e_ab (row-major index a*k+b),
/// e_ab e_cd = [b==c] e_ad. 1 <= k <= 4.
F2AlgebraTable matrix_ring(unsigned k);

/// The Hurwitz quaternions reduced mod 2: a 4-dimensional algebra on the
/// basis (1, i, j, w), w = (1+i+j+k)/2. The structure constants are fixture
/// data derived by an exact-integer quaternion oracle
/// (tools/gen_hurwitz_table.py writes core/data/hurwitz_mod2_table.txt).
F2AlgebraTable hurwitz_mod2();

/// Parses the fixture format ("b_i * b_j = <bit-quadruple>" lines); used by
/// tests to pin the compiled table to the committed file.
F2AlgebraTable parse_hurwitz_fixture(const std::string& content);

struct LinearIso {
  unsigned dim = 0;
  std::vector<std::uint32_t> columns;  // image of basis element i of A in B
  std::uint32_t apply(std::uint32_t x) const;
};

struct SpanningHypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ring-isomorphism search for algebras whose units span them linearly: any
/// ring isomorphism restricts to a unit-group isomorphism, and a unit-group
/// isomorphism extends linearly in at most one way. Enumerates all unit-group
/// isomorphisms, extends each from a spanning subset of units, and keeps the
/// extension iff it agrees with the group map on every unit, is bijective,
/// and is multiplicative on basis pairs. "nullopt" is therefore conclusive.
/// Throws SpanningHypothesisError when the units of either side do not span.
std::optional<LinearIso> unit_spanned_iso(const F2AlgebraTable& A,
                                          const F2AlgebraTable& B);

/// Conjugacy scan deciding F2[G]/J_a ~ F2[G]/J_b for quotients whose units
/// are exactly the group cosets: when every automorphism of G is inner
/// (asserted input flag, not derived), any ring isomorphism must come from
/// conjugation, so scanning t in G for t J_a t^-1 = J_b is conclusive.
std::optional<Permutation> quotient_iso_by_conjugacy(const Ideal& a, const Ideal& b,
                                                     bool all_automorphisms_inner);

struct A8IdentificationReport {
  std::size_t unit_group_order = 0;
  std::size_t a8_order = 0;
  bool orders_equal = false;
  std::map<unsigned, std::size_t> unit_group_spectrum;
  std::map<unsigned, std::size_t> a8_spectrum;
  bool spectra_equal = false;
  bool both_have_order_15 = false;
  bool unit_group_simple = false;
  bool a8_simple = false;
  std::string caveat;
  bool pass() const {
    return orders_equal && spectra_equal && both_have_order_15 &&
           unit_group_simple && a8_simple;
  }
};

/// Compares the unit group of M_4(F2) against A8 by order, element-order
/// spectrum, and simplicity. These three facts single out A8 among groups of
/// order 20160 (the other simple group of that order has no element of order
/// 15) but do not construct an explicit isomorphism; the caveat records
/// that.
A8IdentificationReport a8_identification(const IndexedGroup& units_of_m4,
                                         unsigned threads = 1);

}  // namespace unitgroup
