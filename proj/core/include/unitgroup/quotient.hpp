#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unitgroup/ideal.hpp"

namespace unitgroup {

// Quotient enumeration walks all 2^d canonical forms.
inline constexpr unsigned kDefaultQuotientDimBound = 24;

/// Dimension-d unital F2-algebra given by structure constants on a fixed
/// basis. Elements are d-bit patterns (bit i = coefficient of basis i).
/// Uniform carrier for quotient rings, matrix rings over F2, and the
/// Hurwitz-mod-2 ring.
class F2AlgebraTable {
 public:
  F2AlgebraTable(unsigned dim, std::uint32_t unity,
                 std::vector<std::uint32_t> structure);

  unsigned dim() const { return dim_; }
  std::uint64_t size() const { return std::uint64_t{1} << dim_; }
  std::uint32_t unity() const { return unity_; }
  std::uint32_t basis_product(unsigned i, unsigned j) const {
    return structure_[static_cast<std::size_t>(i) * dim_ + j];
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;

  bool check_unity() const;
  bool check_associativity() const;  // all dim^3 basis triples

  bool operator==(const F2AlgebraTable&) const = default;

 private:
  unsigned dim_;
  std::uint32_t unity_;
  std::vector<std::uint32_t> structure_;  // dim*dim entries, row-major
};

/// Quotient ring F2[G]/I. Elements are the canonical coset representatives
/// (zeros in every pivot column of the ideal basis), which biject with bit
/// patterns on the free columns; dim = |G| - rank(I).
class QuotientRing {
 public:
  static QuotientRing build(GroupPtr G, Ideal I,
                            unsigned dim_bound = kDefaultQuotientDimBound);

  const GroupPtr& group() const { return group_; }
  const Ideal& ideal() const { return ideal_; }
  unsigned dim() const { return dim_; }
  std::uint64_t size() const { return std::uint64_t{1} << dim_; }
  const std::vector<std::size_t>& free_columns() const { return free_cols_; }

  BitVector canonicalize(const BitVector& v) const {
    return ideal_.basis().reduce(v);
  }
  /// Free-column bits of a canonical representative.
  std::uint32_t compress(const BitVector& canonical) const;
  BitVector expand(std::uint32_t bits) const;
  /// compress(canonicalize(.)) for arbitrary representatives.
  std::uint32_t project(const BitVector& v) const;

  std::uint32_t one() const { return one_; }
  std::uint32_t image_of(unsigned element_index) const;
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const {
    return table_.mul(a, b);
  }
  AlgebraElement representative(std::uint32_t bits) const;

  const F2AlgebraTable& table() const { return table_; }

 private:
  QuotientRing(GroupPtr g, Ideal i, unsigned dim, std::vector<std::size_t> free_cols,
               F2AlgebraTable table, std::uint32_t one);
  GroupPtr group_;
  Ideal ideal_;
  unsigned dim_;
  std::vector<std::size_t> free_cols_;
  F2AlgebraTable table_;
  std::uint32_t one_;
};

/// Structure constants of the quotient on its free-column basis.
F2AlgebraTable to_table(const QuotientRing& R);

/// Unit enumeration over a structure-constant algebra: x is a unit iff its
/// left-multiplication matrix has full rank (left-invertible implies
/// two-sided in a finite-dimensional algebra).
struct TableUnitScan {
  std::uint64_t ring_size = 0;
  std::size_t unit_count = 0;
  std::vector<std::uint32_t> units;  // ascending bit patterns
  GroupPtr unit_group;
  std::map<unsigned, std::size_t> spectrum;
};
TableUnitScan unit_scan(const F2AlgebraTable& table, unsigned threads = 1,
                        IndexedGroup::LabelFn label = nullptr);

struct UnitGroupReport {
  std::uint64_t ring_size = 0;
  std::size_t unit_count = 0;
  bool identity_criterion = false;
  GroupPtr unit_group;
  std::map<unsigned, std::size_t> spectrum;
  std::size_t ideal_dim = 0;
  std::vector<std::string> ideal_generators;
};
UnitGroupReport unit_report(const QuotientRing& R, unsigned threads = 1);

/// JSON object {ring_size, unit_count, identity_criterion, spectrum,
/// ideal_dim, generators[]} with keys in that order.
std::string to_json(const UnitGroupReport& report);

/// True iff the |G| cosets of the group elements are pairwise distinct and
/// the quotient has exactly |G| units; then g -> g + I is an isomorphism
/// from G onto the unit group.
bool identity_criterion(const QuotientRing& R);

/// Closes the principal two-sided ideal of every nonzero ring element and
/// counts the units of each sub-quotient. The quotient by the unit ideal is
/// the one-element zero ring, counted as having 1 unit.
struct MaxUnitsScan {
  std::size_t max_units = 0;
  std::uint32_t witness = 0;  // first element attaining the maximum
};
MaxUnitsScan max_units_over_principal_quotients(const QuotientRing& R);

}  // namespace unitgroup
