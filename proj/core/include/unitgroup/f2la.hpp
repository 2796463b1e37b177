#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unitgroup {

/// Packed vector over the two-element field. Bit i lives in word i/64.
/// Padding bits past length() are kept zero, so whole-word XOR, compare
/// and hash are exact.
class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  static BitVector unit(std::size_t length, std::size_t index);

  std::size_t length() const { return len_; }

  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool any() const;
  bool zero() const { return !any(); }
  std::size_t count() const;
  std::size_t lowest_set() const;  // npos when zero

  BitVector& operator^=(const BitVector& o);
  BitVector& operator&=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVector&) const = default;
  // Word-lexicographic; used only to fix deterministic orderings.
  auto operator<=>(const BitVector&) const = default;

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t m = words_[w];
      while (m) {
        fn(w * 64 + static_cast<unsigned>(std::countr_zero(m)));
        m &= m - 1;
      }
    }
  }

  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_string() const;  // bit i printed at position i

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// Fully reduced row basis of an F2 subspace: pivots strictly increasing,
/// each pivot column zero in every other row. reduce() therefore yields the
/// unique coset representative with zeros in all pivot columns, and equal
/// spans have equal bases.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t length)
      : len_(length), pivot_mask_(length) {}

  std::size_t length() const { return len_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).zero(); }
  /// Grows the span by v; returns false iff v was already in the span.
  bool insert(BitVector v);

  std::vector<std::size_t> free_columns() const;

  bool operator==(const EchelonBasis& o) const {
    return len_ == o.len_ && rows_ == o.rows_;
  }

 private:
  std::size_t len_ = 0;
  BitVector pivot_mask_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Echelon span that additionally remembers, for each basis row, which of
/// the inserted vectors combine to it. express() then writes a member of the
/// span as a combination of the insertion sequence (bit t of the result =
/// the t-th call to insert). Backbone of unit testing by left-multiplication
/// and of the unit-spanned isomorphism search.
class SpanSolver {
 public:
  SpanSolver(std::size_t length, std::size_t max_inserts)
      : len_(length), cap_(max_inserts), pivot_mask_(length) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserts() const { return n_inserted_; }

  bool insert(const BitVector& v);
  /// Insert indices whose vectors own a pivot, in pivot order; these form an
  /// independent spanning subset of the inserted family.
  const std::vector<std::size_t>& basis_tags() const { return tags_; }
  std::optional<BitVector> express(const BitVector& target) const;

 private:
  std::size_t len_;
  std::size_t cap_;
  std::size_t n_inserted_ = 0;
  BitVector pivot_mask_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> tags_;
};

struct BitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BitVector> row_data;  // row_data[i].length() == cols

  static BitMatrix zero(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  bool test(std::size_t r, std::size_t c) const { return row_data[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { row_data[r].set(c, v); }
};

std::size_t rank(const BitMatrix& m);
/// True iff the matrix is square of full rank. Throws on non-square input.
bool is_invertible(const BitMatrix& m);

}  // namespace unitgroup
