#include "unitgroup/f2la.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace unitgroup {

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

bool BitVector::test(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("BitVector::test: index out of range");
  return (words_[i >> 6] >> (i & 63)) & 1;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= len_) throw std::out_of_range("BitVector::set: index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

void BitVector::flip(std::size_t i) {
  if (i >= len_) throw std::out_of_range("BitVector::flip: index out of range");
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

bool BitVector::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return npos;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

std::size_t BitVector::hash() const {
  // FNV-1a over the packed words.
  std::uint64_t h = 1469598103934665603ull;
  h = (h ^ static_cast<std::uint64_t>(len_)) * 1099511628211ull;
  for (std::uint64_t w : words_) h = (h ^ w) * 1099511628211ull;
  return static_cast<std::size_t>(h);
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for_each_set([&](std::size_t i) { s[i] = '1'; });
  return s;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  if (v.length() != len_)
    throw std::invalid_argument("EchelonBasis::reduce: length mismatch");
  // A row is zero at every other pivot, so XORing it only ever clears pivot
  // positions of v; the hit set computed up front is exact.
  BitVector hits = v;
  hits &= pivot_mask_;
  hits.for_each_set([&](std::size_t p) {
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    v ^= rows_[static_cast<std::size_t>(it - pivots_.begin())];
  });
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  if (v.zero()) return false;
  const std::size_t p = v.lowest_set();
  for (auto& row : rows_)
    if (row.test(p)) row ^= v;
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivot_mask_.set(p);
  return true;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> free;
  free.reserve(len_ - rows_.size());
  std::size_t next = 0;
  for (std::size_t p : pivots_) {
    for (; next < p; ++next) free.push_back(next);
    next = p + 1;
  }
  for (; next < len_; ++next) free.push_back(next);
  return free;
}

bool SpanSolver::insert(const BitVector& v) {
  if (v.length() != len_)
    throw std::invalid_argument("SpanSolver::insert: length mismatch");
  if (n_inserted_ >= cap_)
    throw std::length_error("SpanSolver::insert: capacity exhausted");
  const std::size_t tag = n_inserted_++;

  BitVector row = v;
  BitVector combo = BitVector::unit(cap_, tag);
  BitVector hits = row;
  hits &= pivot_mask_;
  hits.for_each_set([&](std::size_t p) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    row ^= rows_[idx];
    combo ^= combos_[idx];
  });
  if (row.zero()) return false;

  const std::size_t p = row.lowest_set();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].test(p)) {
      rows_[r] ^= row;
      combos_[r] ^= combo;
    }
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
  tags_.insert(tags_.begin() + static_cast<std::ptrdiff_t>(pos), tag);
  pivot_mask_.set(p);
  return true;
}

std::optional<BitVector> SpanSolver::express(const BitVector& target) const {
  if (target.length() != len_)
    throw std::invalid_argument("SpanSolver::express: length mismatch");
  BitVector v = target;
  BitVector combo(cap_);
  BitVector hits = v;
  hits &= pivot_mask_;
  hits.for_each_set([&](std::size_t p) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    v ^= rows_[idx];
    combo ^= combos_[idx];
  });
  if (!v.zero()) return std::nullopt;
  return combo;
}

BitMatrix BitMatrix::zero(std::size_t rows, std::size_t cols) {
  BitMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.row_data.assign(rows, BitVector(cols));
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_data[i].set(i);
  return m;
}

std::size_t rank(const BitMatrix& m) {
  EchelonBasis basis(m.cols);
  for (const auto& row : m.row_data) basis.insert(row);
  return basis.rank();
}

bool is_invertible(const BitMatrix& m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("is_invertible: matrix is not square");
  return rank(m) == m.rows;
}

}  // namespace unitgroup
