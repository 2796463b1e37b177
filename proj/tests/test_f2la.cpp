#include <doctest.h>

#include <stdexcept>

#include <random>
#include <unordered_set>

#include "unitgroup/f2la.hpp"

using namespace unitgroup;

namespace {

BitVector random_vector(std::size_t len, std::mt19937_64& rng) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i)
    if (rng() & 1) v.set(i);
  return v;
}

// Exhaustive span of a vector family: all XOR combinations.
std::unordered_set<BitVector, BitVectorHash> span_oracle(
    const std::vector<BitVector>& vecs, std::size_t len) {
  std::unordered_set<BitVector, BitVectorHash> span;
  const std::size_t combos = std::size_t{1} << vecs.size();
  for (std::size_t m = 0; m < combos; ++m) {
    BitVector acc(len);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (m & (std::size_t{1} << i)) acc ^= vecs[i];
    span.insert(acc);
  }
  return span;
}

}  // namespace

TEST_SUITE_BEGIN("f2la");

TEST_CASE("bitvector basics") {
  BitVector v(130);
  CHECK(v.zero());
  v.set(0);
  v.set(129);
  CHECK(v.count() == 2);
  CHECK(v.lowest_set() == 0);
  v.flip(0);
  CHECK(v.lowest_set() == 129);
  CHECK_THROWS_AS(v.set(130), std::out_of_range);
  BitVector w(129);
  CHECK_THROWS_AS(v ^= w, std::invalid_argument);
}

TEST_CASE("reduce on the empty basis is the identity") {
  std::mt19937_64 rng(7);
  EchelonBasis basis(40);
  for (int t = 0; t < 20; ++t) {
    const BitVector v = random_vector(40, rng);
    CHECK(basis.reduce(v) == v);
  }
}

TEST_CASE("rows reduce to zero and reduce is linear and idempotent") {
  std::mt19937_64 rng(11);
  EchelonBasis basis(48);
  for (int t = 0; t < 10; ++t) basis.insert(random_vector(48, rng));
  for (const auto& row : basis.rows()) CHECK(basis.reduce(row).zero());
  for (int t = 0; t < 50; ++t) {
    const BitVector u = random_vector(48, rng);
    const BitVector w = random_vector(48, rng);
    CHECK(basis.reduce(u ^ w) == (basis.reduce(u) ^ basis.reduce(w)));
    CHECK(basis.reduce(basis.reduce(u)) == basis.reduce(u));
  }
}

TEST_CASE("insert of zero on the empty basis does not grow") {
  EchelonBasis basis(6);
  CHECK_FALSE(basis.insert(BitVector(6)));
  CHECK(basis.rank() == 0);
}

TEST_CASE("rank of three independent vectors of length 6 via span oracle") {
  std::mt19937_64 rng(23);
  // Draw triples until the oracle certifies independence (all 8 XOR
  // combinations distinct), then the echelon rank must be 3.
  for (int trial = 0; trial < 5;) {
    std::vector<BitVector> vecs{random_vector(6, rng), random_vector(6, rng),
                                random_vector(6, rng)};
    const auto span = span_oracle(vecs, 6);
    if (span.size() != 8) continue;
    EchelonBasis basis(6);
    for (const auto& v : vecs) basis.insert(v);
    CHECK(basis.rank() == 3);
    ++trial;
  }
}

TEST_CASE("standard basis of length 6 has rank 6") {
  EchelonBasis basis(6);
  for (std::size_t i = 0; i < 6; ++i) basis.insert(BitVector::unit(6, i));
  CHECK(basis.rank() == 6);
  CHECK(basis.free_columns().empty());
}

TEST_CASE("insert never decreases rank; inserting twice grows once") {
  std::mt19937_64 rng(31);
  EchelonBasis basis(32);
  std::size_t rank = 0;
  for (int t = 0; t < 40; ++t) {
    const BitVector v = random_vector(32, rng);
    const bool grew_first = basis.insert(v);
    CHECK(basis.rank() >= rank);
    rank = basis.rank();
    CHECK_FALSE(basis.insert(v));
    CHECK(basis.rank() == rank);
    (void)grew_first;
  }
}

TEST_CASE("canonical forms classify cosets exhaustively up to dimension 10") {
  std::mt19937_64 rng(47);
  const std::size_t len = 10;
  EchelonBasis basis(len);
  for (int t = 0; t < 4; ++t) basis.insert(random_vector(len, rng));

  std::vector<BitVector> span_members;
  for (const auto& row : basis.rows()) span_members.push_back(row);
  const auto span = span_oracle(span_members, len);

  std::vector<BitVector> canon;
  for (std::size_t x = 0; x < (std::size_t{1} << len); ++x) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i)
      if (x & (std::size_t{1} << i)) v.set(i);
    canon.push_back(basis.reduce(v));
  }
  for (std::size_t x = 0; x < canon.size(); ++x) {
    for (std::size_t y = x; y < canon.size(); ++y) {
      BitVector diff(len);
      for (std::size_t i = 0; i < len; ++i)
        if (((x ^ y) >> i) & 1) diff.set(i);
      const bool same_coset = span.count(diff) > 0;
      CHECK((canon[x] == canon[y]) == same_coset);
    }
  }
}

TEST_CASE("is_invertible on identity and zero") {
  CHECK(is_invertible(BitMatrix::identity(5)));
  CHECK_FALSE(is_invertible(BitMatrix::zero(3, 3)));
  CHECK_THROWS_AS(is_invertible(BitMatrix::zero(2, 3)), std::invalid_argument);
}

TEST_CASE("count of invertible 4x4 matrices over F2 is 20160") {
  std::size_t invertible = 0;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    BitMatrix m = BitMatrix::zero(4, 4);
    for (unsigned r = 0; r < 4; ++r)
      for (unsigned c = 0; c < 4; ++c)
        if (bits & (1u << (r * 4 + c))) m.set(r, c);
    if (is_invertible(m)) ++invertible;
  }
  CHECK(invertible == 20160);
  // Product formula for |GL_4(F2)|.
  std::size_t formula = 1;
  for (unsigned i = 0; i < 4; ++i) formula *= (16u - (1u << i));
  CHECK(invertible == formula);
}

TEST_CASE("span solver expresses members over the inserted family") {
  std::mt19937_64 rng(59);
  const std::size_t len = 24;
  std::vector<BitVector> inserted;
  SpanSolver solver(len, 40);
  for (int t = 0; t < 40; ++t) {
    inserted.push_back(random_vector(len, rng));
    solver.insert(inserted.back());
  }
  for (int t = 0; t < 30; ++t) {
    // A random combination of inserted vectors must be expressible, and the
    // returned combination must reproduce it.
    BitVector target(len);
    std::vector<bool> chosen(inserted.size());
    for (std::size_t i = 0; i < inserted.size(); ++i)
      if (rng() & 1) {
        target ^= inserted[i];
        chosen[i] = true;
      }
    const auto combo = solver.express(target);
    REQUIRE(combo.has_value());
    BitVector rebuilt(len);
    combo->for_each_set([&](std::size_t tag) { rebuilt ^= inserted[tag]; });
    CHECK(rebuilt == target);
  }
  // A vector outside the span must be rejected.
  SpanSolver small(8, 4);
  small.insert(BitVector::unit(8, 1));
  small.insert(BitVector::unit(8, 2));
  CHECK_FALSE(small.express(BitVector::unit(8, 0)).has_value());
}

TEST_SUITE_END();
