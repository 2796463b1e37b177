#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "unitgroup/quotient.hpp"

using namespace unitgroup;

namespace {

struct S3Rings {
  GroupPtr g = index_group(symmetric_group(3));
  PermSet gens = PermSet(3, {parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  AlgebraElement h1 = AlgebraElement::from_set(g, *g->perms());
  AlgebraElement h2 = AlgebraElement::from_perms(
      g, {Permutation(3), parse_cycles("(1,2,3)", 3), parse_cycles("(1,3,2)", 3)});
  QuotientRing r1 = QuotientRing::build(g, close(g, gens, {h1}));
  QuotientRing r2 = QuotientRing::build(g, close(g, gens, {h2}));
};

QuotientRing build_s4_quotient(const char* sigma) {
  const GroupPtr g = index_group(symmetric_group(4));
  const PermSet gens(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement t4 = AlgebraElement::from_perms(
      g, {Permutation(4), parse_cycles("(2,4)", 4), parse_cycles("(1,2)(3,4)", 4)});
  const AlgebraElement x2 = AlgebraElement::from_set(
      g, generated_subgroup(
             PermSet(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)})));
  return QuotientRing::build(
      g, close(g, gens,
               {add(t4, AlgebraElement::from_perms(g, {parse_cycles(sigma, 4)})), x2}));
}

// Brute-force two-sided inverse search over the whole ring.
std::size_t brute_force_unit_count(const F2AlgebraTable& T) {
  std::size_t count = 0;
  for (std::uint32_t x = 0; x < T.size(); ++x) {
    for (std::uint32_t y = 0; y < T.size(); ++y) {
      if (T.mul(x, y) == T.unity() && T.mul(y, x) == T.unity()) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool left_unit(const F2AlgebraTable& T, std::uint32_t x) {
  BitMatrix m = BitMatrix::zero(T.dim(), T.dim());
  for (unsigned j = 0; j < T.dim(); ++j) {
    const std::uint32_t col = T.mul(x, 1u << j);
    for (unsigned i = 0; i < T.dim(); ++i)
      if (col & (1u << i)) m.set(j, i);
  }
  return is_invertible(m);
}

bool right_unit(const F2AlgebraTable& T, std::uint32_t x) {
  BitMatrix m = BitMatrix::zero(T.dim(), T.dim());
  for (unsigned j = 0; j < T.dim(); ++j) {
    const std::uint32_t col = T.mul(1u << j, x);
    for (unsigned i = 0; i < T.dim(); ++i)
      if (col & (1u << i)) m.set(j, i);
  }
  return is_invertible(m);
}

}  // namespace

TEST_SUITE_BEGIN("quotient");

TEST_CASE("build: ring sizes") {
  S3Rings f;
  CHECK(f.r1.size() == 32);
  CHECK(f.r2.size() == 16);
  CHECK(build_s4_quotient("(1,2,3,4)").size() == 128);
}

TEST_CASE("quotient by the zero ideal is the group algebra itself") {
  S3Rings f;
  const QuotientRing whole =
      QuotientRing::build(f.g, close(f.g, f.gens, {AlgebraElement::zero(f.g)}));
  CHECK(whole.dim() == 6);
  const F2AlgebraTable t = to_table(whole);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j)
      CHECK(t.basis_product(i, j) == (1u << f.g->mul(i, j)));
  CHECK(t.unity() == (1u << f.g->identity()));
}

TEST_CASE("dimension bound is enforced") {
  S3Rings f;
  CHECK_THROWS_AS(
      QuotientRing::build(f.g, close(f.g, f.gens, {AlgebraElement::zero(f.g)}), 5),
      std::invalid_argument);
}

TEST_CASE("unit reports") {
  S3Rings f;
  const UnitGroupReport u1 = unit_report(f.r1);
  CHECK(u1.ring_size == 32);
  CHECK(u1.unit_count == 6);
  CHECK(u1.identity_criterion);
  CHECK(u1.ideal_dim == 1);

  const UnitGroupReport u2 = unit_report(f.r2);
  CHECK(u2.ring_size == 16);
  CHECK(u2.unit_count == 6);
  CHECK(u2.identity_criterion);

  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  const UnitGroupReport uq = unit_report(q1);
  CHECK(uq.ring_size == 128);
  CHECK(uq.unit_count == 24);
  CHECK(uq.identity_criterion);
  // Unit group order spectrum matches the group's.
  CHECK(uq.spectrum == order_spectrum(symmetric_group(4)));
  // Direct route: the unit group is isomorphic to S4.
  CHECK_FALSE(group_isomorphisms(*uq.unit_group, *q1.group()).empty());

  // Spectrum sums to the unit count.
  std::size_t total = 0;
  for (const auto& [ord, cnt] : uq.spectrum) total += cnt;
  CHECK(total == uq.unit_count);
}

TEST_CASE("identity criterion fails on the unit ideal") {
  S3Rings f;
  const QuotientRing collapsed =
      QuotientRing::build(f.g, close(f.g, f.gens, {AlgebraElement::identity(f.g)}));
  CHECK(collapsed.size() == 1);
  const UnitGroupReport u = unit_report(collapsed);
  CHECK(u.unit_count == 1);  // zero-ring convention
  CHECK_FALSE(u.identity_criterion);
}

TEST_CASE("canonicalize is a ring homomorphism (random pairs)") {
  S3Rings f;
  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  std::mt19937_64 rng(271);
  const QuotientRing* rings3[] = {&f.r1, &f.r2, &q1};
  for (const QuotientRing* R : rings3) {
    const std::size_t n = R->group()->size();
    for (int t = 0; t < 1000; ++t) {
      BitVector u(n), v(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1) u.set(i);
        if (rng() & 1) v.set(i);
      }
      const AlgebraElement x(R->group(), u);
      const AlgebraElement y(R->group(), v);
      const std::uint32_t lhs = R->project(mul(x, y).coeffs());
      const std::uint32_t rhs = R->mul_bits(R->project(u), R->project(v));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("left and right unit tests agree exhaustively on the 128-element ring") {
  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  const F2AlgebraTable t = to_table(q1);
  for (std::uint32_t x = 0; x < t.size(); ++x)
    CHECK(left_unit(t, x) == right_unit(t, x));
}

TEST_CASE("unit_scan agrees with brute-force inverse search on rings <= 128 elements") {
  S3Rings f;
  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  const QuotientRing q2 = build_s4_quotient("(1,4,3,2)");
  const QuotientRing* rings4[] = {&f.r1, &f.r2, &q1, &q2};
  for (const QuotientRing* R : rings4) {
    const F2AlgebraTable t = to_table(*R);
    CHECK(unit_scan(t).unit_count == brute_force_unit_count(t));
  }
}

TEST_CASE("max units over principal quotients") {
  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  const MaxUnitsScan mx = max_units_over_principal_quotients(q1);
  CHECK(mx.max_units == 6);

  // F2 as a quotient of the trivial group algebra: only the collapse exists.
  const PermSet trivial = generated_subgroup(PermSet(1, {Permutation(1)}));
  const GroupPtr tg = index_group(trivial);
  const QuotientRing f2 = QuotientRing::build(
      tg, close(tg, trivial, {AlgebraElement::zero(tg)}));
  CHECK(f2.size() == 2);
  CHECK(max_units_over_principal_quotients(f2).max_units == 1);

  // F2[S3]/(H2) is simple (it is a full matrix ring): every nonzero
  // principal ideal is the whole ring, so each quotient is the zero ring.
  S3Rings f;
  CHECK(max_units_over_principal_quotients(f.r2).max_units == 1);
}

TEST_CASE("to_table dimensions and associativity") {
  S3Rings f;
  CHECK(to_table(f.r2).dim() == 4);
  const QuotientRing q1 = build_s4_quotient("(1,2,3,4)");
  const F2AlgebraTable t = to_table(q1);
  CHECK(t.dim() == 7);
  CHECK(t.check_associativity());
  CHECK(t.check_unity());
}

TEST_CASE("unit report serializes to the documented JSON shape") {
  S3Rings f;
  const std::string json = to_json(unit_report(f.r1));
  CHECK(json.find("\"ring_size\":32") != std::string::npos);
  CHECK(json.find("\"unit_count\":6") != std::string::npos);
  CHECK(json.find("\"identity_criterion\":true") != std::string::npos);
  CHECK(json.find("\"spectrum\"") != std::string::npos);
  CHECK(json.find("\"ideal_dim\":1") != std::string::npos);
  CHECK(json.find("\"generators\"") != std::string::npos);
}

TEST_CASE("unit group labels render coset representatives") {
  S3Rings f;
  const UnitGroupReport u = unit_report(f.r2);
  // The image of the identity is the ring unity and must be labeled with a
  // representative that reduces to it.
  const unsigned one_idx = u.unit_group->identity();
  CHECK(u.unit_group->value(one_idx) == f.r2.one());
  CHECK_FALSE(u.unit_group->label(one_idx).empty());
}

TEST_SUITE_END();
