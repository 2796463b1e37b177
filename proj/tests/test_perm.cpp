#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>
#include <set>

#include "unitgroup/perm.hpp"

using namespace unitgroup;

namespace {

// Second, independently coded composition: walks the image arrays with
// explicit indexing, no shared code with compose().
Permutation oracle_compose(const Permutation& a, const Permutation& b) {
  std::vector<std::uint8_t> out;
  out.reserve(a.degree());
  for (unsigned point = 0; point < a.degree(); ++point) {
    const unsigned mid = b.image()[point];
    out.push_back(a.image()[mid]);
  }
  return Permutation(out);
}

std::multiset<std::size_t> class_sizes(const std::vector<PermSet>& classes) {
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  return sizes;
}

}  // namespace

TEST_SUITE_BEGIN("perm");

TEST_CASE("parse_cycles on the documented grammar") {
  const Permutation swaps = parse_cycles("(1,2)(3,4)", 4);
  CHECK(swaps(0) == 1);
  CHECK(swaps(1) == 0);
  CHECK(swaps(2) == 3);
  CHECK(swaps(3) == 2);
  CHECK(parse_cycles("(12)(34)", 4) == swaps);  // single-digit run form

  CHECK(parse_cycles("e", 4).is_identity());
  CHECK(parse_cycles("", 4).is_identity());

  const Permutation tau = parse_cycles("(1,2,3,4,5)", 7);
  CHECK(tau(4) == 0);
  CHECK(tau(5) == 5);  // fixes 6 and 7
  CHECK(tau(6) == 6);
  CHECK(tau.order() == 5);
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(parse_cycles("(1,x)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1,2", 4), std::invalid_argument);
}

TEST_CASE("print/parse round-trip on all of S5") {
  for (const auto& p : symmetric_group(5))
    CHECK(parse_cycles(print_cycles(p), 5) == p);
}

TEST_CASE("compose basics") {
  const Permutation id(4);
  const Permutation swap = parse_cycles("(1,2)", 4);
  const Permutation x = parse_cycles("(1,3,4)", 4);
  CHECK(compose(id, x) == x);
  CHECK(compose(x, id) == x);
  CHECK(compose(swap, swap) == id);

  Permutation tau = parse_cycles("(1,2,3,4,5)", 5);
  Permutation acc = tau;
  for (int k = 0; k < 4; ++k) acc = compose(acc, tau);
  CHECK(acc.is_identity());

  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("composition is associative: exhaustive on S4, sampled on S7") {
  const PermSet s4 = symmetric_group(4);
  for (const auto& a : s4)
    for (const auto& b : s4)
      for (const auto& c : s4)
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));

  const PermSet s7 = symmetric_group(7);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dist(0, s7.size() - 1);
  for (int t = 0; t < 100000; ++t) {
    const auto& a = s7[dist(rng)];
    const auto& b = s7[dist(rng)];
    const auto& c = s7[dist(rng)];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("conjugate against a brute-force S3 oracle") {
  const PermSet s3 = symmetric_group(3);
  for (const auto& g : s3)
    for (const auto& x : s3)
      CHECK(conjugate(g, x) ==
            oracle_compose(g, oracle_compose(x, g.inverse())));

  CHECK(conjugate(parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)) ==
        parse_cycles("(1,3,2)", 3));
  const Permutation x = parse_cycles("(1,3)", 3);
  CHECK(conjugate(Permutation(3), x) == x);
  CHECK(conjugate(x, Permutation(3)).is_identity());
}

TEST_CASE("symmetric and alternating group enumeration") {
  CHECK(symmetric_group(3).size() == 6);
  CHECK(alternating_group(4).size() == 12);
  CHECK(alternating_group(8).size() == 20160);
  CHECK(symmetric_group(3).group());
  CHECK_THROWS_AS(symmetric_group(10), std::invalid_argument);
  CHECK_THROWS_AS(alternating_group(0), std::invalid_argument);
  // Parity is determined by cycle type.
  for (const auto& p : alternating_group(5)) CHECK(p.sign() == 1);
}

TEST_CASE("generated subgroups") {
  const PermSet h =
      generated_subgroup(PermSet(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)}));
  CHECK(h.size() == 6);
  CHECK(h.group());
  CHECK(h.check_group_axioms());

  CHECK(generated_subgroup(PermSet(4, {Permutation(4)})).size() == 1);

  const PermSet d5 = generated_subgroup(
      PermSet(5, {parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,5)(3,4)", 5)}));
  CHECK(d5.size() == 10);
  CHECK(d5.check_group_axioms());
}

TEST_CASE("normalizer of {e, tau^2, tau^3}") {
  const Permutation tau7 = parse_cycles("(1,2,3,4,5)", 7);
  const PermSet s7 = symmetric_group(7);
  const PermSet t7(7, {Permutation(7), tau7.pow(2), tau7.pow(3)});
  const PermSet n7 = normalizer_of_set(s7, t7);
  CHECK(n7.size() == 20);
  CHECK(n7.check_group_axioms());
  const PermSet expected = generated_subgroup(
      PermSet(7, {tau7, parse_cycles("(2,5)(3,4)", 7), parse_cycles("(6,7)", 7)}));
  CHECK(n7 == expected);

  // Normalizer of {e} is the whole group.
  const PermSet s4 = symmetric_group(4);
  CHECK(normalizer_of_set(s4, PermSet(4, {Permutation(4)})) == s4);

  const Permutation tau8 = parse_cycles("(1,2,3,4,5)", 8);
  const PermSet a8 = alternating_group(8);
  const PermSet n8 =
      normalizer_of_set(a8, PermSet(8, {Permutation(8), tau8.pow(2), tau8.pow(3)}));
  CHECK(n8.size() == 30);

  // T must be a subset of G.
  CHECK_THROWS_AS(
      normalizer_of_set(alternating_group(4), PermSet(4, {parse_cycles("(1,2)", 4)})),
      std::invalid_argument);
}

TEST_CASE("normalizer structure for n = 5..7") {
  for (unsigned n = 5; n <= 7; ++n) {
    const Permutation tau = parse_cycles("(1,2,3,4,5)", n);
    const PermSet sn = symmetric_group(n);
    const PermSet t(n, {Permutation(n), tau.pow(2), tau.pow(3)});
    std::vector<Permutation> gens{tau, parse_cycles("(2,5)(3,4)", n)};
    for (unsigned p = 6; p < n; ++p)
      gens.push_back(parse_cycles("(" + std::to_string(p) + "," +
                                      std::to_string(p + 1) + ")",
                                  n));
    const PermSet expected = generated_subgroup(PermSet(n, std::move(gens)));
    const PermSet got = normalizer_of_set(sn, t);
    CHECK(got == expected);
    std::size_t fact = 1;
    for (unsigned k = 2; k <= n - 5; ++k) fact *= k;
    CHECK(got.size() == 10 * fact);
  }
}

TEST_CASE("centralizer of sets") {
  const PermSet s7 = symmetric_group(7);
  const Permutation tau7 = parse_cycles("(1,2,3,4,5)", 7);
  const PermSet n7 = normalizer_of_set(
      s7, PermSet(7, {Permutation(7), tau7.pow(2), tau7.pow(3)}));
  const PermSet z7 = centralizer_of_set(s7, n7);
  CHECK(z7 == PermSet(7, {Permutation(7), parse_cycles("(6,7)", 7)}));
  CHECK(z7.check_group_axioms());

  const PermSet s4 = symmetric_group(4);
  CHECK(centralizer_of_set(s4, PermSet(4, {Permutation(4)})) == s4);

  const PermSet a8 = alternating_group(8);
  const Permutation tau8 = parse_cycles("(1,2,3,4,5)", 8);
  const PermSet n8 = normalizer_of_set(
      a8, PermSet(8, {Permutation(8), tau8.pow(2), tau8.pow(3)}));
  const PermSet z8 = centralizer_of_set(a8, n8);
  CHECK(z8.size() == 3);
  CHECK(z8 == generated_subgroup(PermSet(8, {parse_cycles("(6,7,8)", 8)})));
}

TEST_CASE("conjugacy classes") {
  const auto s3_classes = conjugacy_classes(symmetric_group(3));
  CHECK(class_sizes(s3_classes) == std::multiset<std::size_t>{1, 2, 3});

  const auto trivial = conjugacy_classes(generated_subgroup(PermSet(3, {Permutation(3)})));
  CHECK(trivial.size() == 1);

  const auto a4_classes = conjugacy_classes(alternating_group(4));
  CHECK(class_sizes(a4_classes) == std::multiset<std::size_t>{1, 3, 4, 4});
  // Classes are sorted by (size, minimal member) and sizes divide |G|.
  for (std::size_t i = 1; i < a4_classes.size(); ++i)
    CHECK(a4_classes[i - 1].size() <= a4_classes[i].size());
  for (const auto& c : a4_classes) CHECK(12 % c.size() == 0);
}

TEST_CASE("order spectra") {
  const std::map<unsigned, std::size_t> a4{{1, 1}, {2, 3}, {3, 8}};
  CHECK(order_spectrum(alternating_group(4)) == a4);

  const std::map<unsigned, std::size_t> triv{{1, 1}};
  CHECK(order_spectrum(generated_subgroup(PermSet(2, {Permutation(2)}))) == triv);

  const std::map<unsigned, std::size_t> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  CHECK(order_spectrum(symmetric_group(4)) == s4);

  // Spectrum values always sum to |G|.
  std::size_t total = 0;
  for (const auto& [ord, count] : order_spectrum(symmetric_group(5))) total += count;
  CHECK(total == 120);
}

TEST_CASE("scans are independent of the worker count") {
  const PermSet s8 = symmetric_group(8);
  const Permutation tau = parse_cycles("(1,2,3,4,5)", 8);
  const PermSet t(8, {Permutation(8), tau.pow(2), tau.pow(3)});
  const PermSet n1 = normalizer_of_set(s8, t, 1);
  const PermSet n4 = normalizer_of_set(s8, t, 4);
  CHECK(n1 == n4);
  CHECK(centralizer_of_set(s8, n1, 1) == centralizer_of_set(s8, n1, 4));
}

TEST_CASE("simplicity") {
  const auto a5 = is_simple(alternating_group(5));
  CHECK(a5.simple);
  CHECK(class_sizes(conjugacy_classes(alternating_group(5))) ==
        std::multiset<std::size_t>{1, 12, 12, 15, 20});

  const auto s3 = is_simple(symmetric_group(3));
  CHECK_FALSE(s3.simple);
  REQUIRE(s3.witness.has_value());
  CHECK(*s3.witness == alternating_group(3));

  const auto a4 = is_simple(alternating_group(4));
  CHECK_FALSE(a4.simple);
  REQUIRE(a4.witness.has_value());
  CHECK(a4.witness->size() == 4);

  CHECK(is_simple(alternating_group(6)).simple);
  CHECK(is_simple(alternating_group(7)).simple);
}

TEST_SUITE_END();
