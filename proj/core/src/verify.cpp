#include "unitgroup/verify.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace unitgroup {

namespace {

using Clock = std::chrono::steady_clock;

std::string show(bool b) { return b ? "true" : "false"; }
std::string show(const std::string& s) { return s; }
template <typename T>
  requires std::integral<T>
std::string show(T v) {
  return std::to_string(v);
}
std::string show(const std::map<unsigned, std::size_t>& spectrum) {
  std::string out = "{";
  bool first = true;
  for (const auto& [ord, count] : spectrum) {
    if (!first) out += ", ";
    out += std::to_string(ord) + ":" + std::to_string(count);
    first = false;
  }
  return out + "}";
}
std::string show(const PermSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += print_cycles(s[i]);
  }
  return out + "}";
}
std::string show(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out + "]";
}
std::string show(const std::set<std::size_t>& v) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : v) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string id) : start_(Clock::now()) {
    const auto& registry = claims_registry();
    const auto it = registry.find(id);
    if (it == registry.end())
      throw std::logic_error("verification id missing from the claims registry: " + id);
    report_.id = std::move(id);
    report_.section = it->second.section;
    report_.claim = it->second.claim;
  }

  void input(std::string name, std::string value) {
    report_.inputs.emplace_back(std::move(name), std::move(value));
  }

  template <typename T, typename U>
  void check(std::string name, const T& expected, const U& actual) {
    const bool ok = (expected == actual);
    report_.facts.push_back(Fact{std::move(name), show(expected), show(actual), ok});
  }

  void check_true(std::string name, bool actual) { check(std::move(name), true, actual); }

  void note(std::string name, std::string value) {
    report_.facts.push_back(Fact{std::move(name), value, value, true});
  }

  VerificationReport finish(bool obstructed = false) {
    bool all_ok = true;
    for (const auto& f : report_.facts) all_ok = all_ok && f.ok;
    report_.verdict = all_ok ? (obstructed ? "obstructed" : "pass") : "fail";
    report_.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                       start_)
                     .count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

std::size_t factorial(unsigned m) {
  std::size_t f = 1;
  for (unsigned k = 2; k <= m; ++k) f *= k;
  return f;
}

std::string long_cycle_text(unsigned from, unsigned to) {
  std::string s = "(";
  for (unsigned p = from; p <= to; ++p) {
    if (p != from) s += ",";
    s += std::to_string(p);
  }
  return s + ")";
}

PermSet perm_set(unsigned degree, std::initializer_list<Permutation> perms) {
  return PermSet(degree, std::vector<Permutation>(perms));
}

AlgebraElement subgroup_sum(const GroupPtr& G, const PermSet& H) {
  return AlgebraElement::from_set(G, H);
}

}  // namespace

const std::map<std::string, ClaimAnchor>& claims_registry() {
  static const std::map<std::string, ClaimAnchor> registry = [] {
    std::map<std::string, ClaimAnchor> reg;
    reg["c5"] = {"cyclic-c5",
                 "No finite ring has unit group cyclic of order 5: every quotient of "
                 "F2[C5] with more than one unit has at least 15 units, and none has "
                 "exactly 5."};
    reg["s3"] = {"symmetric-s3",
                 "F2[S3]/(H1) is a 32-element ring and F2[S3]/(H2) a 16-element ring, "
                 "both with unit group isomorphic to S3, and the 16-element ring is "
                 "isomorphic to the 2x2 matrix ring over F2."};
    reg["s4"] = {"symmetric-s4",
                 "F2[S4]/J1 and F2[S4]/J2 are nonisomorphic 128-element rings with "
                 "exactly 24 units and unit group isomorphic to S4; they are opposite "
                 "rings, and every proper further principal quotient has at most 6 "
                 "units."};
    reg["a4"] = {"alternating-a4",
                 "F2[A4]/J is a 32-element ring with unit group isomorphic to A4; the "
                 "Hurwitz quaternions mod 2 form a 16-element ring with 12 units whose "
                 "unit group is A4, isomorphic to the quotient of F2[A4] by the ideal "
                 "generated by e + (1,2,3) + (1,3,2)."};
    reg["a8"] = {"alternating-a8",
                 "The unit group of the 4x4 matrix ring over F2 has order 20160 and "
                 "matches A8 in element-order spectrum and simplicity."};
    for (unsigned n = 5; n <= 9; ++n) {
      const std::string id = "sn.n" + std::to_string(n);
      std::string claim =
          "No finite ring has unit group isomorphic to S" + std::to_string(n) +
          ": the group element congruent to the unit e + t^2 + t^3 (t a 5-cycle) is "
          "confined to the centralizer of the normalizer of its support, and every "
          "candidate forces a weight-2 element into the ideal";
      claim += (n == 7) ? ", including the transposition case via the 16th power."
                        : ".";
      reg[id] = {"symmetric-nonexistence", std::move(claim)};
    }
    for (unsigned n = 5; n <= 9; ++n) {
      const std::string id = "an.n" + std::to_string(n);
      if (n == 8) {
        reg[id] = {"alternating-nonexistence",
                   "For A8 the candidates form a cyclic group of order 3 and the "
                   "characteristic-2 powering returns the element unchanged, so no "
                   "weight-2 contradiction arises; the obstruction is consistent with "
                   "the 4x4 matrix ring over F2 having unit group A8."};
      } else {
        reg[id] = {"alternating-nonexistence",
                   "No finite ring has unit group isomorphic to A" + std::to_string(n) +
                       ": the centralizer of the normalizer of the support of "
                       "e + t^2 + t^3 is trivial, forcing a weight-2 element into the "
                       "ideal."};
      }
    }
    return reg;
  }();
  return registry;
}

VerificationReport cmd_c5() {
  ReportBuilder rb("c5");
  const Permutation tau = parse_cycles("(1,2,3,4,5)", 5);
  const PermSet group_gens = perm_set(5, {tau});
  const PermSet c5 = generated_subgroup(group_gens);
  const GroupPtr G = index_group(c5);
  rb.input("group", "C5 = <(1,2,3,4,5)>");
  rb.input("algebra", "F2[C5], dimension 5");

  std::vector<Ideal> distinct;
  std::vector<std::size_t> unit_counts;
  for (std::uint32_t bits = 0; bits < 32; ++bits) {
    BitVector coeffs(5);
    for (unsigned k = 0; k < 5; ++k)
      if (bits & (1u << k)) coeffs.set(k);
    Ideal I = close(G, group_gens, {AlgebraElement(G, std::move(coeffs))});
    bool known = false;
    for (const auto& J : distinct)
      if (J.basis() == I.basis()) {
        known = true;
        break;
      }
    if (!known) distinct.push_back(std::move(I));
  }
  int tag = 0;
  for (const auto& J : distinct) {
    unit_counts.push_back(unit_report(QuotientRing::build(G, J)).unit_count);
    rb.note("ideal_" + std::to_string(tag++),
            "dim " + std::to_string(J.dim()) + ", generated by " +
                J.generators()[0].to_text() + ", quotient has " +
                std::to_string(unit_counts.back()) + " unit(s)");
  }

  rb.check("distinct_principal_ideals", std::size_t{4}, distinct.size());
  // The zero ideal is the closure of the zero element, always first.
  rb.check("zero_ideal_quotient_units", std::size_t{15}, unit_counts.front());
  bool none_is_5 = true, nontrivial_at_least_15 = true;
  std::set<std::size_t> observed;
  for (std::size_t c : unit_counts) {
    observed.insert(c);
    if (c == 5) none_is_5 = false;
    if (c > 1 && c < 15) nontrivial_at_least_15 = false;
  }
  rb.check_true("no_quotient_has_exactly_5_units", none_is_5);
  rb.check_true("unit_counts_above_1_are_at_least_15", nontrivial_at_least_15);
  rb.check("observed_unit_counts", std::set<std::size_t>{1, 15}, observed);
  return rb.finish();
}

VerificationReport cmd_s3() {
  ReportBuilder rb("s3");
  const PermSet s3 = symmetric_group(3);
  const GroupPtr G = index_group(s3);
  const PermSet group_gens =
      perm_set(3, {parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  const Permutation tau = parse_cycles("(1,2,3)", 3);

  const AlgebraElement h1 = AlgebraElement::from_set(G, s3);
  const AlgebraElement h2 = AlgebraElement::from_perms(
      G, {Permutation(3), tau, compose(tau, tau)});
  const AlgebraElement e = AlgebraElement::identity(G);
  rb.input("group", "S3");
  rb.input("H1", h1.to_text());
  rb.input("H2", h2.to_text());

  rb.check_true("h1_squared_is_zero", mul(h1, h1) == AlgebraElement::zero(G));
  const AlgebraElement t = add(h1, e);
  rb.check_true("(h1+e)_squared_is_identity", mul(t, t) == e);

  // Support of the unit H1 + e is S3 minus the identity; its normalizer is
  // all of S3, so the congruent group element must be central, hence e.
  std::vector<Permutation> support;
  for (const auto& p : s3)
    if (!p.is_identity()) support.push_back(p);
  const PermSet t_set(3, std::move(support));
  rb.check_true("normalizer_of_support_is_S3",
                normalizer_of_set(s3, t_set) == s3);
  rb.check("sigma_candidates", show(perm_set(3, {Permutation(3)})),
           show(sigma_candidates(s3, t_set)));

  const Ideal i1 = close(G, group_gens, {h1});
  const Ideal i2 = close(G, group_gens, {h2});
  const QuotientRing r1 = QuotientRing::build(G, i1);
  const QuotientRing r2 = QuotientRing::build(G, i2);
  const UnitGroupReport u1 = unit_report(r1);
  const UnitGroupReport u2 = unit_report(r2);

  rb.check("ring_size[(H1)]", std::uint64_t{32}, u1.ring_size);
  rb.check("ring_size[(H2)]", std::uint64_t{16}, u2.ring_size);
  rb.check("unit_count[(H1)]", std::size_t{6}, u1.unit_count);
  rb.check("unit_count[(H2)]", std::size_t{6}, u2.unit_count);
  rb.check_true("identity_criterion[(H1)]", u1.identity_criterion);
  rb.check_true("identity_criterion[(H2)]", u2.identity_criterion);
  rb.check_true("ideal_(H2)_contains_H1", contains(i2, h1));

  bool iso_found = unit_spanned_iso(to_table(r2), matrix_ring(2)).has_value();
  rb.check_true("iso_to_M2(F2)_found", iso_found);
  return rb.finish();
}

namespace {

struct NonexistenceSetup {
  PermSet group;
  GroupPtr G;
  PermSet closure_gens;
  Permutation tau;
  PermSet t_set;           // {e, tau^2, tau^3}
  AlgebraElement t_elem;   // e + tau^2 + tau^3
};

NonexistenceSetup make_setup(unsigned n, bool alternating) {
  PermSet group = alternating ? alternating_group(n) : symmetric_group(n);
  GroupPtr G = index_group(group, IndexedGroup::Options{kDefaultTableBound, true});
  const Permutation tau = parse_cycles("(1,2,3,4,5)", n);

  PermSet closure_gens;
  if (alternating) {
    // Parity-correct generating pair for An.
    const std::string big = (n % 2 == 1) ? long_cycle_text(1, n) : long_cycle_text(2, n);
    closure_gens = perm_set(n, {parse_cycles("(1,2,3)", n), parse_cycles(big, n)});
  } else {
    closure_gens =
        perm_set(n, {parse_cycles("(1,2)", n), parse_cycles(long_cycle_text(1, n), n)});
  }

  const Permutation tau2 = compose(tau, tau);
  const Permutation tau3 = compose(tau2, tau);
  PermSet t_set(n, {Permutation(n), tau2, tau3});
  AlgebraElement t_elem = AlgebraElement::from_set(G, t_set);
  return NonexistenceSetup{std::move(group), std::move(G), std::move(closure_gens),
                           tau, std::move(t_set), std::move(t_elem)};
}

void check_t_is_order3_unit(ReportBuilder& rb, const NonexistenceSetup& s, unsigned n) {
  const AlgebraElement e = AlgebraElement::identity(s.G);
  rb.check_true("t_cubed_is_identity", power(s.t_elem, 3) == e);
  const AlgebraElement claimed_inverse = AlgebraElement::from_perms(
      s.G, {Permutation(n), s.tau, s.tau.pow(4)});
  rb.check_true("t_times_(e+tau+tau^4)_is_identity",
                mul(s.t_elem, claimed_inverse) == e);
}

void check_candidate_contradictions(ReportBuilder& rb, const NonexistenceSetup& s,
                                    const PermSet& candidates, bool expect_obstruction) {
  const std::size_t n = s.group.degree();
  for (const auto& sigma : candidates) {
    const std::string who = print_cycles(sigma);
    if (sigma.is_identity()) {
      const AlgebraElement forced =
          add(s.t_elem, AlgebraElement::identity(s.G));  // tau^2 + tau^3
      rb.check("forced_weight[sigma=" + who + "]", std::size_t{2}, weight(forced));
      continue;
    }
    // Raise e + tau^2 + tau^3 + sigma to the 2^k-th power with 2^k = 1 mod 5
    // and sigma^(2^k) trivial; in characteristic 2 the sum of commuting terms
    // powers termwise.
    std::vector<Permutation> terms{Permutation(static_cast<unsigned>(n)),
                                   compose(s.tau, s.tau),
                                   compose(compose(s.tau, s.tau), s.tau), sigma};
    unsigned k = 0;
    for (unsigned cand_k = 4; cand_k <= 16; cand_k += 4) {
      Permutation p = sigma;
      for (unsigned i = 0; i < cand_k; ++i) p = compose(p, p);
      if (p.is_identity()) {
        k = cand_k;
        break;
      }
    }
    const AlgebraElement sum = add(s.t_elem, AlgebraElement::from_perms(s.G, {sigma}));
    if (expect_obstruction) {
      rb.check("two_power_exponent_killing[sigma=" + who + "]", unsigned{0}, k);
      const AlgebraElement frob = frobenius_power_of_commuting_sum(s.G, terms, 4);
      rb.check_true("frobenius16_returns_element_unchanged[sigma=" + who + "]",
                    frob == sum);
      rb.check_true("direct_power16_returns_element_unchanged[sigma=" + who + "]",
                    power(sum, 16) == sum);
    } else {
      rb.check_true("two_power_exponent_found[sigma=" + who + "]", k != 0);
      if (k == 0) continue;
      const AlgebraElement frob = frobenius_power_of_commuting_sum(s.G, terms, k);
      rb.check("frobenius_power_weight[sigma=" + who + "]", std::size_t{2},
               weight(frob));
      rb.check_true("frobenius_matches_direct_power[sigma=" + who + "]",
                    frob == power(sum, std::uint64_t{1} << k));
    }
  }
}

void closure_cross_check(ReportBuilder& rb, const NonexistenceSetup& s,
                         const PermSet& candidates) {
  if (s.group.size() > kDefaultClosureBound) {
    rb.note("closure_cross_check", "skipped (group algebra above closure bound)");
    return;
  }
  for (const auto& sigma : candidates) {
    const std::string who = print_cycles(sigma);
    const AlgebraElement gen =
        add(s.t_elem, AlgebraElement::from_perms(s.G, {sigma}));
    const Ideal I = close(s.G, s.closure_gens, {gen});
    rb.check_true("closure_weight2_witness[sigma=" + who + "]",
                  weight2_witness(I).has_value());
  }
}

}  // namespace

std::vector<VerificationReport> cmd_sn(const VerifyOptions& opts) {
  if (opts.max_n < 5 || opts.max_n > 9)
    throw std::invalid_argument("cmd_sn: max_n must lie in 5..9");
  std::vector<VerificationReport> reports;
  for (unsigned n = 5; n <= opts.max_n; ++n) {
    ReportBuilder rb("sn.n" + std::to_string(n));
    NonexistenceSetup s = make_setup(n, /*alternating=*/false);
    rb.input("group", "S" + std::to_string(n));
    rb.input("tau", print_cycles(s.tau));
    rb.input("unit", s.t_elem.to_text());
    rb.input("closure_generators", show(s.closure_gens));

    rb.check("group_order", factorial(n), s.group.size());
    check_t_is_order3_unit(rb, s, n);

    // Normalizer of {e, tau^2, tau^3} is the dihedral group on {1..5} times
    // the symmetric group on the remaining points.
    std::vector<Permutation> expected_gens{s.tau, parse_cycles("(2,5)(3,4)", n)};
    for (unsigned p = 6; p < n; ++p)
      expected_gens.push_back(
          parse_cycles("(" + std::to_string(p) + "," + std::to_string(p + 1) + ")", n));
    const PermSet expected_normalizer =
        generated_subgroup(PermSet(n, std::move(expected_gens)));
    const PermSet normalizer = normalizer_of_set(s.group, s.t_set, opts.threads);
    rb.check("normalizer_order", 10 * factorial(n - 5), normalizer.size());
    rb.check_true("normalizer_equals_D5_x_S" + std::to_string(n - 5),
                  normalizer == expected_normalizer);

    const PermSet candidates = centralizer_of_set(s.group, normalizer, opts.threads);
    PermSet expected_candidates =
        (n == 7) ? perm_set(7, {Permutation(7), parse_cycles("(6,7)", 7)})
                 : perm_set(n, {Permutation(n)});
    rb.check("sigma_candidates", show(expected_candidates), show(candidates));

    check_candidate_contradictions(rb, s, candidates, /*expect_obstruction=*/false);
    closure_cross_check(rb, s, candidates);
    reports.push_back(rb.finish());
  }
  return reports;
}

std::vector<VerificationReport> cmd_an(const VerifyOptions& opts) {
  if (opts.max_n < 5 || opts.max_n > 9)
    throw std::invalid_argument("cmd_an: max_n must lie in 5..9");
  std::vector<VerificationReport> reports;
  for (unsigned n = 5; n <= opts.max_n; ++n) {
    ReportBuilder rb("an.n" + std::to_string(n));
    NonexistenceSetup s = make_setup(n, /*alternating=*/true);
    rb.input("group", "A" + std::to_string(n));
    rb.input("tau", print_cycles(s.tau));
    rb.input("unit", s.t_elem.to_text());
    rb.input("closure_generators", show(s.closure_gens));

    const unsigned m = n - 5;
    const std::size_t am_order = (m <= 1) ? 1 : factorial(m) / 2;
    rb.check("group_order", factorial(n) / 2, s.group.size());
    check_t_is_order3_unit(rb, s, n);

    std::vector<Permutation> expected_gens{s.tau, parse_cycles("(2,5)(3,4)", n)};
    for (unsigned p = 6; p + 2 <= n; ++p)
      expected_gens.push_back(parse_cycles("(" + std::to_string(p) + "," +
                                               std::to_string(p + 1) + "," +
                                               std::to_string(p + 2) + ")",
                                           n));
    const PermSet expected_normalizer =
        generated_subgroup(PermSet(n, std::move(expected_gens)));
    const PermSet normalizer = normalizer_of_set(s.group, s.t_set, opts.threads);
    rb.check("normalizer_order", 10 * am_order, normalizer.size());
    rb.check_true("normalizer_equals_D5_x_A" + std::to_string(m),
                  normalizer == expected_normalizer);

    const PermSet candidates = centralizer_of_set(s.group, normalizer, opts.threads);
    PermSet expected_candidates = perm_set(n, {Permutation(n)});
    if (n == 8)
      expected_candidates = perm_set(
          8, {Permutation(8), parse_cycles("(6,7,8)", 8), parse_cycles("(6,8,7)", 8)});
    rb.check("sigma_candidates", show(expected_candidates), show(candidates));
    if (n == 8) {
      rb.check("candidate_count", std::size_t{3}, candidates.size());
      rb.check_true("candidates_form_cyclic_group_of_order_3",
                    candidates ==
                        generated_subgroup(perm_set(8, {parse_cycles("(6,7,8)", 8)})));
    }

    check_candidate_contradictions(rb, s, candidates, /*expect_obstruction=*/(n == 8));
    closure_cross_check(rb, s, candidates);
    if (n == 8)
      rb.note("verdict_context",
              "obstructed: consistent with the existence of the 4x4 matrix ring over "
              "F2, whose unit group is A8");
    reports.push_back(rb.finish(/*obstructed=*/n == 8));
  }
  return reports;
}

VerificationReport cmd_s4() {
  ReportBuilder rb("s4");
  const PermSet s4 = symmetric_group(4);
  const GroupPtr G = index_group(s4);
  const PermSet group_gens =
      perm_set(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement e = AlgebraElement::identity(G);

  // (a) Each of the four copies of S3 (point stabilizers): the congruent
  // group element is forced to the identity, so the subgroup sum lies in I.
  for (unsigned fixed = 1; fixed <= 4; ++fixed) {
    std::vector<unsigned> pts;
    for (unsigned p = 1; p <= 4; ++p)
      if (p != fixed) pts.push_back(p);
    const std::string two = "(" + std::to_string(pts[0]) + "," + std::to_string(pts[1]) + ")";
    const std::string three = "(" + std::to_string(pts[0]) + "," + std::to_string(pts[1]) +
                              "," + std::to_string(pts[2]) + ")";
    const PermSet copy = generated_subgroup(
        perm_set(4, {parse_cycles(two, 4), parse_cycles(three, 4)}));
    rb.check("s3_copy_order[fix " + std::to_string(fixed) + "]", std::size_t{6},
             copy.size());
    const AlgebraElement h = subgroup_sum(G, copy);
    rb.check_true("(H+e)_squared_is_identity[fix " + std::to_string(fixed) + "]",
                  mul(add(h, e), add(h, e)) == e);
    rb.check("sigma_candidates[fix " + std::to_string(fixed) + "]",
             show(perm_set(4, {Permutation(4)})), show(sigma_candidates(s4, copy)));
  }

  // (b) The Magma-style search over all sigma in S4.
  const AlgebraElement t4 = AlgebraElement::from_perms(
      G, {Permutation(4), parse_cycles("(2,4)", 4), parse_cycles("(1,2)(3,4)", 4)});
  const PermSet h1_copy = generated_subgroup(
      perm_set(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)}));
  const AlgebraElement x2 = subgroup_sum(G, h1_copy);
  rb.input("T", t4.to_text());
  rb.input("subgroup_sum", x2.to_text());

  rb.check_true("T_is_unit_of_order_4", power(t4, 4) == e && !(power(t4, 2) == e));
  const auto t4_check = is_unit(t4);
  rb.check_true("T_unit", t4_check.unit);
  const AlgebraElement claimed = AlgebraElement::from_perms(
      G, {Permutation(4), parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,4,3,2)", 4),
          parse_cycles("(1,4)(2,3)", 4), parse_cycles("(1,3)", 4)});
  rb.check_true("T_inverse_matches", t4_check.inverse && *t4_check.inverse == claimed);

  std::vector<std::string> survivors;
  for (const auto& sigma : s4) {
    const Ideal I = close(
        G, group_gens, {add(t4, AlgebraElement::from_perms(G, {sigma})), x2});
    if (!weight2_witness(I).has_value()) survivors.push_back(print_cycles(sigma));
  }
  rb.check("search_survivors",
           std::vector<std::string>{"(1,2,3,4)", "(1,4,3,2)"}, survivors);

  // (c) The two surviving ideals and their quotients.
  const Ideal j1 = close(
      G, group_gens,
      {add(t4, AlgebraElement::from_perms(G, {parse_cycles("(1,2,3,4)", 4)})), x2});
  const Ideal j2 = close(
      G, group_gens,
      {add(t4, AlgebraElement::from_perms(G, {parse_cycles("(1,4,3,2)", 4)})), x2});
  rb.input("J1_generators", j1.generators()[0].to_text() + " ; " + j1.generators()[1].to_text());
  rb.input("J2_generators", j2.generators()[0].to_text() + " ; " + j2.generators()[1].to_text());
  rb.check("dim[J1]", std::size_t{17}, j1.dim());
  rb.check("dim[J2]", std::size_t{17}, j2.dim());

  const QuotientRing r1 = QuotientRing::build(G, j1);
  const QuotientRing r2 = QuotientRing::build(G, j2);
  const UnitGroupReport u1 = unit_report(r1);
  const UnitGroupReport u2 = unit_report(r2);
  rb.check("ring_size[R1]", std::uint64_t{128}, u1.ring_size);
  rb.check("ring_size[R2]", std::uint64_t{128}, u2.ring_size);
  rb.check("unit_count[R1]", std::size_t{24}, u1.unit_count);
  rb.check("unit_count[R2]", std::size_t{24}, u2.unit_count);
  rb.check_true("identity_criterion[R1]", u1.identity_criterion);
  rb.check_true("identity_criterion[R2]", u2.identity_criterion);

  // (d) Nonisomorphism: conjugacy scan plus the coset-distinctness witness.
  const AlgebraElement wit = AlgebraElement::from_perms(
      G, {parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,4,3,2)", 4)});
  rb.check_true("(1,2,3,4)+(1,4,3,2)_not_in_J1", !contains(j1, wit));
  rb.check_true("no_conjugizing_element_J1_to_J2",
                !quotient_iso_by_conjugacy(j1, j2, true).has_value());

  // (e) Opposite ring: the inversion anti-automorphism carries J1 to an
  // ideal conjugate to J2.
  const Ideal j1_op = antipode_ideal(j1);
  rb.check("dim[antipode(J1)]", std::size_t{17}, j1_op.dim());
  const auto op_witness = quotient_iso_by_conjugacy(j1_op, j2, true);
  rb.check_true("antipode(J1)_conjugate_to_J2", op_witness.has_value());
  if (op_witness) rb.note("opposite_ring_witness", print_cycles(*op_witness));

  // (f) Maximality: no strictly larger ideal keeps 24 units.
  const MaxUnitsScan mx = max_units_over_principal_quotients(r1);
  rb.check("max_units_over_principal_quotients[R1]", std::size_t{6}, mx.max_units);
  return rb.finish();
}

VerificationReport cmd_a4() {
  ReportBuilder rb("a4");
  const PermSet a4 = alternating_group(4);
  const GroupPtr G = index_group(a4);
  const PermSet group_gens =
      perm_set(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)});

  const AlgebraElement x1 = AlgebraElement::from_perms(
      G, {Permutation(4), parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4),
          parse_cycles("(1,4)(2,3)", 4)});
  const AlgebraElement x2 = AlgebraElement::from_perms(
      G, {Permutation(4), parse_cycles("(1,3,2)", 4), parse_cycles("(1,2)(3,4)", 4),
          parse_cycles("(1,4,3)", 4)});
  rb.input("group", "A4");
  rb.input("J_generators", x1.to_text() + " ; " + x2.to_text());

  const Ideal j = close(G, group_gens, {x1, x2});
  const QuotientRing r = QuotientRing::build(G, j);
  const UnitGroupReport u = unit_report(r);
  rb.check("ring_size[F2[A4]/J]", std::uint64_t{32}, u.ring_size);
  rb.check("unit_count[F2[A4]/J]", std::size_t{12}, u.unit_count);
  rb.check_true("identity_criterion[F2[A4]/J]", u.identity_criterion);

  const F2AlgebraTable hur = hurwitz_mod2();
  const TableUnitScan hs = unit_scan(hur);
  rb.check("ring_size[Hurwitz mod 2]", std::uint64_t{16}, hs.ring_size);
  rb.check("unit_count[Hurwitz mod 2]", std::size_t{12}, hs.unit_count);
  const std::map<unsigned, std::size_t> a4_spectrum{{1, 1}, {2, 3}, {3, 8}};
  rb.check("unit_spectrum[Hurwitz mod 2]", a4_spectrum, hs.spectrum);
  rb.check("order_spectrum[A4]", a4_spectrum, order_spectrum(a4));

  // Checked lemma: among the five groups of order 12 only A4 has this
  // element-order spectrum.
  const std::vector<std::pair<std::string, std::map<unsigned, std::size_t>>>
      order12_spectra = {
          {"C12", {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}},
          {"C6xC2", {{1, 1}, {2, 3}, {3, 2}, {6, 6}}},
          {"D6", {{1, 1}, {2, 7}, {3, 2}, {6, 2}}},
          {"Dic3", {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}},
          {"A4", {{1, 1}, {2, 3}, {3, 8}}},
      };
  bool unique = true;
  for (const auto& [name, spectrum] : order12_spectra)
    if (name != "A4" && spectrum == hs.spectrum) unique = false;
  rb.check_true("spectrum_unique_among_order_12_groups", unique);

  const Ideal jr = close(
      G, group_gens,
      {AlgebraElement::from_perms(G, {Permutation(4), parse_cycles("(1,2,3)", 4),
                                      parse_cycles("(1,3,2)", 4)})});
  const QuotientRing rr = QuotientRing::build(G, jr);
  rb.check("ring_size[F2[A4]/(e+(1,2,3)+(1,3,2))]", std::uint64_t{16},
           rr.size());
  bool iso_found = unit_spanned_iso(to_table(rr), hur).has_value();
  rb.check_true("hurwitz_iso_to_F2[A4]_quotient_found", iso_found);
  return rb.finish();
}

VerificationReport cmd_a8(const VerifyOptions& opts) {
  ReportBuilder rb("a8");
  rb.input("ring", "M4(F2), 65536 elements");
  const F2AlgebraTable m4 = matrix_ring(4);
  const TableUnitScan scan = unit_scan(m4, opts.threads);
  rb.check("unit_count[M4(F2)]", std::size_t{20160}, scan.unit_count);

  const A8IdentificationReport r = a8_identification(*scan.unit_group, opts.threads);
  rb.check("order[A8]", std::size_t{20160}, r.a8_order);
  rb.check_true("orders_equal", r.orders_equal);
  rb.check("order_spectrum[GL4(F2)]", show(r.a8_spectrum), show(r.unit_group_spectrum));
  rb.check_true("spectra_equal", r.spectra_equal);
  rb.check_true("both_have_order_15_elements", r.both_have_order_15);
  rb.check_true("GL4(F2)_simple", r.unit_group_simple);
  rb.check_true("A8_simple", r.a8_simple);
  rb.note("identification_caveat", r.caveat);
  return rb.finish();
}

std::vector<VerificationReport> run_claim(const std::string& name,
                                          const VerifyOptions& opts) {
  if (name == "c5") return {cmd_c5()};
  if (name == "s3") return {cmd_s3()};
  if (name == "s4") return {cmd_s4()};
  if (name == "a4") return {cmd_a4()};
  if (name == "a8") return {cmd_a8(opts)};
  if (name == "sn") return cmd_sn(opts);
  if (name == "an") return cmd_an(opts);
  if (name == "all") return run_all(opts);
  throw std::invalid_argument("unknown claim: " + name);
}

std::vector<VerificationReport> run_all(const VerifyOptions& opts) {
  std::vector<VerificationReport> reports;
  reports.push_back(cmd_c5());
  reports.push_back(cmd_s3());
  reports.push_back(cmd_s4());
  reports.push_back(cmd_a4());
  reports.push_back(cmd_a8(opts));
  for (auto& r : cmd_sn(opts)) reports.push_back(std::move(r));
  for (auto& r : cmd_an(opts)) reports.push_back(std::move(r));
  return reports;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool zero_ms) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["anchor"]["section"] = r.section;
    o["anchor"]["quote"] = r.claim;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    o["inputs"] = std::move(inputs);
    nlohmann::ordered_json facts = nlohmann::ordered_json::array();
    for (const auto& f : r.facts) {
      nlohmann::ordered_json fo;
      fo["name"] = f.name;
      fo["expected"] = f.expected;
      fo["actual"] = f.actual;
      fo["ok"] = f.ok;
      facts.push_back(std::move(fo));
    }
    o["facts"] = std::move(facts);
    o["verdict"] = r.verdict;
    o["ms"] = zero_ms ? 0 : r.ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

}  // namespace unitgroup
