#include "unitgroup/rings.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace unitgroup {

F2AlgebraTable matrix_ring(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("matrix_ring: k out of range 1..4");
  const unsigned d = k * k;
  std::vector<std::uint32_t> structure(static_cast<std::size_t>(d) * d, 0);
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b)
      for (unsigned c = 0; c < k; ++c)
        for (unsigned e = 0; e < k; ++e)
          if (b == c)
            structure[static_cast<std::size_t>(a * k + b) * d + (c * k + e)] =
                1u << (a * k + e);
  std::uint32_t unity = 0;
  for (unsigned a = 0; a < k; ++a) unity |= 1u << (a * k + a);
  return F2AlgebraTable(d, unity, std::move(structure));
}

// Fixture from tools/gen_hurwitz_table.py (core/data/hurwitz_mod2_table.txt,
// sha256 recorded alongside). Basis order (1, i, j, w); bit b = basis b.
F2AlgebraTable hurwitz_mod2() {
  constexpr std::array<std::array<std::uint32_t, 4>, 4> products = {{
      {0b0001, 0b0010, 0b0100, 0b1000},
      {0b0010, 0b0001, 0b0111, 0b1101},
      {0b0100, 0b0111, 0b0001, 0b1110},
      {0b1000, 0b1110, 0b1011, 0b1001},
  }};
  std::vector<std::uint32_t> structure(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) structure[i * 4 + j] = products[i][j];
  return F2AlgebraTable(4, 0b0001, std::move(structure));
}

F2AlgebraTable parse_hurwitz_fixture(const std::string& content) {
  const std::array<std::string, 4> names = {"1", "i", "j", "w"};
  std::vector<std::uint32_t> structure(16, 0);
  std::vector<bool> seen(16, false);
  std::istringstream in(content);
  std::string lhs, star, rhs, eq, bits;
  while (in >> lhs >> star >> rhs >> eq >> bits) {
    if (star != "*" || eq != "=" || bits.size() != 4)
      throw std::invalid_argument("hurwitz fixture: malformed line");
    const auto idx = [&](const std::string& n) {
      const auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end())
        throw std::invalid_argument("hurwitz fixture: unknown basis label");
      return static_cast<unsigned>(it - names.begin());
    };
    const unsigned i = idx(lhs), j = idx(rhs);
    std::uint32_t value = 0;
    for (unsigned b = 0; b < 4; ++b) {
      if (bits[b] != '0' && bits[b] != '1')
        throw std::invalid_argument("hurwitz fixture: bad bit quadruple");
      if (bits[b] == '1') value |= 1u << b;
    }
    if (seen[i * 4 + j]) throw std::invalid_argument("hurwitz fixture: duplicate entry");
    seen[i * 4 + j] = true;
    structure[i * 4 + j] = value;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("hurwitz fixture: missing entries");
  return F2AlgebraTable(4, 0b0001, std::move(structure));
}

std::uint32_t LinearIso::apply(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::uint32_t m = x; m; m &= m - 1)
    acc ^= columns[static_cast<unsigned>(std::countr_zero(m))];
  return acc;
}

namespace {

BitVector pattern_to_vector(std::uint32_t bits, unsigned dim) {
  BitVector v(dim);
  for (unsigned i = 0; i < dim; ++i)
    if (bits & (1u << i)) v.set(i);
  return v;
}

}  // namespace

std::optional<LinearIso> unit_spanned_iso(const F2AlgebraTable& A,
                                          const F2AlgebraTable& B) {
  const TableUnitScan ua = unit_scan(A);
  const TableUnitScan ub = unit_scan(B);

  // Spanning hypothesis on both sides; remember which units carry pivots.
  SpanSolver span_a(A.dim(), ua.units.size());
  for (std::uint32_t u : ua.units) span_a.insert(pattern_to_vector(u, A.dim()));
  if (span_a.rank() < A.dim())
    throw SpanningHypothesisError("unit_spanned_iso: units of A do not span A");
  {
    SpanSolver span_b(B.dim(), ub.units.size());
    for (std::uint32_t u : ub.units) span_b.insert(pattern_to_vector(u, B.dim()));
    if (span_b.rank() < B.dim())
      throw SpanningHypothesisError("unit_spanned_iso: units of B do not span B");
  }

  if (ua.unit_count != ub.unit_count || A.dim() != B.dim()) return std::nullopt;
  const unsigned d = A.dim();

  // Every ring isomorphism restricts to one of these group isomorphisms.
  const auto isos = group_isomorphisms(*ua.unit_group, *ub.unit_group);
  for (const auto& phi : isos) {
    // Linear extension from the pivot-owning units.
    LinearIso wit;
    wit.dim = d;
    wit.columns.assign(d, 0);
    bool ok = true;
    for (unsigned c = 0; c < d && ok; ++c) {
      const auto combo = span_a.express(BitVector::unit(d, c));
      std::uint32_t image = 0;
      combo->for_each_set([&](std::size_t unit_idx) {
        image ^= static_cast<std::uint32_t>(
            ub.unit_group->value(phi[static_cast<unsigned>(unit_idx)]));
      });
      wit.columns[c] = image;
    }
    // Well-definedness: the extension must agree with phi on every unit.
    for (std::size_t t = 0; t < ua.units.size() && ok; ++t) {
      const std::uint32_t expect =
          static_cast<std::uint32_t>(ub.unit_group->value(phi[t]));
      if (wit.apply(ua.units[t]) != expect) ok = false;
    }
    if (!ok) continue;
    // Bijectivity.
    {
      BitMatrix m = BitMatrix::zero(d, d);
      for (unsigned c = 0; c < d; ++c)
        m.row_data[c] = pattern_to_vector(wit.columns[c], d);
      if (!is_invertible(m)) continue;
    }
    // Multiplicativity on basis pairs (enough, by bilinearity).
    for (unsigned i = 0; i < d && ok; ++i)
      for (unsigned j = 0; j < d && ok; ++j)
        if (wit.apply(A.basis_product(i, j)) !=
            B.mul(wit.columns[i], wit.columns[j]))
          ok = false;
    if (ok) return wit;
  }
  return std::nullopt;
}

std::optional<Permutation> quotient_iso_by_conjugacy(const Ideal& a, const Ideal& b,
                                                     bool all_automorphisms_inner) {
  if (!all_automorphisms_inner)
    throw std::invalid_argument(
        "quotient_iso_by_conjugacy: requires the all-automorphisms-inner flag");
  if (a.group() != b.group())
    throw std::invalid_argument("quotient_iso_by_conjugacy: ideals over different groups");
  if (!a.closed() || !b.closed())
    throw std::invalid_argument("quotient_iso_by_conjugacy: ideals must be closed");
  {
    const QuotientRing qa = QuotientRing::build(a.group(), a);
    const QuotientRing qb = QuotientRing::build(b.group(), b);
    if (!identity_criterion(qa) || !identity_criterion(qb))
      throw std::invalid_argument(
          "quotient_iso_by_conjugacy: both quotients must satisfy the identity criterion");
  }
  const PermSet& P = *a.group()->perms();
  for (const auto& t : P)
    if (conjugate_ideal(a, t).basis() == b.basis()) return t;
  return std::nullopt;
}

A8IdentificationReport a8_identification(const IndexedGroup& units_of_m4,
                                         unsigned threads) {
  (void)threads;
  A8IdentificationReport r;
  r.unit_group_order = units_of_m4.size();
  r.unit_group_spectrum = order_spectrum(units_of_m4);
  r.unit_group_simple = is_simple(units_of_m4).simple;

  const PermSet a8 = alternating_group(8);
  r.a8_order = a8.size();
  r.a8_spectrum = order_spectrum(a8);
  const GroupPtr a8_idx =
      index_group(a8, IndexedGroup::Options{kDefaultTableBound, true});
  r.a8_simple = is_simple(*a8_idx).simple;

  r.orders_equal = r.unit_group_order == r.a8_order;
  r.spectra_equal = r.unit_group_spectrum == r.a8_spectrum;
  r.both_have_order_15 = r.unit_group_spectrum.count(15) > 0 &&
                         r.a8_spectrum.count(15) > 0;
  r.caveat =
      "order, element-order spectrum and simplicity match A8 and exclude the "
      "only other simple group of order 20160, which has no element of order "
      "15; an explicit isomorphism is not constructed";
  return r;
}

}  // namespace unitgroup
