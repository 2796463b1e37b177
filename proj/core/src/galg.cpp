#include "unitgroup/galg.hpp"

#include <stdexcept>

namespace unitgroup {

AlgebraElement::AlgebraElement(GroupPtr group, BitVector coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (!group_) throw std::invalid_argument("AlgebraElement: null group");
  if (coeffs_.length() != group_->size())
    throw std::invalid_argument("AlgebraElement: coefficient length != |G|");
}

AlgebraElement AlgebraElement::zero(const GroupPtr& group) {
  return AlgebraElement(group, BitVector(group->size()));
}

AlgebraElement AlgebraElement::identity(const GroupPtr& group) {
  return AlgebraElement(group,
                        BitVector::unit(group->size(), group->identity()));
}

AlgebraElement AlgebraElement::from_subset(const GroupPtr& group,
                                           std::span<const unsigned> indices) {
  BitVector v(group->size());
  for (unsigned i : indices) {
    if (i >= group->size())
      throw std::out_of_range("AlgebraElement::from_subset: index out of range");
    v.set(i);
  }
  return AlgebraElement(group, std::move(v));
}

AlgebraElement AlgebraElement::from_perms(const GroupPtr& group,
                                          const std::vector<Permutation>& members) {
  const PermSet* P = group->perms();
  if (!P) throw std::invalid_argument("AlgebraElement::from_perms: group is not perm-backed");
  BitVector v(group->size());
  for (const auto& p : members) {
    const auto idx = P->index_of(p);
    if (!idx)
      throw std::out_of_range("AlgebraElement::from_perms: permutation not in group");
    v.set(*idx);
  }
  return AlgebraElement(group, std::move(v));
}

AlgebraElement AlgebraElement::from_set(const GroupPtr& group, const PermSet& members) {
  return from_perms(group, members.members());
}

std::string AlgebraElement::to_text() const {
  if (coeffs_.zero()) return "0";
  std::string out;
  coeffs_.for_each_set([&](std::size_t i) {
    if (!out.empty()) out += " + ";
    out += group_->label(static_cast<unsigned>(i));
  });
  return out;
}

namespace {

void require_same_group(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.group() != y.group())
    throw std::invalid_argument("group algebra: operands live in different groups");
}

}  // namespace

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(x, y);
  BitVector v = x.coeffs();
  v ^= y.coeffs();
  return AlgebraElement(x.group(), std::move(v));
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(x, y);
  const IndexedGroup& G = *x.group();
  BitVector acc(G.size());
  x.coeffs().for_each_set([&](std::size_t i) {
    y.coeffs().for_each_set([&](std::size_t j) {
      acc.flip(G.mul(static_cast<unsigned>(i), static_cast<unsigned>(j)));
    });
  });
  return AlgebraElement(x.group(), std::move(acc));
}

std::size_t weight(const AlgebraElement& x) { return x.coeffs().count(); }

AlgebraElement power(const AlgebraElement& x, unsigned long long e) {
  if (e == 0) throw std::invalid_argument("power: exponent must be positive");
  AlgebraElement base = x;
  AlgebraElement acc = x;
  e -= 1;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

UnitCheck is_unit(const AlgebraElement& x, std::size_t dim_bound) {
  const IndexedGroup& G = *x.group();
  const std::size_t n = G.size();
  if (n > dim_bound)
    throw std::invalid_argument("is_unit: group algebra exceeds the regular-matrix bound");

  SpanSolver solver(n, n);
  for (unsigned j = 0; j < n; ++j) {
    BitVector col(n);
    x.coeffs().for_each_set(
        [&](std::size_t i) { col.flip(G.mul(static_cast<unsigned>(i), j)); });
    solver.insert(col);
  }
  if (solver.rank() < n) return UnitCheck{false, std::nullopt};

  const auto combo = solver.express(BitVector::unit(n, G.identity()));
  BitVector inv(n);
  combo->for_each_set([&](std::size_t t) { inv.set(t); });
  return UnitCheck{true, AlgebraElement(x.group(), std::move(inv))};
}

AlgebraElement frobenius_power_of_commuting_sum(const GroupPtr& group,
                                                const std::vector<Permutation>& terms,
                                                unsigned k) {
  const PermSet* P = group->perms();
  if (!P)
    throw std::invalid_argument("frobenius_power_of_commuting_sum: group is not perm-backed");
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (compose(terms[i], terms[j]) != compose(terms[j], terms[i]))
        throw std::invalid_argument("frobenius_power_of_commuting_sum: terms do not commute");

  BitVector acc(group->size());
  for (const auto& t : terms) {
    if (!P->contains(t))
      throw std::out_of_range("frobenius_power_of_commuting_sum: term not in group");
    Permutation p = t;
    for (unsigned s = 0; s < k; ++s) p = compose(p, p);
    acc.flip(*P->index_of(p));
  }
  return AlgebraElement(group, std::move(acc));
}

}  // namespace unitgroup
