#include "unitgroup/ideal.hpp"

#include <stdexcept>
#include <unordered_map>

namespace unitgroup {

namespace {

BitVector apply_index_map(const std::vector<unsigned>& map, const BitVector& v) {
  BitVector out(v.length());
  v.for_each_set([&](std::size_t i) { out.set(map[i]); });
  return out;
}

}  // namespace

Ideal close(const GroupPtr& G, const PermSet& group_gens,
            std::vector<AlgebraElement> gens, std::size_t dim_bound) {
  const PermSet* P = G->perms();
  if (!P) throw std::invalid_argument("close: group is not perm-backed");
  const std::size_t n = G->size();
  if (n > dim_bound)
    throw std::invalid_argument("close: group algebra exceeds the closure bound");
  if (generated_subgroup(group_gens) != *P)
    throw std::invalid_argument("close: group_gens does not generate G");
  for (const auto& g : gens)
    if (g.group() != G) throw std::invalid_argument("close: generator group mismatch");

  // Index maps for left and right multiplication by each group generator;
  // applying one to a row is a bit permutation.
  std::vector<std::vector<unsigned>> actions;
  actions.reserve(2 * group_gens.size());
  for (const auto& s : group_gens) {
    std::vector<unsigned> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
      left[i] = static_cast<unsigned>(*P->index_of(compose(s, (*P)[i])));
      right[i] = static_cast<unsigned>(*P->index_of(compose((*P)[i], s)));
    }
    actions.push_back(std::move(left));
    actions.push_back(std::move(right));
  }

  Ideal I;
  I.group_ = G;
  I.generators_ = gens;
  I.group_gens_ = group_gens;
  I.basis_ = EchelonBasis(n);

  std::vector<BitVector> worklist;
  for (const auto& g : gens) worklist.push_back(g.coeffs());
  while (!worklist.empty()) {
    BitVector candidate = std::move(worklist.back());
    worklist.pop_back();
    BitVector reduced = I.basis_.reduce(std::move(candidate));
    if (reduced.zero()) continue;
    for (const auto& action : actions)
      worklist.push_back(apply_index_map(action, reduced));
    I.basis_.insert(std::move(reduced));
  }
  I.closed_ = true;
  return I;
}

bool contains(const Ideal& I, const AlgebraElement& x) {
  if (x.group() != I.group())
    throw std::invalid_argument("contains: group mismatch");
  if (!I.closed()) throw std::invalid_argument("contains: ideal is not closed");
  return I.basis().contains(x.coeffs());
}

std::optional<std::pair<unsigned, unsigned>> weight2_witness(const Ideal& I) {
  if (!I.closed()) throw std::invalid_argument("weight2_witness: ideal is not closed");
  const std::size_t n = I.group()->size();
  std::unordered_map<BitVector, unsigned, BitVectorHash> seen;
  seen.reserve(n * 2);
  for (unsigned g = 0; g < n; ++g) {
    BitVector canonical = I.basis().reduce(BitVector::unit(n, g));
    const auto [it, fresh] = seen.try_emplace(std::move(canonical), g);
    if (!fresh) return std::make_pair(it->second, g);
  }
  return std::nullopt;
}

PermSet sigma_candidates(const PermSet& G, const PermSet& T, unsigned threads) {
  if (!T.subset_of(G))
    throw std::invalid_argument("sigma_candidates: T is not a subset of G");
  return centralizer_of_set(G, normalizer_of_set(G, T, threads), threads);
}

Ideal conjugate_ideal(const Ideal& I, const Permutation& t) {
  const PermSet* P = I.group()->perms();
  if (!P || !P->contains(t))
    throw std::invalid_argument("conjugate_ideal: t is not an element of G");
  if (!I.closed()) throw std::invalid_argument("conjugate_ideal: ideal is not closed");
  const std::size_t n = I.group()->size();

  std::vector<unsigned> map(n);
  for (std::size_t i = 0; i < n; ++i)
    map[i] = static_cast<unsigned>(*P->index_of(conjugate(t, (*P)[i])));

  Ideal out;
  out.group_ = I.group();
  out.group_gens_ = I.group_generators();
  out.basis_ = EchelonBasis(n);
  for (const auto& row : I.basis().rows())
    out.basis_.insert(apply_index_map(map, row));
  for (const auto& g : I.generators())
    out.generators_.emplace_back(I.group(), apply_index_map(map, g.coeffs()));
  out.closed_ = true;
  return out;
}

Ideal antipode_ideal(const Ideal& I) {
  if (!I.closed()) throw std::invalid_argument("antipode_ideal: ideal is not closed");
  const IndexedGroup& G = *I.group();
  const std::size_t n = G.size();

  std::vector<unsigned> map(n);
  for (unsigned i = 0; i < n; ++i) map[i] = G.inv(i);

  Ideal out;
  out.group_ = I.group();
  out.group_gens_ = I.group_generators();
  out.basis_ = EchelonBasis(n);
  for (const auto& row : I.basis().rows())
    out.basis_.insert(apply_index_map(map, row));
  for (const auto& g : I.generators())
    out.generators_.emplace_back(I.group(), apply_index_map(map, g.coeffs()));
  out.closed_ = true;
  return out;
}

}  // namespace unitgroup
