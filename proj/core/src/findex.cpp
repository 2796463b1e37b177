#include "unitgroup/findex.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace unitgroup {

IndexedGroup IndexedGroup::from_perms(PermSet group, Options opts) {
  if (!group.group())
    throw std::invalid_argument("IndexedGroup: PermSet is not flagged as a group");
  IndexedGroup g;
  g.size_ = group.size();
  if (g.size_ > opts.table_bound && !opts.allow_on_the_fly)
    throw std::invalid_argument(
        "IndexedGroup: size exceeds table bound and on-the-fly mode is off");
  g.perms_ = std::make_shared<const PermSet>(std::move(group));

  const PermSet& P = *g.perms_;
  const auto id_idx = P.index_of(Permutation(P.degree()));
  if (!id_idx) throw std::invalid_argument("IndexedGroup: identity missing");
  g.id_ = static_cast<unsigned>(*id_idx);

  g.inv_.resize(g.size_);
  for (unsigned i = 0; i < g.size_; ++i)
    g.inv_[i] = static_cast<unsigned>(*P.index_of(P[i].inverse()));

  if (g.size_ <= opts.table_bound) g.materialize_table();
  return g;
}

void IndexedGroup::materialize_table() {
  const PermSet& P = *perms_;
  const std::size_t n = size_;
  if (n > 65535) throw std::length_error("IndexedGroup: table too large to materialize");
  table_.assign(n * n, 0);

  // Build rows along a BFS tree over left multiplication by a small
  // generating set: row(s*a)[b] = lambda_s[row(a)[b]], so each row is one
  // pass over its parent instead of n lookups.
  std::vector<Permutation> gens = unitgroup::small_generating_set(P);
  if (gens.empty()) gens.push_back(Permutation(P.degree()));  // trivial group
  std::vector<std::vector<std::uint16_t>> lambda(gens.size(),
                                                 std::vector<std::uint16_t>(n));
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t j = 0; j < n; ++j)
      lambda[gi][j] =
          static_cast<std::uint16_t>(*P.index_of(compose(gens[gi], P[j])));

  std::vector<char> built(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    table_[static_cast<std::size_t>(id_) * n + b] = static_cast<std::uint16_t>(b);
  built[id_] = 1;
  std::vector<unsigned> queue{id_};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const unsigned a = queue[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const unsigned na = lambda[gi][a];
      if (built[na]) continue;
      const std::uint16_t* src = &table_[static_cast<std::size_t>(a) * n];
      std::uint16_t* dst = &table_[static_cast<std::size_t>(na) * n];
      for (std::size_t b = 0; b < n; ++b) dst[b] = lambda[gi][src[b]];
      built[na] = 1;
      queue.push_back(na);
    }
  }
}

IndexedGroup IndexedGroup::from_values(std::vector<std::uint64_t> values,
                                       std::uint64_t identity_value, MulValueFn mul,
                                       Options opts, LabelFn label) {
  if (!std::is_sorted(values.begin(), values.end()) ||
      std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::invalid_argument("IndexedGroup: values must be sorted and unique");
  IndexedGroup g;
  g.size_ = values.size();
  if (g.size_ > opts.table_bound && !opts.allow_on_the_fly)
    throw std::invalid_argument(
        "IndexedGroup: size exceeds table bound and on-the-fly mode is off");
  g.values_ = std::move(values);
  g.mul_fn_ = std::move(mul);
  g.label_fn_ = std::move(label);
  g.id_ = g.index_of_value(identity_value);

  if (g.size_ <= opts.table_bound && g.size_ <= 65535) {
    const std::size_t n = g.size_;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = static_cast<std::uint16_t>(
            g.index_of_value(g.mul_fn_(g.values_[a], g.values_[b])));
  }

  // Inverses by chasing powers: a^(order-1) is the inverse.
  g.inv_.resize(g.size_);
  for (unsigned i = 0; i < g.size_; ++i) {
    unsigned prev = i;
    unsigned acc = i;
    while (acc != g.id_) {
      prev = acc;
      acc = g.mul(acc, i);
    }
    g.inv_[i] = (i == g.id_) ? g.id_ : prev;
  }
  return g;
}

unsigned IndexedGroup::index_of_value(std::uint64_t v) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v)
    throw std::logic_error("IndexedGroup: product left the element list");
  return static_cast<unsigned>(it - values_.begin());
}

unsigned IndexedGroup::mul_slow(unsigned a, unsigned b) const {
  if (perms_) {
    const PermSet& P = *perms_;
    const auto idx = P.index_of(compose(P[a], P[b]));
    if (!idx) throw std::logic_error("IndexedGroup: product left the group");
    return static_cast<unsigned>(*idx);
  }
  return index_of_value(mul_fn_(values_[a], values_[b]));
}

unsigned IndexedGroup::mul(unsigned a, unsigned b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
  return mul_slow(a, b);
}

unsigned IndexedGroup::order_of(unsigned a) const {
  if (perms_) return (*perms_)[a].order();
  unsigned ord = 1;
  unsigned acc = a;
  while (acc != id_) {
    acc = mul(acc, a);
    ++ord;
  }
  return ord;
}

std::string IndexedGroup::label(unsigned i) const {
  if (perms_) return print_cycles((*perms_)[i]);
  if (label_fn_) return label_fn_(values_[i]);
  return std::to_string(values_[i]);
}

std::vector<unsigned> IndexedGroup::small_generating_set() const {
  std::vector<unsigned> gens;
  std::vector<char> reached(size_, 0);
  std::vector<unsigned> queue;
  reached[id_] = 1;
  queue.push_back(id_);
  std::size_t count = 1;
  for (unsigned cand = 0; cand < size_ && count < size_; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    std::size_t head = 0;
    while (head < queue.size()) {
      const unsigned cur = queue[head++];
      for (unsigned g : gens) {
        const unsigned next = mul(cur, g);
        if (!reached[next]) {
          reached[next] = 1;
          ++count;
          queue.push_back(next);
        }
      }
    }
  }
  return gens;
}

bool IndexedGroup::has_trivial_center() const {
  for (unsigned i = 0; i < size_; ++i) {
    if (i == id_) continue;
    bool central = true;
    for (unsigned j = 0; j < size_; ++j) {
      if (mul(i, j) != mul(j, i)) {
        central = false;
        break;
      }
    }
    if (central) return false;
  }
  return true;
}

bool IndexedGroup::check_latin_square() const {
  if (table_.empty())
    throw std::invalid_argument("check_latin_square: table not materialized");
  const std::size_t n = size_;
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint16_t v = table_[a * n + b];
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint16_t v = table_[a * n + b];
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool IndexedGroup::check_identity_inverse() const {
  for (unsigned x = 0; x < size_; ++x) {
    if (mul(id_, x) != x || mul(x, id_) != x) return false;
    if (mul(x, inv_[x]) != id_ || mul(inv_[x], x) != id_) return false;
  }
  return true;
}

bool IndexedGroup::check_associativity(std::size_t samples, std::uint64_t seed) const {
  const std::size_t n = size_;
  if (n * n * n <= samples) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const unsigned a = static_cast<unsigned>(dist(rng));
    const unsigned b = static_cast<unsigned>(dist(rng));
    const unsigned c = static_cast<unsigned>(dist(rng));
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

GroupPtr index_group(const PermSet& G, IndexedGroup::Options opts) {
  return std::make_shared<const IndexedGroup>(IndexedGroup::from_perms(G, opts));
}

bool has_trivial_center(const IndexedGroup& G) { return G.has_trivial_center(); }

std::vector<std::vector<unsigned>> conjugacy_classes(const IndexedGroup& G) {
  const auto gens = G.small_generating_set();
  std::vector<char> done(G.size(), 0);
  std::vector<std::vector<unsigned>> classes;
  for (unsigned i = 0; i < G.size(); ++i) {
    if (done[i]) continue;
    std::vector<unsigned> orbit{i};
    done[i] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const unsigned cur = orbit[head];
      for (unsigned g : gens) {
        const unsigned moved = G.mul(G.mul(g, cur), G.inv(g));
        if (!done[moved]) {
          done[moved] = 1;
          orbit.push_back(moved);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a[0] < b[0];
            });
  return classes;
}

std::map<unsigned, std::size_t> order_spectrum(const IndexedGroup& G) {
  std::map<unsigned, std::size_t> spectrum;
  for (unsigned i = 0; i < G.size(); ++i) ++spectrum[G.order_of(i)];
  return spectrum;
}

IndexedSimplicityResult is_simple(const IndexedGroup& G, std::size_t class_bound) {
  if (G.size() <= 1) throw std::invalid_argument("is_simple: needs a nontrivial group");
  const auto classes = conjugacy_classes(G);
  if (classes.size() > class_bound)
    throw std::invalid_argument("is_simple: class count exceeds configured bound");

  std::vector<const std::vector<unsigned>*> rest;
  for (const auto& c : classes)
    if (!(c.size() == 1 && c[0] == G.identity())) rest.push_back(&c);
  const std::size_t m = rest.size();

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::uint64_t{1} << k)) total += rest[k]->size();
    if (total <= 1 || total >= G.size() || G.size() % total != 0) continue;

    std::vector<char> in_union(G.size(), 0);
    in_union[G.identity()] = 1;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::uint64_t{1} << k))
        for (unsigned e : *rest[k]) in_union[e] = 1;

    std::vector<char> reached(G.size(), 0);
    std::vector<unsigned> queue{G.identity()};
    reached[G.identity()] = 1;
    std::size_t count = 1;
    std::vector<unsigned> gens;
    bool closed = true;
    while (closed && count < total) {
      unsigned fresh = 0;
      bool found = false;
      for (unsigned e = 0; e < G.size() && !found; ++e)
        if (in_union[e] && !reached[e]) {
          fresh = e;
          found = true;
        }
      gens.push_back(fresh);
      std::size_t head = 0;
      while (head < queue.size()) {
        const unsigned cur = queue[head++];
        for (unsigned g : gens) {
          const unsigned next = G.mul(cur, g);
          if (!in_union[next]) {
            closed = false;
            break;
          }
          if (!reached[next]) {
            reached[next] = 1;
            ++count;
            queue.push_back(next);
          }
        }
        if (!closed) break;
      }
    }
    if (closed && count == total) {
      std::vector<unsigned> witness;
      for (unsigned e = 0; e < G.size(); ++e)
        if (in_union[e]) witness.push_back(e);
      return IndexedSimplicityResult{false, std::move(witness)};
    }
  }
  return IndexedSimplicityResult{true, std::nullopt};
}

std::vector<std::vector<unsigned>> group_isomorphisms(const IndexedGroup& A,
                                                      const IndexedGroup& B,
                                                      std::size_t limit) {
  std::vector<std::vector<unsigned>> isos;
  if (A.size() != B.size()) return isos;
  const std::size_t n = A.size();

  const std::vector<unsigned> gens = A.small_generating_set();
  if (gens.empty()) {  // trivial group
    isos.push_back({B.identity()});
    return isos;
  }

  // BFS words over the generators: elem = mul(parent, gens[via]).
  std::vector<unsigned> parent(n, 0), via(n, 0), bfs_order;
  {
    std::vector<char> seen(n, 0);
    seen[A.identity()] = 1;
    bfs_order.push_back(A.identity());
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
      const unsigned cur = bfs_order[head];
      for (unsigned gi = 0; gi < gens.size(); ++gi) {
        const unsigned next = A.mul(cur, gens[gi]);
        if (!seen[next]) {
          seen[next] = 1;
          parent[next] = cur;
          via[next] = gi;
          bfs_order.push_back(next);
        }
      }
    }
  }

  std::vector<unsigned> a_order(n), b_order(n);
  for (unsigned i = 0; i < n; ++i) a_order[i] = A.order_of(i);
  for (unsigned i = 0; i < n; ++i) b_order[i] = B.order_of(i);

  std::vector<std::vector<unsigned>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (unsigned j = 0; j < n; ++j)
      if (b_order[j] == a_order[gens[gi]]) candidates[gi].push_back(j);

  std::vector<unsigned> choice(gens.size(), 0);
  std::vector<unsigned> phi(n);
  const auto try_choice = [&]() {
    phi[A.identity()] = B.identity();
    for (std::size_t k = 1; k < bfs_order.size(); ++k) {
      const unsigned e = bfs_order[k];
      phi[e] = B.mul(phi[parent[e]], choice[via[e]]);
    }
    std::vector<char> hit(n, 0);
    for (unsigned i = 0; i < n; ++i) {
      if (hit[phi[i]]) return false;
      hit[phi[i]] = 1;
    }
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (phi[A.mul(a, b)] != B.mul(phi[a], phi[b])) return false;
    return true;
  };

  // Odometer over candidate image tuples.
  std::vector<std::size_t> pos(gens.size(), 0);
  while (true) {
    bool viable = true;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (candidates[gi].empty()) {
        viable = false;
        break;
      }
      choice[gi] = candidates[gi][pos[gi]];
    }
    if (!viable) break;
    if (try_choice()) {
      isos.push_back(phi);
      if (isos.size() > limit)
        throw std::length_error("group_isomorphisms: limit exceeded");
    }
    std::size_t k = 0;
    while (k < gens.size() && ++pos[k] == candidates[k].size()) {
      pos[k] = 0;
      ++k;
    }
    if (k == gens.size()) break;
  }
  return isos;
}

}  // namespace unitgroup
