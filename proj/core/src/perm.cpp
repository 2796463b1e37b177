#include "unitgroup/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "unitgroup/parallel.hpp"

namespace unitgroup {

Permutation::Permutation(unsigned degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint8_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(image_.size());
  for (unsigned i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint8_t>(i);
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  std::vector<bool> seen(image_.size(), false);
  unsigned transpositions = 0;
  for (unsigned i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

unsigned Permutation::order() const {
  std::vector<bool> seen(image_.size(), false);
  unsigned ord = 1;
  for (unsigned i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::pow(unsigned long long e) const {
  Permutation acc = Permutation(degree());
  Permutation base = *this;
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint8_t> im(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) im[i] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // g x g^-1 applied directly: point g(i) maps to g(x(i)).
  std::vector<std::uint8_t> im(g.degree());
  for (unsigned i = 0; i < g.degree(); ++i) im[g(i)] = static_cast<std::uint8_t>(g(x(i)));
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t v : p.image()) h = (h ^ v) * 1099511628211ull;
  return static_cast<std::size_t>(h);
}

namespace {

unsigned parse_point(std::string_view tok, unsigned degree) {
  if (tok.empty()) throw std::invalid_argument("parse_cycles: empty point");
  unsigned value = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("parse_cycles: malformed point token");
    value = value * 10 + static_cast<unsigned>(c - '0');
    if (value > 255) throw std::invalid_argument("parse_cycles: point out of range");
  }
  if (value < 1 || value > degree)
    throw std::invalid_argument("parse_cycles: point out of range");
  return value - 1;  // to 0-based
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, unsigned degree) {
  std::string_view s = strip(text);
  if (s.empty() || s == "e") return Permutation(degree);

  Permutation acc(degree);
  while (!s.empty()) {
    if (s.front() != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    const std::size_t close = s.find(')');
    if (close == std::string_view::npos)
      throw std::invalid_argument("parse_cycles: missing ')'");
    std::string_view body = strip(s.substr(1, close - 1));
    s = strip(s.substr(close + 1));

    std::vector<unsigned> points;
    if (body.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) comma = body.size();
        points.push_back(parse_point(strip(body.substr(start, comma - start)), degree));
        start = comma + 1;
      }
    } else {
      // No commas: a run of single-digit points.
      for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        points.push_back(parse_point(std::string_view(&c, 1), degree));
      }
      if (points.empty())
        throw std::invalid_argument("parse_cycles: empty cycle");
    }

    std::vector<bool> used(degree, false);
    for (unsigned p : points) {
      if (used[p]) throw std::invalid_argument("parse_cycles: point repeated within a cycle");
      used[p] = true;
    }

    std::vector<std::uint8_t> im(degree);
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < points.size(); ++i)
      im[points[i]] = static_cast<std::uint8_t>(points[(i + 1) % points.size()]);
    acc = compose(acc, Permutation(std::move(im)));
  }
  return acc;
}

std::string print_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) {
      seen[i] = true;
      continue;
    }
    out.push_back('(');
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out.push_back(',');
      out += std::to_string(j + 1);
      first = false;
      j = p(j);
    }
    out.push_back(')');
  }
  return out.empty() ? "e" : out;
}

PermSet::PermSet(unsigned degree, std::vector<Permutation> members)
    : degree_(degree), members_(std::move(members)) {
  for (const auto& p : members_)
    if (p.degree() != degree_)
      throw std::invalid_argument("PermSet: degree mismatch");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::optional<std::size_t> PermSet::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it == members_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool PermSet::subset_of(const PermSet& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool PermSet::check_group_axioms() const {
  if (empty()) return false;
  if (!contains(Permutation(degree_))) return false;
  for (const auto& p : members_)
    if (!contains(p.inverse())) return false;
  for (const auto& a : members_)
    for (const auto& b : members_)
      if (!contains(compose(a, b))) return false;
  return true;
}

PermSet& PermSet::mark_group(bool checked) {
  is_group_ = checked;
  return *this;
}

PermSet symmetric_group(unsigned n, unsigned enumeration_bound) {
  if (n < 1 || n > enumeration_bound)
    throw std::invalid_argument("symmetric_group: degree outside enumeration bound");
  std::vector<std::uint8_t> im(n);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  std::vector<Permutation> members;
  do {
    members.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  PermSet g(n, std::move(members));
  return g.mark_group();
}

PermSet alternating_group(unsigned n, unsigned enumeration_bound) {
  if (n < 1 || n > enumeration_bound)
    throw std::invalid_argument("alternating_group: degree outside enumeration bound");
  std::vector<std::uint8_t> im(n);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  std::vector<Permutation> members;
  do {
    Permutation p(im);
    if (p.sign() == 1) members.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  PermSet g(n, std::move(members));
  return g.mark_group();
}

PermSet generated_subgroup(const PermSet& gens) {
  if (gens.empty())
    throw std::invalid_argument("generated_subgroup: empty generating set");
  const unsigned n = gens.degree();
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue;
  const Permutation id(n);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation cur = queue[head];
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  PermSet out(n, std::move(queue));
  return out.mark_group();
}

PermSet normalizer_of_set(const PermSet& G, const PermSet& T, unsigned threads) {
  if (!G.group()) throw std::invalid_argument("normalizer_of_set: G is not flagged as a group");
  if (!T.subset_of(G)) throw std::invalid_argument("normalizer_of_set: T is not a subset of G");
  std::vector<char> keep(G.size(), 0);
  run_chunked(G.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Permutation& g = G[i];
      bool ok = true;
      for (const auto& t : T) {
        if (!T.contains(conjugate(g, t))) {
          ok = false;
          break;
        }
      }
      keep[i] = ok ? 1 : 0;
    }
  });
  std::vector<Permutation> members;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) members.push_back(G[i]);
  PermSet out(G.degree(), std::move(members));
  return out.mark_group();
}

PermSet centralizer_of_set(const PermSet& G, const PermSet& S, unsigned threads) {
  if (!G.group()) throw std::invalid_argument("centralizer_of_set: G is not flagged as a group");
  std::vector<char> keep(G.size(), 0);
  run_chunked(G.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Permutation& g = G[i];
      bool ok = true;
      for (const auto& s : S) {
        if (compose(g, s) != compose(s, g)) {
          ok = false;
          break;
        }
      }
      keep[i] = ok ? 1 : 0;
    }
  });
  std::vector<Permutation> members;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) members.push_back(G[i]);
  PermSet out(G.degree(), std::move(members));
  return out.mark_group();
}

std::vector<Permutation> small_generating_set(const PermSet& G) {
  if (!G.group()) throw std::invalid_argument("small_generating_set: G is not flagged as a group");
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> closure;
  std::vector<Permutation> queue;
  const Permutation id(G.degree());
  closure.insert(id);
  queue.push_back(id);
  for (const auto& candidate : G) {
    if (closure.size() == G.size()) break;
    if (closure.count(candidate)) continue;
    gens.push_back(candidate);
    // Rescan everything reached so far against the enlarged generator set.
    std::size_t head = 0;
    while (head < queue.size()) {
      const Permutation cur = queue[head++];
      for (const auto& g : gens) {
        Permutation next = compose(cur, g);
        if (closure.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return gens;
}

std::vector<PermSet> conjugacy_classes(const PermSet& G) {
  if (!G.group()) throw std::invalid_argument("conjugacy_classes: G is not flagged as a group");
  const auto gens = small_generating_set(G);
  std::vector<bool> done(G.size(), false);
  std::vector<PermSet> classes;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (done[i]) continue;
    // Conjugation orbit of G[i] under the generators (which generate all of
    // G, so the orbit is the full class).
    std::vector<Permutation> orbit{G[i]};
    done[i] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Permutation cur = orbit[head];
      for (const auto& g : gens) {
        Permutation moved = conjugate(g, cur);
        const auto idx = G.index_of(moved);
        if (!idx) throw std::logic_error("conjugacy_classes: closure left G");
        if (!done[*idx]) {
          done[*idx] = true;
          orbit.push_back(std::move(moved));
        }
      }
    }
    classes.emplace_back(G.degree(), std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [](const PermSet& a, const PermSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return classes;
}

std::map<unsigned, std::size_t> order_spectrum(const PermSet& G) {
  if (!G.group()) throw std::invalid_argument("order_spectrum: G is not flagged as a group");
  std::map<unsigned, std::size_t> spectrum;
  for (const auto& p : G) ++spectrum[p.order()];
  return spectrum;
}

SimplicityResult is_simple(const PermSet& G, std::size_t class_bound) {
  if (!G.group() || G.size() <= 1)
    throw std::invalid_argument("is_simple: needs a nontrivial group");
  const auto classes = conjugacy_classes(G);
  if (classes.size() > class_bound)
    throw std::invalid_argument("is_simple: class count exceeds configured bound");

  // Identity class first; scan subsets of the remaining classes.
  std::vector<const PermSet*> rest;
  for (const auto& c : classes)
    if (!(c.size() == 1 && c[0].is_identity())) rest.push_back(&c);
  const std::size_t m = rest.size();

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::uint64_t{1} << k)) total += rest[k]->size();
    if (total <= 1 || total >= G.size() || G.size() % total != 0) continue;

    std::vector<Permutation> members{Permutation(G.degree())};
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::uint64_t{1} << k))
        members.insert(members.end(), rest[k]->begin(), rest[k]->end());
    PermSet candidate(G.degree(), std::move(members));

    // The union is a normal subgroup iff it is closed under composition;
    // grow a subgroup inside it and fail fast on escape.
    std::unordered_set<Permutation, PermutationHash> closure;
    std::vector<Permutation> queue;
    std::vector<Permutation> gens;
    closure.insert(Permutation(G.degree()));
    queue.push_back(Permutation(G.degree()));
    bool closed = true;
    while (closed && closure.size() < candidate.size()) {
      const Permutation* fresh = nullptr;
      for (const auto& c : candidate) {
        if (!closure.count(c)) {
          fresh = &c;
          break;
        }
      }
      gens.push_back(*fresh);
      std::size_t head = 0;
      while (head < queue.size()) {
        const Permutation cur = queue[head++];
        for (const auto& g : gens) {
          Permutation next = compose(cur, g);
          if (!candidate.contains(next)) {
            closed = false;
            break;
          }
          if (closure.insert(next).second) queue.push_back(std::move(next));
        }
        if (!closed) break;
      }
    }
    if (closed && closure.size() == candidate.size())
      return SimplicityResult{false, candidate.mark_group()};
  }
  return SimplicityResult{true, std::nullopt};
}

}  // namespace unitgroup
