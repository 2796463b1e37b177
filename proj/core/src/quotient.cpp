#include "unitgroup/quotient.hpp"

#include <bit>
#include <memory>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "unitgroup/parallel.hpp"

namespace unitgroup {

F2AlgebraTable::F2AlgebraTable(unsigned dim, std::uint32_t unity,
                               std::vector<std::uint32_t> structure)
    : dim_(dim), unity_(unity), structure_(std::move(structure)) {
  if (dim_ > 32) throw std::invalid_argument("F2AlgebraTable: dimension exceeds 32");
  if (structure_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("F2AlgebraTable: structure size != dim*dim");
  const std::uint32_t mask = dim_ == 32 ? ~0u : ((1u << dim_) - 1);
  if ((unity_ & ~mask) != 0)
    throw std::invalid_argument("F2AlgebraTable: unity has bits past dim");
  for (std::uint32_t s : structure_)
    if ((s & ~mask) != 0)
      throw std::invalid_argument("F2AlgebraTable: structure entry has bits past dim");
}

std::uint32_t F2AlgebraTable::mul(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t acc = 0;
  for (std::uint32_t xm = x; xm; xm &= xm - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(xm));
    const std::uint32_t* row = &structure_[static_cast<std::size_t>(i) * dim_];
    for (std::uint32_t ym = y; ym; ym &= ym - 1)
      acc ^= row[std::countr_zero(ym)];
  }
  return acc;
}

bool F2AlgebraTable::check_unity() const {
  for (unsigned i = 0; i < dim_; ++i) {
    const std::uint32_t e = 1u << i;
    if (mul(unity_, e) != e || mul(e, unity_) != e) return false;
  }
  return true;
}

bool F2AlgebraTable::check_associativity() const {
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      for (unsigned k = 0; k < dim_; ++k) {
        const std::uint32_t ei = 1u << i, ej = 1u << j, ek = 1u << k;
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) return false;
      }
  return true;
}

QuotientRing::QuotientRing(GroupPtr g, Ideal i, unsigned dim,
                           std::vector<std::size_t> free_cols, F2AlgebraTable table,
                           std::uint32_t one)
    : group_(std::move(g)),
      ideal_(std::move(i)),
      dim_(dim),
      free_cols_(std::move(free_cols)),
      table_(std::move(table)),
      one_(one) {}

QuotientRing QuotientRing::build(GroupPtr G, Ideal I, unsigned dim_bound) {
  if (I.group() != G) throw std::invalid_argument("QuotientRing: ideal is over a different group");
  if (!I.closed()) throw std::invalid_argument("QuotientRing: ideal is not closed");
  const std::size_t n = G->size();
  auto free_cols = I.basis().free_columns();
  const unsigned d = static_cast<unsigned>(free_cols.size());
  if (d > dim_bound)
    throw std::invalid_argument("QuotientRing: dimension exceeds the enumeration bound");

  const auto compress = [&](const BitVector& canonical) {
    std::uint32_t bits = 0;
    for (unsigned i = 0; i < d; ++i)
      if (canonical.test(free_cols[i])) bits |= 1u << i;
    return bits;
  };

  // Free-column indicators are already canonical; structure constants come
  // from the group product of the corresponding basis elements.
  std::vector<std::uint32_t> structure(static_cast<std::size_t>(d) * d, 0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      const unsigned gi = static_cast<unsigned>(free_cols[i]);
      const unsigned gj = static_cast<unsigned>(free_cols[j]);
      const BitVector prod =
          I.basis().reduce(BitVector::unit(n, G->mul(gi, gj)));
      structure[static_cast<std::size_t>(i) * d + j] = compress(prod);
    }
  const std::uint32_t one =
      compress(I.basis().reduce(BitVector::unit(n, G->identity())));
  return QuotientRing(std::move(G), std::move(I), d, std::move(free_cols),
                      F2AlgebraTable(d, one, std::move(structure)), one);
}

std::uint32_t QuotientRing::compress(const BitVector& canonical) const {
  std::uint32_t bits = 0;
  for (unsigned i = 0; i < dim_; ++i)
    if (canonical.test(free_cols_[i])) bits |= 1u << i;
  return bits;
}

BitVector QuotientRing::expand(std::uint32_t bits) const {
  BitVector v(group_->size());
  for (unsigned i = 0; i < dim_; ++i)
    if (bits & (1u << i)) v.set(free_cols_[i]);
  return v;
}

std::uint32_t QuotientRing::project(const BitVector& v) const {
  return compress(canonicalize(v));
}

std::uint32_t QuotientRing::image_of(unsigned element_index) const {
  return project(BitVector::unit(group_->size(), element_index));
}

AlgebraElement QuotientRing::representative(std::uint32_t bits) const {
  return AlgebraElement(group_, expand(bits));
}

F2AlgebraTable to_table(const QuotientRing& R) { return R.table(); }

namespace {

// Rank of up to 32 rows of <=32 bits, slot-per-lowest-set-bit elimination.
unsigned rank_u32(const std::uint32_t* rows, unsigned count) {
  std::uint32_t slot[32] = {};
  unsigned rank = 0;
  for (unsigned r = 0; r < count; ++r) {
    std::uint32_t v = rows[r];
    while (v) {
      const unsigned p = static_cast<unsigned>(std::countr_zero(v));
      if (slot[p]) {
        v ^= slot[p];
      } else {
        slot[p] = v;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

bool table_element_is_unit(const F2AlgebraTable& T, std::uint32_t x) {
  const unsigned d = T.dim();
  std::uint32_t rows[32];
  for (unsigned j = 0; j < d; ++j) rows[j] = T.mul(x, 1u << j);
  return rank_u32(rows, d) == d;
}

}  // namespace

TableUnitScan unit_scan(const F2AlgebraTable& table, unsigned threads,
                        IndexedGroup::LabelFn label) {
  TableUnitScan scan;
  scan.ring_size = table.size();
  const std::uint64_t total = table.size();
  std::vector<char> is_unit_flag(total, 0);
  run_chunked(total, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x)
      is_unit_flag[x] = table_element_is_unit(table, static_cast<std::uint32_t>(x));
  });
  for (std::uint64_t x = 0; x < total; ++x)
    if (is_unit_flag[x]) scan.units.push_back(static_cast<std::uint32_t>(x));
  scan.unit_count = scan.units.size();

  auto shared = std::make_shared<const F2AlgebraTable>(table);
  std::vector<std::uint64_t> values(scan.units.begin(), scan.units.end());
  scan.unit_group = std::make_shared<const IndexedGroup>(IndexedGroup::from_values(
      std::move(values), table.unity(),
      [shared](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(shared->mul(static_cast<std::uint32_t>(a),
                                                      static_cast<std::uint32_t>(b)));
      },
      IndexedGroup::Options{kDefaultTableBound, true}, std::move(label)));
  scan.spectrum = order_spectrum(*scan.unit_group);
  return scan;
}

UnitGroupReport unit_report(const QuotientRing& R, unsigned threads) {
  // Unit labels render the canonical coset representative; capture by value
  // so the label function outlives R.
  const GroupPtr G = R.group();
  const auto free_cols = R.free_columns();
  const unsigned d = R.dim();
  IndexedGroup::LabelFn label = [G, free_cols, d](std::uint64_t bits) {
    BitVector v(G->size());
    for (unsigned i = 0; i < d; ++i)
      if (bits & (std::uint64_t{1} << i)) v.set(free_cols[i]);
    return AlgebraElement(G, std::move(v)).to_text();
  };

  TableUnitScan scan = unit_scan(R.table(), threads, std::move(label));

  UnitGroupReport report;
  report.ring_size = scan.ring_size;
  report.unit_count = scan.unit_count;
  report.unit_group = scan.unit_group;
  report.spectrum = std::move(scan.spectrum);
  report.ideal_dim = R.ideal().dim();
  for (const auto& g : R.ideal().generators())
    report.ideal_generators.push_back(g.to_text());

  std::unordered_set<std::uint32_t> cosets;
  cosets.reserve(G->size() * 2);
  bool distinct = true;
  for (unsigned g = 0; g < G->size(); ++g)
    if (!cosets.insert(R.image_of(g)).second) distinct = false;
  report.identity_criterion = distinct && (report.unit_count == G->size());
  return report;
}

bool identity_criterion(const QuotientRing& R) {
  return unit_report(R).identity_criterion;
}

std::string to_json(const UnitGroupReport& report) {
  nlohmann::ordered_json o;
  o["ring_size"] = report.ring_size;
  o["unit_count"] = report.unit_count;
  o["identity_criterion"] = report.identity_criterion;
  nlohmann::ordered_json spectrum = nlohmann::ordered_json::object();
  for (const auto& [ord, count] : report.spectrum)
    spectrum[std::to_string(ord)] = count;
  o["spectrum"] = std::move(spectrum);
  o["ideal_dim"] = report.ideal_dim;
  o["generators"] = report.ideal_generators;
  return o.dump();
}

MaxUnitsScan max_units_over_principal_quotients(const QuotientRing& R) {
  const F2AlgebraTable& T = R.table();
  const unsigned d = R.dim();

  // Ring multiplications by the images of the group generators span the full
  // two-sided action (every group element is a positive word in them).
  std::vector<std::uint32_t> gen_images;
  for (const auto& s : R.ideal().group_generators())
    gen_images.push_back(R.image_of(static_cast<unsigned>(
        *R.group()->perms()->index_of(s))));

  MaxUnitsScan best;
  for (std::uint32_t x = 1; x < (1u << d); ++x) {
    // Principal two-sided ideal (x) inside the quotient, worklist closure.
    std::uint32_t slot[32] = {};
    unsigned rank = 0;
    std::vector<std::uint32_t> work{x};
    const auto insert = [&](std::uint32_t v) {
      while (v) {
        const unsigned p = static_cast<unsigned>(std::countr_zero(v));
        if (slot[p]) {
          v ^= slot[p];
        } else {
          slot[p] = v;
          ++rank;
          return true;
        }
      }
      return false;
    };
    while (!work.empty()) {
      const std::uint32_t v = work.back();
      work.pop_back();
      if (!insert(v)) continue;
      for (std::uint32_t g : gen_images) {
        work.push_back(T.mul(g, v));
        work.push_back(T.mul(v, g));
      }
    }

    // Canonical forms of the sub-quotient: zero out pivot positions.
    const auto reduce = [&](std::uint32_t v) {
      for (unsigned p = 0; p < d; ++p)
        if (slot[p] && (v & (1u << p))) v ^= slot[p];
      return v;
    };
    std::vector<unsigned> sub_free;
    for (unsigned p = 0; p < d; ++p)
      if (!slot[p]) sub_free.push_back(p);
    const unsigned sd = static_cast<unsigned>(sub_free.size());

    std::size_t units = 0;
    if (sd == 0) {
      units = 1;  // zero ring
    } else {
      for (std::uint32_t ybits = 0; ybits < (1u << sd); ++ybits) {
        std::uint32_t y = 0;
        for (unsigned i = 0; i < sd; ++i)
          if (ybits & (1u << i)) y |= 1u << sub_free[i];
        std::uint32_t rows[32];
        for (unsigned i = 0; i < sd; ++i) {
          const std::uint32_t col = reduce(T.mul(y, 1u << sub_free[i]));
          std::uint32_t packed = 0;
          for (unsigned j = 0; j < sd; ++j)
            if (col & (1u << sub_free[j])) packed |= 1u << j;
          rows[i] = packed;
        }
        if (rank_u32(rows, sd) == sd) ++units;
      }
    }
    if (units > best.max_units) {
      best.max_units = units;
      best.witness = x;
    }
  }
  return best;
}

}  // namespace unitgroup
