#include "fwythoff/grundy.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "fwythoff/errors.hpp"

namespace fwythoff {

Grundy mex(std::span<const Grundy> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Grundy v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Grundy m = 0;
  while (seen[m]) ++m;
  return m;
}

GrundyTable::GrundyTable(Variant v, Convention c, Pile a_max, Pile b_max)
    : variant_(v), convention_(c), a_max_(a_max), b_max_(b_max) {
  if (a_max > b_max) {
    throw OutOfRangeError("strip requires a_max <= b_max (got " + std::to_string(a_max) + " > " +
                          std::to_string(b_max) + ")");
  }
  values_.assign((std::size_t{a_max} + 1) * stride(), 0);
}

GrundyTable GrundyTable::from_canonical(Variant v, Convention c, Pile a_max, Pile b_max,
                                        std::span<const Grundy> canonical) {
  GrundyTable t(v, c, a_max, b_max);
  if (canonical.size() != t.canonical_cell_count()) {
    throw MismatchError("expected " + std::to_string(t.canonical_cell_count()) +
                        " canonical cells, got " + std::to_string(canonical.size()));
  }
  std::size_t i = 0;
  for (Pile a = 0; a <= a_max; ++a) {
    for (Pile b = a; b <= b_max; ++b) {
      t.cell(a, b) = canonical[i++];
      if (b <= a_max) t.cell(b, a) = t.cell(a, b);
    }
  }
  return t;
}

Grundy GrundyTable::at(Position p) const {
  if (!contains(p)) {
    throw OutOfRangeError("position " + describe(p) + " outside strip a<=" + std::to_string(a_max_) +
                          ", b<=" + std::to_string(b_max_));
  }
  return cell(p.small, p.large);
}

std::span<const Grundy> GrundyTable::row(Pile a) const {
  if (a > a_max_) throw OutOfRangeError("row " + std::to_string(a) + " outside strip");
  return {values_.data() + std::size_t{a} * stride(), stride()};
}

std::size_t GrundyTable::canonical_cell_count() const {
  // sum over a = 0..a_max of (b_max - a + 1)
  const std::size_t rows = std::size_t{a_max_} + 1;
  return rows * (std::size_t{b_max_} + 1) - rows * (rows - 1) / 2;
}

std::vector<Grundy> GrundyTable::canonical_values() const {
  std::vector<Grundy> out;
  out.reserve(canonical_cell_count());
  for (Pile a = 0; a <= a_max_; ++a) {
    for (Pile b = a; b <= b_max_; ++b) out.push_back(cell(a, b));
  }
  return out;
}

// Incremental solver. For canonical (a,b) the followers split into
//   column  (a', b), a' < a           -> col_[b]
//   row     (a, b') in the full array  -> row_
//   diagonal (a-k, b-k)                -> diag_[b - a]
//   extended (F_E only)                -> scratch_, read straight from the table
// Each set is a bitset over Grundy values. On diagonal d the ratio
// floor(b/a) equals 1 + floor(d/a), which is non-increasing in a, so the
// ratio-preserving diagonal followers of a cell form the current run of equal
// floor(d/a) on that diagonal.
class TableBuilder {
 public:
  TableBuilder(Variant v, Convention c, Pile a_max, Pile b_max, const ComputeOptions& options)
      : table_(v, c, a_max, b_max) {
    const std::uint64_t am = a_max;
    const std::uint64_t bm = b_max;
    // Any value is bounded by the follower count; F_E gets generous headroom
    // and extended follower values beyond it are provably irrelevant unless
    // the mex reaches the ceiling, which is detected.
    const std::uint64_t bits =
        (v == Variant::FEWythoff ? 4 * am + 2 * bm + 64 : 2 * am + bm + 2);
    words_ = static_cast<std::size_t>((bits + 63) / 64);

    const long double set_count = 2.0L * (bm + 1) + 2.0L;
    const long double bytes = (am + 1.0L) * (bm + 1.0L) * sizeof(Grundy) +
                              set_count * static_cast<long double>(words_) * 8.0L;
    if (bytes > static_cast<long double>(options.memory_budget_bytes)) {
      throw CapacityError("strip " + std::to_string(a_max) + "x" + std::to_string(b_max) +
                          " needs ~" + std::to_string(static_cast<unsigned long long>(bytes)) +
                          " bytes, budget is " + std::to_string(options.memory_budget_bytes));
    }
    col_.assign((bm + 1) * words_, 0);
    diag_.assign((bm + 1) * words_, 0);
    diag_class_.assign(bm + 1, std::numeric_limits<Pile>::max());
    row_.assign(words_, 0);
    scratch_.assign(words_, 0);
  }

  GrundyTable build() && {
    const Variant v = table_.variant_;
    const bool wythoff = v == Variant::Wythoff;
    const bool restricted = v == Variant::FRWythoff;
    const bool extended = v == Variant::FEWythoff;

    for (Pile a = 0; a <= table_.a_max_; ++a) {
      std::copy_n(col_words(a), words_, row_.begin());
      for (Pile b = a; b <= table_.b_max_; ++b) {
        const Pile d = b - a;
        std::uint64_t* diag = diag_words(d);
        if (!wythoff && a >= 1 && diag_class_[d] != d / a) {
          std::fill_n(diag, words_, 0);
          diag_class_[d] = d / a;
        }

        Grundy value;
        if (a == 0 && b == 0) {
          value = table_.convention_ == Convention::Normal ? 0 : 1;
        } else {
          if (extended && a >= 2) stamp_extended(a, b);
          const std::uint64_t* col = (restricted && a < b) ? nullptr : col_words(b);
          value = first_free(col, diag);
        }

        table_.cell(a, b) = value;
        if (b <= table_.a_max_) table_.cell(b, a) = value;
        set_bit(row_.data(), value);
        set_bit(col_words(b), value);
        if (wythoff || a >= 1) set_bit(diag, value);
      }
    }
    return std::move(table_);
  }

 private:
  std::uint64_t* col_words(Pile b) { return col_.data() + std::size_t{b} * words_; }
  std::uint64_t* diag_words(Pile d) { return diag_.data() + std::size_t{d} * words_; }

  static void set_bit(std::uint64_t* words, Grundy v) { words[v / 64] |= std::uint64_t{1} << (v % 64); }

  void stamp_extended(Pile a, Pile b) {
    std::fill_n(scratch_.begin(), scratch_hi_, 0);
    scratch_hi_ = 0;
    const std::uint64_t r = b / a;
    const Grundy limit = static_cast<Grundy>(words_ * 64);
    for (Pile k = 1; k < a; ++k) {
      const std::uint64_t small = a - k;
      const std::uint64_t hi = std::min<std::uint64_t>(b - 1, (r + 1) * small - 1);
      const std::uint64_t lo = std::max<std::uint64_t>(b - k, r * small);
      if (hi < lo) break;  // later k only shrink the admissible band
      const Grundy* row = &table_.values_[small * table_.stride()];
      for (std::uint64_t bb = lo; bb <= hi; ++bb) {
        const Grundy v = row[bb];
        if (v < limit) {
          set_bit(scratch_.data(), v);
          scratch_hi_ = std::max<std::size_t>(scratch_hi_, v / 64 + 1);
        }
      }
    }
  }

  Grundy first_free(const std::uint64_t* col, const std::uint64_t* diag) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t x = row_[w] | diag[w] | scratch_[w];
      if (col != nullptr) x |= col[w];
      if (x != ~std::uint64_t{0}) return static_cast<Grundy>(w * 64 + std::countr_one(x));
    }
    throw CapacityError("Grundy value exceeded the solver's value ceiling");
  }

  GrundyTable table_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> col_;
  std::vector<std::uint64_t> diag_;
  std::vector<Pile> diag_class_;
  std::vector<std::uint64_t> row_;
  std::vector<std::uint64_t> scratch_;
  std::size_t scratch_hi_ = 0;
};

GrundyTable compute_table(Variant v, Convention c, Pile a_max, Pile b_max,
                          const ComputeOptions& options) {
  return TableBuilder(v, c, a_max, b_max, options).build();
}

std::vector<Move> winning_moves(const GrundyTable& t, Position p) {
  if (!t.contains(p)) throw OutOfRangeError("position " + describe(p) + " outside table strip");
  std::vector<Move> out;
  for (const auto& m : legal_moves(t.variant(), p)) {
    if (t.at(m.result) == 0) out.push_back(m);
  }
  return out;
}

std::vector<Move> winning_moves(Variant v, Convention c, const GrundyTable& t, Position p) {
  if (v != t.variant() || c != t.convention()) {
    throw MismatchError("table was built for " + std::string(to_string(t.variant())) + "/" +
                        std::string(to_string(t.convention())));
  }
  return winning_moves(t, p);
}

std::vector<Position> positions_with_value(const GrundyTable& t, Grundy g) {
  std::vector<Position> out;
  for (Pile a = 0; a <= t.a_max(); ++a) {
    const auto row = t.row(a);
    for (Pile b = a; b <= t.b_max(); ++b) {
      if (row[b] == g) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<Position> p_positions(const GrundyTable& t) { return positions_with_value(t, 0); }

}  // namespace fwythoff
