#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fwythoff/game_rules.hpp"

namespace fwythoff {

using Grundy = std::uint32_t;

// Least nonnegative integer absent from `values`.
Grundy mex(std::span<const Grundy> values);

// Dense Sprague-Grundy values over the canonical strip
//   {(a,b) : 0 <= a <= min(b, a_max), a <= b <= b_max}.
// Every follower of a stored position is stored as well, so the strip is
// closed under moves. Immutable once built.
class GrundyTable {
 public:
  GrundyTable() = default;

  // Builds a table from row-major canonical values (a ascending, b = a..b_max).
  static GrundyTable from_canonical(Variant v, Convention c, Pile a_max, Pile b_max,
                                    std::span<const Grundy> canonical);

  Variant variant() const { return variant_; }
  Convention convention() const { return convention_; }
  Pile a_max() const { return a_max_; }
  Pile b_max() const { return b_max_; }

  bool contains(Position p) const { return p.small <= a_max_ && p.large <= b_max_; }

  // Throws OutOfRangeError outside the strip.
  Grundy at(Position p) const;
  Grundy at(Pile a, Pile b) const { return at(canonicalize(a, b)); }

  // Full symmetric row a: values G(a, b) for b = 0..b_max. Requires a <= a_max.
  std::span<const Grundy> row(Pile a) const;

  std::size_t canonical_cell_count() const;
  std::vector<Grundy> canonical_values() const;

  friend bool operator==(const GrundyTable&, const GrundyTable&) = default;

 private:
  friend class TableBuilder;

  GrundyTable(Variant v, Convention c, Pile a_max, Pile b_max);

  Grundy& cell(Pile a, Pile b) { return values_[std::size_t{a} * stride() + b]; }
  Grundy cell(Pile a, Pile b) const { return values_[std::size_t{a} * stride() + b]; }
  std::size_t stride() const { return std::size_t{b_max_} + 1; }

  Variant variant_ = Variant::FWythoff;
  Convention convention_ = Convention::Normal;
  Pile a_max_ = 0;
  Pile b_max_ = 0;
  // Rows 0..a_max of the full symmetric array, columns 0..b_max.
  std::vector<Grundy> values_;
};

struct ComputeOptions {
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

// Fills the strip in increasing-total order. The terminal (0,0) is 0 under the
// normal convention and 1 under misere play.
GrundyTable compute_table(Variant v, Convention c, Pile a_max, Pile b_max,
                          const ComputeOptions& options = {});

inline Grundy grundy(const GrundyTable& t, Position p) { return t.at(p); }

// Legal moves from p landing on a value-0 position of t.
std::vector<Move> winning_moves(const GrundyTable& t, Position p);
// Same, after checking that (v, c) is what t was built for.
std::vector<Move> winning_moves(Variant v, Convention c, const GrundyTable& t, Position p);

// Zero-valued positions sorted by (small, large).
std::vector<Position> p_positions(const GrundyTable& t);

// Positions of value g sorted by (small, large).
std::vector<Position> positions_with_value(const GrundyTable& t, Grundy g);

}  // namespace fwythoff
