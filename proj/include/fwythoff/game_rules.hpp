#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fwythoff {

using Pile = std::uint32_t;

// A two-pile position. Always canonical: small <= large.
struct Position {
  Pile small = 0;
  Pile large = 0;

  constexpr std::uint64_t total() const { return std::uint64_t{small} + large; }
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

constexpr Position canonicalize(Pile a, Pile b) {
  return a <= b ? Position{a, b} : Position{b, a};
}

enum class Variant : std::uint8_t { Wythoff = 0, FWythoff = 1, FRWythoff = 2, FEWythoff = 3 };
enum class Convention : std::uint8_t { Normal = 0, Misere = 1 };

enum class MoveKind : std::uint8_t { TakeOne, TakeBoth, TakeExtended };
enum class PileSide : std::uint8_t { Smaller, Larger };

struct MoveSpec {
  MoveKind kind = MoveKind::TakeOne;
  PileSide pile = PileSide::Larger;  // TakeOne only
  Pile k = 1;
  Pile l = 0;                        // TakeExtended only

  static constexpr MoveSpec take_one(PileSide side, Pile k) { return {MoveKind::TakeOne, side, k, 0}; }
  static constexpr MoveSpec take_both(Pile k) { return {MoveKind::TakeBoth, PileSide::Larger, k, 0}; }
  static constexpr MoveSpec take_extended(Pile k, Pile l) {
    return {MoveKind::TakeExtended, PileSide::Larger, k, l};
  }

  friend constexpr bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct Move {
  MoveSpec spec;
  Position result;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

// Integer ratio floor(large / small). Throws UndefinedRatioError when small == 0.
Pile ratio(Position p);

// All legal moves in enumeration order: TakeOne(smaller, 1..), TakeOne(larger, 1..),
// TakeBoth(1..), TakeExtended(k, l) lexicographic. TakeExtended moves whose
// result another family already reaches are dropped.
std::vector<Move> legal_moves(Variant v, Position p);

// Sorted, duplicate-free set of follower positions.
std::vector<Position> followers(Variant v, Position p);

constexpr bool is_terminal(Position p) { return p.small == 0 && p.large == 0; }

bool is_legal(Variant v, Position p, const MoveSpec& m);

// Throws IllegalMoveError if m is not legal for v at p.
Position apply_move(Variant v, Position p, const MoveSpec& m);

std::string_view to_string(Variant v);
std::string_view to_string(Convention c);
std::optional<Variant> parse_variant(std::string_view s);
std::optional<Convention> parse_convention(std::string_view s);

// Text form used by the play protocol: "one larger 3", "both 2", "ext 3 1".
std::string describe(const MoveSpec& m);
std::string describe(Position p);

}  // namespace fwythoff
