#include "fwythoff/game_rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "fwythoff/errors.hpp"

namespace fwythoff {

Pile ratio(Position p) {
  if (p.small == 0) {
    throw UndefinedRatioError("ratio undefined for position " + describe(p));
  }
  return p.large / p.small;
}

namespace {

Position result_of(Position p, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::TakeOne:
      return m.pile == PileSide::Smaller ? canonicalize(p.small - m.k, p.large)
                                         : canonicalize(p.small, p.large - m.k);
    case MoveKind::TakeBoth:
      return Position{p.small - m.k, p.large - m.k};
    case MoveKind::TakeExtended:
      return canonicalize(p.small - m.k, p.large - m.l);
  }
  return p;
}

// Ratio test for moves that shrink both piles; `after` has a positive small pile.
bool keeps_ratio(Position before, Pile after_small, Pile after_large) {
  return before.large / before.small == after_large / after_small;
}

}  // namespace

bool is_legal(Variant v, Position p, const MoveSpec& m) {
  if (p.small > p.large || m.k == 0) return false;
  switch (m.kind) {
    case MoveKind::TakeOne:
      if (m.pile == PileSide::Smaller) {
        if (v == Variant::FRWythoff && p.small < p.large) return false;
        return m.k <= p.small;
      }
      return m.k <= p.large;
    case MoveKind::TakeBoth:
      if (v == Variant::Wythoff) return m.k <= p.small;
      return m.k < p.small && keeps_ratio(p, p.small - m.k, p.large - m.k);
    case MoveKind::TakeExtended:
      if (v != Variant::FEWythoff) return false;
      if (m.l == 0 || m.l > m.k || m.k >= p.small) return false;
      return keeps_ratio(p, p.small - m.k, p.large - m.l);
  }
  return false;
}

Position apply_move(Variant v, Position p, const MoveSpec& m) {
  if (!is_legal(v, p, m)) {
    throw IllegalMoveError("illegal move '" + describe(m) + "' from " + describe(p) + " in " +
                           std::string(to_string(v)));
  }
  return result_of(p, m);
}

std::vector<Move> legal_moves(Variant v, Position p) {
  std::vector<Move> moves;
  auto push = [&](const MoveSpec& m) { moves.push_back({m, result_of(p, m)}); };

  if (v != Variant::FRWythoff || p.small == p.large) {
    for (Pile k = 1; k <= p.small; ++k) push(MoveSpec::take_one(PileSide::Smaller, k));
  }
  for (Pile k = 1; k <= p.large; ++k) push(MoveSpec::take_one(PileSide::Larger, k));

  if (v == Variant::Wythoff) {
    for (Pile k = 1; k <= p.small; ++k) push(MoveSpec::take_both(k));
    return moves;
  }
  for (Pile k = 1; k < p.small; ++k) {
    if (keeps_ratio(p, p.small - k, p.large - k)) push(MoveSpec::take_both(k));
  }
  if (v != Variant::FEWythoff) return moves;

  std::set<Position> seen;
  for (const auto& m : moves) seen.insert(m.result);
  for (Pile k = 1; k < p.small; ++k) {
    for (Pile l = 1; l <= k; ++l) {
      if (!keeps_ratio(p, p.small - k, p.large - l)) continue;
      const MoveSpec m = MoveSpec::take_extended(k, l);
      const Position q = result_of(p, m);
      if (seen.insert(q).second) moves.push_back({m, q});
    }
  }
  return moves;
}

std::vector<Position> followers(Variant v, Position p) {
  std::vector<Position> out;
  for (const auto& m : legal_moves(v, p)) out.push_back(m.result);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

constexpr std::array<std::string_view, 4> kVariantNames = {"wythoff", "f-wythoff", "fr-wythoff",
                                                           "fe-wythoff"};
constexpr std::array<std::string_view, 2> kConventionNames = {"normal", "misere"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Variant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

std::string_view to_string(Convention c) { return kConventionNames[static_cast<std::size_t>(c)]; }

std::optional<Variant> parse_variant(std::string_view s) {
  const std::string key = lower(s);
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (key == kVariantNames[i]) return static_cast<Variant>(i);
  }
  return std::nullopt;
}

std::optional<Convention> parse_convention(std::string_view s) {
  const std::string key = lower(s);
  if (key == "normal") return Convention::Normal;
  if (key == "misere" || key == "misère") return Convention::Misere;
  return std::nullopt;
}

std::string describe(const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::TakeOne:
      return std::string("one ") + (m.pile == PileSide::Smaller ? "smaller " : "larger ") +
             std::to_string(m.k);
    case MoveKind::TakeBoth:
      return "both " + std::to_string(m.k);
    case MoveKind::TakeExtended:
      return "ext " + std::to_string(m.k) + " " + std::to_string(m.l);
  }
  return {};
}

std::string describe(Position p) {
  return "(" + std::to_string(p.small) + "," + std::to_string(p.large) + ")";
}

}  // namespace fwythoff
