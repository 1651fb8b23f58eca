#include <doctest.h>

#include <algorithm>
#include <set>

#include "fwythoff/beatty.hpp"
#include "fwythoff/errors.hpp"
#include "fwythoff/game_rules.hpp"
#include "oracle.hpp"

using namespace fwythoff;

namespace {

constexpr Variant kVariants[] = {Variant::Wythoff, Variant::FWythoff, Variant::FRWythoff, Variant::FEWythoff};

oracle::Rules rules_of(Variant v) {
  switch (v) {
    case Variant::Wythoff:
      return oracle::Rules::Wythoff;
    case Variant::FWythoff:
      return oracle::Rules::F;
    case Variant::FRWythoff:
      return oracle::Rules::FR;
    case Variant::FEWythoff:
      return oracle::Rules::FE;
  }
  return oracle::Rules::F;
}

template <typename F>
void for_each_position(Pile max_total, F&& f) {
  for (Pile a = 0; 2 * a <= max_total; ++a) {
    for (Pile b = a; a + b <= max_total; ++b) f(Position{a, b});
  }
}

}  // namespace

TEST_CASE("canonicalize sorts the two piles") {
  CHECK(canonicalize(5, 2) == Position{2, 5});
  CHECK(canonicalize(0, 0) == Position{0, 0});
  CHECK(canonicalize(7, 7) == Position{7, 7});
}

TEST_CASE("ratio is floor(large / small)") {
  CHECK(ratio({2, 4}) == 2);
  CHECK(ratio({1, 1}) == 1);
  CHECK_THROWS_AS(ratio({0, 5}), UndefinedRatioError);
  for (std::uint64_t n = 0; n <= 500; ++n) {
    const Position p{static_cast<Pile>(floor_phi(n) + 1), static_cast<Pile>(floor_phi2(n) + 1)};
    CHECK(ratio(p) == 1);
  }
}

TEST_CASE("F-Wythoff (1,1): only the two single-pile moves") {
  const auto moves = legal_moves(Variant::FWythoff, {1, 1});
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].spec == MoveSpec::take_one(PileSide::Smaller, 1));
  CHECK(moves[1].spec == MoveSpec::take_one(PileSide::Larger, 1));
  CHECK(moves[0].result == Position{0, 1});
  CHECK(moves[1].result == Position{0, 1});
  CHECK_FALSE(is_legal(Variant::FWythoff, {1, 1}, MoveSpec::take_both(1)));
}

TEST_CASE("F-Wythoff (2,4): ratio blocks the diagonal move") {
  CHECK_FALSE(is_legal(Variant::FWythoff, {2, 4}, MoveSpec::take_both(1)));
  const std::vector<Position> expected = {{0, 2}, {0, 4}, {1, 2}, {1, 4}, {2, 2}, {2, 3}};
  CHECK(followers(Variant::FWythoff, {2, 4}) == expected);
}

TEST_CASE("a single nonempty pile has exactly its TakeOne followers") {
  for (Variant v : kVariants) {
    const auto moves = legal_moves(v, {0, 5});
    REQUIRE(moves.size() == 5);
    for (Pile k = 1; k <= 5; ++k) {
      CHECK(moves[k - 1].spec == MoveSpec::take_one(PileSide::Larger, k));
      CHECK(moves[k - 1].result == Position{0, 5 - k});
    }
  }
}

TEST_CASE("terminal position") {
  CHECK(is_terminal({0, 0}));
  CHECK_FALSE(is_terminal({0, 1}));
  CHECK_FALSE(is_terminal({3, 3}));
  for (Variant v : kVariants) {
    CHECK(legal_moves(v, {0, 0}).empty());
    for (Pile n = 1; n < 20; ++n) CHECK_FALSE(legal_moves(v, {0, n}).empty());
  }
}

TEST_CASE("apply_move") {
  CHECK(apply_move(Variant::FWythoff, {2, 5}, MoveSpec::take_one(PileSide::Larger, 3)) == Position{2, 2});
  CHECK_THROWS_AS(apply_move(Variant::FWythoff, {4, 6}, MoveSpec::take_both(2)), IllegalMoveError);
  CHECK_THROWS_AS(apply_move(Variant::FWythoff, {5, 8}, MoveSpec::take_both(3)), IllegalMoveError);
  CHECK(apply_move(Variant::Wythoff, {4, 6}, MoveSpec::take_both(4)) == Position{0, 2});
  CHECK_THROWS_AS(apply_move(Variant::FWythoff, {4, 6}, MoveSpec::take_both(4)), IllegalMoveError);
  CHECK_THROWS_AS(apply_move(Variant::FWythoff, {2, 5}, MoveSpec::take_one(PileSide::Larger, 6)), IllegalMoveError);
  CHECK_THROWS_AS(apply_move(Variant::FWythoff, {3, 4}, MoveSpec::take_extended(1, 1)), IllegalMoveError);
}

TEST_CASE("F_R-Wythoff restricts single-pile moves to the larger pile") {
  CHECK_FALSE(is_legal(Variant::FRWythoff, {2, 5}, MoveSpec::take_one(PileSide::Smaller, 1)));
  CHECK(is_legal(Variant::FRWythoff, {3, 3}, MoveSpec::take_one(PileSide::Smaller, 1)));
  // the larger pile may become the smaller one
  CHECK(apply_move(Variant::FRWythoff, {2, 5}, MoveSpec::take_one(PileSide::Larger, 4)) == Position{1, 2});
}

TEST_CASE("F_E-Wythoff extended moves") {
  CHECK(is_legal(Variant::FEWythoff, {5, 6}, MoveSpec::take_extended(2, 1)));
  CHECK_FALSE(is_legal(Variant::FEWythoff, {5, 6}, MoveSpec::take_extended(1, 2)));
  CHECK_FALSE(is_legal(Variant::FEWythoff, {5, 6}, MoveSpec::take_extended(5, 1)));
  CHECK_FALSE(is_legal(Variant::FEWythoff, {5, 6}, MoveSpec::take_extended(2, 0)));
  // (5,6) -> (3,5) is reached by TakeOne(larger, 3) already, so the extended
  // duplicate is not listed
  const auto moves = legal_moves(Variant::FEWythoff, {5, 6});
  CHECK(std::none_of(moves.begin(), moves.end(), [](const Move& m) {
    return m.spec == MoveSpec::take_extended(2, 1);
  }));
  CHECK(std::none_of(moves.begin(), moves.end(), [](const Move& m) { return m.spec.kind == MoveKind::TakeExtended; }));
  const auto wide = legal_moves(Variant::FEWythoff, {7, 9});
  CHECK(std::any_of(wide.begin(), wide.end(), [](const Move& m) {
    return m.spec == MoveSpec::take_extended(2, 1) && m.result == Position{5, 8};
  }));
}

TEST_CASE("followers agree with the rule-text oracle") {
  for (Variant v : kVariants) {
    for_each_position(60, [&](Position p) {
      std::vector<Position> expected;
      for (const auto& [a, b] : oracle::followers(rules_of(v), p.small, p.large)) expected.push_back({a, b});
      CHECK_MESSAGE(followers(v, p) == expected, to_string(v), " at ", describe(p));
    });
  }
}

TEST_CASE("move invariants hold exhaustively") {
  for (Variant v : kVariants) {
    for_each_position(80, [&](Position p) {
      for (const auto& m : legal_moves(v, p)) {
        CHECK(m.result.small <= m.result.large);
        CHECK(m.result.total() < p.total());
        CHECK(is_legal(v, p, m.spec));
        CHECK(apply_move(v, p, m.spec) == m.result);
        if (m.spec.kind != MoveKind::TakeOne && v != Variant::Wythoff) {
          CHECK(m.result.small >= 1);
          CHECK(ratio(m.result) == ratio(p));
        }
      }
    });
  }
}

TEST_CASE("follower inclusion F_R within F within F_E") {
  for_each_position(120, [](Position p) {
    const auto fr = followers(Variant::FRWythoff, p);
    const auto f = followers(Variant::FWythoff, p);
    const auto fe = followers(Variant::FEWythoff, p);
    CHECK(std::includes(f.begin(), f.end(), fr.begin(), fr.end()));
    CHECK(std::includes(fe.begin(), fe.end(), f.begin(), f.end()));
  });
}

TEST_CASE("move generation ignores input order of the piles") {
  for (Variant v : kVariants) {
    for (Pile a = 0; a < 15; ++a) {
      for (Pile b = 0; b < 15; ++b) {
        CHECK(legal_moves(v, canonicalize(a, b)) == legal_moves(v, canonicalize(b, a)));
      }
    }
  }
}

TEST_CASE("names round-trip") {
  for (Variant v : kVariants) CHECK(parse_variant(to_string(v)) == v);
  CHECK(parse_variant("F-Wythoff") == Variant::FWythoff);
  CHECK_FALSE(parse_variant("nim").has_value());
  CHECK(parse_convention("MISERE") == Convention::Misere);
  CHECK(describe(MoveSpec::take_one(PileSide::Larger, 3)) == "one larger 3");
  CHECK(describe(MoveSpec::take_extended(3, 1)) == "ext 3 1");
}
