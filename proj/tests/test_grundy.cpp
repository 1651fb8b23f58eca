#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fwythoff/errors.hpp"
#include "fwythoff/grundy.hpp"
#include "oracle.hpp"
#include "small_table.hpp"

using namespace fwythoff;

namespace {

struct Case {
  Variant variant;
  oracle::Rules rules;
};

constexpr Case kCases[] = {
    {Variant::Wythoff, oracle::Rules::Wythoff},
    {Variant::FWythoff, oracle::Rules::F},
    {Variant::FRWythoff, oracle::Rules::FR},
    {Variant::FEWythoff, oracle::Rules::FE},
};

}  // namespace

TEST_CASE("mex") {
  CHECK(mex({}) == 0);
  const std::vector<Grundy> a = {0, 1, 2};
  CHECK(mex(a) == 3);
  const std::vector<Grundy> b = {1, 0, 4, 5, 2};
  CHECK(mex(b) == 3);
  const std::vector<Grundy> c = {7, 7, 1};
  CHECK(mex(c) == 0);
}

TEST_CASE("F-Wythoff 10x10 table") {
  const auto t = compute_table(Variant::FWythoff, Convention::Normal, 9, 9);
  for (Pile i = 0; i <= 9; ++i) {
    for (Pile j = 0; j <= 9; ++j) CHECK_MESSAGE(t.at(i, j) == kSmallTable[i][j], "(", i, ",", j, ")");
  }
  CHECK(t.at(4, 4) == 2);
  CHECK(t.at(6, 6) == 3);
  CHECK(t.at(9, 9) == 7);
  CHECK(t.at(2, 4) == 6);
  CHECK(t.at(Position{3, 4}) == 1);
  CHECK(t.at(8, 5) == 0);
  for (Pile n = 0; n <= 9; ++n) CHECK(t.at(0, n) == n);
}

TEST_CASE("misere terminal override") {
  CHECK(compute_table(Variant::FWythoff, Convention::Misere, 0, 0).at(0, 0) == 1);
  const auto m = compute_table(Variant::FWythoff, Convention::Misere, 2, 2);
  CHECK(m.at(2, 2) == 0);
  CHECK(m.at(1, 1) == 1);
  CHECK(compute_table(Variant::FWythoff, Convention::Normal, 3, 3).at(0, 0) == 0);
}

TEST_CASE("table shape and lookups") {
  const auto t = compute_table(Variant::FWythoff, Convention::Normal, 3, 10);
  CHECK(t.a_max() == 3);
  CHECK(t.b_max() == 10);
  CHECK(t.contains({3, 10}));
  CHECK_FALSE(t.contains({4, 4}));
  CHECK_THROWS_AS(t.at(Position{4, 5}), OutOfRangeError);
  CHECK_THROWS_AS(t.at(Position{0, 11}), OutOfRangeError);
  CHECK(t.row(2).size() == 11);
  CHECK(t.row(2)[0] == 2);
  // canonical cells: rows 0..3 of lengths 11, 10, 9, 8
  CHECK(t.canonical_cell_count() == 38);
  CHECK(t.canonical_values().size() == 38);
  const auto back = GrundyTable::from_canonical(Variant::FWythoff, Convention::Normal, 3, 10, t.canonical_values());
  CHECK(back == t);
}

TEST_CASE("a_max above b_max is rejected") {
  CHECK_THROWS_AS(compute_table(Variant::FWythoff, Convention::Normal, 12, 9), OutOfRangeError);
}

TEST_CASE("winning moves") {
  const auto t = compute_table(Variant::FWythoff, Convention::Normal, 20, 20);
  const auto w = winning_moves(Variant::FWythoff, Convention::Normal, t, {2, 8});
  REQUIRE(w.size() == 1);
  CHECK(w[0].spec == MoveSpec::take_one(PileSide::Larger, 5));
  CHECK(w[0].result == Position{2, 3});
  CHECK(winning_moves(t, {1, 1}).empty());
  const auto z = winning_moves(t, {0, 7});
  REQUIRE(z.size() == 1);
  CHECK(z[0].result == Position{0, 0});
  CHECK_THROWS_AS(winning_moves(Variant::FRWythoff, Convention::Normal, t, {2, 8}), MismatchError);
  CHECK_THROWS_AS(winning_moves(Variant::FWythoff, Convention::Misere, t, {2, 8}), MismatchError);
}

TEST_CASE("P-position lists") {
  const std::vector<Position> f = {{0, 0}, {1, 1}, {2, 3}, {4, 6}, {5, 8}};
  CHECK(p_positions(compute_table(Variant::FWythoff, Convention::Normal, 9, 9)) == f);
  const std::vector<Position> w = {{0, 0}, {1, 2}, {3, 5}, {4, 7}};
  CHECK(p_positions(compute_table(Variant::Wythoff, Convention::Normal, 9, 9)) == w);
  const std::vector<Position> m = {{0, 1}, {2, 2}, {3, 4}, {5, 7}, {6, 9}};
  CHECK(p_positions(compute_table(Variant::FWythoff, Convention::Misere, 9, 9)) == m);
  const std::vector<Position> ones = {{0, 1}, {2, 2}, {3, 4}, {5, 7}, {6, 9}};
  CHECK(positions_with_value(compute_table(Variant::FWythoff, Convention::Normal, 9, 9), 1) == ones);
}

TEST_CASE("engine agrees with the reference solver") {
  const std::pair<Pile, Pile> shapes[] = {{24, 24}, {6, 60}, {0, 15}, {1, 1}};
  for (const auto& c : kCases) {
    for (bool misere : {false, true}) {
      const Convention conv = misere ? Convention::Misere : Convention::Normal;
      for (const auto& [am, bm] : shapes) {
        const auto t = compute_table(c.variant, conv, am, bm);
        const auto o = oracle::solve(c.rules, misere, am, bm);
        for (Pile a = 0; a <= am; ++a) {
          for (Pile b = a; b <= bm; ++b) {
            CHECK_MESSAGE(t.at(a, b) == o(a, b), to_string(c.variant), " ", to_string(conv), " (", a, ",", b, ")");
          }
        }
      }
    }
  }
}

TEST_CASE("mex contract on every cell") {
  for (const auto& c : kCases) {
    const auto t = compute_table(c.variant, Convention::Normal, 40, 40);
    for (Pile a = 0; a <= 40; ++a) {
      for (Pile b = std::max<Pile>(a, 1); b <= 40; ++b) {
        std::set<Grundy> seen;
        for (const auto& q : followers(c.variant, {a, b})) seen.insert(t.at(q));
        const Grundy g = t.at(a, b);
        CHECK(seen.count(g) == 0);
        for (Grundy v = 0; v < g; ++v) CHECK(seen.count(v) == 1);
      }
    }
  }
}

TEST_CASE("determinism") {
  CHECK(compute_table(Variant::FEWythoff, Convention::Misere, 30, 50) ==
        compute_table(Variant::FEWythoff, Convention::Misere, 30, 50));
}

TEST_CASE("memory budget") {
  ComputeOptions tight;
  tight.memory_budget_bytes = 1024;
  CHECK_THROWS_AS(compute_table(Variant::FWythoff, Convention::Normal, 100, 100, tight), CapacityError);
}
