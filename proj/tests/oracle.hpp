#pragma once

// Test-only reference solver. Followers are generated straight from the rule
// text and values by a plain mex over a std::map; nothing here goes through
// legal_moves or the incremental table builder.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

enum class Rules { Wythoff, F, FR, FE };

using Pos = std::pair<std::uint32_t, std::uint32_t>;

inline Pos canon(std::int64_t a, std::int64_t b) {
  return a <= b ? Pos(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))
                : Pos(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a));
}

inline std::set<Pos> followers(Rules r, std::int64_t a, std::int64_t b) {
  std::set<Pos> out;
  // single pile
  for (std::int64_t k = 1; k <= b; ++k) out.insert(canon(a, b - k));
  if (!(r == Rules::FR && a < b)) {
    for (std::int64_t k = 1; k <= a; ++k) out.insert(canon(a - k, b));
  }
  // both piles
  for (std::int64_t k = 1; k <= a; ++k) {
    if (r == Rules::Wythoff) {
      out.insert(canon(a - k, b - k));
    } else if (a - k >= 1 && b / a == (b - k) / (a - k)) {
      out.insert(canon(a - k, b - k));
    }
  }
  if (r == Rules::FE) {
    for (std::int64_t k = 1; k < a; ++k) {
      for (std::int64_t l = 1; l <= k; ++l) {
        if (b / a == (b - l) / (a - k)) out.insert(canon(a - k, b - l));
      }
    }
  }
  return out;
}

struct Table {
  std::uint32_t a_max = 0;
  std::uint32_t b_max = 0;
  std::map<Pos, std::uint32_t> values;

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return values.at(canon(a, b)); }
};

inline Table solve(Rules r, bool misere, std::uint32_t a_max, std::uint32_t b_max) {
  Table t{a_max, b_max, {}};
  for (std::uint64_t total = 0; total <= std::uint64_t{a_max} + b_max; ++total) {
    for (std::uint32_t a = 0; a <= a_max; ++a) {
      if (total < a) break;
      const std::uint64_t b = total - a;
      if (b < a || b > b_max) continue;
      if (a == 0 && b == 0) {
        t.values[{0, 0}] = misere ? 1 : 0;
        continue;
      }
      std::set<std::uint32_t> seen;
      for (const auto& q : followers(r, a, static_cast<std::int64_t>(b))) seen.insert(t.values.at(q));
      std::uint32_t m = 0;
      while (seen.count(m)) ++m;
      t.values[{a, static_cast<std::uint32_t>(b)}] = m;
    }
  }
  return t;
}

// floor(phi n) by linear search on the witness (2a - n)^2 <= 5 n^2.
inline std::uint64_t floor_phi_by_search(std::uint64_t n) {
  std::uint64_t a = n;
  while (true) {
    const __int128 lo = 2 * static_cast<__int128>(a + 1) - n;
    if (lo * lo > 5 * static_cast<__int128>(n) * n) return a;
    ++a;
  }
}

}  // namespace oracle
