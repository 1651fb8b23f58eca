#include "fwythoff/beatty.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "fwythoff/errors.hpp"

namespace fwythoff {

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  // Newton from an overestimate 2^ceil(bits/2) decreases monotonically to the floor root.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(v) + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::uint64_t floor_phi(std::uint64_t n) {
  if (n > kMaxBeattyIndex) {
    throw OverflowError("floor_phi index " + std::to_string(n) + " overflows 5n^2");
  }
  return (n + isqrt(5 * n * n)) / 2;
}

std::uint64_t floor_phi2(std::uint64_t n) { return floor_phi(n) + n; }

bool is_lower_wythoff(std::uint64_t x, std::uint64_t* index) {
  if (x == 0) {
    if (index != nullptr) *index = 0;
    return true;
  }
  // floor(phi m) = x forces m in [x/phi, (x+1)/phi), i.e. m = ceil(x/phi) = floor(x/phi)+1
  // (x/phi is irrational for x >= 1). floor(x/phi) = floor(phi x) - x.
  const std::uint64_t m = floor_phi(x) - x + 1;
  if (floor_phi(m) != x) return false;
  if (index != nullptr) *index = m;
  return true;
}

BeattyPair beatty_pair(std::uint64_t n) {
  const std::uint64_t a = floor_phi(n);
  return {n, a, a + n};
}

ClosedSet closed_set(ClosedSetLabel label) {
  using enum ClosedSetLabel;
  switch (label) {
    case PNormal:
      return {label, {{0, 0}}, 1, Variant::FWythoff, Convention::Normal, 0};
    case G1Normal:
      return {label, {{0, 1}}, 2, Variant::FWythoff, Convention::Normal, 1};
    case G2Normal:
      return {label, {{0, 2}, {1, 3}}, 4, Variant::FWythoff, Convention::Normal, 2};
    case PMisere:
      return {label, {{0, 1}}, 2, Variant::FWythoff, Convention::Misere, 0};
    case G1Misere:
      // The terminal (0,0) has misere value 1: its only option is the added sink.
      return {label, {{0, 0}}, 1, Variant::FWythoff, Convention::Misere, 1};
    case PWythoff:
      return {label, {}, 0, Variant::Wythoff, Convention::Normal, 0};
  }
  return {};
}

namespace {

constexpr std::array<std::string_view, 6> kLabelNames = {"P-normal",  "G1-normal", "G2-normal",
                                                         "P-misere",  "G1-misere", "P-wythoff"};

}  // namespace

std::string_view to_string(ClosedSetLabel label) { return kLabelNames[static_cast<std::size_t>(label)]; }

std::optional<ClosedSetLabel> parse_closed_set_label(std::string_view s) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (s == kLabelNames[i]) return static_cast<ClosedSetLabel>(i);
  }
  return std::nullopt;
}

std::vector<Position> generate(const ClosedSet& s, std::uint64_t bound) {
  std::vector<Position> out;
  for (const auto& p : s.exceptional) {
    if (p.large <= bound) out.push_back(p);
  }
  for (std::uint64_t n = 0;; ++n) {
    const BeattyPair w = beatty_pair(n);
    const std::uint64_t large = w.b + s.offset;
    if (large > bound) break;
    out.push_back({static_cast<Pile>(w.a + s.offset), static_cast<Pile>(large)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Position> closed_set(ClosedSetLabel label, std::uint64_t bound) {
  return generate(closed_set(label), bound);
}

bool check_ratio_lemma(std::uint64_t n, std::uint64_t k, std::uint64_t i) {
  const BeattyPair w = beatty_pair(n);
  const std::uint64_t shifted = (w.b + k + i) / (w.a + k + i);
  const std::uint64_t base = (w.b + i) / (w.a + i);
  return shifted == 1 && base == 1;
}

}  // namespace fwythoff
