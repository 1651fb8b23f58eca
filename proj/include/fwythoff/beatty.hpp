#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fwythoff/game_rules.hpp"

namespace fwythoff {

// Largest n for which 5 n^2 fits in 64 unsigned bits.
inline constexpr std::uint64_t kMaxBeattyIndex = 1920767766;

// floor(sqrt(v)), integers only.
std::uint64_t isqrt(std::uint64_t v);

// floor(phi * n), computed as (n + isqrt(5 n^2)) / 2. Throws OverflowError
// past kMaxBeattyIndex.
std::uint64_t floor_phi(std::uint64_t n);

// floor(phi^2 * n) = floor(phi * n) + n.
std::uint64_t floor_phi2(std::uint64_t n);

// True iff x = floor(phi * m) for some m >= 0; stores m in *index when given.
bool is_lower_wythoff(std::uint64_t x, std::uint64_t* index = nullptr);

struct BeattyPair {
  std::uint64_t n = 0;
  std::uint64_t a = 0;  // floor(phi n)
  std::uint64_t b = 0;  // floor(phi^2 n)
};

BeattyPair beatty_pair(std::uint64_t n);

enum class ClosedSetLabel : std::uint8_t {
  PNormal,
  G1Normal,
  G2Normal,
  PMisere,
  G1Misere,
  PWythoff,
};

// An exceptional finite prefix followed by the Wythoff pairs translated by
// `offset`: (floor(phi n) + offset, floor(phi^2 n) + offset), n >= 0.
struct ClosedSet {
  ClosedSetLabel label = ClosedSetLabel::PNormal;
  std::vector<Position> exceptional;
  std::uint64_t offset = 0;
  Variant variant = Variant::FWythoff;
  Convention convention = Convention::Normal;
  std::uint32_t value = 0;  // Grundy value the set characterises
};

ClosedSet closed_set(ClosedSetLabel label);
std::string_view to_string(ClosedSetLabel label);
std::optional<ClosedSetLabel> parse_closed_set_label(std::string_view s);

// Members with large coordinate <= bound, sorted by (small, large).
std::vector<Position> generate(const ClosedSet& s, std::uint64_t bound);
std::vector<Position> closed_set(ClosedSetLabel label, std::uint64_t bound);

// floor((floor(phi^2 n)+k+i)/(floor(phi n)+k+i)) == floor((floor(phi^2 n)+i)/(floor(phi n)+i)) == 1.
bool check_ratio_lemma(std::uint64_t n, std::uint64_t k, std::uint64_t i);

}  // namespace fwythoff
