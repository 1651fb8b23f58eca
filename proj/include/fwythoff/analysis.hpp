#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwythoff/beatty.hpp"
#include "fwythoff/grundy.hpp"
#include "fwythoff/report.hpp"

namespace fwythoff {

// ---------------------------------------------------------------------------
// Exact-arithmetic checks.

// (2a - n)^2 <= 5n^2 < (2a - n + 2)^2 with a = floor_phi(n), for every n <= bound.
ReportItem check_floor_phi_witness(std::uint64_t bound);

// {floor(phi i)} and {floor(phi^2 i)}, i >= 1, partition 1..bound.
ReportItem check_complementarity(std::uint64_t bound);

// Ratio lemma for every 1 <= n, k, i <= bound.
ReportItem check_ratio_lemma_sweep(std::uint64_t bound);

// ---------------------------------------------------------------------------
// Closed-form characterisations.

// Compares {p in strip : G(p) = g} with the members of `s` inside the strip.
// Members of the set carrying another value are reported before strip
// positions missing from the set. Throws MismatchError on a convention clash.
ReportItem verify_characterization(const GrundyTable& t, const ClosedSet& s, Grundy g);

// ---------------------------------------------------------------------------
// k-sequences.

struct KSequence {
  Grundy k = 0;
  std::vector<Position> entries;  // sorted by small coordinate
  // Every row a < resolved_rows holds value k inside the strip, so no entry
  // with small coordinate below resolved_rows can be missing.
  Pile resolved_rows = 0;
  Pile a_max = 0;
  Pile b_max = 0;
};

KSequence k_sequence(const GrundyTable& t, Grundy k);

// a_n = mex{a_i, b_i : i < n} for every n >= 1.
ReportItem check_mex_recursion(const KSequence& seq);

// Cover of 0..bound' by the a- and b-values, where bound' = min(bound,
// resolved_rows - 1) is the largest value whose row is fully known, and
// |a-values ∩ b-values| <= 2 within bound'.
ReportItem check_cover_intersect(const KSequence& seq, std::uint64_t bound);

// ---------------------------------------------------------------------------
// Rows and diagonals.

// Full symmetric row a: distinct values (hard fail) and every g <= g_max present
// (inconclusive with the missing list otherwise). With require_unique = false
// repeated values are only recorded.
ReportItem check_row(const GrundyTable& t, Pile a, Grundy g_max, bool require_unique = true);

// check_row over rows 0..row_max folded into one item; details list every
// missing (a, g) pair.
ReportItem check_rows(const GrundyTable& t, Pile row_max, Grundy g_max, bool require_unique = true);

// Coverage of every g <= g_max along the diagonal {G(b, a+b)} (inconclusive
// with the missing list otherwise), plus the zero at b = floor(phi a) + 1.
// On the main diagonal (a = 0) the scan starts at b = 1, since (0,0) and
// (1,1) are both zeros, and repeated values there are a hard failure. For
// a >= 1 values do repeat (G(0,1) = G(3,4) = 1), so repeats are listed in the
// details rather than failed.
ReportItem check_diagonal(const GrundyTable& t, Pile a, Grundy g_max);

// ---------------------------------------------------------------------------
// Additive periodicity.

struct PeriodicityCertificate {
  Pile row = 0;
  Pile preperiod = 0;
  Pile period = 0;
  Pile validated_upto = 0;

  friend bool operator==(const PeriodicityCertificate&, const PeriodicityCertificate&) = default;
};

inline constexpr Pile kDefaultMinWindow = 128;

// Smallest period p, then smallest preperiod N, with G(a, n+p) = G(a, n) + p
// for N <= n <= b_max - p over at least max(2p, min_window) indices.
std::optional<PeriodicityCertificate> detect_additive_period(const GrundyTable& t, Pile a,
                                                             Pile min_window = kDefaultMinWindow);

ReportItem periodicity_report(const GrundyTable& t, Pile a, Pile min_window = kDefaultMinWindow);

// ---------------------------------------------------------------------------
// Normal versus misere.

enum class Miserability : std::uint8_t { StronglyMiserable, Miserable, Neither };

std::string_view to_string(Miserability m);

struct MiserabilityResult {
  Miserability classification = Miserability::StronglyMiserable;
  std::optional<Position> strong_violation;     // first cell breaking the strong predicate
  std::optional<Position> miserable_violation;  // first cell breaking the miserable predicate
  std::uint64_t swapped = 0;                    // cells with G in {0,1} and G + G- = 1
  std::uint64_t unswapped = 0;                  // cells with G in {0,1} and G = G-
};

MiserabilityResult classify_miserability(const GrundyTable& normal, const GrundyTable& misere);

// Pass iff the classification equals `expected` (or, without one, is not Neither).
ReportItem compare_miserability(const GrundyTable& normal, const GrundyTable& misere,
                                std::optional<Miserability> expected = std::nullopt);

// ---------------------------------------------------------------------------
// Preservation and redundancy.

// Positions of value g in `other` equal those in `reference` for every listed g.
ReportItem check_preservation(const GrundyTable& other, const GrundyTable& reference,
                              const std::vector<Grundy>& values);

// Diagonal witness parameter: 2 if 3 + k is a lower Wythoff number, else 3.
std::uint64_t redundancy_diagonal_index(std::uint64_t k);
Position redundancy_diagonal_witness(std::uint64_t k);

// (2, 3+k) has the single winning move TakeOne(larger, k) and the diagonal
// witness has the single winning move TakeBoth(k). Throws OutOfRangeError if
// the witnesses leave the strip.
ReportItem redundancy_witness(std::uint64_t k, const GrundyTable& t);

// ---------------------------------------------------------------------------
// Translation probe.

struct Translation {
  std::uint64_t offset = 0;        // m
  std::uint64_t start = 0;         // n0
  std::uint64_t beatty_start = 0;  // Wythoff index paired with entry n0
  std::vector<Position> prefix;

  friend bool operator==(const Translation&, const Translation&) = default;
};

struct TranslationSearch {
  std::uint64_t m_max = 64;
  std::uint64_t n0_max = 8;
  std::uint64_t beatty_start_max = 8;
};

inline constexpr std::size_t kMinProbeLength = 10;

// Smallest n0, then smallest Wythoff start index s, such that every entry
// from n0 on equals (floor(phi j) + m, floor(phi^2 j) + m) with j = n - n0 + s.
// m is forced by entry n0. Sequences shorter than kMinProbeLength yield nothing.
std::optional<Translation> translation_probe(const KSequence& seq, const TranslationSearch& search = {});

// Report-only wrapper: pass when a translation is found, inconclusive otherwise.
ReportItem translation_report(const KSequence& seq, const TranslationSearch& search = {});

// ---------------------------------------------------------------------------
// Suites.

struct SuiteConfig {
  Variant variant = Variant::FWythoff;
  Pile bound = 512;
  std::vector<std::string> checks;  // empty: full suite for the variant
  Grundy g_max = 100;
  Pile row_max = 64;
  Grundy k_max = 10;
  std::uint64_t witness_k_max = 20;
  ComputeOptions compute;
};

// Names accepted in SuiteConfig::checks.
const std::vector<std::string>& known_checks();
std::vector<std::string> default_checks(Variant v);

// Runs the selected verifiers. `base` (optional) is a normal table of the
// configured variant and bound that is reused instead of being recomputed.
std::vector<ReportItem> run_suite(const SuiteConfig& config, const GrundyTable* base = nullptr);

}  // namespace fwythoff
