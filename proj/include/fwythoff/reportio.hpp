#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwythoff/grundy.hpp"
#include "fwythoff/report.hpp"

namespace fwythoff {

// ---------------------------------------------------------------------------
// Table export.
//
// CSV: one comment line, then rows a = 0..a_max (ascending), each holding
// G(a, b) for b = 0..b_max.
void export_csv(const GrundyTable& t, std::ostream& out);

// JSON: {"format_version", "variant", "convention", "a_max", "b_max",
// "values": [[G(a,0), ..., G(a,b_max)] for a = 0..a_max]}.
Json table_to_json(const GrundyTable& t);
GrundyTable table_from_json(const Json& j);
void export_json(const GrundyTable& t, std::ostream& out);

// ---------------------------------------------------------------------------
// Binary cache.
//
// Little-endian layout:
//   0  magic "FWGT"
//   4  u8  format version (kCacheVersion)
//   5  u8  variant tag      6  u8 convention tag      7  u8 reserved (0)
//   8  u32 a_max            12 u32 b_max
//   16 u32 values over the canonical strip, row-major (a asc, b = a..b_max)
//   .. u32 CRC-32 of every preceding byte
inline constexpr std::uint8_t kCacheVersion = 1;
inline constexpr std::size_t kCacheHeaderSize = 16;

std::vector<std::uint8_t> encode_table(const GrundyTable& t);
// Throws VersionMismatchError or CorruptionError.
GrundyTable decode_table(std::span<const std::uint8_t> bytes);

void cache_table(const GrundyTable& t, const std::filesystem::path& path);
GrundyTable load_table(const std::filesystem::path& path);

// Refuses (MismatchError) a cached table whose header differs from the request.
GrundyTable load_table(const std::filesystem::path& path, Variant v, Convention c, Pile a_max, Pile b_max);

// ---------------------------------------------------------------------------
// Reports.

struct ReportContext {
  Variant variant = Variant::FWythoff;
  Convention convention = Convention::Normal;
  Pile a_max = 0;
  Pile b_max = 0;
  std::optional<std::string> timestamp;
};

Json report_to_json(const ReportContext& ctx, const std::vector<ReportItem>& items);

// indent < 0 writes compact JSON.
void write_report(const ReportContext& ctx, const std::vector<ReportItem>& items, std::ostream& out,
                  int indent = 2);

// 1 if any item failed, 0 otherwise.
int exit_status(const std::vector<ReportItem>& items);

}  // namespace fwythoff
