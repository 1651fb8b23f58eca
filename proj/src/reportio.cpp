#include "fwythoff/reportio.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>

#include "fwythoff/errors.hpp"

namespace fwythoff {

void export_csv(const GrundyTable& t, std::ostream& out) {
  out << "# " << to_string(t.variant()) << " " << to_string(t.convention()) << " a_max=" << t.a_max()
      << " b_max=" << t.b_max() << "; row a ascending, column b = 0..b_max\n";
  for (Pile a = 0; a <= t.a_max(); ++a) {
    const auto row = t.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b != 0) out << ',';
      out << row[b];
    }
    out << '\n';
  }
  if (!out) throw Error("failed writing CSV table");
}

Json table_to_json(const GrundyTable& t) {
  Json j;
  j["format_version"] = kCacheVersion;
  j["variant"] = to_string(t.variant());
  j["convention"] = to_string(t.convention());
  j["a_max"] = t.a_max();
  j["b_max"] = t.b_max();
  Json rows = Json::array();
  for (Pile a = 0; a <= t.a_max(); ++a) {
    const auto row = t.row(a);
    rows.push_back(Json(std::vector<Grundy>(row.begin(), row.end())));
  }
  j["values"] = std::move(rows);
  return j;
}

GrundyTable table_from_json(const Json& j) {
  try {
    if (j.at("format_version").get<int>() != kCacheVersion) {
      throw VersionMismatchError("unsupported table JSON version");
    }
    const auto v = parse_variant(j.at("variant").get<std::string>());
    const auto c = parse_convention(j.at("convention").get<std::string>());
    if (!v || !c) throw CorruptionError("unknown variant or convention in table JSON");
    const auto a_max = j.at("a_max").get<Pile>();
    const auto b_max = j.at("b_max").get<Pile>();
    const auto& rows = j.at("values");
    if (rows.size() != std::size_t{a_max} + 1) throw CorruptionError("table JSON row count mismatch");

    std::vector<Grundy> canonical;
    for (Pile a = 0; a <= a_max; ++a) {
      const auto row = rows[a].get<std::vector<Grundy>>();
      if (row.size() != std::size_t{b_max} + 1) throw CorruptionError("table JSON row length mismatch");
      for (Pile b = a; b <= b_max; ++b) canonical.push_back(row[b]);
    }
    GrundyTable t = GrundyTable::from_canonical(*v, *c, a_max, b_max, canonical);
    // The mirrored half must agree with the canonical half.
    for (Pile a = 0; a <= a_max; ++a) {
      const auto row = rows[a];
      for (Pile b = 0; b < a; ++b) {
        if (row[b].get<Grundy>() != t.at(a, b)) throw CorruptionError("table JSON is not symmetric");
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptionError(std::string("malformed table JSON: ") + e.what());
  }
}

void export_json(const GrundyTable& t, std::ostream& out) {
  out << table_to_json(t).dump() << '\n';
  if (!out) throw Error("failed writing JSON table");
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint8_t kMagic[4] = {'F', 'W', 'G', 'T'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{bytes[at + i]} << (8 * i);
  return v;
}

std::uint32_t crc(std::span<const std::uint8_t> bytes) {
  uLong c = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in chunks.
  std::size_t done = 0;
  while (done < bytes.size()) {
    const std::size_t n = std::min<std::size_t>(bytes.size() - done, 1u << 30);
    c = crc32(c, bytes.data() + done, static_cast<uInt>(n));
    done += n;
  }
  return static_cast<std::uint32_t>(c);
}

}  // namespace

std::vector<std::uint8_t> encode_table(const GrundyTable& t) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kCacheVersion);
  out.push_back(static_cast<std::uint8_t>(t.variant()));
  out.push_back(static_cast<std::uint8_t>(t.convention()));
  out.push_back(0);
  put_u32(out, t.a_max());
  put_u32(out, t.b_max());
  out.reserve(out.size() + 4 * t.canonical_cell_count() + 4);
  for (Grundy g : t.canonical_values()) put_u32(out, g);
  put_u32(out, crc(out));
  return out;
}

GrundyTable decode_table(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kCacheHeaderSize + 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw CorruptionError("not a table cache (bad magic or short header)");
  }
  if (bytes[4] != kCacheVersion) {
    throw VersionMismatchError("table cache version " + std::to_string(bytes[4]) + ", expected " +
                               std::to_string(kCacheVersion));
  }
  if (bytes[5] > static_cast<std::uint8_t>(Variant::FEWythoff) ||
      bytes[6] > static_cast<std::uint8_t>(Convention::Misere) || bytes[7] != 0) {
    throw CorruptionError("table cache header has invalid tags");
  }
  const Pile a_max = get_u32(bytes, 8);
  const Pile b_max = get_u32(bytes, 12);
  if (a_max > b_max) throw CorruptionError("table cache header has a_max > b_max");
  const std::uint64_t rows = std::uint64_t{a_max} + 1;
  const std::uint64_t cells = rows * (std::uint64_t{b_max} + 1) - rows * (rows - 1) / 2;
  if (bytes.size() != kCacheHeaderSize + 4 * cells + 4) {
    throw CorruptionError("table cache has " + std::to_string(bytes.size()) + " bytes, expected " +
                          std::to_string(kCacheHeaderSize + 4 * cells + 4));
  }
  const std::size_t body = bytes.size() - 4;
  if (crc(bytes.first(body)) != get_u32(bytes, body)) throw CorruptionError("table cache checksum mismatch");

  std::vector<Grundy> values(cells);
  for (std::size_t i = 0; i < cells; ++i) values[i] = get_u32(bytes, kCacheHeaderSize + 4 * i);
  return GrundyTable::from_canonical(static_cast<Variant>(bytes[5]), static_cast<Convention>(bytes[6]), a_max,
                                     b_max, values);
}

void cache_table(const GrundyTable& t, const std::filesystem::path& path) {
  const auto bytes = encode_table(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing table cache " + path.string());
}

GrundyTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open table cache " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return decode_table(bytes);
}

GrundyTable load_table(const std::filesystem::path& path, Variant v, Convention c, Pile a_max, Pile b_max) {
  GrundyTable t = load_table(path);
  if (t.variant() != v || t.convention() != c || t.a_max() != a_max || t.b_max() != b_max) {
    throw MismatchError("cached table " + path.string() + " holds " + std::string(to_string(t.variant())) + "/" +
                        std::string(to_string(t.convention())) + " " + std::to_string(t.a_max()) + "x" +
                        std::to_string(t.b_max()));
  }
  return t;
}

// ---------------------------------------------------------------------------

Json report_to_json(const ReportContext& ctx, const std::vector<ReportItem>& items) {
  Json j;
  j["variant"] = to_string(ctx.variant);
  j["convention"] = to_string(ctx.convention);
  j["bounds"] = {{"a_max", ctx.a_max}, {"b_max", ctx.b_max}};
  if (ctx.timestamp) j["timestamp"] = *ctx.timestamp;
  Json checks = Json::array();
  for (const auto& item : items) {
    Json c;
    c["name"] = item.name;
    c["status"] = to_string(item.status);
    if (item.counterexample) {
      Json cex = Json::object();
      if (item.counterexample->position) {
        cex["small"] = item.counterexample->position->small;
        cex["large"] = item.counterexample->position->large;
      }
      if (item.counterexample->value) cex["value"] = *item.counterexample->value;
      c["counterexample"] = std::move(cex);
    }
    c["parameters"] = item.parameters;
    if (!item.details.empty()) c["details"] = item.details;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

void write_report(const ReportContext& ctx, const std::vector<ReportItem>& items, std::ostream& out, int indent) {
  out << report_to_json(ctx, items).dump(indent) << '\n';
  if (!out) throw Error("failed writing report");
}

int exit_status(const std::vector<ReportItem>& items) {
  return std::any_of(items.begin(), items.end(), [](const ReportItem& i) { return i.failed(); }) ? 1 : 0;
}

}  // namespace fwythoff
