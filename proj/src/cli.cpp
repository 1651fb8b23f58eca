#include "fwythoff/cli.hpp"

#include <CLI11.hpp>

#include <ctime>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "fwythoff/analysis.hpp"
#include "fwythoff/errors.hpp"
#include "fwythoff/reportio.hpp"

namespace fwythoff::cli {

namespace {

struct Options {
  std::string variant = "f-wythoff";
  std::string convention = "normal";
  std::string output;
  std::string table_path;
  bool timestamps = false;

  // table
  std::optional<Pile> size;
  std::optional<Pile> a_max;
  std::optional<Pile> b_max;
  std::string format = "csv";

  // verify
  Pile bound = 512;
  std::vector<std::string> checks;
  Grundy g_max = 100;
  Pile row_max = 64;
  Grundy k_max = 10;
  std::uint64_t witness_k = 20;

  // periodicity
  Pile period_b_max = 8192;
  Pile row_min = 0;
  Pile row_last = 20;
  Pile min_window = kDefaultMinWindow;

  // diagonal
  Pile diag_size = 1024;
  Pile offset_min = 0;
  Pile offset_max = 16;

  // probe-translation
  Grundy g = 0;
  std::uint64_t m_max = 64;
  std::uint64_t n0_max = 8;
  std::uint64_t s_max = 8;

  // play
  std::vector<Pile> start = {2, 3};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Sends `write` either to --output or to `out`.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& write, bool binary = false) {
  if (o.output.empty() || o.output == "-") {
    write(out);
    return;
  }
  std::ofstream file(o.output, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!file) throw Error("cannot open output file " + o.output);
  write(file);
}

GrundyTable obtain_table(const Options& o, Variant v, Convention c, Pile a_max, Pile b_max) {
  if (!o.table_path.empty()) return load_table(o.table_path, v, c, a_max, b_max);
  return compute_table(v, c, a_max, b_max);
}

int finish_report(const Options& o, std::ostream& out, ReportContext ctx, const std::vector<ReportItem>& items) {
  if (o.timestamps) ctx.timestamp = utc_timestamp();
  emit(o, out, [&](std::ostream& s) { write_report(ctx, items, s); });
  return exit_status(items) == 0 ? kExitOk : kExitFail;
}

int cmd_table(const Options& o, Variant v, Convention c, std::ostream& out) {
  Pile a_max = o.size.value_or(9);
  Pile b_max = a_max;
  if (o.a_max) a_max = *o.a_max;
  if (o.b_max) b_max = *o.b_max;
  if (!o.size && o.a_max && !o.b_max) b_max = a_max;
  if (a_max > b_max) throw UsageError("--a-max must not exceed --b-max");

  const GrundyTable t = compute_table(v, c, a_max, b_max);
  if (o.format == "csv") {
    emit(o, out, [&](std::ostream& s) { export_csv(t, s); });
  } else if (o.format == "json") {
    emit(o, out, [&](std::ostream& s) { export_json(t, s); });
  } else {
    if (o.output.empty() || o.output == "-") throw UsageError("--format cache needs --output PATH");
    cache_table(t, o.output);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Variant v, Convention c, std::ostream& out) {
  SuiteConfig config;
  config.variant = v;
  config.bound = o.bound;
  config.g_max = o.g_max;
  config.row_max = o.row_max;
  config.k_max = o.k_max;
  config.witness_k_max = o.witness_k;
  for (const auto& name : o.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
      throw UsageError("unknown check '" + name + "'");
    }
    config.checks.push_back(name);
  }
  std::optional<GrundyTable> base;
  if (!o.table_path.empty()) base = load_table(o.table_path, v, Convention::Normal, o.bound, o.bound);
  const auto items = run_suite(config, base ? &*base : nullptr);
  return finish_report(o, out, {v, c, o.bound, o.bound, std::nullopt}, items);
}

int cmd_periodicity(const Options& o, Variant v, Convention c, std::ostream& out) {
  if (o.row_min > o.row_last) throw UsageError("--row-min must not exceed --row-max");
  if (o.row_last > o.period_b_max) throw UsageError("--row-max must not exceed --b-max");
  const GrundyTable t = obtain_table(o, v, c, o.row_last, o.period_b_max);
  std::vector<ReportItem> items;
  for (Pile a = o.row_min; a <= o.row_last; ++a) items.push_back(periodicity_report(t, a, o.min_window));
  return finish_report(o, out, {v, c, t.a_max(), t.b_max(), std::nullopt}, items);
}

int cmd_diagonal(const Options& o, Variant v, Convention c, std::ostream& out) {
  if (o.offset_min > o.offset_max) throw UsageError("--offset-min must not exceed --offset-max");
  if (o.offset_max > o.diag_size) throw UsageError("--offset-max must not exceed --size");
  const GrundyTable t = obtain_table(o, v, c, o.diag_size, o.diag_size);
  std::vector<ReportItem> items;
  for (Pile a = o.offset_min; a <= o.offset_max; ++a) items.push_back(check_diagonal(t, a, o.g_max));
  return finish_report(o, out, {v, c, t.a_max(), t.b_max(), std::nullopt}, items);
}

int cmd_probe(const Options& o, Variant v, Convention c, std::ostream& out) {
  const GrundyTable t = obtain_table(o, v, c, o.bound, o.bound);
  const auto item = translation_report(k_sequence(t, o.g), {o.m_max, o.n0_max, o.s_max});
  return finish_report(o, out, {v, c, t.a_max(), t.b_max(), std::nullopt}, {item});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"F-Wythoff game family: Grundy tables, theorem verifiers and conjecture probes", "fwythoff"};
  app.require_subcommand(1);

  const std::vector<std::string> variants = {"wythoff", "f-wythoff", "fr-wythoff", "fe-wythoff"};
  const std::vector<std::string> conventions = {"normal", "misere"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "Game variant")->check(CLI::IsMember(variants, CLI::ignore_case));
    sub->add_option("--convention", o.convention, "Play convention")
        ->check(CLI::IsMember(conventions, CLI::ignore_case));
  };
  auto reporting = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write output to this path instead of stdout");
    sub->add_flag("--timestamps", o.timestamps, "Stamp reports with the current UTC time");
    sub->add_option("--table", o.table_path, "Load the Grundy table from this cache file");
  };

  auto* table = app.add_subcommand("table", "Compute and export a Grundy table");
  common(table);
  table->add_option("--size", o.size, "Square strip a_max = b_max = SIZE");
  table->add_option("--a-max", o.a_max, "Largest small pile");
  table->add_option("--b-max", o.b_max, "Largest large pile");
  table->add_option("--format", o.format, "csv, json or cache")->check(CLI::IsMember({"csv", "json", "cache"}));
  table->add_option("-o,--output", o.output, "Output path (required for cache)");

  auto* verify = app.add_subcommand("verify", "Run theorem verifiers and emit a JSON report");
  common(verify);
  reporting(verify);
  verify->add_option("--bound", o.bound, "Square strip size");
  verify->add_option("--checks", o.checks, "Comma-separated checks (default: full suite)")->delimiter(',');
  verify->add_option("--g-max", o.g_max, "Largest value required in each row");
  verify->add_option("--row-max", o.row_max, "Rows checked by the row verifier");
  verify->add_option("--k-max", o.k_max, "Largest k for k-sequence checks");
  verify->add_option("--witness-k", o.witness_k, "Largest k for non-redundancy witnesses")
      ->check(CLI::PositiveNumber);

  auto* period = app.add_subcommand("periodicity", "Detect additive periods of rows");
  common(period);
  reporting(period);
  period->add_option("--b-max", o.period_b_max, "Row length");
  period->add_option("--row-min", o.row_min, "First row");
  period->add_option("--row-max", o.row_last, "Last row");
  period->add_option("--min-window", o.min_window, "Minimum validation window");

  auto* diagonal = app.add_subcommand("diagonal", "Probe value coverage along diagonals");
  common(diagonal);
  reporting(diagonal);
  diagonal->add_option("--size", o.diag_size, "Square strip size");
  diagonal->add_option("--offset-min", o.offset_min, "First diagonal offset");
  diagonal->add_option("--offset-max", o.offset_max, "Last diagonal offset");
  diagonal->add_option("--g-max", o.g_max, "Largest value required on each diagonal");

  auto* probe = app.add_subcommand("probe-translation", "Look for a translated Wythoff form of a value class");
  common(probe);
  reporting(probe);
  probe->add_option("--g", o.g, "Grundy value to probe")->required();
  probe->add_option("--bound", o.bound, "Square strip size");
  probe->add_option("--m-max", o.m_max, "Largest offset tried");
  probe->add_option("--n0-max", o.n0_max, "Largest start index tried");
  probe->add_option("--beatty-start-max", o.s_max, "Largest Wythoff index paired with the start entry");

  auto* play_cmd = app.add_subcommand("play", "Play against the engine on stdin/stdout");
  common(play_cmd);
  play_cmd->add_option("--start", o.start, "Starting position a,b")->delimiter(',')->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Variant v = *parse_variant(o.variant);
  const Convention c = *parse_convention(o.convention);
  try {
    if (table->parsed()) return cmd_table(o, v, c, out);
    if (verify->parsed()) return cmd_verify(o, v, c, out);
    if (period->parsed()) return cmd_periodicity(o, v, c, out);
    if (diagonal->parsed()) return cmd_diagonal(o, v, c, out);
    if (probe->parsed()) return cmd_probe(o, v, c, out);
    if (play_cmd->parsed()) return play(v, c, canonicalize(o.start[0], o.start[1]), in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace fwythoff::cli
