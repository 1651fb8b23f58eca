#include "fwythoff/analysis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "fwythoff/errors.hpp"

namespace fwythoff {

namespace {

Json table_parameters(const GrundyTable& t) {
  Json j;
  j["variant"] = to_string(t.variant());
  j["convention"] = to_string(t.convention());
  j["a_max"] = t.a_max();
  j["b_max"] = t.b_max();
  return j;
}

Json position_json(Position p) { return Json::array({p.small, p.large}); }

Json positions_json(const std::vector<Position>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(position_json(p));
  return out;
}

Counterexample at_position(Position p) { return {p, std::nullopt}; }
Counterexample at_value(std::uint64_t v) { return {std::nullopt, v}; }

}  // namespace

// ---------------------------------------------------------------------------

ReportItem check_floor_phi_witness(std::uint64_t bound) {
  Json params{{"bound", bound}};
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const auto a = static_cast<__int128>(floor_phi(n));
    const auto nn = static_cast<__int128>(n);
    const __int128 lo = 2 * a - nn;
    const __int128 hi = lo + 2;
    const __int128 five = 5 * nn * nn;
    if (!(lo * lo <= five && five < hi * hi)) {
      return fail("floor-phi-witness", at_value(n), params);
    }
  }
  return pass("floor-phi-witness", params);
}

ReportItem check_complementarity(std::uint64_t bound) {
  Json params{{"bound", bound}};
  std::vector<std::uint8_t> hits(bound + 1, 0);
  for (std::uint64_t i = 1;; ++i) {
    const BeattyPair w = beatty_pair(i);
    if (w.a > bound) break;
    ++hits[w.a];
    if (w.b <= bound) ++hits[w.b];
  }
  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (hits[x] != 1) {
      ReportItem item = fail("complementarity", at_value(x), params);
      item.details["hits"] = hits[x];
      return item;
    }
  }
  return pass("complementarity", params);
}

ReportItem check_ratio_lemma_sweep(std::uint64_t bound) {
  Json params{{"bound", bound}};
  for (std::uint64_t n = 1; n <= bound; ++n) {
    for (std::uint64_t k = 1; k <= bound; ++k) {
      for (std::uint64_t i = 1; i <= bound; ++i) {
        if (!check_ratio_lemma(n, k, i)) {
          ReportItem item = fail("ratio-lemma", at_value(n), params);
          item.details = {{"n", n}, {"k", k}, {"i", i}};
          return item;
        }
      }
    }
  }
  return pass("ratio-lemma", params);
}

// ---------------------------------------------------------------------------

ReportItem verify_characterization(const GrundyTable& t, const ClosedSet& s, Grundy g) {
  if (s.convention != t.convention()) {
    throw MismatchError("closed set " + std::string(to_string(s.label)) + " describes " +
                        std::string(to_string(s.convention)) + " play, table is " +
                        std::string(to_string(t.convention())));
  }
  const std::string name = "characterization:" + std::string(to_string(s.label));
  Json params = table_parameters(t);
  params["set"] = to_string(s.label);
  params["g"] = g;

  std::vector<Position> expected;
  for (const auto& p : generate(s, t.b_max())) {
    if (t.contains(p)) expected.push_back(p);
  }
  for (const auto& p : expected) {
    if (t.at(p) != g) {
      ReportItem item = fail(name, at_position(p), params);
      item.details = {{"in_set", true}, {"observed", t.at(p)}};
      return item;
    }
  }
  const std::vector<Position> observed = positions_with_value(t, g);
  std::vector<Position> extra;
  std::set_difference(observed.begin(), observed.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  if (!extra.empty()) {
    ReportItem item = fail(name, at_position(extra.front()), params);
    item.details = {{"in_set", false}, {"observed", g}};
    return item;
  }
  ReportItem item = pass(name, params);
  item.details["members"] = expected.size();
  return item;
}

// ---------------------------------------------------------------------------

KSequence k_sequence(const GrundyTable& t, Grundy k) {
  KSequence seq;
  seq.k = k;
  seq.a_max = t.a_max();
  seq.b_max = t.b_max();
  seq.resolved_rows = t.a_max() + 1;
  for (Pile a = 0; a <= t.a_max(); ++a) {
    const auto row = t.row(a);
    if (std::find(row.begin(), row.end(), k) == row.end()) {
      seq.resolved_rows = a;
      break;
    }
    for (Pile b = a; b <= t.b_max(); ++b) {
      if (row[b] == k) seq.entries.push_back({a, b});
    }
  }
  return seq;
}

namespace {

Json sequence_parameters(const KSequence& seq) {
  return Json{{"k", seq.k},
              {"a_max", seq.a_max},
              {"b_max", seq.b_max},
              {"entries", seq.entries.size()},
              {"resolved_rows", seq.resolved_rows}};
}

}  // namespace

ReportItem check_mex_recursion(const KSequence& seq) {
  const std::string name = "mex-recursion[k=" + std::to_string(seq.k) + "]";
  std::set<std::uint64_t> seen;
  for (std::size_t n = 0; n < seq.entries.size(); ++n) {
    const Position p = seq.entries[n];
    if (n >= 1) {
      std::uint64_t m = 0;
      while (seen.contains(m)) ++m;
      if (p.small != m) {
        ReportItem item = fail(name, at_position(p), sequence_parameters(seq));
        item.details = {{"n", n}, {"expected_small", m}};
        return item;
      }
    }
    seen.insert(p.small);
    seen.insert(p.large);
  }
  return pass(name, sequence_parameters(seq));
}

ReportItem check_cover_intersect(const KSequence& seq, std::uint64_t bound) {
  const std::string name = "cover-intersect[k=" + std::to_string(seq.k) + "]";
  Json params = sequence_parameters(seq);
  params["bound"] = bound;

  if (seq.resolved_rows == 0) {
    ReportItem item = pass(name, params);
    item.status = Status::Inconclusive;
    item.details["sound_bound"] = nullptr;
    return item;
  }
  const std::uint64_t sound = std::min<std::uint64_t>(bound, seq.resolved_rows - 1);
  std::set<std::uint64_t> lower;
  std::set<std::uint64_t> upper;
  for (const auto& p : seq.entries) {
    if (p.small <= sound) lower.insert(p.small);
    if (p.large <= sound) upper.insert(p.large);
  }
  for (std::uint64_t x = 0; x <= sound; ++x) {
    if (!lower.contains(x) && !upper.contains(x)) {
      ReportItem item = fail(name, at_value(x), params);
      item.details = {{"sound_bound", sound}, {"uncovered", x}};
      return item;
    }
  }
  Json both = Json::array();
  for (auto x : lower) {
    if (upper.contains(x)) both.push_back(x);
  }
  if (both.size() > 2) {
    ReportItem item = fail(name, at_value(both[2].get<std::uint64_t>()), params);
    item.details = {{"sound_bound", sound}, {"intersection", both}};
    return item;
  }
  ReportItem item = pass(name, params);
  item.details = {{"sound_bound", sound}, {"intersection", both}};
  return item;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kRepeatSample = 8;

// Scans values[first..] of a line of the array. `at` maps an index to its position.
template <typename PositionAt>
ReportItem scan_line(std::string name, Json params, const std::vector<Grundy>& values, std::size_t first,
                     Grundy g_max, bool require_unique, PositionAt at) {
  std::map<Grundy, std::size_t> where;
  Json repeats = Json::array();
  for (std::size_t i = first; i < values.size(); ++i) {
    auto [it, fresh] = where.emplace(values[i], i);
    if (fresh) continue;
    if (require_unique) {
      ReportItem item = fail(std::move(name), at_position(at(i)), params);
      item.details = {{"value", values[i]}, {"first", position_json(at(it->second))}};
      return item;
    }
    repeats.push_back({{"value", values[i]}, {"first", position_json(at(it->second))}, {"again", position_json(at(i))}});
  }
  Json missing = Json::array();
  for (Grundy g = 0; g <= g_max; ++g) {
    if (!where.contains(g)) missing.push_back(g);
  }
  ReportItem item = pass(std::move(name), std::move(params));
  item.details["missing"] = missing;
  if (!require_unique) {
    item.details["repeat_count"] = repeats.size();
    if (repeats.size() > kRepeatSample) repeats.erase(repeats.begin() + kRepeatSample, repeats.end());
    item.details["repeats"] = repeats;
  }
  if (!missing.empty()) item.status = Status::Inconclusive;
  return item;
}

}  // namespace

ReportItem check_row(const GrundyTable& t, Pile a, Grundy g_max, bool require_unique) {
  Json params = table_parameters(t);
  params["row"] = a;
  params["g_max"] = g_max;
  params["unique"] = require_unique;
  const auto row = t.row(a);
  const std::vector<Grundy> values(row.begin(), row.end());
  return scan_line("row[a=" + std::to_string(a) + "]", params, values, 0, g_max, require_unique,
                   [a](std::size_t b) { return canonicalize(a, static_cast<Pile>(b)); });
}

ReportItem check_rows(const GrundyTable& t, Pile row_max, Grundy g_max, bool require_unique) {
  Json params = table_parameters(t);
  params["row_max"] = row_max;
  params["g_max"] = g_max;
  params["unique"] = require_unique;
  if (row_max > t.a_max()) throw OutOfRangeError("row_max exceeds table a_max");

  Json missing = Json::array();
  for (Pile a = 0; a <= row_max; ++a) {
    ReportItem r = check_row(t, a, g_max, require_unique);
    if (r.failed()) {
      r.name = "row";
      r.parameters = params;
      return r;
    }
    for (const auto& g : r.details["missing"]) missing.push_back(Json::array({a, g}));
  }
  ReportItem item = pass("row", params);
  item.details["missing"] = missing;
  if (!missing.empty()) item.status = Status::Inconclusive;
  return item;
}

ReportItem check_diagonal(const GrundyTable& t, Pile a, Grundy g_max) {
  Json params = table_parameters(t);
  params["offset"] = a;
  params["g_max"] = g_max;
  const std::string name = "diagonal[a=" + std::to_string(a) + "]";
  if (a > t.b_max()) throw OutOfRangeError("diagonal offset outside strip");

  const Pile last = std::min<Pile>(t.a_max(), t.b_max() - a);
  std::vector<Grundy> values;
  for (Pile b = 0; b <= last; ++b) values.push_back(t.at(b, a + b));

  // The zero predicted at b = floor(phi a) + 1.
  const std::uint64_t zero_at = floor_phi(a) + 1;
  if (zero_at <= last && values[zero_at] != 0) {
    ReportItem item = fail(name, at_position(canonicalize(zero_at, a + zero_at)), params);
    item.details = {{"expected", 0}, {"observed", values[zero_at]}};
    return item;
  }

  const std::size_t first = a == 0 ? 1 : 0;
  const bool unique = a == 0;
  ReportItem item = scan_line(name, params, values, first, g_max, unique, [a](std::size_t b) {
    return canonicalize(static_cast<Pile>(b), static_cast<Pile>(a + b));
  });
  item.details["scanned_from"] = first;
  item.details["scanned_to"] = last;
  item.details["zero_at"] = zero_at <= last ? Json(zero_at) : Json(nullptr);
  return item;
}

// ---------------------------------------------------------------------------

std::optional<PeriodicityCertificate> detect_additive_period(const GrundyTable& t, Pile a,
                                                             Pile min_window) {
  const auto s = t.row(a);
  const std::size_t len = s.size();
  for (std::size_t p = 1; 3 * p <= len; ++p) {
    const std::size_t required = std::max<std::size_t>(2 * p, min_window);
    if (len - p < required) break;
    // Walk back from the end to find the longest valid suffix.
    std::size_t n = len - p;
    while (n > 0 && std::uint64_t{s[n - 1 + p]} == std::uint64_t{s[n - 1]} + p) --n;
    const std::size_t window = len - p - n;
    if (window >= required) {
      return PeriodicityCertificate{a, static_cast<Pile>(n), static_cast<Pile>(p), t.b_max()};
    }
  }
  return std::nullopt;
}

ReportItem periodicity_report(const GrundyTable& t, Pile a, Pile min_window) {
  Json params = table_parameters(t);
  params["row"] = a;
  params["min_window"] = min_window;
  ReportItem item = pass("periodicity[a=" + std::to_string(a) + "]", params);
  if (auto cert = detect_additive_period(t, a, min_window)) {
    item.details = {{"preperiod", cert->preperiod},
                    {"period", cert->period},
                    {"validated_upto", cert->validated_upto}};
  } else {
    item.status = Status::Inconclusive;
    item.details["certificate"] = nullptr;
  }
  return item;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Miserability m) {
  switch (m) {
    case Miserability::StronglyMiserable:
      return "strongly-miserable";
    case Miserability::Miserable:
      return "miserable";
    case Miserability::Neither:
      return "neither";
  }
  return "neither";
}

MiserabilityResult classify_miserability(const GrundyTable& normal, const GrundyTable& misere) {
  if (normal.variant() != misere.variant() || normal.a_max() != misere.a_max() ||
      normal.b_max() != misere.b_max()) {
    throw MismatchError("miserability needs two tables of one variant and strip");
  }
  if (normal.convention() != Convention::Normal || misere.convention() != Convention::Misere) {
    throw MismatchError("miserability needs a normal and a misere table");
  }
  MiserabilityResult r;
  for (Pile a = 0; a <= normal.a_max(); ++a) {
    const auto gn = normal.row(a);
    const auto gm = misere.row(a);
    for (Pile b = a; b <= normal.b_max(); ++b) {
      const Grundy g = gn[b];
      const Grundy h = gm[b];
      bool strong_ok;
      bool miserable_ok;
      if (g <= 1) {
        strong_ok = g + h == 1;
        miserable_ok = h <= 1;
        if (strong_ok) ++r.swapped;
        if (g == h) ++r.unswapped;
      } else {
        strong_ok = miserable_ok = g == h;
      }
      if (!strong_ok && !r.strong_violation) r.strong_violation = Position{a, b};
      if (!miserable_ok && !r.miserable_violation) r.miserable_violation = Position{a, b};
    }
  }
  if (r.miserable_violation) {
    r.classification = Miserability::Neither;
  } else if (r.strong_violation) {
    r.classification = Miserability::Miserable;
  } else {
    r.classification = Miserability::StronglyMiserable;
  }
  return r;
}

ReportItem compare_miserability(const GrundyTable& normal, const GrundyTable& misere,
                                std::optional<Miserability> expected) {
  const MiserabilityResult r = classify_miserability(normal, misere);
  Json params = table_parameters(normal);
  params.erase("convention");
  if (expected) params["expected"] = to_string(*expected);

  ReportItem item = pass("miserability", params);
  item.details["classification"] = to_string(r.classification);
  item.details["swapped"] = r.swapped;
  item.details["unswapped"] = r.unswapped;
  if (r.strong_violation) item.details["strong_violation"] = position_json(*r.strong_violation);
  if (r.miserable_violation) item.details["miserable_violation"] = position_json(*r.miserable_violation);

  const bool ok = expected ? r.classification == *expected : r.classification != Miserability::Neither;
  if (!ok) {
    item.status = Status::Fail;
    // Point at the cell that separates the observed class from the expected one.
    std::optional<Position> where = r.miserable_violation ? r.miserable_violation : r.strong_violation;
    if (!where) where = Position{0, 0};
    item.counterexample = at_position(*where);
  }
  return item;
}

// ---------------------------------------------------------------------------

ReportItem check_preservation(const GrundyTable& other, const GrundyTable& reference,
                              const std::vector<Grundy>& values) {
  if (other.a_max() != reference.a_max() || other.b_max() != reference.b_max() ||
      other.convention() != reference.convention()) {
    throw MismatchError("preservation needs tables over one strip and convention");
  }
  Json params = table_parameters(other);
  params["reference"] = to_string(reference.variant());
  params["values"] = values;
  const std::string name = "preservation[" + std::string(to_string(other.variant())) + "]";
  for (Grundy g : values) {
    const auto lhs = positions_with_value(other, g);
    const auto rhs = positions_with_value(reference, g);
    std::vector<Position> diff;
    std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) {
      ReportItem item = fail(name, at_position(diff.front()), params);
      item.details = {{"g", g}, {"observed", other.at(diff.front())}, {"reference", reference.at(diff.front())}};
      return item;
    }
  }
  return pass(name, params);
}

std::uint64_t redundancy_diagonal_index(std::uint64_t k) { return is_lower_wythoff(3 + k) ? 2 : 3; }

Position redundancy_diagonal_witness(std::uint64_t k) {
  const BeattyPair w = beatty_pair(redundancy_diagonal_index(k));
  return {static_cast<Pile>(w.a + 1 + k), static_cast<Pile>(w.b + 1 + k)};
}

ReportItem redundancy_witness(std::uint64_t k, const GrundyTable& t) {
  if (k == 0) throw OutOfRangeError("redundancy witness needs k >= 1");
  if (t.convention() != Convention::Normal || t.variant() != Variant::FRWythoff) {
    throw MismatchError("redundancy witnesses are defined on normal F_R-Wythoff tables");
  }
  const Position single{2, static_cast<Pile>(3 + k)};
  const Position diagonal = redundancy_diagonal_witness(k);
  if (!t.contains(single) || !t.contains(diagonal)) {
    throw OutOfRangeError("redundancy witnesses for k=" + std::to_string(k) + " leave the strip");
  }
  Json params = table_parameters(t);
  params["k"] = k;
  const std::string name = "witness[k=" + std::to_string(k) + "]";

  auto describe_moves = [](const std::vector<Move>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(describe(m.spec) + " -> " + describe(m.result));
    return out;
  };

  const auto first = winning_moves(t, single);
  const bool first_ok = first.size() == 1 &&
                        first.front().spec == MoveSpec::take_one(PileSide::Larger, static_cast<Pile>(k)) &&
                        first.front().result == Position{2, 3};
  const auto second = winning_moves(t, diagonal);
  const bool second_ok = second.size() == 1 &&
                         second.front().spec == MoveSpec::take_both(static_cast<Pile>(k));

  ReportItem item = pass(name, params);
  if (!first_ok) {
    item = fail(name, at_position(single), params);
  } else if (!second_ok) {
    item = fail(name, at_position(diagonal), params);
  }
  item.details = {{"single_pile_witness", position_json(single)},
                  {"single_pile_winning", describe_moves(first)},
                  {"diagonal_index", redundancy_diagonal_index(k)},
                  {"diagonal_witness", position_json(diagonal)},
                  {"diagonal_winning", describe_moves(second)}};
  return item;
}

// ---------------------------------------------------------------------------

std::optional<Translation> translation_probe(const KSequence& seq, const TranslationSearch& search) {
  const auto& e = seq.entries;
  if (e.size() < kMinProbeLength) return std::nullopt;
  for (std::uint64_t n0 = 0; n0 <= search.n0_max && n0 < e.size(); ++n0) {
    for (std::uint64_t s = 0; s <= search.beatty_start_max; ++s) {
      const BeattyPair head = beatty_pair(s);
      if (e[n0].small < head.a) break;
      const std::uint64_t m = e[n0].small - head.a;
      if (m > search.m_max) continue;
      bool ok = true;
      for (std::uint64_t n = n0; n < e.size() && ok; ++n) {
        const BeattyPair w = beatty_pair(n - n0 + s);
        ok = e[n].small == w.a + m && e[n].large == w.b + m;
      }
      if (ok) return Translation{m, n0, s, {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n0)}};
    }
  }
  return std::nullopt;
}

ReportItem translation_report(const KSequence& seq, const TranslationSearch& search) {
  Json params = sequence_parameters(seq);
  params["m_max"] = search.m_max;
  params["n0_max"] = search.n0_max;
  params["beatty_start_max"] = search.beatty_start_max;
  ReportItem item = pass("translation[g=" + std::to_string(seq.k) + "]", params);
  if (auto tr = translation_probe(seq, search)) {
    item.details = {{"offset", tr->offset},
                    {"start", tr->start},
                    {"beatty_start", tr->beatty_start},
                    {"prefix", positions_json(tr->prefix)}};
  } else {
    item.status = Status::Inconclusive;
    item.details["translation"] = nullptr;
  }
  return item;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "pposns", "value1",        "value2",          "misere-p",     "misere-1", "miserability",
      "row",    "mex-recursion", "cover-intersect", "preservation", "witness"};
  return names;
}

std::vector<std::string> default_checks(Variant v) {
  switch (v) {
    case Variant::Wythoff:
      return {"pposns", "miserability", "row", "mex-recursion", "cover-intersect"};
    case Variant::FWythoff:
      return {"pposns", "value1", "value2", "misere-p", "misere-1", "miserability",
              "row", "mex-recursion", "cover-intersect", "witness"};
    case Variant::FRWythoff:
      return {"pposns", "value1", "misere-p", "misere-1", "miserability", "row", "preservation", "witness"};
    case Variant::FEWythoff:
      return {"pposns", "value1", "misere-p", "misere-1", "miserability", "row", "preservation"};
  }
  return {};
}

namespace {

class TableCache {
 public:
  TableCache(const ComputeOptions& options, const GrundyTable* base) : options_(options), base_(base) {}

  const GrundyTable& get(Variant v, Convention c, Pile bound) {
    if (base_ != nullptr && base_->variant() == v && base_->convention() == c && base_->a_max() == bound &&
        base_->b_max() == bound) {
      return *base_;
    }
    const auto key = std::make_tuple(v, c, bound);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
      it = tables_.emplace(key, std::make_unique<GrundyTable>(compute_table(v, c, bound, bound, options_))).first;
    }
    return *it->second;
  }

 private:
  ComputeOptions options_;
  const GrundyTable* base_;
  std::map<std::tuple<Variant, Convention, Pile>, std::unique_ptr<GrundyTable>> tables_;
};

ReportItem error_item(const std::string& check, const std::exception& e) {
  ReportItem item;
  item.name = check;
  item.status = Status::Fail;
  item.counterexample = Counterexample{};
  item.details["error"] = e.what();
  return item;
}

}  // namespace

std::vector<ReportItem> run_suite(const SuiteConfig& config, const GrundyTable* base) {
  const Variant v = config.variant;
  const Pile bound = config.bound;
  TableCache cache(config.compute, base);
  auto normal = [&]() -> const GrundyTable& { return cache.get(v, Convention::Normal, bound); };
  auto misere = [&]() -> const GrundyTable& { return cache.get(v, Convention::Misere, bound); };

  const std::vector<std::string> checks = config.checks.empty() ? default_checks(v) : config.checks;
  std::vector<ReportItem> items;
  for (const auto& check : checks) {
    try {
      if (check == "pposns") {
        const auto label = v == Variant::Wythoff ? ClosedSetLabel::PWythoff : ClosedSetLabel::PNormal;
        items.push_back(verify_characterization(normal(), closed_set(label), 0));
      } else if (check == "value1") {
        items.push_back(verify_characterization(normal(), closed_set(ClosedSetLabel::G1Normal), 1));
      } else if (check == "value2") {
        items.push_back(verify_characterization(normal(), closed_set(ClosedSetLabel::G2Normal), 2));
      } else if (check == "misere-p") {
        items.push_back(verify_characterization(misere(), closed_set(ClosedSetLabel::PMisere), 0));
      } else if (check == "misere-1") {
        items.push_back(verify_characterization(misere(), closed_set(ClosedSetLabel::G1Misere), 1));
      } else if (check == "miserability") {
        const auto expected =
            v == Variant::Wythoff ? Miserability::Miserable : Miserability::StronglyMiserable;
        items.push_back(compare_miserability(normal(), misere(), expected));
      } else if (check == "row") {
        const Pile rows = std::min(config.row_max, bound);
        items.push_back(check_rows(normal(), rows, config.g_max, v != Variant::FRWythoff));
      } else if (check == "mex-recursion") {
        for (Grundy k = 0; k <= config.k_max; ++k) items.push_back(check_mex_recursion(k_sequence(normal(), k)));
      } else if (check == "cover-intersect") {
        for (Grundy k = 0; k <= config.k_max; ++k) {
          items.push_back(check_cover_intersect(k_sequence(normal(), k), bound));
        }
      } else if (check == "preservation") {
        const auto& reference = cache.get(Variant::FWythoff, Convention::Normal, bound);
        if (v == Variant::FWythoff || v == Variant::Wythoff) {
          for (Variant other : {Variant::FRWythoff, Variant::FEWythoff}) {
            items.push_back(check_preservation(cache.get(other, Convention::Normal, bound), reference, {0, 1}));
          }
        } else {
          items.push_back(check_preservation(normal(), reference, {0, 1}));
        }
      } else if (check == "witness") {
        const Pile needed = static_cast<Pile>(8 + config.witness_k_max);
        const Pile wb = std::max(bound, needed);
        const auto& t = cache.get(Variant::FRWythoff, Convention::Normal, wb);
        for (std::uint64_t k = 1; k <= config.witness_k_max; ++k) items.push_back(redundancy_witness(k, t));
      } else {
        throw MismatchError("unknown check '" + check + "'");
      }
    } catch (const Error& e) {
      items.push_back(error_item(check, e));
    }
  }
  return items;
}

}  // namespace fwythoff
