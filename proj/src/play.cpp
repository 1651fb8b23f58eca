#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fwythoff/cli.hpp"
#include "fwythoff/errors.hpp"

namespace fwythoff::cli {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Pile> parse_count(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    const unsigned long v = std::stoul(token);
    if (v == 0 || v > 0xffffffffUL) return std::nullopt;
    return static_cast<Pile>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<MoveSpec> parse_move_command(std::string_view line) {
  std::istringstream words(lower(line));
  std::vector<std::string> tok;
  for (std::string w; words >> w;) tok.push_back(w);
  if (tok.empty()) return std::nullopt;

  if (tok[0] == "one" && tok.size() == 3) {
    std::optional<PileSide> side;
    if (tok[1] == "smaller" || tok[1] == "small") side = PileSide::Smaller;
    if (tok[1] == "larger" || tok[1] == "large") side = PileSide::Larger;
    const auto k = parse_count(tok[2]);
    if (side && k) return MoveSpec::take_one(*side, *k);
  } else if (tok[0] == "both" && tok.size() == 2) {
    if (const auto k = parse_count(tok[1])) return MoveSpec::take_both(*k);
  } else if (tok[0] == "ext" && tok.size() == 3) {
    const auto k = parse_count(tok[1]);
    const auto l = parse_count(tok[2]);
    if (k && l) return MoveSpec::take_extended(*k, *l);
  }
  return std::nullopt;
}

std::optional<Move> engine_reply(const GrundyTable& t, Position p) {
  const auto moves = legal_moves(t.variant(), p);
  if (moves.empty()) return std::nullopt;

  std::optional<Move> best;
  for (const auto& m : moves) {
    if (t.at(m.result) != 0) continue;
    if (!best || m.result.total() < best->result.total() ||
        (m.result.total() == best->result.total() && m.result < best->result)) {
      best = m;
    }
  }
  if (best) return best;
  const MoveSpec nudge = MoveSpec::take_one(PileSide::Larger, 1);
  for (const auto& m : moves) {
    if (m.spec == nudge) return m;
  }
  return moves.front();
}

int play(Variant v, Convention c, Position start, std::istream& in, std::ostream& out) {
  const GrundyTable table = compute_table(v, c, start.large, start.large);
  const bool normal = c == Convention::Normal;

  out << "fwythoff play: " << to_string(v) << ", " << to_string(c) << " convention\n"
      << "commands: one <smaller|larger> <k> | both <k> | ext <k> <l> | quit\n";

  Position p = start;
  if (is_terminal(p)) {
    out << "position " << describe(p) << " has no moves: " << (normal ? "engine wins" : "you win") << '\n';
    return kExitOk;
  }
  while (true) {
    out << "position " << describe(p) << "; your move\n";
    std::string line;
    if (!std::getline(in, line)) {
      out << "input closed\n";
      return kExitOk;
    }
    std::istringstream words(lower(line));
    std::string first;
    if (!(words >> first)) continue;
    if (first == "quit") {
      out << "bye\n";
      return kExitOk;
    }
    const auto spec = parse_move_command(line);
    if (!spec) {
      out << "unrecognised command\n";
      continue;
    }
    if (!is_legal(v, p, *spec)) {
      out << "illegal move " << describe(*spec) << " from " << describe(p) << '\n';
      continue;
    }
    p = apply_move(v, p, *spec);
    out << "you: " << describe(*spec) << " -> " << describe(p) << '\n';
    if (is_terminal(p)) {
      out << "you made the last move: " << (normal ? "you win" : "engine wins") << '\n';
      return kExitOk;
    }

    const auto reply = engine_reply(table, p);
    p = reply->result;
    out << "engine: " << describe(reply->spec) << " -> " << describe(p) << '\n';
    if (is_terminal(p)) {
      out << "engine made the last move: " << (normal ? "engine wins" : "you win") << '\n';
      return kExitOk;
    }
  }
}

}  // namespace fwythoff::cli
