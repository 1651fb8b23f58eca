#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwythoff/grundy.hpp"

namespace fwythoff::cli {

// Exit codes: 0 all checks pass or are inconclusive, 1 some check failed,
// 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Parses a play-mode command ("one larger 3", "both 2", "ext 3 1"),
// case-insensitively. Returns nullopt for anything else.
std::optional<MoveSpec> parse_move_command(std::string_view line);

// Engine reply: the winning move with the smallest resulting total, then the
// lexicographically smallest result; with no winning move TakeOne(larger, 1)
// if legal, else the first legal move. Nullopt only at the terminal.
std::optional<Move> engine_reply(const GrundyTable& t, Position p);

// Interactive session from `start`, one command per input line.
int play(Variant v, Convention c, Position start, std::istream& in, std::ostream& out);

}  // namespace fwythoff::cli
