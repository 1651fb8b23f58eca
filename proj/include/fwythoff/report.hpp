#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fwythoff/game_rules.hpp"

namespace fwythoff {

using Json = nlohmann::ordered_json;

enum class Status : std::uint8_t { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

struct Counterexample {
  std::optional<Position> position;
  std::optional<std::uint64_t> value;
};

// One verifier outcome. A Fail always carries a counterexample; Inconclusive
// is reserved for existence claims whose witness may lie past the bound.
struct ReportItem {
  std::string name;
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;
  Json parameters = Json::object();
  Json details = Json::object();

  bool failed() const { return status == Status::Fail; }
};

ReportItem pass(std::string name, Json parameters = Json::object());
ReportItem fail(std::string name, Counterexample cex, Json parameters = Json::object());

}  // namespace fwythoff
