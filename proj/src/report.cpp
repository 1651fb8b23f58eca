#include "fwythoff/report.hpp"

#include <utility>

namespace fwythoff {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

ReportItem pass(std::string name, Json parameters) {
  ReportItem item;
  item.name = std::move(name);
  item.status = Status::Pass;
  item.parameters = std::move(parameters);
  return item;
}

ReportItem fail(std::string name, Counterexample cex, Json parameters) {
  ReportItem item;
  item.name = std::move(name);
  item.status = Status::Fail;
  item.counterexample = cex;
  item.parameters = std::move(parameters);
  return item;
}

}  // namespace fwythoff
