#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twobridge/cfrac.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge::cli {

enum class Command { kConvert, kSnake, kFpoly, kJones, kVerify, kVolume };
enum class EngineChoice { kRecursive, kDirect, kFpoly, kAll };
enum class Format { kText, kJson, kLatex };
enum class Hint { kNone, kEven, kPositive };

struct Request {
  Command command = Command::kJones;
  std::string input;
  EngineChoice engine = EngineChoice::kRecursive;
  Format format = Format::kText;
  Hint hint = Hint::kNone;
  int max_sum = 12;
  bool full = false;
  // Require an explicit hint when a CF is both positive and even.
  bool strict = false;
};

using Input = std::variant<Rat, PositiveCF, EvenCF>;

// "p/q" or an integer gives a Rat; "[c1,c2,...]" or "c1,c2,..." gives a CF.
// A CF with a negative entry must be even; an all-positive CF is positive
// unless the hint says otherwise.
Input parse_input(std::string_view text, Hint hint = Hint::kNone, bool strict = false);

struct Report {
  nlohmann::ordered_json json;
  std::vector<std::string> lines;
  // Set only by commands that produce a polynomial.
  std::string latex;
  // Nonzero when the command ran but found failing checks.
  int exit_code = 0;
};

Report run(const Request& req);
std::string emit(const Report& rep, Format fmt);

nlohmann::ordered_json poly_to_json(const HLPoly& p);
HLPoly poly_from_json(const nlohmann::ordered_json& coefficients);

// Full command-line entry point; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
