#include "cli/cli.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twobridge/error.hpp"
#include "twobridge/jones.hpp"
#include "twobridge/snake.hpp"
#include "twobridge/sweep.hpp"
#include "twobridge/ypoly.hpp"

namespace twobridge::cli {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
  fail(Errc::kParseError, what + " at position " + std::to_string(pos) + " in '" +
                              std::string(text) + "'");
}

class InputParser {
 public:
  explicit InputParser(std::string_view text) : text_(text) {}

  Input parse(Hint hint, bool strict) {
    skip_space();
    if (at_end()) parse_error(text_, pos_, "empty input");
    bool bracketed = peek() == '[';
    if (bracketed) {
      ++pos_;
      return finish_cf(entries(']'), hint, strict);
    }
    std::vector<Integer> first = {integer()};
    skip_space();
    if (at_end()) {
      if (hint != Hint::kNone) return finish_cf(first, hint, strict);
      return Rat(first[0]);
    }
    if (peek() == '/') {
      ++pos_;
      Integer den = integer();
      skip_space();
      if (!at_end()) parse_error(text_, pos_, "unexpected trailing text");
      if (den == 0) parse_error(text_, pos_, "zero denominator");
      return Rat(first[0], den);
    }
    if (peek() != ',') parse_error(text_, pos_, "expected '/' or ','");
    ++pos_;
    std::vector<Integer> rest = entries('\0');
    first.insert(first.end(), rest.begin(), rest.end());
    return finish_cf(first, hint, strict);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) parse_error(text_, start, "expected an integer");
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }

  // Comma-separated integers up to `close` ('\0' for end of input).
  std::vector<Integer> entries(char close) {
    std::vector<Integer> out;
    while (true) {
      out.push_back(integer());
      skip_space();
      if (close == '\0' && at_end()) break;
      if (at_end()) parse_error(text_, pos_, std::string("missing '") + close + "'");
      if (peek() == close) {
        ++pos_;
        skip_space();
        if (!at_end()) parse_error(text_, pos_, "unexpected trailing text");
        break;
      }
      if (peek() != ',') parse_error(text_, pos_, "expected ','");
      ++pos_;
    }
    return out;
  }

  Input finish_cf(const std::vector<Integer>& xs, Hint hint, bool strict) {
    bool all_positive = true;
    bool all_even = true;
    for (const Integer& x : xs) {
      all_positive = all_positive && x > 0;
      all_even = all_even && x != 0 && is_even(x);
    }
    if (hint == Hint::kEven) return EvenCF(xs);
    if (hint == Hint::kPositive) return PositiveCF(xs);
    if (!all_positive) {
      if (!all_even) {
        fail(Errc::kInvalidArgument,
             "a continued fraction with nonpositive entries must have only even nonzero entries");
      }
      return EvenCF(xs);
    }
    if (all_even && strict) {
      fail(Errc::kAmbiguousCF, format_entries(xs) + " is both positive and even; pass --even or --positive");
    }
    return PositiveCF(xs);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ordered_json int_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

ordered_json entries_json(const std::vector<Integer>& xs) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : xs) out.push_back(int_json(x));
  return out;
}

ordered_json signs_json(const std::vector<Sign>& signs) {
  ordered_json out = ordered_json::array();
  for (Sign s : signs) out.push_back(to_int(s));
  return out;
}

ordered_json rat_json(const Rat& r) {
  return ordered_json{{"num", int_json(r.num())}, {"den", int_json(r.den())}};
}

// The input in every form the commands need.
struct Resolved {
  Rat value;
  PositiveCF positive{{Integer(1)}};
  // Absent only for the unknot (value 1).
  std::optional<EvenCF> even;
};

Resolved resolve(const Input& in) {
  Resolved r;
  if (const auto* cf = std::get_if<EvenCF>(&in)) {
    r.value = cf->value();
    r.positive = positive_cf(r.value.abs());
    r.even = *cf;
    return r;
  }
  if (const auto* cf = std::get_if<PositiveCF>(&in)) {
    r.value = cf->value();
    r.positive = *cf;
  } else {
    r.value = std::get<Rat>(in);
    if (r.value < Rat(-1)) {
      r.positive = positive_cf(r.value.abs());
      r.even = even_cf(r.value);
      return r;
    }
    if (r.value < Rat(1)) {
      fail(Errc::kOutOfRange, "fraction must satisfy |p/q| > 1 or equal 1, got " + r.value.to_string());
    }
    r.positive = positive_cf(r.value);
  }
  if (r.value != Rat(1)) r.even = oriented_even_cf(r.value);
  return r;
}

JonesResult run_engine(Engine e, const Resolved& r) {
  if (e == Engine::kDirect) {
    if (r.value < Rat(0)) return mirror(jones_direct(r.positive));
    return jones_direct(r.positive);
  }
  if (!r.even) return JonesResult::from_poly(HLPoly(1), e);
  return e == Engine::kRecursive ? jones_recursive(*r.even) : jones_via_f(*r.even);
}

ordered_json jones_json(const JonesResult& v) {
  return ordered_json{{"degree", v.degree.to_string()},
                      {"leading_sign", to_int(v.leading_sign)},
                      {"width", width(v.poly).to_string()},
                      {"coefficients", poly_to_json(v.poly)}};
}

void describe_input(const std::string& raw, const Resolved& r, ordered_json& j) {
  j["input"] = raw;
  j["value"] = rat_json(r.value);
  j["positive_cf"] = entries_json(r.positive.entries());
  if (r.even) {
    j["even_cf"] = entries_json(r.even->entries());
    j["type_sequence"] = signs_json(type_sequence(*r.even).types);
  } else {
    j["even_cf"] = nullptr;
    j["type_sequence"] = nullptr;
  }
}

Report run_convert(const Request& req, const Input& in) {
  Resolved r = resolve(in);
  Report rep;
  ordered_json& j = rep.json;
  j["input"] = req.input;
  j["value"] = rat_json(r.value);
  j["positive_cf"] = entries_json(r.positive.entries());
  rep.lines.push_back("value: " + r.value.to_string());
  rep.lines.push_back("positive CF: " + r.positive.to_string());

  std::optional<EvenCF> even;
  std::string notice;
  if (std::holds_alternative<EvenCF>(in) || r.value < Rat(0)) {
    even = r.even;
  } else if (r.value != Rat(1)) {
    bool both_odd = is_odd(r.value.num()) && is_odd(r.value.den());
    even = even_cf_for_link(r.value);
    if (both_odd) {
      Rat sub(r.value.num(), r.value.num() - r.value.den());
      notice = r.value.to_string() + " has odd numerator and denominator; expanded " +
               sub.to_string() + " instead";
    }
  }
  if (even) {
    SignSeq signs = sign_sequence(*even);
    TypeSeq types = type_sequence(*even);
    j["even_cf"] = entries_json(even->entries());
    j["sign_sequence"] = signs_json(signs.signs);
    j["type_sequence"] = signs_json(types.types);
    j["tau"] = tau(types);
    rep.lines.push_back("even CF: " + even->to_string());
    rep.lines.push_back("sign sequence: " + format_signs(signs.signs));
    rep.lines.push_back("type sequence: " + format_signs(types.types));
  } else {
    j["even_cf"] = nullptr;
    rep.lines.push_back("even CF: none (the unknot)");
  }
  if (!notice.empty()) {
    j["notice"] = notice;
    rep.lines.push_back("note: " + notice);
  }
  bool knot = is_odd(r.value.num());
  j["parity"] = knot ? "knot" : "link";
  rep.lines.push_back(std::string("parity: ") + (knot ? "knot (p odd)" : "2-component link (p even)"));
  return rep;
}

SnakeGraph snake_for(const Input& in, const Resolved& r) {
  if (const auto* cf = std::get_if<EvenCF>(&in)) return snake_from_even(*cf);
  if (r.value < Rat(0)) return snake_from_even(*r.even);
  return snake_from_positive(r.positive);
}

Report run_snake(const Request& req, const Input& in) {
  Resolved r = resolve(in);
  SnakeGraph g = snake_for(in, r);
  Report rep;
  describe_input(req.input, r, rep.json);
  std::string ascii = render_ascii(g);
  Integer count = count_matchings(g);
  std::vector<Sign> signs = g.edge_signs;
  rep.json["tiles"] = g.d;
  rep.json["steps"] = g.step_word();
  rep.json["edge_signs"] = signs_json(signs);
  rep.json["matchings"] = int_json(count);
  rep.json["ascii"] = ascii;
  std::istringstream lines(ascii);
  for (std::string line; std::getline(lines, line);) rep.lines.push_back(line);
  rep.lines.push_back("tiles: " + std::to_string(g.d));
  rep.lines.push_back("steps: " + g.step_word());
  rep.lines.push_back("matchings: " + count.get_str());
  return rep;
}

Report run_fpoly(const Request& req, const Input& in) {
  Resolved r = resolve(in);
  Report rep;
  describe_input(req.input, r, rep.json);
  if (req.full) {
    SnakeGraph g = snake_for(in, r);
    YPoly f = f_polynomial(g);
    rep.json["tiles"] = g.d;
    rep.json["f_polynomial"] = f.to_string();
    rep.lines.push_back(f.to_string());
    return rep;
  }
  bool even_input = std::holds_alternative<EvenCF>(in) || r.value < Rat(0);
  HLPoly f = even_input ? specialized_f_even(*r.even) : specialized_f_positive(r.positive);
  rep.json["specialized"] = poly_to_json(f);
  rep.lines.push_back(f.to_string());
  rep.latex = f.to_latex();
  return rep;
}

Report run_jones(const Request& req, const Input& in) {
  Resolved r = resolve(in);
  Report rep;
  describe_input(req.input, r, rep.json);
  if (req.engine != EngineChoice::kAll) {
    Engine e = req.engine == EngineChoice::kRecursive ? Engine::kRecursive
               : req.engine == EngineChoice::kDirect  ? Engine::kDirect
                                                      : Engine::kFpoly;
    JonesResult v = run_engine(e, r);
    rep.json["engine"] = engine_name(e);
    rep.json.update(jones_json(v));
    rep.json["checks"] = ordered_json::array();
    rep.lines.push_back(v.poly.to_string());
    rep.latex = v.poly.to_latex();
    return rep;
  }
  std::vector<JonesResult> results;
  for (Engine e : {Engine::kRecursive, Engine::kDirect, Engine::kFpoly}) {
    results.push_back(run_engine(e, r));
  }
  ordered_json checks = ordered_json::array();
  std::string mismatches;
  for (std::size_t i = 1; i < results.size(); ++i) {
    bool equal = results[i].poly == results[0].poly;
    std::string pair = std::string(engine_name(results[0].engine)) + "=" +
                       std::string(engine_name(results[i].engine));
    checks.push_back({{"check", pair}, {"passed", equal}});
    if (!equal) {
      mismatches += " " + std::string(engine_name(results[0].engine)) + " gives " +
                    results[0].poly.to_string() + ", " + std::string(engine_name(results[i].engine)) +
                    " gives " + results[i].poly.to_string() + ";";
    }
  }
  if (!mismatches.empty()) {
    fail(Errc::kCrossCheckMismatch, "engines disagree on " + req.input + ":" + mismatches);
  }
  rep.json["engine"] = "all";
  rep.json.update(jones_json(results[0]));
  rep.json["checks"] = checks;
  for (const JonesResult& v : results) {
    rep.lines.push_back(std::string(engine_name(v.engine)) + ": " + v.poly.to_string());
  }
  rep.latex = results[0].poly.to_latex();
  return rep;
}

Report run_verify(const Request& req) {
  if (req.max_sum < 1) fail(Errc::kInvalidArgument, "--max-sum must be at least 1");
  SweepSummary s = run_sweep(req.max_sum);
  Report rep;
  ordered_json checks = ordered_json::array();
  for (const CheckTally& c : s.checks) {
    ordered_json item = {{"check", c.name}, {"checked", c.checked}, {"failed", c.failed}};
    std::string line = c.name + ": " + std::to_string(c.checked) + " checked, " +
                       std::to_string(c.failed) + " failed";
    if (c.failed) {
      item["first_failure"] = c.first_failure;
      line += " (first: " + c.first_failure + ")";
    }
    checks.push_back(item);
    rep.lines.push_back(line);
  }
  rep.json["max_sum"] = s.max_sum;
  rep.json["checks"] = checks;
  rep.json["total_checked"] = s.total_checked();
  rep.json["total_failed"] = s.total_failed();
  rep.lines.push_back("total: " + std::to_string(s.total_checked()) + " checked, " +
                      std::to_string(s.total_failed()) + " failed");
  rep.exit_code = s.total_failed() == 0 ? 0 : 3;
  return rep;
}

Report run_volume(const Request& req, const Input& in) {
  Resolved r = resolve(in);
  VolumeBounds b = volume_bounds(r.positive);
  Report rep;
  describe_input(req.input, r, rep.json);
  rep.json["lower"] = b.lower;
  rep.json["upper"] = b.upper;
  std::ostringstream lo, hi;
  lo << b.lower;
  hi << b.upper;
  rep.lines.push_back("lower bound: " + lo.str());
  rep.lines.push_back("upper bound: " + hi.str());
  return rep;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kParseError:
    case Errc::kAmbiguousCF:
      return 1;
    case Errc::kCrossCheckMismatch:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

Input parse_input(std::string_view text, Hint hint, bool strict) {
  return InputParser(text).parse(hint, strict);
}

ordered_json poly_to_json(const HLPoly& p) {
  ordered_json out = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({HalfInt::from_halves(it->first).to_string(), int_json(it->second)});
  }
  return out;
}

HLPoly poly_from_json(const ordered_json& coefficients) {
  if (!coefficients.is_array()) fail(Errc::kParseError, "coefficients must be a JSON array");
  HLPoly out;
  for (const auto& term : coefficients) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string()) {
      fail(Errc::kParseError, "each coefficient must be [exponent-string, coefficient]");
    }
    HalfInt e = HalfInt::parse(term[0].get<std::string>());
    Integer c;
    if (term[1].is_number_integer()) {
      c = Integer(std::to_string(term[1].get<std::int64_t>()));
    } else if (term[1].is_string()) {
      try {
        c = Integer(term[1].get<std::string>());
      } catch (const std::invalid_argument&) {
        fail(Errc::kParseError, "malformed coefficient '" + term[1].get<std::string>() + "'");
      }
    } else {
      fail(Errc::kParseError, "coefficient must be an integer or a decimal string");
    }
    out += HLPoly::monomial(c, e);
  }
  return out;
}

Report run(const Request& req) {
  if (req.command == Command::kVerify) return run_verify(req);
  Input in = parse_input(req.input, req.hint, req.strict);
  switch (req.command) {
    case Command::kConvert:
      return run_convert(req, in);
    case Command::kSnake:
      return run_snake(req, in);
    case Command::kFpoly:
      return run_fpoly(req, in);
    case Command::kJones:
      return run_jones(req, in);
    case Command::kVolume:
      return run_volume(req, in);
    case Command::kVerify:
      break;
  }
  return run_verify(req);
}

std::string emit(const Report& rep, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      return rep.json.dump() + "\n";
    case Format::kLatex:
      if (!rep.latex.empty()) return rep.latex + "\n";
      [[fallthrough]];
    case Format::kText:
      break;
  }
  std::string out;
  for (const std::string& line : rep.lines) out += line + "\n";
  return out;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials of 2-bridge links from continued fractions"};
  app.name("twobridge");

  Request req;
  std::string command;
  std::string engine = "recursive";
  std::string format = "text";
  bool even = false;
  bool positive = false;

  const std::map<std::string, Command> commands = {
      {"convert", Command::kConvert}, {"snake", Command::kSnake}, {"fpoly", Command::kFpoly},
      {"jones", Command::kJones},     {"verify", Command::kVerify}, {"volume", Command::kVolume}};

  app.add_option("command", command, "convert, snake, fpoly, jones, verify or volume")
      ->required()
      ->check(CLI::IsMember({"convert", "snake", "fpoly", "jones", "verify", "volume"}));
  app.add_option("input", req.input, "fraction p/q or continued fraction [c1,c2,...]");
  app.add_option("--engine", engine, "Jones engine")
      ->check(CLI::IsMember({"recursive", "direct", "fpoly", "all"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  auto* even_flag = app.add_flag("--even", even, "read the continued fraction as even");
  app.add_flag("--positive", positive, "read the continued fraction as positive")->excludes(even_flag);
  app.add_option("--max-sum", req.max_sum, "sweep bound for verify")->check(CLI::Range(1, 40));
  app.add_flag("--full", req.full, "fpoly: print the full F-polynomial in y_1..y_d");
  app.add_flag("--strict", req.strict, "reject CFs that are both positive and even without a hint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  req.command = commands.at(command);
  req.engine = engine == "recursive" ? EngineChoice::kRecursive
               : engine == "direct"  ? EngineChoice::kDirect
               : engine == "fpoly"   ? EngineChoice::kFpoly
                                     : EngineChoice::kAll;
  req.format = format == "json" ? Format::kJson : format == "latex" ? Format::kLatex : Format::kText;
  req.hint = even ? Hint::kEven : positive ? Hint::kPositive : Hint::kNone;

  if (req.command != Command::kVerify && req.input.empty()) {
    err << "error: " << command << " needs an input\n";
    return 1;
  }
  if (req.format == Format::kLatex && req.command != Command::kJones &&
      !(req.command == Command::kFpoly && !req.full)) {
    err << "error: latex output is available for jones and fpoly only\n";
    return 1;
  }

  try {
    Report rep = run(req);
    out << emit(rep, req.format);
    return rep.exit_code;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace twobridge::cli
