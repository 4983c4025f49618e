#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

enum class Errc {
  kZeroTail,
  kOutOfRange,
  kNoEvenQuotient,
  kBothOdd,
  kZeroPolynomial,
  kMixedGrid,
  kTooManyTiles,
  kBudgetExceeded,
  kWrongOrientation,
  kHypothesisViolated,
  kInvalidArgument,
  kParseError,
  kAmbiguousCF,
  kCrossCheckMismatch,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this exception; `code()` lets
// callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace twobridge
