#pragma once

#include <string>
#include <vector>

namespace twobridge {

enum class Sign : int { kMinus = -1, kPlus = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_from_int(int x) { return x < 0 ? Sign::kMinus : Sign::kPlus; }

constexpr char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

// "(+,-,-)" style rendering used in reports and test messages.
std::string format_signs(const std::vector<Sign>& signs);

}  // namespace twobridge
