#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "twobridge/cfrac.hpp"

namespace twobridge {

// Every even continued fraction with entries in {+-2, +-4, ..., +-max_entry}
// and sum |b_i| <= max_sum, in lexicographic order of entries.
void for_each_even_cf(int max_sum, int max_entry, const std::function<void(const EvenCF&)>& fn);

// Every positive continued fraction with entries in 1..max_entry and
// sum a_i <= max_sum. With canonical_only, a_n >= 2 whenever n >= 2.
void for_each_positive_cf(int max_sum, int max_entry, bool canonical_only,
                          const std::function<void(const PositiveCF&)>& fn);

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;  // input of the first failing case
};

struct SweepSummary {
  int max_sum = 0;
  std::vector<CheckTally> checks;

  std::size_t total_checked() const;
  std::size_t total_failed() const;
};

// Cross-checks the engines and closed forms on every even continued
// fraction with sum |b_i| <= max_sum (entries up to 6) and every canonical
// positive continued fraction with sum a_i <= max_sum.
SweepSummary run_sweep(int max_sum);

}  // namespace twobridge
