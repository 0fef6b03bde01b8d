#pragma once

#include <vector>

namespace makai::lp {

// maximize c.v subject to A v <= b, v >= 0, with all b_i >= 0 so the slack
// basis is feasible from the start.  Dense tableau, Bland's rule, so it
// terminates even on degenerate polytopes.  Sizes here are tiny (a few
// hundred rows, <= 7 structural columns).
struct Solution {
  double value = 0.0;
  std::vector<double> v;
};

Solution maximize(const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b, const std::vector<double>& c);

}  // namespace makai::lp
