#include <stdexcept>
#include <string>

#include "creg/betti.hpp"

namespace creg {

RegDecision decide_regularity(int n, int r, PdBound bound, std::int64_t chi) {
  if (r < 1 || r > n)
    throw std::invalid_argument("decide_regularity: need 1 <= r <= n, got r = " +
                                std::to_string(r) + ", n = " + std::to_string(n));
  RegDecision d;
  d.n = n;
  d.r = r;
  d.bound = bound;
  d.chi = chi;
  if (chi == 0) return d;

  if (bound == PdBound::n_minus_r) {
    // Only beta_{n-r,n} = |chi| can survive in the last column.
    d.outcome = DecisionOutcome::regularity_determined;
    d.regularity = r;
    d.projective_dimension = n - r;
    return d;
  }

  // chi = (-1)^r (dim H~_{r-2} - dim H~_{r-3}); its sign picks the survivor.
  const bool r_even = r % 2 == 0;
  if ((r_even && chi > 0) || (!r_even && chi < 0)) {
    d.outcome = DecisionOutcome::regularity_determined;
    d.regularity = r;
  } else {
    d.outcome = DecisionOutcome::pd_determined;
    d.projective_dimension = n - r + 1;
  }
  return d;
}

std::string to_string(DecisionOutcome o) {
  switch (o) {
    case DecisionOutcome::regularity_determined:
      return "regularity_determined";
    case DecisionOutcome::pd_determined:
      return "pd_determined";
    case DecisionOutcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace creg
