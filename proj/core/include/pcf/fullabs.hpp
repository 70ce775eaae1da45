#pragma once

#include "pcf/definability.hpp"
#include "pcf/denotation.hpp"

namespace pcf {

/// Either no separating test was found among those tried, or a replayable
/// witness: a test strategy (intrinsic side) or a test term (operational
/// side) sending the left argument to `value` and the right one elsewhere.
struct Verdict {
  bool separated = false;
  std::size_t tests_tried = 0;
  std::optional<Strategy> witness_strategy;
  std::optional<Term> witness_term;
  std::uint32_t value = 0;

  std::string str() const;
};

/// The tests alpha : [[T]] -> nat with norm <= bound, in (norm, text) order.
std::vector<Strategy> enumerate_tests(const Type& t, std::size_t norm_bound, std::uint32_t window);

/// f <~ g: every test alpha with alpha o f = n-bar also has alpha o g = n-bar.
/// f and g are points 1 -> [[T]].
Verdict intrinsic_leq(const Strategy& f, const Strategy& g, std::size_t norm_bound, std::uint32_t window);

/// m <~obs n over the contexts P[.] = P . with P = extract_term(alpha) for
/// the same tests. Open terms must be lambda-closed by the caller.
Verdict obs_compare(const Term& m, const Term& n, std::size_t norm_bound, std::uint64_t fuel, std::uint32_t window);

}  // namespace pcf
