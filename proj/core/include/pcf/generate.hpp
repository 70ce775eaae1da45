#pragma once

#include <functional>
#include <random>

#include "pcf/strategy.hpp"

namespace pcf {

using Rng = std::mt19937_64;

/// P-moves that may legally answer the O-view `v` (odd length): a child
/// question of any O-question in the view, or an answer to the pending
/// question. Ordered by justifier, then move.
std::vector<JMove> legal_responses(const Arena& arena, const View& v);

/// The O-views that extend `v` followed by the P-move `r`.
std::vector<View> o_extensions(const Arena& arena, const View& v, const JMove& r);

struct StrategyGen {
  std::size_t max_norm = 6;
  double define = 0.75;  // chance of defining a reachable O-view
  bool total = false;    // define every reachable O-view (fails if max_norm is too small)
  std::function<bool(const View&, const JMove&)> allow;  // optional response filter
};

/// A random compact strategy, built entry by entry from the root view.
/// With `total` set, retries until every reachable O-view is defined and
/// throws if that is impossible within the norm cap.
Strategy random_strategy(const Type& type, std::uint32_t window, std::size_t arity, const StrategyGen& opts, Rng& rng);

/// Every strategy with norm <= max_norm, sorted by (norm, serialization).
/// Throws once more than `limit` strategies would be produced.
std::vector<Strategy> enumerate_strategies(const Type& type, std::uint32_t window, std::size_t arity,
                                           std::size_t max_norm, bool total_only = false,
                                           std::size_t limit = 2'000'000);

struct TermGen {
  std::uint32_t window = 4;
  std::size_t depth = 3;
  bool fix = false;    // allow Y
  bool omega = true;
  bool redex = true;   // allow beta-redexes
};

/// A random well-typed term of type `t` in `ctx`; numerals stay below the
/// window and fresh binders are named v0, v1, ...
Term random_term(const TypingContext& ctx, const Type& t, const TermGen& opts, Rng& rng);

/// A recursive program shape: Y applied to a generated body whose recursive
/// variable occurs in it, applied to generated arguments.
Term random_fix_term(const Type& t, const TermGen& opts, Rng& rng);

/// A mix of random view-function construction and denotations of random
/// Y-free terms, as used by the property suites.
Strategy random_compact(const Type& type, std::uint32_t window, std::size_t max_norm, Rng& rng);

/// Uniform pick from a non-empty vector.
template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

}  // namespace pcf
