#pragma once

#include <optional>

#include "pcf/compose.hpp"
#include "pcf/operational.hpp"

namespace pcf {

inline constexpr std::size_t kDefaultUnroll = 16;
inline constexpr std::uint32_t kDefaultWindow = 4;

/// [[ctx |- m]] : !Gamma -> [[T]], with every Y replaced by the k-th element
/// of its fixpoint chain (k = unroll). The result lives on the arena of
/// Gamma => T with domain arity |Gamma|. Throws TypeError on ill-typed input
/// and Error on numerals outside the window.
Strategy denote(const Term& m, const TypingContext& ctx, std::size_t unroll, std::uint32_t window);
inline Strategy denote(const Term& m, std::size_t unroll = kDefaultUnroll, std::uint32_t window = kDefaultWindow) {
  return denote(m, {}, unroll, window);
}

/// [[Y_T]] at unroll k, computed as F^k(bot) with F = [[lambda f. f (F f)]].
Strategy fix_chain(const Type& t, std::size_t k, std::uint32_t window);

/// The chain k |-> denote(m, k). Every element is compact; the chain is
/// increasing under view-function inclusion.
class ApproxDenotation {
 public:
  ApproxDenotation(Term m, TypingContext ctx, std::uint32_t window);
  Strategy at(std::size_t k) const { return denote(term_, ctx_, k, window_); }
  const Type& type() const { return type_; }
  std::uint32_t window() const { return window_; }

 private:
  Term term_;
  TypingContext ctx_;
  Type type_;
  std::uint32_t window_;
};

struct AdequacyReport {
  Outcome operational;
  /// denote(p, k) for k = 0, 1, ... up to the first point, or to k_max.
  std::vector<Strategy> denotational;
  std::optional<std::uint32_t> denoted;  // the point reached, if any
  std::optional<std::size_t> first_k;    // least k reaching it
  bool agree = false;
  std::string note;  // set when a resource bound (fuel, unroll, size) was hit
};

/// P converges to n within fuel  iff  some denote(P, k), k <= k_max, is n-bar.
AdequacyReport adequacy_check(const Term& p, std::size_t fuel, std::size_t k_max, std::uint32_t window);

}  // namespace pcf
