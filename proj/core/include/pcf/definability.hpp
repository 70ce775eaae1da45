#pragma once

#include "pcf/decomposition.hpp"

namespace pcf {

/// PCF Boehm tree. Binders are the lambdas opened at this node; head
/// indices count every binder from the outermost one (0-based here, printed
/// 1-based). Cut marks structure beyond a depth bound. Bottom is never
/// stored as a branch.
struct EvalTree {
  enum class Kind { Bottom, Leaf, Node, Cut };
  Kind kind = Kind::Bottom;
  std::vector<std::pair<std::string, Type>> binders;
  std::uint32_t value = 0;  // Leaf
  std::size_t head = 0;     // Node
  std::vector<EvalTree> args;
  std::map<std::uint32_t, EvalTree> branches;

  static EvalTree bottom() { return {}; }
  static EvalTree cut() {
    EvalTree t;
    t.kind = Kind::Cut;
    return t;
  }

  /// Parenthesized text form, e.g. `\x1:nat. #1 [] {0: 1, 1: 0}`.
  std::string str() const;
  static EvalTree parse(const std::string& text);

  std::size_t depth() const;

  /// Structural equality; binder names are ignored, binder types are not.
  friend bool operator==(const EvalTree& a, const EvalTree& b);
  friend bool operator!=(const EvalTree& a, const EvalTree& b) { return !(a == b); }
};

/// Repeated decomposition down to `depth_bound` Node levels.
EvalTree tree_of_strategy(const Strategy& f, std::size_t depth_bound);

/// Fold of recompose; `type` is the type of the closed term the tree denotes.
Strategy strategy_of_tree(const EvalTree& t, const Type& type, std::uint32_t window);

struct TreeOptions {
  std::uint32_t window = 4;
  std::size_t depth = 8;
  /// Beta/Y/case steps allowed per head normalization; running out reads
  /// as divergence (Bottom).
  std::size_t steps = 20000;
  /// When set, Y[T] is replaced by lambda f. f^k (lambda y. omega) instead
  /// of being unfolded lazily.
  std::optional<std::size_t> unroll;
};

/// The evaluation tree of a closed term, by head normalization with lazy
/// Y-unfolding. Never consults the strategy model.
EvalTree tree_of_term(const Term& m, const TreeOptions& opts);

/// p_k(f).
Strategy approximant(const Strategy& f, std::size_t k);

/// A closed evaluation-tree-shaped term M with [[M]] = f.
Term extract_term(const Strategy& f);
/// A closed term denoting p_k(f), following the p_k recursion.
Term extract_term_pk(const Strategy& f, std::size_t k);

}  // namespace pcf
