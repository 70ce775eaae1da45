#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "pcf/arena.hpp"

namespace pcf {

/// A compact innocent strategy, given by its (finite) view function.
///
/// A strategy for the morphism Gamma -> B of the co-Kleisli category lives
/// on the arena of the curried type Gamma_1 => ... => Gamma_n => B; the
/// number n is kept as `domain_arity` so composition knows where the domain
/// ends. Points 1 -> B have domain_arity 0. Currying only moves this split.
class Strategy {
 public:
  using Table = std::map<View, JMove>;

  Strategy(Type type, std::uint32_t window, std::size_t domain_arity = 0, Table table = {});

  const Type& type() const { return type_; }
  std::uint32_t window() const { return window_; }
  std::size_t domain_arity() const { return domain_arity_; }
  Arena arena() const { return Arena(type_, window_); }
  const Table& table() const { return table_; }

  std::vector<Type> domain() const;
  Type codomain() const;

  std::size_t norm() const { return table_.size(); }
  bool is_bottom() const { return table_.empty(); }
  std::optional<JMove> respond(const View& v) const;

  /// Response to the initial question, if any.
  std::optional<JMove> first_move() const;

  /// The same view function, re-read with a different domain split.
  Strategy with_domain_arity(std::size_t n) const;

  /// Adds an entry; the caller is responsible for well-formedness.
  void set(View v, JMove response) { table_[std::move(v)] = std::move(response); }

  /// Structured text form; `parse` inverts it exactly.
  std::string serialize() const;
  static Strategy parse(const std::string& text);

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.window_ == b.window_ && a.type_ == b.type_ && a.table_ == b.table_;
  }
  friend bool operator!=(const Strategy& a, const Strategy& b) { return !(a == b); }

 private:
  Type type_;
  std::uint32_t window_;
  std::size_t domain_arity_;
  Table table_;
};

/// Equality of view functions at the same arena.
bool strategy_eq(const Strategy& f, const Strategy& g);

/// View-function inclusion, the order on compact strategies.
bool strategy_leq(const Strategy& f, const Strategy& g);

/// Describes the first violated strategy invariant (legal P-views, legal
/// justified responses, well-bracketing, prefix closure), or nullopt.
std::optional<std::string> check_wellformed(const Strategy& f);

struct Classification {
  bool strict = false;
  bool total = false;
  bool constant = false;  // answers the initial question without asking anything
};

/// Strict iff the strategy is empty or its first response is a domain move;
/// total iff strict and non-empty.
Classification classify(const Strategy& f);

/// The answer of a point 1 -> nat, if it is one.
std::optional<std::uint32_t> point_value(const Strategy& f);

Strategy read_strategy_file(const std::string& path);
void write_strategy_file(const Strategy& f, const std::string& path);

}  // namespace pcf
