#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcf/syntax.hpp"

namespace pcf {

enum class Polarity { Opponent, Player };

/// A move of the arena of a simple type. Moves are addressed by the path of
/// argument positions leading to a node of the type tree: the empty path is
/// the result question, [i] the question of the i-th argument, [i, j] the
/// question of the j-th argument of the i-th argument, and so on. Each node
/// has one question and, at nat, one answer per element of the window.
///
/// Because the path of an argument of an uncurried type coincides with the
/// path in its curried form, A1 => ... => Ak => B and !(A1 x ... x Ak) -o B
/// have literally the same arena.
struct Move {
  std::vector<std::uint32_t> path;
  bool answer = false;
  std::uint32_t value = 0;  // answers only

  static Move question(std::vector<std::uint32_t> path) { return {std::move(path), false, 0}; }
  static Move answer_to(std::vector<std::uint32_t> path, std::uint32_t v) { return {std::move(path), true, v}; }

  bool is_question() const { return !answer; }
  /// Root question and P-answers sit at even depth.
  Polarity polarity() const {
    bool even = path.size() % 2 == 0;
    return (even != answer) ? Polarity::Opponent : Polarity::Player;
  }

  std::string str() const;

  friend auto operator<=>(const Move&, const Move&) = default;
  friend bool operator==(const Move&, const Move&) = default;
};

/// A move together with its justification pointer: an index into the
/// surrounding sequence, or -1 for the initial move.
struct JMove {
  Move move;
  std::int32_t justifier = -1;

  std::string str() const;

  friend auto operator<=>(const JMove&, const JMove&) = default;
  friend bool operator==(const JMove&, const JMove&) = default;
};

/// A P-view: O-P alternating, starting with the root question, every
/// non-initial O-move justified by the move right before it.
using View = std::vector<JMove>;

std::string view_str(const View& v);
Move parse_move(const std::string& text);
JMove parse_jmove(const std::string& text);

/// The game board for a simple type: nat nodes offer `window` answers
/// (approximating the naturals by {0..window-1}); iota nodes offer none.
class Arena {
 public:
  Arena(Type type, std::uint32_t window);

  const Type& type() const { return type_; }
  std::uint32_t window() const { return window_; }

  /// Type of the node addressed by `path`, or nullopt if there is none.
  std::optional<Type> node(const std::vector<std::uint32_t>& path) const;
  std::uint32_t answers_at(const std::vector<std::uint32_t>& path) const;
  bool contains(const Move& m) const;

  /// Moves enabled by `m`: the child questions and, for a question, its
  /// answers. Answers enable nothing.
  std::vector<Move> enabled_by(const Move& m) const;

  /// Total number of moves (for reporting).
  std::size_t move_count() const;

  friend bool operator==(const Arena& a, const Arena& b) {
    return a.window_ == b.window_ && a.type_ == b.type_;
  }

 private:
  Type type_;
  std::uint32_t window_;
};

inline Arena arena_of_type(const Type& t, std::uint32_t window) { return Arena(t, window); }

/// Answers of a node: window at nat, none at iota.
std::uint32_t answers_of(const Type& node_type, std::uint32_t window);

/// Index of the pending (most recent unanswered) question of a justified
/// sequence, or -1.
std::int32_t pending_question(const View& v);

}  // namespace pcf
