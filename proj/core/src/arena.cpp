#include "pcf/arena.hpp"

#include <sstream>

namespace pcf {

std::string Move::str() const {
  std::string s = answer ? "a" : "q";
  for (auto p : path) s += "." + std::to_string(p);
  if (answer) s += "=" + std::to_string(value);
  return s;
}

std::string JMove::str() const {
  return move.str() + "@" + (justifier < 0 ? std::string("-") : std::to_string(justifier));
}

std::string view_str(const View& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += v[i].str();
  }
  return s;
}

Move parse_move(const std::string& text) {
  if (text.empty() || (text[0] != 'q' && text[0] != 'a')) throw Error("bad move: " + text);
  Move m;
  m.answer = text[0] == 'a';
  std::size_t pos = 1;
  std::string rest = text;
  if (m.answer) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw Error("answer without value: " + text);
    m.value = static_cast<std::uint32_t>(std::stoul(text.substr(eq + 1)));
    rest = text.substr(0, eq);
  }
  while (pos < rest.size()) {
    if (rest[pos] != '.') throw Error("bad move: " + text);
    auto next = rest.find('.', pos + 1);
    std::string part = rest.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    if (part.empty()) throw Error("bad move: " + text);
    m.path.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    pos = next == std::string::npos ? rest.size() : next;
  }
  return m;
}

JMove parse_jmove(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos) throw Error("move without justifier: " + text);
  JMove jm;
  jm.move = parse_move(text.substr(0, at));
  std::string j = text.substr(at + 1);
  jm.justifier = j == "-" ? -1 : static_cast<std::int32_t>(std::stol(j));
  return jm;
}

std::uint32_t answers_of(const Type& node_type, std::uint32_t window) {
  return node_type.base() == Base::Nat ? window : 0;
}

Arena::Arena(Type type, std::uint32_t window) : type_(std::move(type)), window_(window) {}

std::optional<Type> Arena::node(const std::vector<std::uint32_t>& path) const {
  Type t = type_;
  for (auto p : path) {
    auto args = t.arguments();
    if (p >= args.size()) return std::nullopt;
    t = args[p];
  }
  return t;
}

std::uint32_t Arena::answers_at(const std::vector<std::uint32_t>& path) const {
  auto t = node(path);
  return t ? answers_of(*t, window_) : 0;
}

bool Arena::contains(const Move& m) const {
  auto t = node(m.path);
  if (!t) return false;
  return !m.answer || m.value < answers_of(*t, window_);
}

std::vector<Move> Arena::enabled_by(const Move& m) const {
  std::vector<Move> out;
  if (m.answer) return out;
  auto t = node(m.path);
  if (!t) return out;
  std::size_t k = t->arity();
  for (std::uint32_t i = 0; i < k; ++i) {
    auto p = m.path;
    p.push_back(i);
    out.push_back(Move::question(std::move(p)));
  }
  std::uint32_t n = answers_of(*t, window_);
  for (std::uint32_t v = 0; v < n; ++v) out.push_back(Move::answer_to(m.path, v));
  return out;
}

namespace {
std::size_t count_moves(const Type& t, std::uint32_t window) {
  std::size_t n = 1 + answers_of(t, window);
  for (const auto& a : t.arguments()) n += count_moves(a, window);
  return n;
}
}  // namespace

std::size_t Arena::move_count() const { return count_moves(type_, window_); }

std::int32_t pending_question(const View& v) {
  std::vector<std::int32_t> stack;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].move.is_question()) {
      stack.push_back(static_cast<std::int32_t>(i));
    } else {
      while (!stack.empty() && stack.back() != v[i].justifier) stack.pop_back();
      if (!stack.empty()) stack.pop_back();
    }
  }
  return stack.empty() ? -1 : stack.back();
}

}  // namespace pcf
