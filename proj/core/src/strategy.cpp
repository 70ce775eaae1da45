#include "pcf/strategy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pcf {

Strategy::Strategy(Type type, std::uint32_t window, std::size_t domain_arity, Table table)
    : type_(std::move(type)), window_(window), domain_arity_(domain_arity), table_(std::move(table)) {
  if (domain_arity_ > type_.arity()) throw Error("domain arity exceeds the arity of " + type_.str());
}

std::vector<Type> Strategy::domain() const {
  auto args = type_.arguments();
  args.resize(domain_arity_);
  return args;
}

Type Strategy::codomain() const {
  Type t = type_;
  for (std::size_t i = 0; i < domain_arity_; ++i) t = t.codomain();
  return t;
}

std::optional<JMove> Strategy::respond(const View& v) const {
  auto it = table_.find(v);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<JMove> Strategy::first_move() const {
  return respond(View{JMove{Move::question({}), -1}});
}

Strategy Strategy::with_domain_arity(std::size_t n) const { return Strategy(type_, window_, n, table_); }

std::string Strategy::serialize() const {
  std::ostringstream os;
  os << "pcf-strategy 1\n";
  os << "type " << type_.str() << "\n";
  os << "window " << window_ << "\n";
  os << "arity " << domain_arity_ << "\n";
  os << "norm " << table_.size() << "\n";
  for (const auto& [view, resp] : table_) os << view_str(view) << " => " << resp.str() << "\n";
  os << "end\n";
  return os.str();
}

Strategy Strategy::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto header = [&](const std::string& key) {
    if (!std::getline(in, line) || line.rfind(key + " ", 0) != 0)
      throw Error("strategy file: expected '" + key + "' line");
    return line.substr(key.size() + 1);
  };
  if (!std::getline(in, line) || line != "pcf-strategy 1") throw Error("strategy file: bad magic line");
  Type type = parse_type(header("type"));
  auto window = static_cast<std::uint32_t>(std::stoul(header("window")));
  auto arity = static_cast<std::size_t>(std::stoul(header("arity")));
  auto norm = static_cast<std::size_t>(std::stoul(header("norm")));
  Table table;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      ended = true;
      break;
    }
    auto arrow = line.find(" => ");
    if (arrow == std::string::npos) throw Error("strategy file: bad entry: " + line);
    View v;
    std::istringstream vs(line.substr(0, arrow));
    std::string tok;
    while (vs >> tok) v.push_back(parse_jmove(tok));
    table[std::move(v)] = parse_jmove(line.substr(arrow + 4));
  }
  if (!ended) throw Error("strategy file: missing 'end'");
  if (table.size() != norm) throw Error("strategy file: norm does not match the entry count");
  Strategy s(type, window, arity, std::move(table));
  if (auto err = check_wellformed(s)) throw Error("strategy file: " + *err);
  return s;
}

bool strategy_eq(const Strategy& f, const Strategy& g) {
  if (!(f.arena() == g.arena())) throw Error("strategy_eq: arena mismatch");
  return f.table() == g.table();
}

bool strategy_leq(const Strategy& f, const Strategy& g) {
  for (const auto& [v, r] : f.table()) {
    auto other = g.respond(v);
    if (!other || !(*other == r)) return false;
  }
  return true;
}

std::optional<std::string> check_wellformed(const Strategy& f) {
  Arena arena = f.arena();
  auto bad = [](const View& v, const std::string& why) { return "view [" + view_str(v) + "]: " + why; };
  for (const auto& [view, resp] : f.table()) {
    if (view.empty() || view.size() % 2 == 0) return bad(view, "views have odd length");
    if (!(view[0] == JMove{Move::question({}), -1})) return bad(view, "must open with the root question");
    for (std::size_t i = 0; i < view.size(); ++i) {
      const JMove& jm = view[i];
      if (!arena.contains(jm.move)) return bad(view, "move " + jm.move.str() + " not in arena");
      Polarity want = i % 2 == 0 ? Polarity::Opponent : Polarity::Player;
      if (jm.move.polarity() != want) return bad(view, "polarity alternation broken at " + std::to_string(i));
      if (i == 0) continue;
      if (i % 2 == 0) {
        if (jm.justifier != static_cast<std::int32_t>(i) - 1)
          return bad(view, "O-move not justified by the preceding move");
        auto en = arena.enabled_by(view[i - 1].move);
        if (std::find(en.begin(), en.end(), jm.move) == en.end())
          return bad(view, "O-move not enabled by its justifier");
      } else {
        View prefix(view.begin(), view.begin() + static_cast<std::ptrdiff_t>(i));
        auto r = f.respond(prefix);
        if (!r || !(*r == jm)) return bad(view, "not reachable: prefix response differs at " + std::to_string(i));
      }
    }
    if (resp.move.polarity() != Polarity::Player) return bad(view, "response is not a P-move");
    if (!arena.contains(resp.move)) return bad(view, "response not in arena");
    if (resp.justifier < 0 || resp.justifier >= static_cast<std::int32_t>(view.size()))
      return bad(view, "response justifier out of range");
    const Move& just = view[static_cast<std::size_t>(resp.justifier)].move;
    auto en = arena.enabled_by(just);
    if (std::find(en.begin(), en.end(), resp.move) == en.end())
      return bad(view, "response not enabled by its justifier");
    if (resp.move.answer && resp.justifier != pending_question(view))
      return bad(view, "answer does not answer the pending question");
  }
  return std::nullopt;
}

Classification classify(const Strategy& f) {
  Classification c;
  auto first = f.first_move();
  if (!first) {
    c.strict = true;
    return c;
  }
  if (first->move.answer) {
    c.constant = true;
    return c;
  }
  if (!first->move.path.empty() && first->move.path[0] < f.domain_arity()) {
    c.strict = true;
    c.total = true;
  }
  return c;
}

std::optional<std::uint32_t> point_value(const Strategy& f) {
  if (f.norm() != 1) return std::nullopt;
  auto first = f.first_move();
  if (!first || !first->move.answer) return std::nullopt;
  return first->move.value;
}

Strategy read_strategy_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Strategy::parse(ss.str());
}

void write_strategy_file(const Strategy& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << f.serialize();
}

}  // namespace pcf
