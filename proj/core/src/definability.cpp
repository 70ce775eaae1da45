#include "pcf/definability.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace pcf {

// ---------------------------------------------------------------------------
// EvalTree text form
// ---------------------------------------------------------------------------

namespace {

void print(const EvalTree& t, std::string& out) {
  using K = EvalTree::Kind;
  if (!t.binders.empty() && (t.kind == K::Leaf || t.kind == K::Node)) {
    out += "\\";
    for (std::size_t i = 0; i < t.binders.size(); ++i) {
      if (i) out += ", ";
      out += t.binders[i].first + ":" + t.binders[i].second.str();
    }
    out += ". ";
  }
  switch (t.kind) {
    case K::Bottom:
      out += "bot";
      return;
    case K::Cut:
      out += "cut";
      return;
    case K::Leaf:
      out += std::to_string(t.value);
      return;
    case K::Node:
      break;
  }
  out += "#" + std::to_string(t.head + 1) + " [";
  for (std::size_t j = 0; j < t.args.size(); ++j) {
    if (j) out += "; ";
    print(t.args[j], out);
  }
  out += "] {";
  bool first = true;
  for (const auto& [x, b] : t.branches) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x) + ": ";
    print(b, out);
  }
  out += "}";
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  EvalTree parse_all() {
    EvalTree t = tree();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("tree text at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  EvalTree tree() {
    std::vector<std::pair<std::string, Type>> binders;
    if (eat('\\')) {
      for (;;) {
        skip();
        std::size_t colon = s_.find(':', pos_);
        if (colon == std::string::npos) fail("binder without type");
        std::string name = s_.substr(pos_, colon - pos_);
        pos_ = colon + 1;
        int depth = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size()) {
          char c = s_[pos_];
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if (depth == 0 && (c == ',' || c == '.')) break;
          ++pos_;
        }
        binders.emplace_back(name, parse_type(s_.substr(start, pos_ - start)));
        if (eat('.')) break;
        expect(',');
      }
    }
    EvalTree t = body();
    if (!binders.empty() && t.kind != EvalTree::Kind::Leaf && t.kind != EvalTree::Kind::Node)
      fail("binders on bot or cut");
    t.binders = std::move(binders);
    return t;
  }

  EvalTree body() {
    if (word("bot")) return EvalTree::bottom();
    if (word("cut")) return EvalTree::cut();
    if (eat('#')) {
      EvalTree t;
      t.kind = EvalTree::Kind::Node;
      auto h = number();
      if (h == 0) fail("head indices start at 1");
      t.head = h - 1;
      expect('[');
      if (!eat(']')) {
        do t.args.push_back(tree());
        while (eat(';'));
        expect(']');
      }
      expect('{');
      if (!eat('}')) {
        do {
          auto x = static_cast<std::uint32_t>(number());
          expect(':');
          t.branches.emplace(x, tree());
        } while (eat(','));
        expect('}');
      }
      return t;
    }
    EvalTree t;
    t.kind = EvalTree::Kind::Leaf;
    t.value = static_cast<std::uint32_t>(number());
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string EvalTree::str() const {
  std::string out;
  print(*this, out);
  return out;
}

EvalTree EvalTree::parse(const std::string& text) { return TreeParser(text).parse_all(); }

std::size_t EvalTree::depth() const {
  if (kind != Kind::Node) return 0;
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  for (const auto& [x, b] : branches) d = std::max(d, b.depth());
  return d + 1;
}

bool operator==(const EvalTree& a, const EvalTree& b) {
  if (a.kind != b.kind || a.binders.size() != b.binders.size()) return false;
  for (std::size_t i = 0; i < a.binders.size(); ++i)
    if (a.binders[i].second != b.binders[i].second) return false;
  switch (a.kind) {
    case EvalTree::Kind::Bottom:
    case EvalTree::Kind::Cut:
      return true;
    case EvalTree::Kind::Leaf:
      return a.value == b.value;
    case EvalTree::Kind::Node:
      return a.head == b.head && a.args == b.args && a.branches == b.branches;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Trees and strategies
// ---------------------------------------------------------------------------

namespace {

std::string level_name(std::size_t level) { return "x" + std::to_string(level + 1); }

Type base_of(const Type& t) { return t.base() == Base::Nat ? Type::nat() : Type::iota(); }

// f lives on Outer => T with domain arity |Outer|.
EvalTree tree_at(const Strategy& f, std::size_t depth) {
  const std::size_t outer = f.domain_arity();
  const auto own = f.codomain().arguments();
  Decomposition d = decompose(f);
  EvalTree t;
  if (d.kind == Decomposition::Kind::Bot) return t;
  for (std::size_t i = 0; i < own.size(); ++i) t.binders.emplace_back(level_name(outer + i), own[i]);
  if (d.kind == Decomposition::Kind::Const) {
    t.kind = EvalTree::Kind::Leaf;
    t.value = d.value;
    return t;
  }
  if (depth == 0) return EvalTree::cut();
  t.kind = EvalTree::Kind::Node;
  t.head = d.head;
  for (const auto& g : d.args) t.args.push_back(tree_at(g, depth - 1));
  for (const auto& [x, h] : d.branches) {
    EvalTree b = tree_at(h, depth - 1);
    if (b.kind != EvalTree::Kind::Bottom) t.branches.emplace(x, std::move(b));
  }
  return t;
}

Strategy of_tree(const EvalTree& t, std::vector<Type> ctx, const Type& type, std::uint32_t window) {
  const std::size_t outer = ctx.size();
  const auto own = type.arguments();
  if (t.kind != EvalTree::Kind::Bottom && t.binders.size() != own.size())
    throw Error("strategy_of_tree: binder count does not match " + type.str());
  ctx.insert(ctx.end(), own.begin(), own.end());
  const Type full = Type::curried(ctx, base_of(type));
  Decomposition d;
  switch (t.kind) {
    case EvalTree::Kind::Cut:
      throw Error("strategy_of_tree: tree was cut");
    case EvalTree::Kind::Bottom:
      break;
    case EvalTree::Kind::Leaf:
      d.kind = Decomposition::Kind::Const;
      d.value = t.value;
      break;
    case EvalTree::Kind::Node: {
      if (t.head >= ctx.size()) throw Error("strategy_of_tree: head index out of scope");
      d.kind = Decomposition::Kind::Total;
      d.head = t.head;
      auto bargs = ctx[t.head].arguments();
      if (bargs.size() != t.args.size()) throw Error("strategy_of_tree: wrong number of head arguments");
      for (std::size_t j = 0; j < bargs.size(); ++j) d.args.push_back(of_tree(t.args[j], ctx, bargs[j], window));
      for (const auto& [x, b] : t.branches)
        if (b.kind != EvalTree::Kind::Bottom) d.branches.emplace(x, of_tree(b, ctx, base_of(type), window));
      break;
    }
  }
  return recompose(d, full, window).with_domain_arity(outer);
}

}  // namespace

EvalTree tree_of_strategy(const Strategy& f, std::size_t depth_bound) { return tree_at(f, depth_bound); }

Strategy strategy_of_tree(const EvalTree& t, const Type& type, std::uint32_t window) {
  return of_tree(t, {}, type, window);
}

// ---------------------------------------------------------------------------
// Syntactic oracle
// ---------------------------------------------------------------------------

namespace {

class TermTrees {
 public:
  explicit TermTrees(const TreeOptions& o) : o_(o) {}

  // Tree of `m : t` under the scope, eta-expanding t's arguments.
  EvalTree build(const Term& m, const Type& t, std::size_t depth) {
    std::vector<std::pair<std::string, Type>> binders;
    std::vector<Term> vars;
    for (const auto& a : t.arguments()) {
      std::string name = "%" + std::to_string(scope_.size());
      binders.emplace_back(level_name(scope_.size()), a);
      scope_.emplace_back(name, a);
      vars.push_back(Term::var(name));
    }
    EvalTree r = hnf(Term::apps(m, vars), {}, depth);
    scope_.resize(scope_.size() - binders.size());
    if (r.kind == EvalTree::Kind::Leaf || r.kind == EvalTree::Kind::Node) r.binders = std::move(binders);
    return r;
  }

 private:
  Term approximant_of_fix(const Type& t) {
    Term body = Term::omega();
    auto args = t.arguments();
    for (std::size_t i = args.size(); i-- > 0;) body = Term::lam("%y" + std::to_string(i), args[i], body);
    const std::string f = "%f";
    for (std::size_t i = 0; i < *o_.unroll; ++i) body = Term::app(Term::var(f), body);
    return Term::lam(f, Type::arrow(t, t), body);
  }

  EvalTree hnf(Term m, std::vector<std::vector<Term>> conts, std::size_t depth) {
    for (std::size_t steps = 0; steps < o_.steps; ++steps) {
      auto [h, args] = m.spine();
      switch (h.kind()) {
        case Term::Kind::Lam:
          if (args.empty()) throw Error("tree_of_term: abstraction at ground type");
          m = Term::apps(substitute(h.body(), h.name(), args[0]), {args.begin() + 1, args.end()});
          continue;
        case Term::Kind::Fix:
          if (o_.unroll) {
            m = Term::apps(approximant_of_fix(h.annotation()), args);
            continue;
          }
          if (args.empty()) throw Error("tree_of_term: unapplied Y at ground type");
          m = Term::apps(Term::app(args[0], Term::app(h, args[0])), {args.begin() + 1, args.end()});
          continue;
        case Term::Kind::Omega:
          return EvalTree::bottom();
        case Term::Kind::Num: {
          if (!args.empty()) throw Error("tree_of_term: numeral applied");
          if (conts.empty()) {
            EvalTree t;
            t.kind = EvalTree::Kind::Leaf;
            t.value = static_cast<std::uint32_t>(h.value());
            return t;
          }
          auto branches = std::move(conts.back());
          conts.pop_back();
          if (h.value() >= branches.size()) return EvalTree::bottom();
          m = branches[h.value()];
          continue;
        }
        case Term::Kind::Case:
          if (args.size() != h.branches() + 1) throw Error("tree_of_term: case not fully applied");
          conts.emplace_back(args.begin() + 1, args.end());
          m = args[0];
          continue;
        case Term::Kind::Var:
          return node(h.name(), args, conts, depth);
        case Term::Kind::App:
          break;
      }
      throw Error("tree_of_term: malformed spine");
    }
    return EvalTree::bottom();
  }

  EvalTree node(const std::string& x, const std::vector<Term>& args, const std::vector<std::vector<Term>>& conts,
                std::size_t depth) {
    std::size_t level = scope_.size();
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].first == x) {
        level = i;
        break;
      }
    if (level == scope_.size()) throw Error("tree_of_term: free variable " + x);
    if (depth == 0) return EvalTree::cut();
    const Type ht = scope_[level].second;
    EvalTree t;
    t.kind = EvalTree::Kind::Node;
    t.head = level;
    auto bargs = ht.arguments();
    if (bargs.size() != args.size()) throw Error("tree_of_term: head variable not fully applied");
    for (std::size_t j = 0; j < args.size(); ++j) t.args.push_back(build(args[j], bargs[j], depth - 1));
    const std::uint32_t answers = ht.base() == Base::Nat ? o_.window : 0;
    for (std::uint32_t v = 0; v < answers; ++v) {
      EvalTree b = hnf(Term::num(v), conts, depth - 1);
      if (b.kind != EvalTree::Kind::Bottom) t.branches.emplace(v, std::move(b));
    }
    return t;
  }

  const TreeOptions& o_;
  std::vector<std::pair<std::string, Type>> scope_;
};

}  // namespace

EvalTree tree_of_term(const Term& m, const TreeOptions& opts) {
  Type t = typecheck(m);
  return TermTrees(opts).build(m, t, opts.depth);
}

// ---------------------------------------------------------------------------
// Approximants and extraction
// ---------------------------------------------------------------------------

Strategy approximant(const Strategy& f, std::size_t k) {
  const Type full = f.type();
  if (k == 0) return bottom(full, f.window(), f.domain_arity());
  Decomposition d = decompose(f);
  if (d.kind != Decomposition::Kind::Total) return f;
  Decomposition p = d;
  p.args.clear();
  for (const auto& g : d.args) p.args.push_back(approximant(g, k - 1));
  p.branches.clear();
  for (const auto& [n, g] : d.branches) {
    if (n >= k - 1) continue;
    Strategy h = approximant(g, k - 1);
    if (!h.is_bottom()) p.branches.emplace(n, h);
  }
  return recompose(p, full, f.window()).with_domain_arity(f.domain_arity());
}

namespace {

// Term for f : Outer => T with domain arity |Outer|, whose binders are named
// by level. `k` is the approximation level, or nullopt for exact extraction.
Term extract_at(const Strategy& f, std::optional<std::size_t> k) {
  const std::size_t outer = f.domain_arity();
  const auto own = f.codomain().arguments();
  auto wrap = [&](Term body) {
    for (std::size_t i = own.size(); i-- > 0;) body = Term::lam(level_name(outer + i), own[i], body);
    return body;
  };
  if (k && *k == 0) return wrap(Term::omega());
  Decomposition d = decompose(f);
  switch (d.kind) {
    case Decomposition::Kind::Bot:
      return wrap(Term::omega());
    case Decomposition::Kind::Const:
      return wrap(Term::num(d.value));
    case Decomposition::Kind::Total:
      break;
  }
  std::optional<std::size_t> next;
  if (k) next.emplace(*k - 1);
  // Arguments are closed over the whole scope, then applied to it: inline
  // that application by reading the argument's own binders off directly.
  std::vector<Term> call_args;
  for (const auto& g : d.args) call_args.push_back(extract_at(g, next));
  Term call = Term::apps(Term::var(level_name(d.head)), call_args);
  if (f.type().base() == Base::Iota) return wrap(call);
  std::size_t l = 0;
  if (k) {
    l = *k - 1;
  } else if (!d.branches.empty()) {
    l = d.branches.rbegin()->first + 1;
  }
  std::vector<Term> cases{call};
  for (std::size_t n = 0; n < l; ++n) {
    auto it = d.branches.find(static_cast<std::uint32_t>(n));
    cases.push_back(it == d.branches.end() ? Term::omega() : extract_at(it->second, next));
  }
  return wrap(Term::apps(Term::case_of(l), cases));
}

}  // namespace

// Closed: a morphism out of Gamma is read as the point of Gamma => B.
Term extract_term(const Strategy& f) { return extract_at(f.with_domain_arity(0), std::nullopt); }

Term extract_term_pk(const Strategy& f, std::size_t k) { return extract_at(f.with_domain_arity(0), k); }

}  // namespace pcf
