#include "pcf/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pcf {

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Type
// ---------------------------------------------------------------------------

struct Type::Node {
  bool arrow = false;
  Base base = Base::Nat;
  std::vector<Type> parts;  // {domain, codomain} for arrows
};

Type Type::nat() {
  static const Type t(std::make_shared<const Node>(Node{false, Base::Nat, {}}));
  return t;
}
Type Type::iota() {
  static const Type t(std::make_shared<const Node>(Node{false, Base::Iota, {}}));
  return t;
}
Type::Type() : node_(nat().node_) {}

Type Type::arrow(Type domain, Type codomain) {
  auto node = std::make_shared<Node>();
  node->arrow = true;
  node->base = codomain.base();
  node->parts = {std::move(domain), std::move(codomain)};
  return Type(std::move(node));
}

Type Type::curried(const std::vector<Type>& args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, std::move(result));
  return result;
}

bool Type::is_arrow() const { return node_->arrow; }
Base Type::base() const { return node_->base; }

const Type& Type::domain() const {
  if (!node_->arrow) throw TypeError("domain of a ground type");
  return node_->parts[0];
}

const Type& Type::codomain() const {
  if (!node_->arrow) throw TypeError("codomain of a ground type");
  return node_->parts[1];
}

std::vector<Type> Type::arguments() const {
  std::vector<Type> out;
  const Type* t = this;
  while (t->is_arrow()) {
    out.push_back(t->domain());
    t = &t->codomain();
  }
  return out;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) ++n;
  return n;
}

std::string Type::str() const {
  if (!is_arrow()) return base() == Base::Nat ? "nat" : "i";
  std::string d = domain().str();
  if (domain().is_arrow()) d = "(" + d + ")";
  return d + "->" + codomain().str();
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_arrow() != b.is_arrow()) return false;
  if (!a.is_arrow()) return a.base() == b.base();
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

bool operator<(const Type& a, const Type& b) { return a.str() < b.str(); }

// ---------------------------------------------------------------------------
// Term
// ---------------------------------------------------------------------------

struct Term::Node {
  Kind kind;
  std::string name;
  Type type;
  std::vector<Term> kids;
  std::uint64_t value = 0;
  // Sorted free variables, fixed at construction so that substitution into
  // shared subterms never walks them again.
  std::vector<std::string> free;
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->free = {n->name};
  return Term(std::move(n));
}

Term Term::lam(std::string name, Type annotation, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::move(name);
  n->type = std::move(annotation);
  n->free = body.node_->free;
  std::erase(n->free, n->name);
  n->kids.push_back(std::move(body));
  return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  std::set_union(fn.node_->free.begin(), fn.node_->free.end(), arg.node_->free.begin(), arg.node_->free.end(),
                 std::back_inserter(n->free));
  n->kids.push_back(std::move(fn));
  n->kids.push_back(std::move(arg));
  return Term(std::move(n));
}

Term Term::apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term Term::num(std::uint64_t v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Num;
  n->value = v;
  return Term(std::move(n));
}

Term Term::omega() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Omega;
    return Term(std::move(n));
  }();
  return t;
}

Term Term::fix(Type at) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Fix;
  n->type = std::move(at);
  return Term(std::move(n));
}

Term Term::case_of(std::size_t k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Case;
  n->value = k;
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::annotation() const { return node_->type; }
const Term& Term::body() const { return node_->kids.at(0); }
const Term& Term::fn() const { return node_->kids.at(0); }
const Term& Term::arg() const { return node_->kids.at(1); }
std::uint64_t Term::value() const { return node_->value; }
std::size_t Term::branches() const { return static_cast<std::size_t>(node_->value); }
const std::vector<std::string>& Term::free_names() const { return node_->free; }

std::pair<Term, std::vector<Term>> Term::spine() const {
  std::vector<Term> args;
  Term head = *this;
  while (head.kind() == Kind::App) {
    args.push_back(head.arg());
    head = Term(head.fn());
  }
  std::reverse(args.begin(), args.end());
  return {head, args};
}

std::size_t Term::size() const {
  switch (kind()) {
    case Kind::Lam:
      return 1 + body().size();
    case Kind::App:
      return 1 + fn().size() + arg().size();
    default:
      return 1;
  }
}

namespace {

void print_term(const Term& t, std::ostream& os, bool in_fn, bool in_arg) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << t.name();
      return;
    case Term::Kind::Num:
      os << t.value();
      return;
    case Term::Kind::Omega:
      os << "omega";
      return;
    case Term::Kind::Fix:
      os << "Y[" << t.annotation().str() << "]";
      return;
    case Term::Kind::Case:
      os << "case[" << t.branches() << "]";
      return;
    case Term::Kind::Lam: {
      bool parens = in_fn || in_arg;
      if (parens) os << "(";
      os << "\\" << t.name() << ":" << t.annotation().str() << ". ";
      print_term(t.body(), os, false, false);
      if (parens) os << ")";
      return;
    }
    case Term::Kind::App: {
      if (in_arg) os << "(";
      print_term(t.fn(), os, true, false);
      os << " ";
      print_term(t.arg(), os, false, true);
      if (in_arg) os << ")";
      return;
    }
  }
}

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print_term(*this, os, false, false);
  return os.str();
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Number, Lambda, Colon, Dot, LParen, RParen, LBrack, RBrack, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      std::size_t l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", l, c});
        return out;
      }
      char ch = src_[pos_];
      if (ch == '\\') {
        advance(1);
        out.push_back({Tok::Lambda, "\\", l, c});
      } else if (starts_with("\xCE\xBB")) {  // λ
        advance(2);
        out.push_back({Tok::Lambda, "\\", l, c});
      } else if (starts_with("->") || starts_with("=>")) {
        advance(2);
        out.push_back({Tok::Arrow, "->", l, c});
      } else if (starts_with("\xE2\x87\x92") || starts_with("\xE2\x86\x92")) {  // ⇒ →
        advance(3);
        out.push_back({Tok::Arrow, "->", l, c});
      } else if (ch == ':') {
        advance(1);
        out.push_back({Tok::Colon, ":", l, c});
      } else if (ch == '.') {
        advance(1);
        out.push_back({Tok::Dot, ".", l, c});
      } else if (ch == '(') {
        advance(1);
        out.push_back({Tok::LParen, "(", l, c});
      } else if (ch == ')') {
        advance(1);
        out.push_back({Tok::RParen, ")", l, c});
      } else if (ch == '[') {
        advance(1);
        out.push_back({Tok::LBrack, "[", l, c});
      } else if (ch == ']') {
        advance(1);
        out.push_back({Tok::RBrack, "]", l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          s += src_[pos_];
          advance(1);
        }
        out.push_back({Tok::Number, s, l, c});
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string s;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                src_[pos_] == '\'')) {
          s += src_[pos_];
          advance(1);
        }
        out.push_back({Tok::Ident, s, l, c});
      } else {
        throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
      }
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
      if (starts_with("--")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
        continue;
      }
      return;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Type whole_type() {
    Type t = type();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + (peek().kind == Tok::End ? " at end of input" : " near '" + peek().text + "'"),
                      peek().line, peek().column);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }

  bool is_keyword(const std::string& s) const {
    return s == "omega" || s == "Y" || s == "case" || s == "nat" || s == "iota";
  }

  Type type() {
    Type dom = type_atom();
    if (peek().kind == Tok::Arrow) {
      next();
      return Type::arrow(dom, type());
    }
    return dom;
  }

  Type type_atom() {
    if (peek().kind == Tok::LParen) {
      next();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (peek().kind == Tok::Ident) {
      const auto& s = peek().text;
      if (s == "nat") {
        next();
        return Type::nat();
      }
      if (s == "i" || s == "iota") {
        next();
        return Type::iota();
      }
    }
    fail("expected a type");
  }

  std::size_t number() {
    const Token& t = expect(Tok::Number, "a numeral");
    try {
      return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
      throw SyntaxError("numeral out of range", t.line, t.column);
    }
  }

  Term term() {
    if (peek().kind == Tok::Lambda) return lambda();
    Term head = atom();
    for (;;) {
      if (peek().kind == Tok::Lambda) return Term::app(head, lambda());
      if (!starts_atom()) return head;
      head = Term::app(head, atom());
    }
  }

  Term lambda() {
    expect(Tok::Lambda, "'\\'");
    const Token& id = expect(Tok::Ident, "a binder name");
    if (is_keyword(id.text)) throw SyntaxError("keyword used as binder", id.line, id.column);
    expect(Tok::Colon, "':'");
    Type t = type();
    expect(Tok::Dot, "'.'");
    return Term::lam(id.text, t, term());
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Number:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return Term::num(number());
      case Tok::LParen: {
        next();
        Term m = term();
        expect(Tok::RParen, "')'");
        return m;
      }
      case Tok::Ident: {
        next();
        if (t.text == "omega") return Term::omega();
        if (t.text == "Y") {
          expect(Tok::LBrack, "'['");
          Type at = type();
          expect(Tok::RBrack, "']'");
          return Term::fix(at);
        }
        if (t.text == "case") {
          expect(Tok::LBrack, "'['");
          std::size_t k = number();
          expect(Tok::RBrack, "']'");
          return Term::case_of(k);
        }
        if (t.text == "nat" || t.text == "iota")
          throw SyntaxError("type name used as a term", t.line, t.column);
        return Term::var(t.text);
      }
      default:
        fail("expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Type parse_type(std::string_view text) { return Parser(text).whole_type(); }
Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

Term read_term_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_term(ss.str());
}

// ---------------------------------------------------------------------------
// Typechecking
// ---------------------------------------------------------------------------

namespace {

Type case_type(std::size_t k) {
  std::vector<Type> args(k + 1, Type::nat());
  return Type::curried(args, Type::nat());
}

Type check(TypingContext& ctx, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->first == m.name()) return it->second;
      throw TypeError("unbound variable " + m.name());
    }
    case Term::Kind::Num:
    case Term::Kind::Omega:
      return Type::nat();
    case Term::Kind::Fix: {
      const Type& t = m.annotation();
      return Type::arrow(Type::arrow(t, t), t);
    }
    case Term::Kind::Case:
      return case_type(m.branches());
    case Term::Kind::Lam: {
      ctx.emplace_back(m.name(), m.annotation());
      Type body;
      try {
        body = check(ctx, m.body());
      } catch (...) {
        ctx.pop_back();
        throw;
      }
      ctx.pop_back();
      return Type::arrow(m.annotation(), body);
    }
    case Term::Kind::App: {
      Type f = check(ctx, m.fn());
      Type a = check(ctx, m.arg());
      if (!f.is_arrow()) {
        if (m.spine().first.kind() == Term::Kind::Case)
          throw TypeError("case arity mismatch in " + m.str());
        throw TypeError("application of non-function " + m.fn().str() + " : " + f.str());
      }
      if (f.domain() != a)
        throw TypeError("application mismatch: " + m.fn().str() + " expects " + f.domain().str() +
                        ", got " + a.str());
      return f.codomain();
    }
  }
  throw TypeError("unknown term");
}

}  // namespace

Type typecheck(const TypingContext& ctx, const Term& m) {
  TypingContext scratch = ctx;
  return check(scratch, m);
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

namespace {

void collect_names(const Term& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case Term::Kind::Var:
      out.insert(m.name());
      return;
    case Term::Kind::Lam:
      out.insert(m.name());
      collect_names(m.body(), out);
      return;
    case Term::Kind::App:
      collect_names(m.fn(), out);
      collect_names(m.arg(), out);
      return;
    default:
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  auto us = stem.rfind('_');
  if (us != std::string::npos && us + 1 < stem.size() &&
      std::all_of(stem.begin() + static_cast<std::ptrdiff_t>(us) + 1, stem.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    stem = stem.substr(0, us);
  for (std::size_t i = 1;; ++i) {
    std::string cand = stem + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// Free variables of the substituted term, computed only when a binder could
// capture: call-by-name arguments are often large shared DAGs.
class LazyFree {
 public:
  explicit LazyFree(const Term& n) : n_(n) {}
  explicit LazyFree(std::set<std::string> s) : n_(std::nullopt), fv_(std::move(s)) {}
  const std::set<std::string>& get() {
    if (!fv_) {
      auto v = free_variables(*n_);
      fv_.emplace(v.begin(), v.end());
    }
    return *fv_;
  }

 private:
  std::optional<Term> n_;
  std::optional<std::set<std::string>> fv_;
};

// Untouched subterms are returned as the same node, so shared arguments
// stay shared and are never walked.
Term subst_rec(const Term& m, const std::string& x, const Term& n, LazyFree& fv_n) {
  if (!occurs_free(x, m)) return m;
  switch (m.kind()) {
    case Term::Kind::Var:
      return m.name() == x ? n : m;
    case Term::Kind::App: {
      Term f = subst_rec(m.fn(), x, n, fv_n);
      Term a = subst_rec(m.arg(), x, n, fv_n);
      if (f.same_node(m.fn()) && a.same_node(m.arg())) return m;
      return Term::app(f, a);
    }
    case Term::Kind::Lam: {
      if (fv_n.get().count(m.name())) {
        std::set<std::string> avoid = fv_n.get();
        collect_names(m.body(), avoid);
        avoid.insert(x);
        std::string y = fresh_name(m.name(), avoid);
        LazyFree just_y(std::set<std::string>{y});
        Term renamed = subst_rec(m.body(), m.name(), Term::var(y), just_y);
        return Term::lam(y, m.annotation(), subst_rec(renamed, x, n, fv_n));
      }
      return Term::lam(m.name(), m.annotation(), subst_rec(m.body(), x, n, fv_n));
    }
    default:
      return m;
  }
}

}  // namespace

std::vector<std::string> free_variables(const Term& m) { return m.free_names(); }

bool occurs_free(const std::string& x, const Term& m) {
  const auto& fv = m.free_names();
  return std::binary_search(fv.begin(), fv.end(), x);
}

Term substitute(const Term& m, const std::string& x, const Term& n) {
  LazyFree fv(n);
  return subst_rec(m, x, n, fv);
}

namespace {

void canon(const Term& m, std::vector<std::string>& bound, std::ostream& os) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      for (std::size_t i = bound.size(); i-- > 0;) {
        if (bound[i] == m.name()) {
          os << "#" << (bound.size() - 1 - i);
          return;
        }
      }
      os << m.name();
      return;
    }
    case Term::Kind::Lam:
      os << "(\\:" << m.annotation().str() << ".";
      bound.push_back(m.name());
      canon(m.body(), bound, os);
      bound.pop_back();
      os << ")";
      return;
    case Term::Kind::App:
      os << "(";
      canon(m.fn(), bound, os);
      os << " ";
      canon(m.arg(), bound, os);
      os << ")";
      return;
    default:
      os << m.str();
      return;
  }
}

}  // namespace

std::string canonical_form(const Term& m) {
  std::vector<std::string> bound;
  std::ostringstream os;
  canon(m, bound, os);
  return os.str();
}

bool alpha_equal(const Term& a, const Term& b) { return canonical_form(a) == canonical_form(b); }

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

std::optional<Term> reduce_step(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: {
      if (m.fn().kind() == Term::Kind::Lam) return substitute(m.fn().body(), m.fn().name(), m.arg());
      if (m.fn().kind() == Term::Kind::Fix) return Term::app(m.arg(), m);
      if (auto f = reduce_step(m.fn())) return Term::app(*f, m.arg());
      if (auto a = reduce_step(m.arg())) return Term::app(m.fn(), *a);
      return std::nullopt;
    }
    case Term::Kind::Lam: {
      const Term& b = m.body();
      if (b.kind() == Term::Kind::App && b.arg().kind() == Term::Kind::Var && b.arg().name() == m.name() &&
          !occurs_free(m.name(), b.fn()))
        return b.fn();
      if (auto r = reduce_step(b)) return Term::lam(m.name(), m.annotation(), *r);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Congruence struct_equiv(const Term& m, const Term& n, std::size_t budget) {
  std::unordered_set<std::string> seen;
  Term cur = m;
  seen.insert(canonical_form(cur));
  for (std::size_t i = 0; i < budget; ++i) {
    auto r = reduce_step(cur);
    if (!r) break;
    cur = *r;
    seen.insert(canonical_form(cur));
  }
  cur = n;
  if (seen.count(canonical_form(cur))) return Congruence::Equivalent;
  for (std::size_t i = 0; i < budget; ++i) {
    auto r = reduce_step(cur);
    if (!r) break;
    cur = *r;
    if (seen.count(canonical_form(cur))) return Congruence::Equivalent;
  }
  return Congruence::NotShown;
}

}  // namespace pcf
