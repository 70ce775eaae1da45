#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcf {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// Ground type of a simple type. `Nat` is PCF's base type; `Iota` is the
/// answerless base type of the pure calculus.
enum class Base { Nat, Iota };

class Type {
 public:
  Type();  // nat
  static Type nat();
  static Type iota();
  static Type arrow(Type domain, Type codomain);
  /// T1 => ... => Tk => result
  static Type curried(const std::vector<Type>& args, Type result);

  bool is_arrow() const;
  Base base() const;  // ground type at the end of the arrow spine
  const Type& domain() const;
  const Type& codomain() const;

  /// The unique list T1..Tk with this = T1 => ... => Tk => base.
  std::vector<Type> arguments() const;
  std::size_t arity() const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

class Term {
 public:
  enum class Kind { Var, Lam, App, Num, Omega, Fix, Case };

  static Term var(std::string name);
  static Term lam(std::string name, Type annotation, Term body);
  static Term app(Term fn, Term arg);
  static Term apps(Term fn, const std::vector<Term>& args);
  static Term num(std::uint64_t n);
  static Term omega();
  static Term fix(Type at);  // Y[T] : (T => T) => T
  static Term case_of(std::size_t k);

  Kind kind() const;
  const std::string& name() const;   // Var, Lam
  const Type& annotation() const;    // Lam binder type, Y's type
  const Term& body() const;          // Lam
  const Term& fn() const;            // App
  const Term& arg() const;           // App
  std::uint64_t value() const;       // Num
  std::size_t branches() const;      // Case
  const std::vector<std::string>& free_names() const;  // sorted

  /// Splits `h a1 ... an` into h and [a1..an].
  std::pair<Term, std::vector<Term>> spine() const;

  /// Number of AST nodes; binder annotations are not counted.
  std::size_t size() const;

  std::string str() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using TypingContext = std::vector<std::pair<std::string, Type>>;

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

Type parse_type(std::string_view text);
Term parse_term(std::string_view text);
/// Reads a `.pcf` file: one term, `--` line comments allowed.
Term read_term_file(const std::string& path);

// ---------------------------------------------------------------------------
// Static semantics
// ---------------------------------------------------------------------------

Type typecheck(const TypingContext& ctx, const Term& m);
inline Type typecheck(const Term& m) { return typecheck({}, m); }

// ---------------------------------------------------------------------------
// Substitution and equality
// ---------------------------------------------------------------------------

std::vector<std::string> free_variables(const Term& m);
bool occurs_free(const std::string& x, const Term& m);

/// Capture-avoiding m[n/x].  Binders that would capture are renamed with a
/// numeric suffix.
Term substitute(const Term& m, const std::string& x, const Term& n);

bool alpha_equal(const Term& a, const Term& b);
/// A name-independent rendering: equal strings iff alpha-equal terms.
std::string canonical_form(const Term& m);

// ---------------------------------------------------------------------------
// Structural congruence
// ---------------------------------------------------------------------------

/// One leftmost-outermost step of beta, eta-contraction or Y-unfolding.
std::optional<Term> reduce_step(const Term& m);

enum class Congruence { Equivalent, NotShown };

/// Semi-decides M == N: both sides are reduced for at most `budget` steps and
/// any alpha-equal pair of reducts counts as a proof.
Congruence struct_equiv(const Term& m, const Term& n, std::size_t budget);

}  // namespace pcf
