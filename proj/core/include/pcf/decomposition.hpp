#pragma once

#include <functional>
#include <string>

#include "pcf/compose.hpp"

namespace pcf {

/// Canonical form of f : !(A_1 x ... x A_k) -> base.
///
/// In the Total case the head argument A_i = B_1 => ... => B_q => base is
/// called with arguments g_j : Gamma -> B_j (strategies on Gamma => B_j) and
/// continues with h_x : Gamma -> base when it returns x. Absent branches
/// are bot.
struct Decomposition {
  enum class Kind { Bot, Const, Total };
  Kind kind = Kind::Bot;
  std::uint32_t value = 0;  // Const
  std::size_t head = 0;     // Total, 0-based
  std::vector<Strategy> args;
  std::map<std::uint32_t, Strategy> branches;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The whole domain of f's type is taken as the context Gamma.
Decomposition decompose(const Strategy& f);

/// Com_i<g_1..g_q><h_x>, built by composing structural morphisms; Bot and
/// Const give bot and the weakened point. `type` is Gamma => base.
Strategy recompose(const Decomposition& d, const Type& type, std::uint32_t window);

// ---------------------------------------------------------------------------
// Occurrence splitting and linear factorizations used by the axiom suites
// ---------------------------------------------------------------------------

/// f : !Gamma -> B strict, first move in component i. Moves of the first
/// opened copy of Gamma stay at components 0..k-1, every later copy moves to
/// k..2k-1. The result lives on Gamma => Gamma => B (the first Gamma linear).
Strategy split_head(const Strategy& f);

/// h on Gamma => Gamma => B back to !Gamma -> B by contraction.
Strategy merge_head(const Strategy& h, std::size_t k);

/// Linear head use in the split form: only the root response touches
/// components 0..k-1 directly.
bool head_linear(const Strategy& h, std::size_t k);

/// Factor f' : Gamma (x) !Gamma -o base through pi_i: f_i on
/// A_i => Gamma => base. nullopt when f' does not factor through pi_i.
std::optional<Strategy> factor_projection(const Strategy& split, std::size_t k, std::size_t i);
/// pi_i ; f_i in the split form.
Strategy unfactor_projection(const Strategy& fi, const std::vector<Type>& ctx, std::size_t i);

/// f_i : (B_1 x .. x B_q -o base) -o (!C -o base) total, as (g, h) with
/// g_j : C -> B_j and h : base -o (!C -o base). nullopt unless f_i's first
/// move calls the linear argument.
struct LinearPair {
  std::vector<Strategy> args;
  Strategy cont;
};
std::optional<LinearPair> split_linear(const Strategy& fi);
/// (g ; -) -o h followed by contraction on C.
Strategy join_linear(const LinearPair& p, const Type& a, const std::vector<Type>& c, std::uint32_t window);

// ---------------------------------------------------------------------------
// Axiom suites
// ---------------------------------------------------------------------------

enum class Axiom { A1, A2, A3, A4, A5 };
std::string axiom_name(Axiom a);
Axiom parse_axiom(const std::string& name);

struct CheckBounds {
  std::uint32_t window = 3;
  std::size_t norm_bound = 5;
};

struct CheckFailure {
  std::size_t index;
  std::string inputs;   // serialized generated inputs
  std::string witness;  // what went wrong
};

struct CheckReport {
  Axiom axiom = Axiom::A1;
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Called once per case, in index order; `witness` is empty on a pass.
using CaseObserver = std::function<void(const CheckFailure& c, bool passed)>;

/// Runs `cases` generated instances of the axiom (plus its fixed special
/// cases). Case i draws from a generator seeded with (seed, i).
CheckReport check_axiom(Axiom which, std::size_t cases, std::uint64_t seed, const CheckBounds& bounds,
                        const CaseObserver& observe = {});

}  // namespace pcf
