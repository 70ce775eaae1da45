#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pcf/strategy.hpp"

namespace pcf {

/// Morphisms into a product are tuples of strategies; the empty tuple is the
/// unique map into the terminal object.
using Tuple = std::vector<Strategy>;

/// Co-Kleisli composition <f_1, ..., f_m> ; g.
///
/// Each f_j : Gamma -> B_j lives on the arena of Gamma => B_j and the first m
/// arguments of g are B_1..B_m. The result lives on Gamma => C where C is
/// what remains of g's type. Computed by running the interaction of g with
/// one copy of f_j per opening of B_j and hiding the B moves; the view
/// function of the result is read off by exploring every composite P-view.
Strategy compose_tuple(const std::vector<Type>& ctx, const Tuple& fs, const Strategy& g);

/// f ; g for f : Gamma -> B and g : B -> C (g's first argument is B).
Strategy compose(const Strategy& f, const Strategy& g);

/// Linear composition of a single-argument map, for callers working with
/// f : A -o B, g : B -o C.
inline Strategy compose_linear(const Strategy& f, const Strategy& g) { return compose(f, g); }

/// Upper bound on view-function entries produced by one composition.
inline constexpr std::size_t kComposeEntryCap = 2'000'000;

// ---------------------------------------------------------------------------
// Structural morphisms
// ---------------------------------------------------------------------------

using Path = std::vector<std::uint32_t>;

/// The copycat strategy that answers every O-move with its mirror image.
Strategy copycat(const Type& type, std::uint32_t window, std::size_t domain_arity,
                 const std::function<Path(const Path&)>& mirror);

/// pi_i : Gamma_1 x ... x Gamma_n -> Gamma_i, i.e. der ; pi_i.
Strategy projection(const std::vector<Type>& ctx, std::size_t i, std::uint32_t window);
/// id_A = der_A : !A -> A.
Strategy identity(const Type& a, std::uint32_t window);
inline Strategy dereliction(const Type& a, std::uint32_t window) { return identity(a, window); }
/// con_A : !A -> !(A x A), as the pair <id, id>.
Tuple contraction(const Type& a, std::uint32_t window);
/// weak_A : !A -> 1.
inline Tuple weakening() { return {}; }
/// f^dagger : !A -> !B. Under innocence the view function of a promotion is
/// that of f itself; composition with a promoted map is co-Kleisli
/// composition.
inline Strategy promote(const Strategy& f) { return f; }
/// Ap : (B1 => ... => Bq => R) x B1 x ... x Bq -> R.
Strategy application(const Type& fn_type, std::uint32_t window);
/// Lambda moves the last domain component into the codomain.
Strategy curry(const Strategy& f);
Strategy uncurry(const Strategy& f);
/// bot_{A,B}: the empty view function.
Strategy bottom(const Type& type, std::uint32_t window, std::size_t domain_arity = 0);
/// x-bar : 1 -> nat.
Strategy point(std::uint32_t x, std::uint32_t window);
/// !Gamma -> 1 -> B: the closed map f weakened to context Gamma.
Strategy weaken(const Strategy& f, const std::vector<Type>& ctx);
/// [ f_x | x in X ] : nat -> B for points f_x : 1 -> B; absent entries are bot.
Strategy mediate(const std::map<std::uint32_t, Strategy>& family, const Type& b, std::uint32_t window);
/// Moves f from context `from` (its domain) to context `to`: a domain move
/// at component p is re-addressed to component old_to_new[p]; codomain moves
/// shift past the new context. Components of `to` not in the image are
/// unused, so this covers weakening, exchange and occurrence splitting.
Strategy reindex(const Strategy& f, const std::vector<Type>& to, const std::vector<std::size_t>& old_to_new);

/// e_{A,B} : !(A x B) ~ !A (x) !B and e_1 : !1 ~ 1 are identities on arenas;
/// these relabel only the domain split.
Strategy exp_iso(const Strategy& f);

enum class StructuralKind {
  Identity,
  Der,
  Con,
  Weak,
  Promote,
  Pair,
  Proj,
  Curry,
  Uncurry,
  Ap,
  Bot,
  Point,
  Mediate,
  ExpIso,
  ExpIsoUnit
};

/// Arena data for `structural`. Only the fields the kind needs are read.
struct StructuralArgs {
  std::vector<Type> objects;  // the object(s) the morphism is indexed by
  Type target;                // codomain (Bot, Mediate)
  std::uint32_t window = 4;
  std::size_t index = 0;      // Proj
  std::uint32_t value = 0;    // Point
  Tuple operands;             // Promote, Pair, Curry, Uncurry, ExpIso
  std::map<std::uint32_t, Strategy> family;  // Mediate
};

/// Builds the named canonical morphism, as a tuple of components. Throws
/// pcf::Error when the kind does not match the supplied data.
Tuple structural(StructuralKind kind, const StructuralArgs& args);

}  // namespace pcf
