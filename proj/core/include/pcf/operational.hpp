#pragma once

#include <cstdint>
#include <optional>

#include "pcf/syntax.hpp"

namespace pcf {

inline constexpr std::uint64_t kDefaultFuel = 100000;

/// Result of running a program. Stuck case-splits and omega are reported as
/// FuelExhausted: no derivation exists, just as for an infinite loop.
struct Outcome {
  enum class Kind { Converges, FuelExhausted };
  Kind kind = Kind::FuelExhausted;
  std::uint64_t value = 0;
  std::uint64_t steps = 0;

  bool converges() const { return kind == Kind::Converges; }
  static Outcome converged(std::uint64_t n, std::uint64_t steps) { return {Kind::Converges, n, steps}; }
  static Outcome exhausted(std::uint64_t steps) { return {Kind::FuelExhausted, 0, steps}; }
};

/// Big-step evaluation of a closed term of type nat. `fuel` bounds the number
/// of rule applications (beta, Y-unfolding, case selection).
Outcome evaluate(const Term& program, std::uint64_t fuel = kDefaultFuel);

}  // namespace pcf
