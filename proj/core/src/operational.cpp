#include "pcf/operational.hpp"

#include <vector>

namespace pcf {
namespace {

struct Machine {
  std::uint64_t fuel;
  std::uint64_t used = 0;

  bool spend() {
    if (used >= fuel) return false;
    ++used;
    return true;
  }

  // Returns the numeral P evaluates to, or nullopt when no derivation was
  // found (fuel ran out or the term is stuck). Pending case-splits are kept
  // on an explicit stack so deep recursions do not exhaust the C++ stack.
  std::optional<std::uint64_t> eval(Term p) {
    std::vector<std::vector<Term>> pending;
    for (;;) {
      auto [head, args] = p.spine();
      switch (head.kind()) {
        case Term::Kind::Num: {
          if (!args.empty()) return std::nullopt;
          std::uint64_t n = head.value();
          if (pending.empty()) return n;
          std::vector<Term> branches = std::move(pending.back());
          pending.pop_back();
          if (n >= branches.size()) return std::nullopt;
          p = branches[n];
          break;
        }
        case Term::Kind::Omega:
          return std::nullopt;
        case Term::Kind::Lam: {
          if (args.empty() || !spend()) return std::nullopt;
          Term reduced = substitute(head.body(), head.name(), args[0]);
          p = Term::apps(reduced, {args.begin() + 1, args.end()});
          break;
        }
        case Term::Kind::Fix: {
          if (args.empty() || !spend()) return std::nullopt;
          Term unfolded = Term::app(args[0], Term::app(head, args[0]));
          p = Term::apps(unfolded, {args.begin() + 1, args.end()});
          break;
        }
        case Term::Kind::Case: {
          std::size_t k = head.branches();
          if (args.size() != k + 1) return std::nullopt;
          if (!spend()) return std::nullopt;
          pending.emplace_back(args.begin() + 1, args.end());
          p = args[0];
          break;
        }
        case Term::Kind::Var:
        case Term::Kind::App:
          return std::nullopt;
      }
    }
  }
};

}  // namespace

Outcome evaluate(const Term& program, std::uint64_t fuel) {
  Machine m{fuel};
  auto v = m.eval(program);
  if (v) return Outcome::converged(*v, m.used);
  return Outcome::exhausted(m.used);
}

}  // namespace pcf
