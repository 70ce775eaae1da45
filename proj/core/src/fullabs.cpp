#include "pcf/fullabs.hpp"

#include "pcf/generate.hpp"

namespace pcf {

std::string Verdict::str() const {
  if (!separated) return "related-up-to-bounds (" + std::to_string(tests_tried) + " tests)";
  std::string s = "separated at " + std::to_string(value) + " after " + std::to_string(tests_tried) + " tests";
  if (witness_term) s += " by " + witness_term->str();
  return s;
}

std::vector<Strategy> enumerate_tests(const Type& t, std::size_t norm_bound, std::uint32_t window) {
  return enumerate_strategies(Type::arrow(t, Type::nat()), window, 1, norm_bound);
}

Verdict intrinsic_leq(const Strategy& f, const Strategy& g, std::size_t norm_bound, std::uint32_t window) {
  if (f.type() != g.type() || f.domain_arity() != 0 || g.domain_arity() != 0)
    throw TypeError("intrinsic_leq: arguments are not points of the same type");
  Verdict v;
  for (const Strategy& alpha : enumerate_tests(f.type(), norm_bound, window)) {
    ++v.tests_tried;
    auto n = point_value(compose(f, alpha));
    if (!n) continue;
    auto m = point_value(compose(g, alpha));
    if (m != n) {
      v.separated = true;
      v.witness_strategy = alpha;
      v.value = *n;
      return v;
    }
  }
  return v;
}

Verdict obs_compare(const Term& m, const Term& n, std::size_t norm_bound, std::uint64_t fuel, std::uint32_t window) {
  Type t = typecheck(m);
  if (typecheck(n) != t) throw TypeError("obs_compare: terms of different types");
  Verdict v;
  for (const Strategy& alpha : enumerate_tests(t, norm_bound, window)) {
    ++v.tests_tried;
    Term p = extract_term(alpha);
    auto left = evaluate(Term::app(p, m), fuel);
    if (!left.converges()) continue;
    auto right = evaluate(Term::app(p, n), fuel);
    if (!right.converges() || right.value != left.value) {
      v.separated = true;
      v.witness_term = p;
      v.witness_strategy = alpha;
      v.value = static_cast<std::uint32_t>(left.value);
      return v;
    }
  }
  return v;
}

}  // namespace pcf
