#include "pcf/denotation.hpp"

namespace pcf {

namespace {

class Interpreter {
 public:
  Interpreter(std::size_t unroll, std::uint32_t window) : unroll_(unroll), window_(window) {}

  Strategy eval(const Term& m, const TypingContext& ctx) {
    switch (m.kind()) {
      case Term::Kind::Var: {
        for (std::size_t i = ctx.size(); i-- > 0;)
          if (ctx[i].first == m.name()) return projection(types(ctx), i, window_);
        throw TypeError("unbound variable " + m.name());
      }
      case Term::Kind::Lam: {
        TypingContext inner = ctx;
        inner.emplace_back(m.name(), m.annotation());
        return curry(eval(m.body(), inner));
      }
      case Term::Kind::Num:
        if (m.value() >= window_)
          throw Error("numeral " + std::to_string(m.value()) + " outside window " + std::to_string(window_));
        return reindex(point(static_cast<std::uint32_t>(m.value()), window_), types(ctx), {});
      case Term::Kind::Omega:
        return bottom(Type::curried(types(ctx), Type::nat()), window_, ctx.size());
      case Term::Kind::Case:
        return reindex(case_strategy(m.branches()), types(ctx), {});
      case Term::Kind::Fix:
        return reindex(fix_chain(m.annotation(), unroll_, window_), types(ctx), {});
      case Term::Kind::App:
        break;
    }
    auto [head, args] = m.spine();
    Strategy acc = [&] {
      if (head.kind() != Term::Kind::Fix) return eval(head, ctx);
      // Y M at unroll k is M^k(bot): the chain F^k(bot) applied to M.
      Strategy body = eval(args.front(), ctx);
      Strategy x = bottom(Type::curried(types(ctx), head.annotation()), window_, ctx.size());
      for (std::size_t k = 0; k < unroll_; ++k) {
        Strategy next = apply(body, x, ctx);
        if (next == x) break;  // the chain has stabilized
        x = std::move(next);
      }
      args.erase(args.begin());
      return x;
    }();
    for (const auto& a : args) acc = apply(acc, eval(a, ctx), ctx);
    return acc;
  }

  Strategy apply(const Strategy& fn, const Strategy& arg, const TypingContext& ctx) {
    auto ts = types(ctx);
    Tuple fs;
    for (std::size_t i = 0; i < ts.size(); ++i) fs.push_back(projection(ts, i, window_));
    fs.push_back(arg);
    return compose_tuple(ts, fs, uncurry(fn));
  }

  // der ; [ f_i | i < k ] with f_i the i-th projection out of nat^k.
  Strategy case_strategy(std::size_t k) {
    std::vector<Type> nats(k, Type::nat());
    std::map<std::uint32_t, Strategy> family;
    for (std::size_t i = 0; i < k && i < window_; ++i)
      family.emplace(static_cast<std::uint32_t>(i), curry_all(projection(nats, i, window_)));
    return mediate(family, Type::curried(nats, Type::nat()), window_).with_domain_arity(0);
  }

 private:
  static Strategy curry_all(const Strategy& f) { return f.with_domain_arity(0); }

  static std::vector<Type> types(const TypingContext& ctx) {
    std::vector<Type> ts;
    ts.reserve(ctx.size());
    for (const auto& [x, t] : ctx) ts.push_back(t);
    return ts;
  }

  std::size_t unroll_;
  std::uint32_t window_;
};

}  // namespace

Strategy denote(const Term& m, const TypingContext& ctx, std::size_t unroll, std::uint32_t window) {
  typecheck(ctx, m);
  return Interpreter(unroll, window).eval(m, ctx);
}

Strategy fix_chain(const Type& t, std::size_t k, std::uint32_t window) {
  // F = [[ F : (T => T) => T |- lambda f. f (F f) ]]
  const Type yt = Type::arrow(Type::arrow(t, t), t);
  const Term step = Term::lam("f", Type::arrow(t, t), Term::app(Term::var("f"), Term::app(Term::var("F"), Term::var("f"))));
  Interpreter in(0, window);
  Strategy big_f = in.eval(step, {{"F", yt}});
  Strategy x = bottom(yt, window);
  for (std::size_t i = 0; i < k; ++i) {
    Strategy next = compose_tuple({}, {x}, big_f);
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

ApproxDenotation::ApproxDenotation(Term m, TypingContext ctx, std::uint32_t window)
    : term_(std::move(m)), ctx_(std::move(ctx)), type_(typecheck(ctx_, term_)), window_(window) {}

AdequacyReport adequacy_check(const Term& p, std::size_t fuel, std::size_t k_max, std::uint32_t window) {
  if (typecheck(p) != Type::nat()) throw TypeError("adequacy_check: program is not of type nat");
  AdequacyReport rep;
  rep.operational = evaluate(p, fuel);
  for (std::size_t k = 0; k <= k_max; ++k) {
    Strategy s = denote(p, {}, k, window);
    rep.denotational.push_back(s);
    if (auto x = point_value(s)) {
      rep.denoted = x;
      rep.first_k = k;
      break;
    }
    if (!s.is_bottom()) {
      rep.note = "denotation at k=" + std::to_string(k) + " is neither bottom nor a point";
      return rep;
    }
  }
  const bool op = rep.operational.converges();
  if (op && rep.denoted) {
    rep.agree = rep.operational.value == *rep.denoted;
  } else {
    rep.agree = !op && !rep.denoted;
    if (rep.agree) rep.note = "agree on divergence up to fuel " + std::to_string(fuel) + " and k " + std::to_string(k_max);
  }
  return rep;
}

}  // namespace pcf
