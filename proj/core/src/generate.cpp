#include "pcf/generate.hpp"

#include <algorithm>

#include "pcf/denotation.hpp"

namespace pcf {

std::vector<JMove> legal_responses(const Arena& arena, const View& v) {
  std::vector<JMove> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Move& m = v[j].move;
    if (m.answer || m.polarity() != Polarity::Opponent) continue;
    auto t = arena.node(m.path);
    if (!t) continue;
    auto k = static_cast<std::uint32_t>(t->arity());
    for (std::uint32_t c = 0; c < k; ++c) {
      auto p = m.path;
      p.push_back(c);
      out.push_back(JMove{Move::question(std::move(p)), static_cast<std::int32_t>(j)});
    }
  }
  auto pending = pending_question(v);
  if (pending >= 0) {
    const Move& q = v[static_cast<std::size_t>(pending)].move;
    if (q.polarity() == Polarity::Opponent)
      for (std::uint32_t x = 0; x < arena.answers_at(q.path); ++x)
        out.push_back(JMove{Move::answer_to(q.path, x), pending});
  }
  return out;
}

std::vector<View> o_extensions(const Arena& arena, const View& v, const JMove& r) {
  std::vector<View> out;
  auto t = static_cast<std::int32_t>(v.size());
  for (Move& o : arena.enabled_by(r.move)) {
    View w = v;
    w.push_back(r);
    w.push_back(JMove{std::move(o), t});
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

const View& root_view() {
  static const View v{JMove{Move::question({}), -1}};
  return v;
}

std::optional<Strategy> try_random(const Type& type, std::uint32_t window, std::size_t arity, const StrategyGen& o,
                                   Rng& rng) {
  Arena arena(type, window);
  Strategy s(type, window, arity);
  std::vector<View> frontier{root_view()};
  std::bernoulli_distribution define(o.define);
  std::bernoulli_distribution root(0.92);
  std::bernoulli_distribution prefer_answer(0.35);
  while (!frontier.empty()) {
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    View v = std::move(frontier[at]);
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(at));
    bool want = o.total || (v.size() == 1 ? root(rng) : define(rng));
    if (!want) continue;
    if (s.norm() >= o.max_norm) {
      if (o.total) return std::nullopt;
      continue;
    }
    auto rs = legal_responses(arena, v);
    if (o.allow) std::erase_if(rs, [&](const JMove& r) { return !o.allow(v, r); });
    if (rs.empty()) {
      if (o.total) return std::nullopt;
      continue;
    }
    std::vector<JMove> answers, questions;
    for (auto& r : rs) (r.move.answer ? answers : questions).push_back(r);
    const auto& pool = answers.empty() ? questions : questions.empty() ? answers : prefer_answer(rng) ? answers : questions;
    JMove r = pick(pool, rng);
    for (auto& w : o_extensions(arena, v, r)) frontier.push_back(std::move(w));
    s.set(std::move(v), std::move(r));
  }
  return s;
}

}  // namespace

Strategy random_strategy(const Type& type, std::uint32_t window, std::size_t arity, const StrategyGen& opts, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt)
    if (auto s = try_random(type, window, arity, opts, rng)) return *s;
  throw Error("random_strategy: no total strategy of norm <= " + std::to_string(opts.max_norm) + " found at " +
              type.str());
}

namespace {

struct Enumerator {
  Arena arena;
  std::size_t arity;
  std::size_t max_norm;
  bool total_only;
  std::size_t limit;
  Strategy::Table table;
  std::vector<Strategy> out;

  void run(std::vector<View> frontier) {
    if (frontier.empty()) {
      out.emplace_back(arena.type(), arena.window(), arity, table);
      if (out.size() > limit) throw Error("enumerate_strategies: more than " + std::to_string(limit) + " strategies");
      return;
    }
    View v = std::move(frontier.back());
    frontier.pop_back();
    if (!total_only) run(frontier);
    if (table.size() >= max_norm) return;
    for (const JMove& r : legal_responses(arena, v)) {
      auto next = frontier;
      for (auto& w : o_extensions(arena, v, r)) next.push_back(std::move(w));
      table.emplace(v, r);
      run(std::move(next));
      table.erase(v);
    }
  }
};

}  // namespace

std::vector<Strategy> enumerate_strategies(const Type& type, std::uint32_t window, std::size_t arity,
                                           std::size_t max_norm, bool total_only, std::size_t limit) {
  Enumerator e{Arena(type, window), arity, max_norm, total_only, limit, {}, {}};
  e.run({root_view()});
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(e.out.size());
  for (std::size_t i = 0; i < e.out.size(); ++i) keys.emplace_back(e.out[i].serialize(), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    auto na = e.out[a.second].norm(), nb = e.out[b.second].norm();
    return na != nb ? na < nb : a.first < b.first;
  });
  std::vector<Strategy> sorted;
  sorted.reserve(keys.size());
  for (const auto& k : keys) sorted.push_back(std::move(e.out[k.second]));
  return sorted;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

namespace {

class TermGenerator {
 public:
  TermGenerator(const TermGen& o, Rng& rng) : o_(o), rng_(rng) {}

  Term gen(TypingContext ctx, const Type& t, std::size_t depth) {
    if (t.is_arrow()) {
      std::string x = fresh();
      Type dom = t.domain();
      ctx.emplace_back(x, dom);
      return Term::lam(x, dom, gen(std::move(ctx), t.codomain(), depth));
    }
    return ground(ctx, depth);
  }

  Term fix_program(const Type& t) {
    // Y[A] (lambda f. body) a1 .. an at type t, where A = B1 => .. => Bn => t.
    std::vector<Type> extra;
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 1)(rng_);
    for (std::size_t i = 0; i < n; ++i) extra.push_back(Type::nat());
    Type a = Type::curried(extra, t);
    for (int attempt = 0;; ++attempt) {
      std::string f = fresh();
      Term body = gen({{f, a}}, a, o_.depth);
      if (attempt < 50 && !occurs_free(f, body)) continue;
      std::vector<Term> args;
      for (const auto& b : extra) args.push_back(gen({}, b, 0));
      return Term::apps(Term::app(Term::fix(a), Term::lam(f, a, body)), args);
    }
  }

 private:
  std::string fresh() { return "v" + std::to_string(counter_++); }

  Term numeral() { return Term::num(std::uniform_int_distribution<std::uint32_t>(0, o_.window - 1)(rng_)); }

  Term ground(const TypingContext& ctx, std::size_t depth) {
    std::vector<std::size_t> heads;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[i].second.base() == Base::Nat && (depth > 0 || ctx[i].second.arity() == 0)) heads.push_back(i);
    enum Choice { Num, Om, Var, Case, Redex, Fix };
    std::vector<std::pair<Choice, int>> menu{{Num, 3}};
    if (o_.omega) menu.emplace_back(Om, 1);
    if (!heads.empty()) menu.emplace_back(Var, 6);
    if (depth > 0) {
      menu.emplace_back(Case, 4);
      if (o_.redex) menu.emplace_back(Redex, 1);
      if (o_.fix) menu.emplace_back(Fix, 1);
    }
    int total = 0;
    for (auto& [c, w] : menu) total += w;
    int r = std::uniform_int_distribution<int>(0, total - 1)(rng_);
    Choice c = Num;
    for (auto& [ch, w] : menu) {
      if (r < w) {
        c = ch;
        break;
      }
      r -= w;
    }
    switch (c) {
      case Num:
        return numeral();
      case Om:
        return Term::omega();
      case Var: {
        const auto& [x, t] = ctx[pick(heads, rng_)];
        std::vector<Term> args;
        for (const auto& b : t.arguments()) args.push_back(gen(ctx, b, depth - 1));
        return Term::apps(Term::var(x), args);
      }
      case Case: {
        auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(o_.window, 3))(rng_);
        std::vector<Term> args{gen(ctx, Type::nat(), depth - 1)};
        for (std::size_t i = 0; i < k; ++i) args.push_back(gen(ctx, Type::nat(), depth - 1));
        return Term::apps(Term::case_of(k), args);
      }
      case Redex: {
        Type a = std::bernoulli_distribution(0.7)(rng_) ? Type::nat() : Type::arrow(Type::nat(), Type::nat());
        std::string x = fresh();
        TypingContext inner = ctx;
        inner.emplace_back(x, a);
        Term body = ground(inner, depth - 1);
        return Term::app(Term::lam(x, a, body), gen(ctx, a, depth - 1));
      }
      case Fix: {
        std::string f = fresh();
        Type a = Type::arrow(Type::nat(), Type::nat());
        TypingContext inner = ctx;
        inner.emplace_back(f, a);
        Term body = gen(inner, a, depth - 1);
        return Term::app(Term::app(Term::fix(a), Term::lam(f, a, body)), gen(ctx, Type::nat(), 0));
      }
    }
    return numeral();
  }

  const TermGen& o_;
  Rng& rng_;
  std::size_t counter_ = 0;
};

}  // namespace

Term random_term(const TypingContext& ctx, const Type& t, const TermGen& opts, Rng& rng) {
  return TermGenerator(opts, rng).gen(ctx, t, opts.depth);
}

Term random_fix_term(const Type& t, const TermGen& opts, Rng& rng) { return TermGenerator(opts, rng).fix_program(t); }

Strategy random_compact(const Type& type, std::uint32_t window, std::size_t max_norm, Rng& rng) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    TermGen tg;
    tg.window = window;
    tg.depth = 2;
    tg.omega = true;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Strategy s = denote(random_term({}, type, tg, rng), 0, window).with_domain_arity(type.arity());
      if (s.norm() <= max_norm) return s;
    }
  }
  StrategyGen g;
  g.max_norm = max_norm;
  return random_strategy(type, window, type.arity(), g, rng);
}

}  // namespace pcf
