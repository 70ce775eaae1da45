#include "pcf/decomposition.hpp"

#include <numeric>

#include "pcf/generate.hpp"

namespace pcf {

namespace {

const JMove kRoot{Move::question({}), -1};

Type base_type(const Type& t) { return t.base() == Base::Nat ? Type::nat() : Type::iota(); }

// desc[t] is true when move t of `v` (or the response, at index v.size())
// is hereditarily justified by move `anchor`.
std::vector<bool> descendants(const View& v, const JMove& r, std::size_t anchor) {
  std::vector<bool> d(v.size() + 1, false);
  for (std::size_t t = 0; t <= v.size(); ++t) {
    const JMove& m = t < v.size() ? v[t] : r;
    d[t] = t == anchor || (m.justifier >= 0 && d[static_cast<std::size_t>(m.justifier)]);
  }
  return d;
}

}  // namespace

Decomposition decompose(const Strategy& given) {
  const Strategy f = given.with_domain_arity(given.type().arity());
  Decomposition d;
  auto first = f.first_move();
  if (!first) return d;
  if (first->move.answer) {
    d.kind = Decomposition::Kind::Const;
    d.value = first->move.value;
    return d;
  }
  if (first->move.path.size() != 1) throw Error("decompose: malformed root response");
  const auto ctx = f.domain();
  const auto k = static_cast<std::uint32_t>(ctx.size());
  const std::uint32_t i = first->move.path[0];
  const Type base = base_type(f.type());
  const auto bargs = ctx[i].arguments();

  d.kind = Decomposition::Kind::Total;
  d.head = i;
  std::vector<Strategy::Table> args(bargs.size());
  std::map<std::uint32_t, Strategy::Table> branches;

  for (const auto& [v, r] : f.table()) {
    if (v.size() == 1) continue;
    if (v.size() < 3 || !(v[1] == *first)) throw Error("decompose: entry outside the head call: " + view_str(v));
    const Move& o = v[2].move;
    if (o.answer) {
      View nv{kRoot};
      auto remap = [](std::int32_t j) {
        if (j == 0) return 0;
        if (j < 3) throw Error("decompose: branch move justified inside the head call");
        return j - 2;
      };
      for (std::size_t t = 3; t < v.size(); ++t) nv.push_back(JMove{v[t].move, remap(v[t].justifier)});
      branches[o.value].emplace(std::move(nv), JMove{r.move, remap(r.justifier)});
      continue;
    }
    const std::uint32_t j = o.path.at(1);
    auto desc = descendants(v, r, 2);
    auto move = [&](const Move& m, bool in_arg) {
      if (!in_arg) return m;
      Move out = m;
      out.path.assign(m.path.begin() + 2, m.path.end());
      if (!out.path.empty()) out.path[0] += k;
      return out;
    };
    auto remap = [](std::int32_t jj) {
      if (jj == 0 || jj == 2) return 0;
      if (jj == 1) throw Error("decompose: argument move justified by the head call");
      return jj - 2;
    };
    // The opening [i, j] becomes the root of g_j.
    View nv{kRoot};
    for (std::size_t t = 3; t < v.size(); ++t) nv.push_back(JMove{move(v[t].move, desc[t]), remap(v[t].justifier)});
    args.at(j).emplace(std::move(nv), JMove{move(r.move, desc[v.size()]), remap(r.justifier)});
  }
  for (std::size_t j = 0; j < bargs.size(); ++j)
    d.args.emplace_back(Type::curried(ctx, bargs[j]), f.window(), ctx.size(), std::move(args[j]));
  for (auto& [x, t] : branches) d.branches.emplace(x, Strategy(Type::curried(ctx, base), f.window(), ctx.size(), std::move(t)));
  return d;
}

Strategy recompose(const Decomposition& d, const Type& type, std::uint32_t window) {
  const auto ctx = type.arguments();
  const Type base = base_type(type);
  switch (d.kind) {
    case Decomposition::Kind::Bot:
      return bottom(type, window, ctx.size());
    case Decomposition::Kind::Const:
      if (base.base() != Base::Nat) throw Error("recompose: constant at an answerless type");
      return reindex(point(d.value, window), ctx, {});
    case Decomposition::Kind::Total:
      break;
  }
  if (d.head >= ctx.size()) throw Error("recompose: head index out of range");
  const Type& a = ctx[d.head];
  if (d.args.size() != a.arity()) throw Error("recompose: wrong number of head arguments");
  Tuple call{projection(ctx, d.head, window)};
  for (const auto& g : d.args) call.push_back(g.with_domain_arity(ctx.size()));
  Strategy head = compose_tuple(ctx, call, application(a, window));
  if (base.base() == Base::Iota) {
    if (!d.branches.empty()) throw Error("recompose: branches at an answerless type");
    return head;
  }
  if (a.base() != Base::Nat) throw Error("recompose: head of the wrong base type");
  const Type b = Type::curried(ctx, base);
  std::map<std::uint32_t, Strategy> family;
  for (const auto& [x, h] : d.branches) family.emplace(x, h.with_domain_arity(0));
  Strategy cont = mediate(family, b, window).with_domain_arity(1 + ctx.size());
  Tuple pair{head};
  for (std::size_t p = 0; p < ctx.size(); ++p) pair.push_back(projection(ctx, p, window));
  return compose_tuple(ctx, pair, cont);
}

// ---------------------------------------------------------------------------

Strategy split_head(const Strategy& f) {
  const std::size_t k = f.domain_arity();
  auto first = f.first_move();
  if (!first || first->move.answer || first->move.path.empty() || first->move.path[0] >= k)
    throw Error("split_head: strategy is not strict and total");
  auto ctx = f.domain();
  std::vector<Type> doubled = ctx;
  doubled.insert(doubled.end(), ctx.begin(), ctx.end());
  Strategy out(Type::curried(doubled, f.codomain()), f.window(), 2 * k);
  for (const auto& [v, r] : f.table()) {
    auto desc = descendants(v, r, 1);
    auto move = [&](const Move& m, bool first_copy) {
      Move o = m;
      if (!o.path.empty() && (o.path[0] >= k || !first_copy)) o.path[0] += static_cast<std::uint32_t>(k);
      return o;
    };
    View nv;
    for (std::size_t t = 0; t < v.size(); ++t) nv.push_back(JMove{move(v[t].move, desc[t]), v[t].justifier});
    out.set(std::move(nv), JMove{move(r.move, desc[v.size()] || v.size() == 1), r.justifier});
  }
  return out;
}

Strategy merge_head(const Strategy& h, std::size_t k) {
  auto all = h.domain();
  if (all.size() != 2 * k) throw Error("merge_head: domain is not Gamma x Gamma");
  std::vector<Type> ctx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  Tuple twice;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t p = 0; p < k; ++p) twice.push_back(projection(ctx, p, h.window()));
  return compose_tuple(ctx, twice, h);
}

bool head_linear(const Strategy& h, std::size_t k) {
  auto first = h.first_move();
  if (!first || first->move.answer || first->move.path.size() != 1 || first->move.path[0] >= k) return false;
  for (const auto& [v, r] : h.table())
    if (v.size() > 1 && r.move.is_question() && r.move.path.size() == 1 && r.move.path[0] < k) return false;
  return true;
}

std::optional<Strategy> factor_projection(const Strategy& split, std::size_t k, std::size_t i) {
  auto first = split.first_move();
  if (!first || first->move.path.size() != 1 || first->move.path[0] != i) return std::nullopt;
  auto all = split.domain();
  if (all.size() != 2 * k) throw Error("factor_projection: domain is not Gamma x Gamma");
  std::vector<Type> fi_ctx{all[i]};
  fi_ctx.insert(fi_ctx.end(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
  Strategy out(Type::curried(fi_ctx, split.codomain()), split.window(), 1 + k);
  bool ok = true;
  auto move = [&](Move m) {
    if (m.path.empty()) return m;
    auto p = m.path[0];
    if (p < k) {
      if (p != i) ok = false;
      m.path[0] = 0;
    } else if (p < 2 * k) {
      m.path[0] = static_cast<std::uint32_t>(p - k + 1);
    } else {
      m.path[0] = static_cast<std::uint32_t>(p - 2 * k + 1 + k);
    }
    return m;
  };
  for (const auto& [v, r] : split.table()) {
    View nv;
    for (const auto& jm : v) nv.push_back(JMove{move(jm.move), jm.justifier});
    out.set(std::move(nv), JMove{move(r.move), r.justifier});
  }
  if (!ok) return std::nullopt;
  return out;
}

Strategy unfactor_projection(const Strategy& fi, const std::vector<Type>& ctx, std::size_t i) {
  std::vector<Type> doubled = ctx;
  doubled.insert(doubled.end(), ctx.begin(), ctx.end());
  Tuple fs{projection(doubled, i, fi.window())};
  for (std::size_t p = 0; p < ctx.size(); ++p) fs.push_back(projection(doubled, ctx.size() + p, fi.window()));
  return compose_tuple(doubled, fs, fi.with_domain_arity(1 + ctx.size()));
}

namespace {

// g on [A] ++ C => B, never touching A, as a strategy on C => B.
std::optional<Strategy> drop_first(const Strategy& g) {
  auto all = g.domain();
  std::vector<Type> c(all.begin() + 1, all.end());
  Strategy out(Type::curried(c, g.codomain()), g.window(), c.size());
  for (const auto& [v, r] : g.table()) {
    View nv;
    for (const auto& jm : v) {
      if (!jm.move.path.empty() && jm.move.path[0] == 0) return std::nullopt;
      Move m = jm.move;
      if (!m.path.empty()) m.path[0] -= 1;
      nv.push_back(JMove{m, jm.justifier});
    }
    if (!r.move.path.empty() && r.move.path[0] == 0) return std::nullopt;
    Move m = r.move;
    if (!m.path.empty()) m.path[0] -= 1;
    out.set(std::move(nv), JMove{m, r.justifier});
  }
  return out;
}

}  // namespace

std::optional<LinearPair> split_linear(const Strategy& fi) {
  auto first = fi.first_move();
  if (!first || first->move != Move::question({0})) return std::nullopt;
  if (!head_linear(fi, 1)) return std::nullopt;
  Decomposition d = decompose(fi);
  LinearPair p{{}, Strategy(Type::nat(), 1)};
  for (const auto& g : d.args) {
    auto s = drop_first(g);
    if (!s) return std::nullopt;
    p.args.push_back(*s);
  }
  auto all = fi.domain();
  std::vector<Type> cont_ctx{Type::nat()};
  cont_ctx.insert(cont_ctx.end(), all.begin() + 1, all.end());
  Strategy cont(Type::curried(cont_ctx, fi.codomain()), fi.window(), cont_ctx.size());
  for (const auto& [v, r] : fi.table())
    if (v.size() == 1 || v[2].move.answer) cont.set(v, r);
  p.cont = std::move(cont);
  return p;
}

Strategy join_linear(const LinearPair& p, const Type& a, const std::vector<Type>& c, std::uint32_t window) {
  std::vector<Type> ctx{a};
  ctx.insert(ctx.end(), c.begin(), c.end());
  std::vector<std::size_t> shift(c.size());
  std::iota(shift.begin(), shift.end(), 1);
  Tuple call{projection(ctx, 0, window)};
  for (const auto& g : p.args) call.push_back(reindex(g.with_domain_arity(c.size()), ctx, shift));
  Strategy head = compose_tuple(ctx, call, application(a, window));
  Tuple pair{head};
  for (std::size_t q = 0; q < c.size(); ++q) pair.push_back(projection(ctx, 1 + q, window));
  return compose_tuple(ctx, pair, p.cont.with_domain_arity(1 + c.size()));
}

// ---------------------------------------------------------------------------
// Axiom suites
// ---------------------------------------------------------------------------

std::string axiom_name(Axiom a) {
  static const char* names[] = {"A1", "A2", "A3", "A4", "A5"};
  return names[static_cast<int>(a)];
}

Axiom parse_axiom(const std::string& name) {
  for (Axiom a : {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5})
    if (axiom_name(a) == name) return a;
  throw Error("unknown axiom suite: " + name);
}

namespace {

Type nat() { return Type::nat(); }
Type arr(const Type& a, const Type& b) { return Type::arrow(a, b); }

const std::vector<Type>& small_types() {
  static const std::vector<Type> ts{nat(), arr(nat(), nat()), arr(nat(), arr(nat(), nat())),
                                    arr(arr(nat(), nat()), nat())};
  return ts;
}

std::vector<Type> random_context(Rng& rng, std::size_t lo, std::size_t hi) {
  std::vector<Type> ctx(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
  for (auto& t : ctx) t = pick(small_types(), rng);
  return ctx;
}

struct Case {
  std::string inputs;
  std::vector<std::string> problems;

  void add(const Strategy& s) { inputs += s.serialize(); }
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

bool same(const Strategy& a, const Strategy& b) { return a.type() == b.type() && a.table() == b.table(); }

Strategy strict_total(const Type& t, std::size_t arity, const CheckBounds& b, Rng& rng) {
  StrategyGen g;
  g.max_norm = b.norm_bound;
  g.allow = [arity](const View& v, const JMove& r) {
    return v.size() > 1 || (r.move.path.size() == 1 && r.move.path[0] < arity);
  };
  for (;;) {
    Strategy s = random_strategy(t, b.window, arity, g, rng);
    if (!s.is_bottom()) return s;
  }
}

void check_a1(const Strategy& f, Case& c) {
  c.add(f);
  auto ctx = f.domain();
  Tuple bots;
  for (const auto& a : ctx) bots.push_back(bottom(a, f.window()));
  const bool is_bot = f.is_bottom();
  const bool strict = compose_tuple({}, bots, f).is_bottom();
  bool constant = false;
  for (std::uint32_t x = 0; x < f.window() && !constant; ++x) constant = same(f, reindex(point(x, f.window()), ctx, {}));
  int cases = int(is_bot) + int(!is_bot && constant) + int(!is_bot && strict);
  c.expect(cases == 1, "trichotomy: bot=" + std::to_string(is_bot) + " const=" + std::to_string(constant) +
                           " strict=" + std::to_string(strict));
  c.expect(!(strict && constant) || is_bot, "a non-bottom map is both strict and constant");
  auto cl = classify(f);
  c.expect(cl.strict == strict, "classify.strict disagrees with f o bot = bot");
  c.expect(cl.total == (strict && !is_bot), "classify.total disagrees");
  c.expect(cl.constant == (constant && !is_bot), "classify.constant disagrees with weak ; x-bar");
}

void check_a2(const Strategy& f, Case& c) {
  c.add(f);
  const std::size_t k = f.domain_arity();
  Strategy s = split_head(f);
  c.expect(head_linear(s, k), "split form is not head-linear");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto fi = factor_projection(s, k, i);
    if (!fi) continue;
    ++hits;
    c.expect(same(unfactor_projection(*fi, f.domain(), i), s), "pi_i ; f_i differs from f' at i=" + std::to_string(i));
  }
  c.expect(hits == 1, "factors through " + std::to_string(hits) + " projections");
}

void check_a3(const Strategy& g, const Strategy& h, const Strategy& l, Case& c) {
  c.add(g);
  c.add(h);
  c.add(l);
  const auto a = g.domain().at(0), b = h.domain().at(0), cc = l.domain().at(0);
  const auto w = g.window();
  Strategy f = compose(promote(g), promote(h));
  c.expect(same(promote(compose(f, dereliction(h.codomain(), w))), f), "(f ; der)^dagger != f");
  c.expect(same(compose(promote(g), dereliction(b, w)), g), "g^dagger ; der != g");
  c.expect(same(compose(promote(dereliction(a, w)), g), g), "der^dagger ; g != g");
  c.expect(same(compose(promote(g), promote(h)), promote(compose(promote(g), h))),
           "g^dagger ; h^dagger != (g^dagger ; h)^dagger");
  c.expect(same(compose(compose(g, h), l), compose(g, compose(h, l))), "composition is not associative");
  c.expect(same(compose(identity(a, w), g), g) && same(compose(g, identity(b, w)), g), "identity is not neutral");
  (void)cc;
}

void check_a4_f(const Strategy& f, Case& c) {
  c.add(f);
  const std::size_t k = f.domain_arity();
  Strategy s = split_head(f);
  c.expect(head_linear(s, k), "split is not head-linear");
  c.expect(same(merge_head(s, k), f), "merge(split f) != f");
  auto back = merge_head(s, k);
  c.expect(classify(back).total, "merged map is not strict and total");
}

void check_a4_h(const Strategy& h, std::size_t k, Case& c) {
  c.add(h);
  Strategy f = merge_head(h, k);
  c.expect(classify(f).total, "con ; (der x id) ; h is not total");
  c.expect(same(split_head(f), h), "split(merge h) != h");
}

void check_a5_pair(const LinearPair& p, const Type& a, const std::vector<Type>& ctx, std::uint32_t w, Case& c) {
  for (const auto& g : p.args) c.add(g);
  c.add(p.cont);
  Strategy fi = join_linear(p, a, ctx, w);
  c.expect(classify(fi.with_domain_arity(1 + ctx.size())).total, "joined map is not total");
  auto back = split_linear(fi);
  c.expect(back.has_value(), "joined map does not split");
  if (!back) return;
  bool args_ok = back->args.size() == p.args.size();
  for (std::size_t j = 0; args_ok && j < p.args.size(); ++j) args_ok = same(back->args[j], p.args[j]);
  c.expect(args_ok, "split(join(g, h)).g != g");
  c.expect(same(back->cont, p.cont), "split(join(g, h)).h != h");
}

void check_a5_f(const Strategy& fi, const Type& a, const std::vector<Type>& ctx, Case& c) {
  c.add(fi);
  auto p = split_linear(fi);
  c.expect(p.has_value(), "total linear map does not split");
  if (!p) return;
  c.expect(same(join_linear(*p, a, ctx, fi.window()), fi), "join(split f) != f");
}

StrategyGen a5_linear(const CheckBounds& b) {
  StrategyGen g;
  g.max_norm = b.norm_bound;
  g.allow = [](const View& v, const JMove& r) {
    bool opens = r.move.is_question() && r.move.path.size() == 1 && r.move.path[0] == 0;
    return v.size() == 1 ? opens : !opens;
  };
  return g;
}

void run_case(Axiom which, Rng& rng, const CheckBounds& b, Case& c) {
  const auto w = b.window;
  switch (which) {
    case Axiom::A1: {
      auto ctx = random_context(rng, 0, 3);
      check_a1(random_compact(Type::curried(ctx, nat()), w, b.norm_bound, rng), c);
      break;
    }
    case Axiom::A2: {
      auto ctx = random_context(rng, 1, 3);
      check_a2(strict_total(Type::curried(ctx, nat()), ctx.size(), b, rng), c);
      break;
    }
    case Axiom::A3: {
      StrategyGen g;
      g.max_norm = b.norm_bound;
      const Type& ta = pick(small_types(), rng);
      const Type& tb = pick(small_types(), rng);
      const Type& tc = pick(small_types(), rng);
      const Type& td = pick(small_types(), rng);
      check_a3(random_strategy(arr(ta, tb), w, 1, g, rng), random_strategy(arr(tb, tc), w, 1, g, rng),
               random_strategy(arr(tc, td), w, 1, g, rng), c);
      break;
    }
    case Axiom::A4: {
      auto ctx = random_context(rng, 1, 2);
      Type target = std::bernoulli_distribution(0.7)(rng) ? nat() : arr(nat(), nat());
      if (std::bernoulli_distribution(0.5)(rng)) {
        check_a4_f(strict_total(Type::curried(ctx, target), ctx.size(), b, rng), c);
      } else {
        auto doubled = ctx;
        doubled.insert(doubled.end(), ctx.begin(), ctx.end());
        const std::size_t k = ctx.size();
        StrategyGen g;
        g.max_norm = b.norm_bound;
        g.allow = [k](const View& v, const JMove& r) {
          bool opens_first = r.move.is_question() && r.move.path.size() == 1 && r.move.path[0] < k;
          return v.size() == 1 ? opens_first : !opens_first;
        };
        Strategy h = random_strategy(Type::curried(doubled, target), w, 2 * k, g, rng);
        if (h.is_bottom()) h.set(View{kRoot}, JMove{Move::question({0}), 0});
        check_a4_h(h, k, c);
      }
      break;
    }
    case Axiom::A5: {
      const Type& a = pick(small_types(), rng);
      auto ctx = random_context(rng, 0, 2);
      std::vector<Type> full{a};
      full.insert(full.end(), ctx.begin(), ctx.end());
      if (std::bernoulli_distribution(0.5)(rng)) {
        StrategyGen g;
        g.max_norm = b.norm_bound;
        LinearPair p{{}, Strategy(nat(), w)};
        for (const auto& bj : a.arguments()) p.args.push_back(random_strategy(Type::curried(ctx, bj), w, ctx.size(), g, rng));
        std::vector<Type> cctx{nat()};
        cctx.insert(cctx.end(), ctx.begin(), ctx.end());
        Strategy h = random_strategy(Type::curried(cctx, nat()), w, cctx.size(), a5_linear(b), rng);
        if (h.is_bottom()) h.set(View{kRoot}, JMove{Move::question({0}), 0});
        p.cont = h;
        check_a5_pair(p, a, ctx, w, c);
      } else {
        Strategy fi = random_strategy(Type::curried(full, nat()), w, full.size(), a5_linear(b), rng);
        if (fi.is_bottom()) fi.set(View{kRoot}, JMove{Move::question({0}), 0});
        check_a5_f(fi, a, ctx, c);
      }
      break;
    }
  }
}

void special_cases(Axiom which, const CheckBounds& b, std::vector<Case>& out) {
  const auto w = b.window;
  switch (which) {
    case Axiom::A1: {
      // lambda x:nat. case[1] x 7, needs 7 in the window.
      Strategy f(arr(nat(), nat()), 8, 1);
      f.set(View{kRoot}, JMove{Move::question({0}), 0});
      f.set(View{kRoot, JMove{Move::question({0}), 0}, JMove{Move::answer_to({0}, 0), 1}}, JMove{Move::answer_to({}, 7), 0});
      Case c;
      check_a1(f, c);
      c.expect(classify(f).total, "case[1] x 7 should be strict and total");
      out.push_back(std::move(c));
      Case p;
      check_a1(point(std::min<std::uint32_t>(2, w - 1), w), p);
      out.push_back(std::move(p));
      Case z;
      check_a1(bottom(arr(nat(), nat()), w, 1), z);
      out.push_back(std::move(z));
      break;
    }
    case Axiom::A2: {
      Case c;
      check_a2(identity(nat(), w), c);
      out.push_back(std::move(c));
      break;
    }
    case Axiom::A3: {
      Case c;
      Strategy g = identity(arr(nat(), nat()), w);
      check_a3(g, g, g, c);
      out.push_back(std::move(c));
      break;
    }
    case Axiom::A4: {
      Case c;
      check_a4_f(identity(nat(), w), c);
      out.push_back(std::move(c));
      break;
    }
    case Axiom::A5: {
      // g = der_nat, h answers 0 whatever the call returns.
      Type a = arr(nat(), nat());
      Strategy h(Type::curried({nat(), nat()}, nat()), w, 2);
      h.set(View{kRoot}, JMove{Move::question({0}), 0});
      for (std::uint32_t x = 0; x < w; ++x)
        h.set(View{kRoot, JMove{Move::question({0}), 0}, JMove{Move::answer_to({0}, x), 1}}, JMove{Move::answer_to({}, 0), 0});
      LinearPair p{{identity(nat(), w)}, h};
      Case c;
      check_a5_pair(p, a, {nat()}, w, c);
      Case d;
      check_a5_f(join_linear(p, a, {nat()}, w), a, {nat()}, d);
      out.push_back(std::move(c));
      out.push_back(std::move(d));
      break;
    }
  }
}

}  // namespace

CheckReport check_axiom(Axiom which, std::size_t cases, std::uint64_t seed, const CheckBounds& bounds,
                        const CaseObserver& observe) {
  CheckReport rep;
  rep.axiom = which;
  rep.seed = seed;
  std::vector<Case> fixed;
  special_cases(which, bounds, fixed);
  std::size_t index = 0;
  auto record = [&](Case& c) {
    if (!c.problems.empty()) {
      std::string why;
      for (const auto& p : c.problems) why += (why.empty() ? "" : "; ") + p;
      rep.failures.push_back(CheckFailure{index, c.inputs, why});
      if (observe) observe(rep.failures.back(), false);
    } else if (observe) {
      observe(CheckFailure{index, c.inputs, ""}, true);
    }
    ++index;
    ++rep.cases;
  };
  for (auto& c : fixed) record(c);
  for (std::size_t i = 0; i < cases; ++i) {
    // seed_seq keeps 32 bits per word.
    std::seed_seq sq{seed & 0xffffffffu, seed >> 32, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(which)};
    Rng rng(sq);
    Case c;
    try {
      run_case(which, rng, bounds, c);
    } catch (const Error& e) {
      c.problems.push_back(std::string("error: ") + e.what());
    }
    record(c);
  }
  return rep;
}

}  // namespace pcf
