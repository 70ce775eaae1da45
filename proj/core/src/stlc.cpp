#include "pcf/stlc.hpp"

#include <algorithm>

#include "pcf/denotation.hpp"
#include "pcf/generate.hpp"

namespace pcf {

namespace {
// Iota has no answers, so any window gives the same arenas.
constexpr std::uint32_t kPureWindow = 1;

std::string level_name(std::size_t level) { return "x" + std::to_string(level + 1); }
}  // namespace

bool is_pure(const Type& t) {
  if (t.base() != Base::Iota) return false;
  for (const auto& a : t.arguments())
    if (!is_pure(a)) return false;
  return true;
}

PureDecomposition stlc_decompose(const Strategy& f) {
  if (!is_pure(f.type())) throw TypeError("stlc: not a pure type: " + f.type().str());
  Decomposition d = decompose(f);
  if (d.kind != Decomposition::Kind::Total) {
    if (f.type().arity() == 0) throw Error("stlc: no total strategy exists at iota");
    throw Error("stlc: strategy is not total");
  }
  return PureDecomposition{d.head, std::move(d.args)};
}

namespace {

Term extract_nf(const Strategy& f) {
  PureDecomposition d = stlc_decompose(f);
  const std::size_t outer = f.domain_arity();
  const auto own = f.codomain().arguments();
  std::vector<Term> args;
  for (const auto& g : d.args) {
    if (g.norm() >= f.norm())
      throw Error("stlc: norm does not decrease (" + std::to_string(g.norm()) + " >= " + std::to_string(f.norm()) + ")");
    args.push_back(extract_nf(g));
  }
  Term body = Term::apps(Term::var(level_name(d.head)), args);
  for (std::size_t i = own.size(); i-- > 0;) body = Term::lam(level_name(outer + i), own[i], body);
  return body;
}

}  // namespace

Term stlc_extract_nf(const Strategy& f) { return extract_nf(f); }

Strategy stlc_denote(const Term& m) { return denote(m, {}, 0, kPureWindow); }

namespace {

struct NfEnumerator {
  // Normal forms of type t in a scope of `scope` variables, with their sizes.
  std::vector<std::pair<Term, std::size_t>> of_type(std::vector<Type>& scope, const Type& t, std::size_t budget) {
    std::vector<std::pair<Term, std::size_t>> out;
    auto own = t.arguments();
    if (budget < own.size() + 1) return out;
    const std::size_t outer = scope.size();
    scope.insert(scope.end(), own.begin(), own.end());
    for (auto& [body, size] : bodies(scope, budget - own.size())) {
      Term m = body;
      for (std::size_t i = own.size(); i-- > 0;) m = Term::lam(level_name(outer + i), own[i], m);
      out.emplace_back(m, size + own.size());
    }
    scope.resize(outer);
    return out;
  }

  // x M_1 .. M_q at iota.
  std::vector<std::pair<Term, std::size_t>> bodies(std::vector<Type>& scope, std::size_t budget) {
    std::vector<std::pair<Term, std::size_t>> out;
    for (std::size_t x = 0; x < scope.size(); ++x) {
      const auto params = scope[x].arguments();
      std::size_t base = 1 + params.size();
      if (base > budget) continue;
      std::vector<std::pair<std::vector<Term>, std::size_t>> partial{{{}, base}};
      for (const auto& p : params) {
        std::vector<std::pair<std::vector<Term>, std::size_t>> next;
        for (auto& [terms, used] : partial) {
          for (auto& [arg, size] : of_type(scope, p, budget - used)) {
            auto ts = terms;
            ts.push_back(arg);
            next.emplace_back(std::move(ts), used + size);
          }
        }
        partial = std::move(next);
      }
      for (auto& [terms, used] : partial) out.emplace_back(Term::apps(Term::var(level_name(x)), terms), used);
    }
    return out;
  }
};

}  // namespace

std::vector<Term> enumerate_long_nfs(const Type& t, std::size_t size_bound) {
  if (!is_pure(t)) throw TypeError("stlc: not a pure type: " + t.str());
  std::vector<Type> scope;
  auto found = NfEnumerator{}.of_type(scope, t, size_bound);
  std::vector<std::tuple<std::size_t, std::string, Term>> keyed;
  for (auto& [m, size] : found) keyed.emplace_back(size, m.str(), m);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  std::vector<Term> out;
  for (auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

std::vector<Strategy> enumerate_total(const Type& t, std::size_t norm_bound) {
  if (!is_pure(t)) throw TypeError("stlc: not a pure type: " + t.str());
  return enumerate_strategies(t, kPureWindow, 0, norm_bound, true);
}

namespace {

// m in scope `ctx` at type t.
bool long_normal_in(TypingContext& ctx, const Term& m, const Type& t) {
  Term body = m;
  std::size_t opened = 0;
  for (const auto& a : t.arguments()) {
    if (body.kind() != Term::Kind::Lam || body.annotation() != a) {
      ctx.resize(ctx.size() - opened);
      return false;
    }
    ctx.emplace_back(body.name(), a);
    ++opened;
    body = body.body();
  }
  bool ok = false;
  auto [h, args] = body.spine();
  if (h.kind() == Term::Kind::Var) {
    for (std::size_t i = ctx.size(); i-- > 0;) {
      if (ctx[i].first != h.name()) continue;
      auto params = ctx[i].second.arguments();
      ok = params.size() == args.size();
      for (std::size_t j = 0; ok && j < args.size(); ++j) ok = long_normal_in(ctx, args[j], params[j]);
      break;
    }
  }
  ctx.resize(ctx.size() - opened);
  return ok;
}

}  // namespace

bool is_long_normal(const Term& m, const Type& t) {
  TypingContext scope;
  return long_normal_in(scope, m, t);
}

CompletenessReport check_full_completeness(const Type& t, std::size_t nf_size_bound, std::size_t norm_bound) {
  CompletenessReport rep;
  rep.type = t;
  rep.nf_size_bound = nf_size_bound;
  rep.norm_bound = norm_bound;
  rep.normal_forms = enumerate_long_nfs(t, nf_size_bound);
  auto strategies = enumerate_total(t, norm_bound);
  rep.strategies = strategies.size();

  std::vector<Strategy> denoted;
  for (const auto& nf : rep.normal_forms) {
    Strategy s = stlc_denote(nf);
    denoted.push_back(s);
    try {
      Term back = stlc_extract_nf(s);
      if (!alpha_equal(back, nf)) rep.failures.push_back("extract(denote(" + nf.str() + ")) = " + back.str());
    } catch (const Error& e) {
      rep.failures.push_back("extract(denote(" + nf.str() + ")): " + e.what());
    }
    if (s.norm() <= norm_bound && std::find(strategies.begin(), strategies.end(), s) == strategies.end())
      rep.failures.push_back("denotation of " + nf.str() + " missing from the total strategies");
  }
  for (std::size_t a = 0; a < denoted.size(); ++a)
    for (std::size_t b = a + 1; b < denoted.size(); ++b)
      if (denoted[a] == denoted[b]) {
        rep.injective = false;
        rep.failures.push_back("not injective: " + rep.normal_forms[a].str() + " and " + rep.normal_forms[b].str());
      }

  for (const auto& s : strategies) {
    std::optional<Term> extracted;
    try {
      extracted = stlc_extract_nf(s);
    } catch (const Error& e) {
      rep.failures.push_back(std::string("extract failed: ") + e.what() + "\n" + s.serialize());
      continue;
    }
    const Term& nf = *extracted;
    if (!is_long_normal(nf, t)) rep.failures.push_back("not a long normal form: " + nf.str());
    if (stlc_denote(nf) != s) rep.failures.push_back("denote(extract f) != f for " + nf.str());
    if (nf.size() > nf_size_bound) {
      rep.boundary.push_back(nf.str());
      continue;
    }
    bool hit = std::any_of(rep.normal_forms.begin(), rep.normal_forms.end(),
                           [&](const Term& m) { return alpha_equal(m, nf); });
    if (!hit) rep.failures.push_back("strategy not hit by any enumerated normal form: " + nf.str());
  }
  return rep;
}

}  // namespace pcf
