#pragma once

#include <gtest/gtest.h>
#include <pthread.h>

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "pcf/definability.hpp"
#include "pcf/denotation.hpp"
#include "pcf/generate.hpp"

namespace pcf::test {

inline Strategy den(const std::string& src, std::uint32_t window = 4, std::size_t unroll = 16) {
  return denote(parse_term(src), unroll, window);
}

// Runs body(rng, i) for i < n with an independently seeded generator per
// case; a failing case names its seed.
template <class F>
void for_all(std::size_t n, std::uint64_t seed, F body) {
  for (std::size_t i = 0; i < n; ++i) {
    std::seed_seq sq{seed, static_cast<std::uint64_t>(i)};
    Rng rng(sq);
    SCOPED_TRACE("seed " + std::to_string(seed) + " case " + std::to_string(i));
    body(rng, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

// ---------------------------------------------------------------------------
// Reference evaluator: call-by-name with environments and thunks, no
// substitution. Shares nothing with the library evaluator but the AST.
// ---------------------------------------------------------------------------
class RefEval {
 public:
  explicit RefEval(std::uint64_t fuel) : fuel_(fuel) {}

  std::optional<std::uint64_t> run(const Term& m) {
    try {
      auto v = eval(m, nullptr);
      if (auto* n = std::get_if<std::uint64_t>(&v->v)) return *n;
    } catch (const OutOfFuel&) {
    } catch (const Stuck&) {
    }
    return std::nullopt;
  }

 private:
  struct OutOfFuel {};
  struct Stuck {};
  struct Env;
  using EnvP = std::shared_ptr<const Env>;
  struct Thunk {
    Term term;
    EnvP env;
  };
  struct Env {
    std::string name;
    std::shared_ptr<Thunk> value;
    EnvP next;
  };
  struct Closure {
    Term lam;
    EnvP env;
  };
  struct Partial {  // case_k or Y with the arguments received so far
    Term head;
    std::vector<std::shared_ptr<Thunk>> args;
  };
  struct Value {
    std::variant<std::uint64_t, Closure, Partial> v;
  };
  using ValueP = std::shared_ptr<Value>;

  void tick() {
    if (fuel_ == 0) throw OutOfFuel{};
    --fuel_;
  }

  static std::shared_ptr<Thunk> lookup(const EnvP& e, const std::string& x) {
    for (const Env* p = e.get(); p; p = p->next.get())
      if (p->name == x) return p->value;
    throw Stuck{};
  }

  ValueP eval(const Term& m, const EnvP& env) {
    switch (m.kind()) {
      case Term::Kind::Num:
        return std::make_shared<Value>(Value{m.value()});
      case Term::Kind::Omega:
        throw OutOfFuel{};
      case Term::Kind::Var: {
        auto t = lookup(env, m.name());
        return eval(t->term, t->env);
      }
      case Term::Kind::Lam:
        return std::make_shared<Value>(Value{Closure{m, env}});
      case Term::Kind::Fix:
      case Term::Kind::Case:
        return std::make_shared<Value>(Value{Partial{m, {}}});
      case Term::Kind::App: {
        auto f = eval(m.fn(), env);
        return apply(f, std::make_shared<Thunk>(Thunk{m.arg(), env}));
      }
    }
    throw Stuck{};
  }

  ValueP force(const std::shared_ptr<Thunk>& t) { return eval(t->term, t->env); }

  ValueP apply(const ValueP& f, std::shared_ptr<Thunk> a) {
    if (auto* c = std::get_if<Closure>(&f->v)) {
      tick();
      auto e = std::make_shared<const Env>(Env{c->lam.name(), std::move(a), c->env});
      return eval(c->lam.body(), e);
    }
    auto p = std::get<Partial>(f->v);
    p.args.push_back(std::move(a));
    if (p.head.kind() == Term::Kind::Fix) {
      // Y M = M (Y M), with Y M shared as a thunk over a private scope.
      tick();
      auto m = p.args[0];
      // Skip variable indirections, or each unfolding adds one to the chain.
      while (m->term.kind() == Term::Kind::Var) m = lookup(m->env, m->term.name());
      auto scope = std::make_shared<const Env>(Env{"%m", m, nullptr});
      auto self = std::make_shared<Thunk>(Thunk{Term::app(p.head, Term::var("%m")), scope});
      return apply(force(m), self);
    }
    if (p.args.size() < p.head.branches() + 1) return std::make_shared<Value>(Value{p});
    auto s = force(p.args[0]);
    auto i = std::get<std::uint64_t>(s->v);
    if (i >= p.head.branches()) throw Stuck{};
    tick();
    return force(p.args[1 + i]);
  }

  std::uint64_t fuel_;
};

// The reference recurses on the C++ stack, so it runs on a thread with a
// large one.
inline std::optional<std::uint64_t> ref_eval(const Term& m, std::uint64_t fuel = 100000) {
  struct Job {
    const Term* m;
    std::uint64_t fuel;
    std::optional<std::uint64_t> out;
  } job{&m, fuel, std::nullopt};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{512} << 20);
  pthread_t th;
  auto body = [](void* p) -> void* {
    auto* j = static_cast<Job*>(p);
    j->out = RefEval(j->fuel).run(*j->m);
    return nullptr;
  };
  if (pthread_create(&th, &attr, body, &job) != 0) throw std::runtime_error("ref_eval: no thread");
  pthread_join(th, nullptr);
  pthread_attr_destroy(&attr);
  return job.out;
}

// Hand-built strategies at nat => nat from a first-order table: ask the
// argument once, then answer out[x] (absent = no response).
inline Strategy ask_then(const std::map<std::uint32_t, std::uint32_t>& out, std::uint32_t window) {
  Strategy s(Type::arrow(Type::nat(), Type::nat()), window);
  JMove q{Move::question({}), -1};
  JMove call{Move::question({0}), 0};
  s.set({q}, call);
  for (auto [x, y] : out) s.set({q, call, JMove{Move::answer_to({0}, x), 1}}, JMove{Move::answer_to({}, y), 0});
  return s;
}

}  // namespace pcf::test
