#include "pcf/compose.hpp"

#include <algorithm>

namespace pcf {
namespace {

constexpr std::size_t kInteractionCap = 1'000'000;

struct Event {
  bool in_g = false;
  Move gmove;
  int gjust = -1;
  int gprev = -1;

  int thread = -1;
  Move fmove;
  int fjust = -1;
  int fprev = -1;

  int comp = -1;  // position in the composite play; -1 when hidden
};

struct Thread {
  std::size_t component;
  int root;
  int last;
};

// Shapes shared by every interaction of one composition.
struct Setup {
  std::size_t n;  // |Gamma|
  std::size_t m;  // number of substituted arguments
  const Strategy* g;
  const Tuple* fs;

  // composite (C part) -> g
  Path comp_to_g(const Path& p) const {
    if (p.empty()) return p;
    Path out = p;
    out[0] = static_cast<std::uint32_t>(p[0] - n + m);
    return out;
  }
  Path g_to_comp(const Path& p) const {
    if (p.empty()) return p;
    Path out = p;
    out[0] = static_cast<std::uint32_t>(p[0] - m + n);
    return out;
  }
  // g's B_j part -> f_j
  Path g_to_f(const Path& p) const {
    if (p.size() == 1) return {};
    Path out(p.begin() + 1, p.end());
    out[0] = static_cast<std::uint32_t>(out[0] + n);
    return out;
  }
  Path f_to_g(const Path& p, std::size_t j) const {
    Path out;
    out.push_back(static_cast<std::uint32_t>(j));
    if (p.empty()) return out;
    out.push_back(static_cast<std::uint32_t>(p[0] - n));
    out.insert(out.end(), p.begin() + 1, p.end());
    return out;
  }
};

class Interaction {
 public:
  explicit Interaction(const Setup* setup) : s_(setup) {}

  /// Plays the composite O-move `o` (justifier given as a composite index)
  /// and runs the internal dialogue until a visible P-move appears.
  std::optional<JMove> feed(const JMove& o) {
    int e = static_cast<int>(events_.size());
    Event ev;
    if (comp_.empty()) {
      ev.in_g = true;
      ev.gmove = o.move;
      ev.comp = 0;
      events_.push_back(ev);
      comp_.push_back(e);
      g_last_ = e;
      return run(-1);
    }
    int je = comp_.at(static_cast<std::size_t>(o.justifier));
    ev.comp = static_cast<int>(comp_.size());
    if (o.move.path[0] >= s_->n) {
      ev.in_g = true;
      ev.gmove = Move{s_->comp_to_g(o.move.path), o.move.answer, o.move.value};
      ev.gjust = je;
      ev.gprev = g_last_;
      events_.push_back(ev);
      comp_.push_back(e);
      g_last_ = e;
      return run(-1);
    }
    int t = events_[static_cast<std::size_t>(je)].thread;
    ev.thread = t;
    ev.fmove = o.move;
    ev.fjust = je;
    ev.fprev = threads_[static_cast<std::size_t>(t)].last;
    events_.push_back(ev);
    comp_.push_back(e);
    threads_[static_cast<std::size_t>(t)].last = e;
    return run(t);
  }

 private:
  // who < 0: g must move; otherwise the f-thread `who` must move.
  std::optional<JMove> run(int who) {
    for (;;) {
      if (events_.size() > kInteractionCap) throw Error("compose: interaction did not terminate");
      if (who < 0) {
        auto [key, idx] = g_view(g_last_);
        auto r = s_->g->respond(key);
        if (!r) return std::nullopt;
        int jev = idx.at(static_cast<std::size_t>(r->justifier));
        int e = static_cast<int>(events_.size());
        Event ev;
        ev.in_g = true;
        ev.gmove = r->move;
        ev.gjust = jev;
        ev.gprev = g_last_;
        const Path& p = r->move.path;
        if (p.empty() || p[0] >= s_->m) {
          ev.comp = static_cast<int>(comp_.size());
          int cj = events_[static_cast<std::size_t>(jev)].comp;
          events_.push_back(ev);
          comp_.push_back(e);
          g_last_ = e;
          return JMove{Move{s_->g_to_comp(p), r->move.answer, r->move.value}, cj};
        }
        if (p.size() == 1) {
          ev.thread = static_cast<int>(threads_.size());
          ev.fmove = Move::question({});
          threads_.push_back(Thread{p[0], e, e});
        } else {
          int t = events_[static_cast<std::size_t>(jev)].thread;
          ev.thread = t;
          ev.fmove = Move{s_->g_to_f(p), r->move.answer, r->move.value};
          ev.fjust = jev;
          ev.fprev = threads_[static_cast<std::size_t>(t)].last;
          threads_[static_cast<std::size_t>(t)].last = e;
        }
        events_.push_back(ev);
        g_last_ = e;
        who = ev.thread;
      } else {
        Thread& th = threads_[static_cast<std::size_t>(who)];
        auto [key, idx] = f_view(th.last);
        auto r = (*s_->fs)[th.component].respond(key);
        if (!r) return std::nullopt;
        int jev = idx.at(static_cast<std::size_t>(r->justifier));
        int e = static_cast<int>(events_.size());
        Event ev;
        ev.thread = who;
        ev.fmove = r->move;
        ev.fjust = jev;
        ev.fprev = th.last;
        th.last = e;
        const Path& p = r->move.path;
        if (!p.empty() && p[0] < s_->n) {
          int cj = jev == th.root ? 0 : events_[static_cast<std::size_t>(jev)].comp;
          ev.comp = static_cast<int>(comp_.size());
          events_.push_back(ev);
          comp_.push_back(e);
          return JMove{r->move, cj};
        }
        ev.in_g = true;
        ev.gmove = Move{s_->f_to_g(p, th.component), r->move.answer, r->move.value};
        ev.gjust = jev;
        ev.gprev = g_last_;
        events_.push_back(ev);
        g_last_ = e;
        who = -1;
      }
    }
  }

  // P-view of g's projection at O-event e, as a lookup key plus the events
  // it is made of.
  std::pair<View, std::vector<int>> g_view(int e) const {
    std::vector<int> idx;
    int cur = e;
    for (;;) {
      idx.push_back(cur);
      int p = events_[static_cast<std::size_t>(cur)].gjust;
      if (p < 0) break;
      idx.push_back(p);
      cur = events_[static_cast<std::size_t>(p)].gprev;
    }
    std::reverse(idx.begin(), idx.end());
    View key;
    key.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Event& ev = events_[static_cast<std::size_t>(idx[k])];
      key.push_back(JMove{ev.gmove, locate(idx, k, ev.gjust)});
    }
    return {std::move(key), std::move(idx)};
  }

  std::pair<View, std::vector<int>> f_view(int e) const {
    std::vector<int> idx;
    int cur = e;
    for (;;) {
      idx.push_back(cur);
      int p = events_[static_cast<std::size_t>(cur)].fjust;
      if (p < 0) break;
      idx.push_back(p);
      cur = events_[static_cast<std::size_t>(p)].fprev;
    }
    std::reverse(idx.begin(), idx.end());
    View key;
    key.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Event& ev = events_[static_cast<std::size_t>(idx[k])];
      key.push_back(JMove{ev.fmove, locate(idx, k, ev.fjust)});
    }
    return {std::move(key), std::move(idx)};
  }

  static std::int32_t locate(const std::vector<int>& idx, std::size_t upto, int event) {
    if (event < 0) return -1;
    for (std::size_t k = upto; k-- > 0;)
      if (idx[k] == event) return static_cast<std::int32_t>(k);
    throw Error("compose: justifier outside the P-view (visibility violated)");
  }

  const Setup* s_;
  std::vector<Event> events_;
  std::vector<Thread> threads_;
  std::vector<int> comp_;
  int g_last_ = -1;
};

void explore(const Arena& arena, const Interaction& before, View view, Strategy::Table& out) {
  Interaction st = before;
  auto r = st.feed(view.back());
  if (!r) return;
  out.emplace(view, *r);
  if (out.size() > kComposeEntryCap) throw Error("compose: view function exceeds the entry cap");
  view.push_back(*r);
  auto parent = static_cast<std::int32_t>(view.size() - 1);
  for (Move& o : arena.enabled_by(r->move)) {
    view.push_back(JMove{std::move(o), parent});
    explore(arena, st, view, out);
    view.pop_back();
  }
}

}  // namespace

Strategy compose_tuple(const std::vector<Type>& ctx, const Tuple& fs, const Strategy& g) {
  auto g_args = g.type().arguments();
  if (fs.size() > g_args.size()) throw Error("compose: more components than arguments");
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].window() != g.window()) throw Error("compose: window mismatch");
    if (fs[j].type() != Type::curried(ctx, g_args[j]))
      throw Error("compose: arena mismatch at component " + std::to_string(j) + ": " + fs[j].type().str() +
                  " vs " + Type::curried(ctx, g_args[j]).str());
  }
  Type rest = g.type();
  for (std::size_t j = 0; j < fs.size(); ++j) rest = rest.codomain();
  Type result = Type::curried(ctx, rest);
  std::size_t arity = ctx.size() + (g.domain_arity() >= fs.size() ? g.domain_arity() - fs.size() : 0);

  Setup setup{ctx.size(), fs.size(), &g, &fs};
  Arena arena(result, g.window());
  Strategy::Table table;
  explore(arena, Interaction(&setup), View{JMove{Move::question({}), -1}}, table);
  return Strategy(result, g.window(), arity, std::move(table));
}

Strategy compose(const Strategy& f, const Strategy& g) { return compose_tuple(f.domain(), {f}, g); }

// ---------------------------------------------------------------------------
// Structural morphisms
// ---------------------------------------------------------------------------

namespace {

void copycat_dfs(const Arena& arena, const std::function<Path(const Path&)>& mirror, View& view,
                 Strategy::Table& out) {
  const JMove& last = view.back();
  auto t = static_cast<std::int32_t>(view.size() - 1);
  JMove r{Move{mirror(last.move.path), last.move.answer, last.move.value}, t == 0 ? 0 : t - 2};
  if (!arena.contains(r.move)) throw Error("copycat: mirror leaves the arena at " + last.move.str());
  out.emplace(view, r);
  view.push_back(r);
  auto parent = static_cast<std::int32_t>(view.size() - 1);
  for (Move& o : arena.enabled_by(r.move)) {
    view.push_back(JMove{std::move(o), parent});
    copycat_dfs(arena, mirror, view, out);
    view.pop_back();
  }
  view.pop_back();
}

}  // namespace

Strategy copycat(const Type& type, std::uint32_t window, std::size_t domain_arity,
                 const std::function<Path(const Path&)>& mirror) {
  Arena arena(type, window);
  Strategy::Table table;
  View view{JMove{Move::question({}), -1}};
  copycat_dfs(arena, mirror, view, table);
  return Strategy(type, window, domain_arity, std::move(table));
}

Strategy projection(const std::vector<Type>& ctx, std::size_t i, std::uint32_t window) {
  if (i >= ctx.size()) throw Error("projection index out of range");
  const auto n = static_cast<std::uint32_t>(ctx.size());
  const auto head = static_cast<std::uint32_t>(i);
  auto mirror = [n, head](const Path& p) -> Path {
    if (p.empty()) return {head};
    if (p[0] == head) {
      if (p.size() == 1) return {};
      Path out(p.begin() + 1, p.end());
      out[0] += n;
      return out;
    }
    Path out{head, p[0] - n};
    out.insert(out.end(), p.begin() + 1, p.end());
    return out;
  };
  return copycat(Type::curried(ctx, ctx[i]), window, ctx.size(), mirror);
}

Strategy identity(const Type& a, std::uint32_t window) { return projection({a}, 0, window); }

Tuple contraction(const Type& a, std::uint32_t window) {
  Strategy id = identity(a, window);
  return {id, id};
}

Strategy application(const Type& fn_type, std::uint32_t window) {
  return identity(fn_type, window).with_domain_arity(1 + fn_type.arity());
}

Strategy curry(const Strategy& f) {
  if (f.domain_arity() == 0) throw Error("curry: empty domain");
  return f.with_domain_arity(f.domain_arity() - 1);
}

Strategy uncurry(const Strategy& f) {
  if (f.domain_arity() >= f.type().arity()) throw Error("uncurry: codomain is not an arrow");
  return f.with_domain_arity(f.domain_arity() + 1);
}

Strategy bottom(const Type& type, std::uint32_t window, std::size_t domain_arity) {
  return Strategy(type, window, domain_arity);
}

Strategy point(std::uint32_t x, std::uint32_t window) {
  if (x >= window) throw Error("point " + std::to_string(x) + " outside window " + std::to_string(window));
  Strategy s(Type::nat(), window, 0);
  s.set(View{JMove{Move::question({}), -1}}, JMove{Move::answer_to({}, x), 0});
  return s;
}

Strategy weaken(const Strategy& f, const std::vector<Type>& ctx) { return compose_tuple(ctx, {}, f); }

Strategy reindex(const Strategy& f, const std::vector<Type>& to, const std::vector<std::size_t>& old_to_new) {
  const std::size_t n = f.domain_arity();
  if (old_to_new.size() != n) throw Error("reindex: map does not cover the domain");
  auto from = f.domain();
  for (std::size_t p = 0; p < n; ++p)
    if (old_to_new[p] >= to.size() || to[old_to_new[p]] != from[p]) throw Error("reindex: component type mismatch");
  auto move = [&](Move m) {
    if (m.path.empty()) return m;
    m.path[0] = m.path[0] < n ? static_cast<std::uint32_t>(old_to_new[m.path[0]])
                              : static_cast<std::uint32_t>(m.path[0] - n + to.size());
    return m;
  };
  Strategy out(Type::curried(to, f.codomain()), f.window(), to.size());
  for (const auto& [v, r] : f.table()) {
    View nv;
    nv.reserve(v.size());
    for (const auto& jm : v) nv.push_back(JMove{move(jm.move), jm.justifier});
    out.set(std::move(nv), JMove{move(r.move), r.justifier});
  }
  return out;
}

Strategy mediate(const std::map<std::uint32_t, Strategy>& family, const Type& b, std::uint32_t window) {
  Type type = Type::arrow(Type::nat(), b);
  Strategy out(type, window, 1);
  const JMove root{Move::question({}), -1};
  out.set(View{root}, JMove{Move::question({0}), 0});
  auto shift = [](const JMove& jm) {
    JMove s = jm;
    if (!s.move.path.empty()) s.move.path[0] += 1;
    if (s.justifier > 0) s.justifier += 2;
    return s;
  };
  for (const auto& [x, fx] : family) {
    if (x >= window) throw Error("mediate: index outside window");
    if (fx.type() != b || fx.window() != window) throw Error("mediate: family member of the wrong arena");
    for (const auto& [v, r] : fx.table()) {
      View nv{root, JMove{Move::question({0}), 0}, JMove{Move::answer_to({0}, x), 1}};
      for (std::size_t k = 1; k < v.size(); ++k) nv.push_back(shift(v[k]));
      out.set(std::move(nv), shift(r));
    }
  }
  return out;
}

Strategy exp_iso(const Strategy& f) { return f; }

Tuple structural(StructuralKind kind, const StructuralArgs& a) {
  auto need_objects = [&](std::size_t k) {
    if (a.objects.size() < k) throw Error("structural: missing object data");
  };
  auto need_operands = [&](std::size_t k) {
    if (a.operands.size() < k) throw Error("structural: missing operands");
  };
  switch (kind) {
    case StructuralKind::Identity:
    case StructuralKind::Der:
      need_objects(1);
      return {identity(a.objects[0], a.window)};
    case StructuralKind::Con:
      need_objects(1);
      return contraction(a.objects[0], a.window);
    case StructuralKind::Weak:
      return weakening();
    case StructuralKind::Promote:
      need_operands(1);
      return {promote(a.operands[0])};
    case StructuralKind::Pair:
      need_operands(2);
      if (a.operands[0].domain() != a.operands[1].domain()) throw Error("pair: domains differ");
      return a.operands;
    case StructuralKind::Proj:
      return {projection(a.objects, a.index, a.window)};
    case StructuralKind::Curry:
      need_operands(1);
      return {curry(a.operands[0])};
    case StructuralKind::Uncurry:
      need_operands(1);
      return {uncurry(a.operands[0])};
    case StructuralKind::Ap:
      need_objects(1);
      if (!a.objects[0].is_arrow()) throw Error("Ap: object is not a function type");
      return {application(a.objects[0], a.window)};
    case StructuralKind::Bot:
      return {bottom(Type::curried(a.objects, a.target), a.window, a.objects.size())};
    case StructuralKind::Point:
      return {point(a.value, a.window)};
    case StructuralKind::Mediate:
      return {mediate(a.family, a.target, a.window)};
    case StructuralKind::ExpIso:
    case StructuralKind::ExpIsoUnit:
      need_operands(1);
      return {exp_iso(a.operands[0])};
  }
  throw Error("structural: unknown kind");
}

}  // namespace pcf
