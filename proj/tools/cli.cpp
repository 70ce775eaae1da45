#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcf/fullabs.hpp"
#include "pcf/stlc.hpp"

namespace pcf {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Text mode prints human lines only; json-lines mode prints records only.
class Reporter {
 public:
  Reporter(std::ostream& out, bool json_lines) : out_(out), json_(json_lines) {}
  void line(const std::string& s) {
    if (!json_) out_ << s << '\n';
  }
  void record(const json& r) {
    if (json_) out_ << r.dump() << '\n';
  }
  bool json_lines() const { return json_; }

 private:
  std::ostream& out_;
  bool json_;
};

// Thrown for outcomes that are not errors of the input: divergence and
// failed checks carry their own exit code.
struct Exit {
  int code;
};

struct Options {
  std::string report = "text";
  std::string file, file2, strategy_file, emit, type, suite, dir;
  std::uint64_t fuel = kDefaultFuel;
  std::uint32_t window = kDefaultWindow;
  std::size_t unroll = kDefaultUnroll;
  std::size_t norm_bound = 5;
  std::size_t depth = 8;
  std::size_t steps = 20000;
  std::size_t k = 0;
  std::size_t k_max = 32;
  std::size_t cases = 200;
  std::uint64_t seed = 0;
  std::size_t size = 7;
  bool model = false;
  bool lazy = false;
  bool intrinsic = false;
};

Term load_term(const std::string& path) { return read_term_file(path); }

// A strategy file, or a closed term denoted at the given bounds.
Strategy load_strategy(const std::string& path, const Options& o) {
  if (fs::path(path).extension() == ".pcf") return denote(load_term(path), o.unroll, o.window);
  return read_strategy_file(path);
}

std::string outcome_text(const Outcome& r) { return r.converges() ? std::to_string(r.value) : "diverges"; }

void cmd_run(const Options& o, Reporter& rep) {
  Term m = load_term(o.file);
  Type t = typecheck(m);
  if (t != Type::nat()) throw TypeError("run: program has type " + t.str() + ", expected nat");
  Outcome r = evaluate(m, o.fuel);
  rep.record({{"command", "run"}, {"file", o.file}, {"fuel", o.fuel}, {"verdict", outcome_text(r)}, {"steps", r.steps}});
  if (!r.converges()) {
    rep.line("fuel exhausted after " + std::to_string(r.steps) + " steps");
    throw Exit{kBounds};
  }
  rep.line(std::to_string(r.value));
}

void cmd_denote(const Options& o, Reporter& rep) {
  Strategy f = denote(load_term(o.file), o.unroll, o.window);
  if (!o.emit.empty()) write_strategy_file(f, o.emit);
  rep.record({{"command", "denote"}, {"file", o.file}, {"unroll", o.unroll}, {"window", o.window},
              {"norm", f.norm()}, {"strategy", f.serialize()}});
  if (o.emit.empty())
    rep.line(f.serialize());
  else
    rep.line("wrote " + o.emit + " (norm " + std::to_string(f.norm()) + ")");
}

void cmd_tree(const Options& o, Reporter& rep) {
  Term m = load_term(o.file);
  EvalTree t;
  if (o.model) {
    t = tree_of_strategy(denote(m, o.unroll, o.window), o.depth);
  } else {
    TreeOptions opts;
    opts.window = o.window;
    opts.depth = o.depth;
    opts.steps = o.steps;
    if (!o.lazy) opts.unroll = o.unroll;
    t = tree_of_term(m, opts);
  }
  rep.record({{"command", "tree"}, {"file", o.file}, {"depth", o.depth}, {"tree", t.str()}});
  rep.line(t.str());
}

void cmd_approx(const Options& o, Reporter& rep) {
  Strategy f = denote(load_term(o.file), o.unroll, o.window);
  Strategy p = approximant(f, o.k);
  Term m = extract_term_pk(f, o.k);
  if (!o.emit.empty()) write_strategy_file(p, o.emit);
  rep.record({{"command", "approx"}, {"file", o.file}, {"k", o.k}, {"term", m.str()}, {"strategy", p.serialize()}});
  rep.line(m.str());
  if (o.emit.empty()) rep.line(p.serialize());
}

void cmd_extract(const Options& o, Reporter& rep) {
  Strategy f = load_strategy(o.strategy_file, o);
  Term m = extract_term(f);
  rep.record({{"command", "extract"}, {"file", o.strategy_file}, {"term", m.str()}});
  rep.line(m.str());
}

void cmd_decompose(const Options& o, Reporter& rep) {
  Strategy f = load_strategy(o.strategy_file, o);
  Decomposition d = decompose(f);
  json r{{"command", "decompose"}, {"file", o.strategy_file}};
  switch (d.kind) {
    case Decomposition::Kind::Bot:
      r["kind"] = "bot";
      rep.line("bot");
      break;
    case Decomposition::Kind::Const:
      r["kind"] = "const";
      r["value"] = d.value;
      rep.line("const " + std::to_string(d.value));
      break;
    case Decomposition::Kind::Total: {
      r["kind"] = "total";
      r["head"] = d.head + 1;
      rep.line("total head x" + std::to_string(d.head + 1));
      json args = json::array(), branches = json::object();
      for (std::size_t j = 0; j < d.args.size(); ++j) {
        args.push_back(d.args[j].serialize());
        rep.line("arg " + std::to_string(j + 1) + ": " + extract_term(d.args[j]).str());
      }
      for (const auto& [n, h] : d.branches) {
        branches[std::to_string(n)] = h.serialize();
        rep.line("branch " + std::to_string(n) + ": " + extract_term(h).str());
      }
      r["args"] = args;
      r["branches"] = branches;
      break;
    }
  }
  rep.record(r);
}

void cmd_compare(const Options& o, Reporter& rep) {
  Term m = load_term(o.file), n = load_term(o.file2);
  Verdict v;
  if (o.intrinsic) {
    v = intrinsic_leq(denote(m, o.unroll, o.window), denote(n, o.unroll, o.window), o.norm_bound, o.window);
    if (v.witness_strategy) v.witness_term = extract_term(*v.witness_strategy);
  } else {
    v = obs_compare(m, n, o.norm_bound, o.fuel, o.window);
  }
  json r{{"command", "compare"}, {"left", o.file}, {"right", o.file2},
         {"mode", o.intrinsic ? "intrinsic" : "observational"}, {"norm_bound", o.norm_bound},
         {"window", o.window}, {"tests", v.tests_tried},
         {"verdict", v.separated ? "separated" : "related-up-to-bounds"}};
  rep.line(v.separated ? "separated" : "related-up-to-bounds");
  rep.line("tests " + std::to_string(v.tests_tried));
  if (v.separated) {
    r["value"] = v.value;
    r["witness_term"] = v.witness_term->str();
    r["witness_strategy"] = v.witness_strategy->serialize();
    rep.line("value " + std::to_string(v.value));
    rep.line("witness " + v.witness_term->str());
    if (!o.emit.empty()) {
      write_strategy_file(*v.witness_strategy, o.emit);
      rep.line("wrote " + o.emit);
    } else {
      rep.line(v.witness_strategy->serialize());
    }
  }
  rep.record(r);
}

void cmd_axioms(const Options& o, Reporter& rep) {
  std::vector<Axiom> suites;
  if (o.suite == "all")
    suites = {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5};
  else
    suites = {parse_axiom(o.suite)};
  CheckBounds b{o.window, o.norm_bound};
  bool ok = true;
  for (Axiom a : suites) {
    auto observe = [&](const CheckFailure& c, bool passed) {
      rep.record({{"suite", axiom_name(a)}, {"case", c.index}, {"seed", o.seed}, {"inputs", c.inputs},
                  {"verdict", passed ? "pass" : "fail"}, {"witness", c.witness}});
    };
    CheckReport r = check_axiom(a, o.cases, o.seed, b, observe);
    ok = ok && r.passed();
    rep.line(axiom_name(a) + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) +
             " failures (seed " + std::to_string(o.seed) + ", window " + std::to_string(o.window) +
             ", norm bound " + std::to_string(o.norm_bound) + ")");
    for (const auto& f : r.failures) {
      rep.line("  case " + std::to_string(f.index) + ": " + f.witness);
      rep.line("  inputs:\n" + f.inputs);
    }
  }
  rep.line(ok ? "all pass" : "FAILED");
  if (!ok) throw Exit{kCheckFailed};
}

void cmd_stlc(const Options& o, Reporter& rep) {
  Type t = parse_type(o.type);
  CompletenessReport r = check_full_completeness(t, o.size, o.norm_bound);
  for (const auto& f : r.failures) rep.record({{"check", "stlc"}, {"type", t.str()}, {"verdict", "fail"}, {"witness", f}});
  json nfs = json::array();
  for (const auto& m : r.normal_forms) nfs.push_back(m.str());
  rep.record({{"check", "stlc"}, {"type", t.str()}, {"size", o.size}, {"norm_bound", o.norm_bound},
              {"normal_forms", nfs}, {"strategies", r.strategies}, {"injective", r.injective},
              {"boundary", r.boundary}, {"verdict", r.passed() ? "pass" : "fail"}});
  rep.line("type " + t.str());
  rep.line("normal forms (size <= " + std::to_string(o.size) + "): " + std::to_string(r.normal_forms.size()));
  for (const auto& m : r.normal_forms) rep.line("  " + m.str());
  rep.line("total strategies (norm <= " + std::to_string(o.norm_bound) + "): " + std::to_string(r.strategies));
  for (const auto& s : r.boundary) rep.line("  beyond the size bound: " + s);
  rep.line(std::string("injective ") + (r.injective ? "yes" : "no"));
  for (const auto& f : r.failures) rep.line("failure: " + f);
  rep.line(r.passed() ? "pass" : "FAILED");
  if (!r.passed()) throw Exit{kCheckFailed};
}

void cmd_corpus(const Options& o, Reporter& rep) {
  fs::path dir(o.dir);
  std::ifstream manifest(dir / "manifest.tsv");
  if (!manifest) throw Error("corpus: no manifest.tsv in " + o.dir);
  std::size_t total = 0, bad = 0;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string name, expected;
    in >> name >> expected;
    AdequacyReport r = adequacy_check(load_term((dir / name).string()), o.fuel, o.k_max, o.window);
    std::string op = outcome_text(r.operational);
    std::string den = r.denoted ? std::to_string(*r.denoted) : "diverges";
    bool ok = r.agree && op == expected;
    ++total;
    if (!ok) ++bad;
    rep.record({{"check", "adequacy"}, {"file", name}, {"expected", expected}, {"operational", op},
                {"denotational", den}, {"k", r.first_k ? json(*r.first_k) : json(nullptr)},
                {"verdict", ok ? "pass" : "fail"}});
    rep.line(name + ": expected " + expected + ", operational " + op + ", denotational " + den +
             (r.first_k ? " at k=" + std::to_string(*r.first_k) : "") + (ok ? "" : "  MISMATCH"));
  }
  rep.line(std::to_string(total - bad) + "/" + std::to_string(total) + " agree");
  if (bad) throw Exit{kCheckFailed};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Options o;
  CLI::App app{"Compact innocent strategies for PCF", "pcf"};
  app.require_subcommand(1);
  app.add_option("--report", o.report, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));

  auto window = [&](CLI::App* c) { c->add_option("--window", o.window, "answers per nat node")->check(CLI::Range(1u, 64u)); };
  auto unroll = [&](CLI::App* c) { c->add_option("--unroll", o.unroll, "fixpoint chain index for Y"); };
  auto existing = [](CLI::App* c, const char* name, std::string& slot, const char* what) {
    c->add_option(name, slot, what)->required()->check(CLI::ExistingFile);
  };

  auto* run = app.add_subcommand("run", "evaluate a closed nat program");
  existing(run, "FILE", o.file, "program");
  run->add_option("--fuel", o.fuel, "rule applications allowed");

  auto* den = app.add_subcommand("denote", "print the strategy of a closed term");
  existing(den, "FILE", o.file, "term");
  unroll(den);
  window(den);
  den->add_option("--emit", o.emit, "write a strategy file instead of printing");

  auto* tree = app.add_subcommand("tree", "evaluation tree of a closed term");
  existing(tree, "FILE", o.file, "term");
  tree->add_option("--depth", o.depth, "node levels before cutting");
  window(tree);
  unroll(tree);
  tree->add_option("--steps", o.steps, "steps per head normalization");
  tree->add_flag("--lazy", o.lazy, "unfold Y on demand instead of at the unroll index");
  tree->add_flag("--model", o.model, "read the tree off the denotation instead");

  auto* approx = app.add_subcommand("approx", "p_k approximant of a closed term");
  existing(approx, "FILE", o.file, "term");
  approx->add_option("-k", o.k, "approximation level")->required();
  unroll(approx);
  window(approx);
  approx->add_option("--emit", o.emit, "write the approximant to a strategy file");

  auto* extract = app.add_subcommand("extract", "term defining a compact strategy");
  existing(extract, "STRATEGY-FILE", o.strategy_file, "strategy file, or a .pcf term");
  unroll(extract);
  window(extract);

  auto* decomp = app.add_subcommand("decompose", "canonical form of a strategy");
  existing(decomp, "STRATEGY-FILE", o.strategy_file, "strategy file, or a .pcf term");
  unroll(decomp);
  window(decomp);

  auto* cmp = app.add_subcommand("compare", "search for a test separating two closed terms");
  existing(cmp, "FILE1", o.file, "left term");
  existing(cmp, "FILE2", o.file2, "right term");
  cmp->add_option("--norm-bound", o.norm_bound, "largest test norm");
  cmp->add_option("--fuel", o.fuel, "rule applications per test run");
  window(cmp);
  unroll(cmp);
  cmp->add_flag("--intrinsic", o.intrinsic, "compare denotations instead of running the tests");
  cmp->add_option("--emit", o.emit, "write the witness strategy to a file");

  auto* ax = app.add_subcommand("axioms", "run an axiom suite");
  ax->add_option("--suite", o.suite, "A1..A5 or all")->required()->check(CLI::IsMember({"A1", "A2", "A3", "A4", "A5", "all"}));
  ax->add_option("--cases", o.cases, "generated cases");
  ax->add_option("--seed", o.seed, "generator seed (PCF_SEED overrides)");
  window(ax);
  ax->add_option("--norm-bound", o.norm_bound, "largest generated norm");

  auto* stlc = app.add_subcommand("stlc", "pure simply-typed fragment");
  stlc->require_subcommand(1);
  auto* check = stlc->add_subcommand("check", "bounded full-completeness check");
  check->add_option("--type", o.type, "pure type, e.g. (i->i)->i->i")->required();
  check->add_option("--size", o.size, "largest normal form size");
  check->add_option("--norm", o.norm_bound, "largest strategy norm");

  auto* corpus = app.add_subcommand("corpus", "adequacy over a program corpus");
  corpus->add_option("DIR", o.dir, "directory with manifest.tsv")->check(CLI::ExistingDirectory);
  corpus->add_option("--fuel", o.fuel, "rule applications allowed");
  corpus->add_option("--k-max", o.k_max, "largest unroll index tried");
  window(corpus);
  o.dir = "corpus/adequacy";

  std::vector<std::string> argv{"pcf"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> cargv;
  for (auto& a : argv) cargv.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsage, out.str(), err.str()};
  }
  if (const char* s = std::getenv("PCF_SEED")) {
    try {
      o.seed = std::stoull(s);
    } catch (const std::exception&) {
      return {kUsage, "", "PCF_SEED is not a number: " + std::string(s) + "\n"};
    }
  }

  Reporter rep(out, o.report == "json-lines");
  int code = kOk;
  try {
    if (*run) cmd_run(o, rep);
    else if (*den) cmd_denote(o, rep);
    else if (*tree) cmd_tree(o, rep);
    else if (*approx) cmd_approx(o, rep);
    else if (*extract) cmd_extract(o, rep);
    else if (*decomp) cmd_decompose(o, rep);
    else if (*cmp) cmd_compare(o, rep);
    else if (*ax) cmd_axioms(o, rep);
    else if (*check) cmd_stlc(o, rep);
    else if (*corpus) cmd_corpus(o, rep);
  } catch (const Exit& e) {
    code = e.code;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    code = kUsage;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << '\n';
    code = kUsage;
  } catch (const Error& e) {
    // Everything else the library refuses is a bound: window, caps, limits.
    err << "error: " << e.what() << '\n';
    code = kBounds;
  }
  return {code, out.str(), err.str()};
}

}  // namespace pcf
