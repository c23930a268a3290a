// creg: Betti tables, regularity and verification sweeps for edge ideals.
//
// Exit codes: 0 success / all instances pass, 1 mismatch, 2 usage or parse
// error.

#include <cstring>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "creg/cache.hpp"
#include "creg/complex.hpp"
#include "creg/formulas.hpp"
#include "creg/io.hpp"
#include "creg/verify.hpp"

using namespace creg;

namespace {

struct Globals {
  std::string field = "2";
  bool json = false;
  bool csv = false;
  std::string cache_dir;
  bool no_cache = false;
  int workers = 0;
  std::uint64_t seed = 1;
  int limit_vertices = kDefaultVertexLimit;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

class Context {
 public:
  explicit Context(const Globals& g) : g_(g), field_(Field::parse(g.field)) {
    if (g.workers < 0) throw UsageError("--workers must be >= 0");
    if (g.limit_vertices < 1 || g.limit_vertices > kMaxComplexVertices)
      throw UsageError("--limit-vertices must be in 1.." + std::to_string(kMaxComplexVertices));
    opts_.workers = g.workers;
    opts_.vertex_limit = g.limit_vertices;
    if (!g.cache_dir.empty() && !g.no_cache) cache_ = std::make_unique<BettiCache>(g.cache_dir);
  }

  Field field() const { return field_; }
  const HochsterOptions& hochster() const { return opts_; }
  const BettiCache* cache() const { return cache_.get(); }

  BettiTable betti(const Graph& g) const {
    if (cache_) return cache_->get_or_compute(g, field_, opts_);
    return hochster_betti_table(g, field_, opts_);
  }

  VerifyOptions verify_options() const {
    VerifyOptions v;
    v.field = field_;
    v.hochster = opts_;
    v.cache = cache_.get();
    v.seed = g_.seed;
    return v;
  }

 private:
  const Globals& g_;
  Field field_;
  HochsterOptions opts_;
  std::unique_ptr<BettiCache> cache_;
};

Graph load_graph(const std::string& spec) {
  try {
    return parse_graph_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_gen(const std::string& spec) {
  emit(graph_to_json(load_graph(spec)));
  return 0;
}

int cmd_betti(const Context& ctx, const Globals& g, const std::string& spec, bool zero_suppressed) {
  const auto t = ctx.betti(load_graph(spec));
  if (g.json && !g.csv)
    emit(betti_to_json(t));
  else
    std::cout << betti_to_csv(t, zero_suppressed);
  return 0;
}

int cmd_reg(const Context& ctx, const Globals& g, const std::string& spec) {
  const auto t = ctx.betti(load_graph(spec));
  const bool zero = t.is_zero_ideal();
  // reg and pd refer to I; the *_quotient keys refer to R/I.
  const int reg = zero ? 1 : t.regularity();
  const int pd = projective_dimension_or_minus_one(t);
  Json j = {{"reg", reg}, {"pd", pd}, {"reg_quotient", reg - 1}, {"pd_quotient", pd + 1}};
  if (zero) j["zero_ideal"] = true;
  if (g.json)
    emit(j);
  else
    std::cout << "reg " << reg << "\npd " << pd << "\n";
  return 0;
}

int cmd_euler(const Context& ctx, const Globals& g, const std::string& spec) {
  const auto c = chi_triple(load_graph(spec), ctx.field());
  Json j = {{"f_vector", c.f_vector},
            {"homology", c.homology},
            {"indpoly", c.indpoly},
            {"field", ctx.field().to_string()},
            {"agree", c.consistent()}};
  if (g.json)
    emit(j);
  else
    std::cout << "f-vector " << c.f_vector << "\nhomology " << c.homology << "\n-I(G,-1) " << c.indpoly
              << "\n" << (c.consistent() ? "agree" : "DISAGREE") << "\n";
  return c.consistent() ? 0 : 1;
}

int cmd_indpoly(const Globals& g, const std::string& spec) {
  const auto p = independence_polynomial(load_graph(spec));
  if (g.json)
    emit(polynomial_to_json(p));
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int nmin = 0;
  int nmax = 0;
  int count = 200;
  bool timing = false;
  bool compare_cache = false;
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  auto opts = ctx.verify_options();
  opts.nmin = a.nmin;
  opts.nmax = a.nmax;
  opts.count = a.count;
  VerifyReport report;
  try {
    report = run_verify_suite(a.suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json out = report.to_json(a.timing);
  bool ok = report.all_passed();
  if (a.compare_cache) {
    // Cold recomputation; cached and cold reports must agree.
    opts.cache = nullptr;
    const bool same = run_verify_suite(a.suite, opts).to_json(false) == report.to_json(false);
    out["cache_comparison"] = same ? "identical" : "DIFFERENT";
    ok = ok && same;
  }
  emit(out);
  return ok ? 0 : 1;
}

int formula_bounds(const Globals& g, const std::string& family, int t) {
  Json j;
  try {
    if (family == "moebius" || family == "prism") {
      const auto b = bound_cubic(family == "moebius" ? CubicKind::moebius : CubicKind::prism, t);
      j = {{"reg", b.reg}, {"pd", b.pd}};
    } else if (family == "A" || family == "B" || family == "D") {
      const auto fam = family == "A" ? LadderFamily::A : family == "B" ? LadderFamily::B : LadderFamily::D;
      const auto b = bound_family(fam, t);
      j = {{"reg", b.reg}, {"pd", b.pd ? Json(*b.pd) : Json(nullptr)}};
    } else {
      throw std::invalid_argument("family must be A, B, D, moebius or prism");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.json)
    emit(j);
  else
    std::cout << "reg <= " << j["reg"] << (j["pd"].is_null() ? "" : "\npd <= " + j["pd"].dump()) << "\n";
  return 0;
}

template <class F>
auto usage_guard(F f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool want_json = false;
  for (int i = 1; i < argc; ++i) want_json = want_json || std::strcmp(argv[i], "--json") == 0;
  auto fail = [&](const char* kind, const std::string& msg, int code) {
    if (want_json)
      emit({{"error", {{"kind", kind}, {"message", msg}}}});
    else
      std::cerr << "creg: " << msg << "\n";
    return code;
  };

  CLI::App app{"Betti tables and regularity of edge ideals"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Coefficient field: a prime p or Q")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--csv", g.csv, "CSV Betti table");
  app.add_option("--cache", g.cache_dir, "Directory memoizing Betti tables");
  app.add_flag("--no-cache", g.no_cache, "Ignore --cache");
  app.add_option("--workers", g.workers, "OpenMP threads (0: default)");
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--limit-vertices", g.limit_vertices, "Brute-force vertex limit")->capture_default_str();
  app.fallthrough();

  std::string spec;
  bool zero_suppressed = false;
  auto* gen = app.add_subcommand("gen", "Graph JSON for a spec");
  gen->add_option("graph", spec, "circulant:N:S, moebius:N, prism:N, A:t, B:t, D:t or a JSON path")->required();
  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  betti->add_option("graph", spec)->required();
  betti->add_flag("--zero-suppressed", zero_suppressed, "Blank zero cells in CSV");
  auto* reg = app.add_subcommand("reg", "Regularity and projective dimension of I(G)");
  reg->add_option("graph", spec)->required();
  auto* euler = app.add_subcommand("euler", "Reduced Euler characteristic of Ind(G), three ways");
  euler->add_option("graph", spec)->required();
  auto* indpoly = app.add_subcommand("indpoly", "Independence polynomial");
  indpoly->add_option("graph", spec)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Closed forms against brute force");
  verify->add_option("suite", va.suite)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemmas", "hoshino", "properties"}));
  verify->add_option("--nmin", va.nmin, "Smallest order (suite default if 0)");
  verify->add_option("--nmax", va.nmax, "Largest order (suite default if 0)");
  verify->add_option("--count", va.count, "Random graphs for the properties suite")->capture_default_str();
  verify->add_flag("--timing", va.timing, "Include wall-clock seconds per instance");
  verify->add_flag("--compare-cache", va.compare_cache, "Recompute without the cache and compare");

  auto* formula = app.add_subcommand("formula", "Closed forms and bounds");
  formula->require_subcommand(1);
  int fa = 0, fb = 0;
  auto* f_hat = formula->add_subcommand("reg-hat-j", "reg of C_n with jump j removed");
  f_hat->add_option("n", fa)->required();
  f_hat->add_option("j", fb)->required();
  auto* f_cubic = formula->add_subcommand("reg-cubic", "reg of C_{2n}(a, n)");
  f_cubic->add_option("n", fa)->required();
  f_cubic->add_option("a", fb)->required();
  std::string variant = to_string(kHoshinoDefault), kind = "moebius";
  auto* f_hoshino = formula->add_subcommand("hoshino", "Independence polynomial from the closed form");
  f_hoshino->add_option("n", fa)->required();
  f_hoshino->add_option("--variant", variant)->check(CLI::IsMember({"printed", "corrected"}))->capture_default_str();
  f_hoshino->add_option("--kind", kind, "moebius, prism, or In for I_n alone")
      ->check(CLI::IsMember({"moebius", "prism", "In"}))
      ->capture_default_str();
  std::string family;
  auto* f_bounds = formula->add_subcommand("bounds", "Upper bounds on reg and pd");
  f_bounds->add_option("family", family, "A, B, D, moebius or prism")->required();
  f_bounds->add_option("t", fa, "t for ladders, n for moebius/prism")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    if (*gen) return cmd_gen(spec);
    if (*indpoly) return cmd_indpoly(g, spec);

    if (*formula) {
      Json j;
      std::string text;
      usage_guard([&] {
        if (*f_hat) {
          const int r = reg_hat_j(fa, fb);
          j = {{"reg", r}};
          text = std::to_string(r);
        } else if (*f_cubic) {
          const int r = reg_cubic(CubicParams(fa, fb));
          j = {{"reg", r}};
          text = std::to_string(r);
        } else if (*f_hoshino) {
          const auto v = parse_hoshino_variant(variant);
          const auto p = kind == "In" ? hoshino_In(fa, v)
                                      : hoshino_cubic(kind == "moebius" ? CubicKind::moebius : CubicKind::prism, fa, v);
          j = polynomial_to_json(p);
          j["variant"] = variant;
          text = p.to_string();
        }
        return 0;
      });
      if (*f_bounds) return formula_bounds(g, family, fa);
      if (g.json)
        emit(j);
      else
        std::cout << text << "\n";
      return 0;
    }

    const Context ctx = usage_guard([&] { return Context(g); });
    if (*betti) return usage_guard([&] { return cmd_betti(ctx, g, spec, zero_suppressed); });
    if (*reg) return usage_guard([&] { return cmd_reg(ctx, g, spec); });
    if (*euler) return usage_guard([&] { return cmd_euler(ctx, g, spec); });
    if (*verify) return cmd_verify(ctx, va);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 2);
  }
  return 2;
}
