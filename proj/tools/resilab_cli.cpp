// resilab command-line front end. Exit status: 0 ok, 1 error, 2 contradiction.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "resilab/resilab.hpp"

using namespace resilab;
using nlohmann::json;

namespace {

constexpr int kContradiction = 2;

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b");
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

json set_json(const VertexSet& s) { return s.ids(); }

struct Input {
  std::string graph;
  std::string minus;

  void attach(CLI::App* cmd, bool with_minus = true) {
    cmd->add_option("--in", graph, "graph edge-list file")->required()->check(CLI::ExistingFile);
    if (with_minus) cmd->add_option("--minus", minus, "deletion plan to apply first")->check(CLI::ExistingFile);
  }

  Graph base() const { return io::load_graph(graph); }

  Graph residual(const Graph& g) const {
    if (minus.empty()) return g;
    const DeletionPlan plan = load_plan(minus, g);
    const BudgetAudit audit = validate_budget(plan, g);
    if (!audit.diagnostic.empty() && audit.diagnostic.find("absent") != std::string::npos)
      throw std::runtime_error(minus + ": " + audit.diagnostic);
    return plan.residual(g);
  }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- gen -------------------------------------------------------------------

void add_gen(CLI::App& app) {
  auto* gen = app.add_subcommand("gen", "generate a graph")->require_subcommand(1);
  static std::string out;
  static GnpParams gnp;
  static RegularParams reg;
  static int q = 13;
  auto save = [](const Graph& g, json meta) {
    if (out.empty()) {
      io::write_graph(std::cout, g);
    } else {
      io::save_graph(out, g, std::move(meta));
      std::cerr << "wrote " << out << " (" << g.order() << " vertices, " << g.edge_count() << " edges)\n";
    }
  };

  auto* g1 = gen->add_subcommand("gnp", "binomial random graph G(n,p)");
  g1->add_option("--n", gnp.n)->required();
  g1->add_option("--p", gnp.p)->required();
  g1->add_option("--seed", gnp.seed);
  g1->add_option("--out", out, "output file (stdout if omitted)");
  g1->callback([save] { save(gen_gnp(gnp), {{"generator", "gnp"}, {"n", gnp.n}, {"p", gnp.p}, {"seed", gnp.seed}}); });

  auto* g2 = gen->add_subcommand("paley", "Paley graph on Z_q");
  g2->add_option("--q", q)->required();
  g2->add_option("--out", out);
  g2->callback([save] { save(gen_paley(q), {{"generator", "paley"}, {"q", q}}); });

  auto* g3 = gen->add_subcommand("regular", "random d-regular graph");
  g3->add_option("--n", reg.n)->required();
  g3->add_option("--d", reg.d)->required();
  g3->add_option("--seed", reg.seed);
  g3->add_option("--out", out);
  g3->callback([save] {
    save(gen_random_regular(reg), {{"generator", "regular"}, {"n", reg.n}, {"d", reg.d}, {"seed", reg.seed}});
  });
}

// --- certify / mixing ------------------------------------------------------

SolverMode parse_mode(const std::string& m) {
  if (m == "auto") return SolverMode::automatic;
  if (m == "dense") return SolverMode::dense;
  if (m == "iterative") return SolverMode::iterative;
  throw std::invalid_argument("mode must be auto, dense or iterative");
}

json cert_json(const PseudoRandomCert& c) {
  return {{"n", c.n},         {"d_min", c.d_min},           {"d_max", c.d_max},     {"d_nominal", c.d_nominal},
          {"eps_prime", c.eps_prime}, {"lambda", c.lambda}, {"method", to_string(c.method)},
          {"residual", c.residual},   {"connected", c.connected}};
}

void add_certify(CLI::App& app) {
  static Input in;
  static std::string mode = "auto";
  static bool as_json = false;
  static std::vector<int> ks;
  auto* cmd = app.add_subcommand("certify", "measure (n, eps', d, lambda) of a graph");
  in.attach(cmd);
  cmd->add_option("--mode", mode, "eigen solver: auto|dense|iterative");
  cmd->add_option("--k", ks, "report d^(k-1)/(n lambda^(k-2)) for these k");
  cmd->add_flag("--json", as_json);
  cmd->callback([] {
    const Graph g = in.residual(in.base());
    const PseudoRandomCert c = certify_ndl(g, parse_mode(mode));
    if (!c.connected) std::cerr << "warning: graph is disconnected; lambda equals the top eigenvalue of a component\n";
    json j = cert_json(c);
    for (int k : ks) j["ratio"][std::to_string(k)] = pseudo_random_ratio(c, k);
    if (as_json) return print(j);
    std::printf("n=%d d=%d (min %d, max %d) eps'=%.4f lambda=%.6f [%s, residual %.2g]\n", c.n, c.d_nominal, c.d_min,
                c.d_max, c.eps_prime, c.lambda, to_string(c.method), c.residual);
    for (int k : ks) std::printf("  k=%d: d^(k-1)/(n lambda^(k-2)) = %.4g\n", k, pseudo_random_ratio(c, k));
  });
}

void add_mixing(CLI::App& app) {
  static Input in;
  static std::size_t samples = 0;
  static int max_size = 0;
  static std::uint64_t seed = 0;
  static bool as_json = false;
  auto* cmd = app.add_subcommand("mixing", "audit the expander mixing bound");
  in.attach(cmd);
  cmd->add_option("--samples", samples, "random (X,Y) pairs; 0 enumerates all small sets");
  cmd->add_option("--max-size", max_size, "largest |X|,|Y| when enumerating");
  cmd->add_option("--seed", seed);
  cmd->add_flag("--json", as_json);
  cmd->callback([] {
    const Graph g = in.residual(in.base());
    const PseudoRandomCert c = certify_ndl(g);
    const MixingMode mode = samples ? MixingMode::sampled(samples, seed) : MixingMode::exhaustive(max_size);
    const MixingReport r = mixing_check(g, c, mode);
    json j = {{"pairs_checked", r.pairs_checked}, {"max_violation", r.max_violation},
              {"lambda", c.lambda}, {"worst_x", set_json(r.worst_x)}, {"worst_y", set_json(r.worst_y)}};
    if (as_json) return print(j);
    std::printf("%zu pairs, max violation %.6g (%s)\n", r.pairs_checked, r.max_violation,
                r.max_violation <= 1e-6 ? "bound holds" : "bound violated");
  });
}

// --- attack ----------------------------------------------------------------

json audit_json(const DeletionPlan& plan, const BudgetAudit& a) {
  json j = {{"kind", plan.kind},         {"pass", a.pass},           {"deleted", plan.edges.size()},
            {"budget", plan.budget},     {"complete", plan.complete}, {"certified", plan.certified},
            {"attempts", plan.attempts}, {"diagnostic", a.diagnostic}};
  if (a.worst_vertex) j["worst_vertex"] = *a.worst_vertex;
  return j;
}

void add_attack(CLI::App& app) {
  static Input in;
  static std::string kind = "bipartition", out, profile = "thorough";
  static int l = 3, retries = 5;
  static std::optional<int> budget;
  static std::optional<double> fraction;
  static std::uint64_t seed = 0;
  static bool audit_flag = false;
  auto* cmd = app.add_subcommand("attack", "build an edge-deletion plan");
  in.attach(cmd, false);
  cmd->add_option("--kind", kind, "bipartition|destroy-cycle|random")
      ->check(CLI::IsMember({"bipartition", "destroy-cycle", "random"}));
  cmd->add_option("--l", l, "cycle length for destroy-cycle");
  cmd->add_option("--budget", budget, "per-vertex deletion budget");
  cmd->add_option("--fraction", fraction, "budget as a fraction of the average degree (random: of each degree)");
  cmd->add_option("--retries", retries);
  cmd->add_option("--budget-profile", profile, "search budget for destroy-cycle: fast|thorough");
  cmd->add_option("--seed", seed);
  cmd->add_option("--out", out, "plan file to write");
  cmd->add_flag("--json-audit", audit_flag, "print the budget audit as JSON");
  cmd->callback([] {
    const Graph g = in.base();
    DeletionPlan plan;
    if (kind == "random") {
      if (!fraction) throw std::invalid_argument("random adversary needs --fraction");
      plan = random_capped_adversary(g, *fraction, seed);
    } else {
      if (!budget && !fraction) throw std::invalid_argument("give --budget or --fraction");
      const int b = budget ? *budget : budget_from_fraction(*fraction, g.average_degree());
      plan = kind == "bipartition" ? bipartition_adversary(g, b, seed, retries)
                                   : cycle_destroyer(g, l, b, seed, SearchBudget::named(profile), retries);
    }
    if (!out.empty()) save_plan(out, plan, g.order());
    const BudgetAudit a = validate_budget(plan, g);
    if (audit_flag) {
      print(audit_json(plan, a));
    } else {
      std::printf("%s: deleted %zu edges, complete=%s, audit %s%s\n", plan.kind.c_str(), plan.edges.size(),
                  plan.complete ? "true" : "false", a.pass ? "pass" : "FAIL",
                  a.diagnostic.empty() ? "" : (" (" + a.diagnostic + ")").c_str());
    }
    if (!a.pass) throw std::runtime_error("plan failed its budget audit");
  });
}

// --- expand ----------------------------------------------------------------

void add_expand(CLI::App& app) {
  static Input in;
  static std::string check = "ratio", sizes = "1..2";
  static Vertex v = 0;
  static int depth = 2, l = 3, k = 5;
  static double eps = 0.1, delta_cap = 8.0, min_stop = 0.0;
  static std::optional<double> threshold;
  static std::size_t samples = 0;
  static std::uint64_t seed = 0;
  static int posa_t = 0;
  static bool as_json = false;
  auto* cmd = app.add_subcommand("expand", "expansion and layer checks");
  in.attach(cmd);
  cmd->add_option("--check", check, "ratio|layers|codegree|twin|halfspread")
      ->check(CLI::IsMember({"ratio", "layers", "codegree", "twin", "halfspread"}));
  cmd->add_option("--sizes", sizes, "set sizes a..b for ratio");
  cmd->add_option("--samples", samples, "sets per size for ratio (0: enumerate)");
  cmd->add_option("--posa-t", posa_t, "largest size for the 2|X|-1 hypothesis");
  cmd->add_option("--seed", seed);
  cmd->add_option("--v", v, "origin vertex");
  cmd->add_option("--depth", depth, "layer depth");
  cmd->add_option("--l", l, "codegree level parameter");
  cmd->add_option("--threshold", threshold, "codegree threshold (default ln n)");
  cmd->add_option("--k", k, "cycle length for twin layers");
  cmd->add_option("--eps", eps);
  cmd->add_option("--delta-cap", delta_cap, "twin-layer stop scale multiplier");
  cmd->add_option("--min-stop", min_stop, "twin-layer stop threshold floor");
  cmd->add_flag("--json", as_json);
  cmd->callback([] {
    const Graph base = in.base();
    const Graph g = in.residual(base);
    json j;
    if (check == "ratio") {
      auto [lo, hi] = parse_range(sizes);
      const ExpansionMode mode = samples ? ExpansionMode::sampled(samples, seed) : ExpansionMode::exhaustive();
      const ExpansionReport r = expansion_ratio(g, {lo, hi}, mode, posa_t);
      j = {{"sets_checked", r.sets_checked}, {"min_ratio", r.min_ratio}, {"witness", set_json(r.witness)},
           {"posa_t", r.posa_t}, {"posa_hypothesis_holds", r.posa_hypothesis_holds()},
           {"doubling_violations", r.doubling_violations}};
    } else if (check == "layers") {
      const LayerStructure ls = grow_layers(g, v, depth);
      j = {{"origin", v}, {"sizes", ls.sizes()}};
    } else if (check == "codegree") {
      const CodegreeVerdict c = codegree_check(g, v, l, threshold);
      j = {{"pass", c.pass}, {"threshold", c.threshold}, {"max_codegree", c.max_codegree},
           {"vertices_checked", c.vertices_checked}};
      if (c.worst) j["worst"] = *c.worst;
    } else if (check == "twin") {
      const PseudoRandomCert cert = certify_ndl(base);
      const TwinLayerStructure ts = grow_twin_layers(g, v, cert, eps, k, {delta_cap, min_stop});
      std::vector<std::size_t> x_sizes;
      for (const auto& x : ts.x_layers) x_sizes.push_back(x.size());
      j = {{"l", ts.l}, {"sizes", x_sizes}, {"growth_ratios", ts.growth_ratios}, {"capped", ts.capped},
           {"stop_threshold", ts.stop_threshold}, {"cap_size", ts.cap_size},
           {"violation", twin_layer_violation(g, ts)}};
    } else {
      const LayerStructure ls = grow_layers(g, v, depth);
      const HalfSpreadVerdict h = large_set_halfspread_check(g, ls.layers.back(), eps);
      j = {{"set_size", ls.layers.back().size()}, {"neighborhood", h.neighborhood}, {"required", h.required},
           {"pass", h.pass}};
    }
    if (as_json) return print(j);
    for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
  });
}

// --- cycles ----------------------------------------------------------------

json spectrum_json(const CycleSpectrum& s) {
  json j = {{"t_min", s.t_min}, {"t_max", s.t_max}, {"verdicts", json::array()}};
  if (s.anchor) j["anchor"] = *s.anchor;
  for (const auto& lv : s.verdicts) {
    json e = {{"t", lv.t}, {"verdict", to_string(lv.verdict)}, {"method", lv.method}};
    if (lv.witness) e["witness"] = lv.witness->vertices;
    if (!lv.diagnostic.empty()) e["diagnostic"] = lv.diagnostic;
    j["verdicts"].push_back(std::move(e));
  }
  return j;
}

std::string compress(const std::vector<int>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j + 1 < ts.size() && ts[j + 1] == ts[j] + 1) ++j;
    out += (out.empty() ? "" : ",") + std::to_string(ts[i]) + (j > i ? ".." + std::to_string(ts[j]) : "");
    i = j + 1;
  }
  return out.empty() ? "-" : out;
}

void add_cycles(CLI::App& app) {
  static Input in;
  static std::string range, strategy = "auto", profile = "thorough";
  static std::optional<Vertex> anchor;
  static std::uint64_t seed = 0;
  static int l = 2;
  static bool as_json = false;
  auto* cmd = app.add_subcommand("cycles", "decide which cycle lengths occur");
  in.attach(cmd);
  cmd->add_option("--range", range, "lengths a..b (default 3..n)");
  cmd->add_option("--anchor", anchor, "only cycles through this vertex");
  cmd->add_option("--strategy", strategy, "auto|oracle");
  cmd->add_option("--budget-profile", profile, "fast|thorough");
  cmd->add_option("--l", l, "layer depth for the medium-length construction");
  cmd->add_option("--seed", seed);
  cmd->add_flag("--json", as_json);
  cmd->callback([] {
    const Graph g = in.residual(in.base());
    SpectrumOptions opts;
    if (!range.empty()) std::tie(opts.t_min, opts.t_max) = parse_range(range);
    opts.anchor = anchor;
    opts.strategy = parse_strategy(strategy);
    opts.budget = SearchBudget::named(profile);
    opts.seed = seed;
    opts.l = l;
    const CycleSpectrum s = cycle_spectrum(g, opts);
    if (as_json) return print(spectrum_json(s));
    std::printf("found:            %s\n", compress(s.lengths(Verdict::found)).c_str());
    std::printf("absent-certified: %s\n", compress(s.lengths(Verdict::absent)).c_str());
    std::printf("unknown:          %s\n", compress(s.lengths(Verdict::unknown)).c_str());
  });
}

// --- probe / demo / bondy ---------------------------------------------------

void add_probe(CLI::App& app, int& status) {
  static std::string config_path, out_dir = ".";
  static int workers = 0;
  auto* cmd = app.add_subcommand("probe", "Monte Carlo resilience probe");
  cmd->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out-dir", out_dir, "directory for the CSV and JSON reports");
  cmd->add_option("--workers", workers, "override the worker count");
  cmd->callback([&status] {
    ExperimentConfig c = load_config(config_path);
    if (workers > 0) c.workers = workers;
    const ResilienceReport r = resilience_probe(c);
    emit_report(r, out_dir);
    for (const auto& p : r.points)
      std::printf("c=%.4f budget=%d: %d/%d succeeded [%.2f, %.2f]%s\n", p.fraction, p.budget, p.successes, p.valid,
                  p.wilson_lo, p.wilson_hi,
                  p.failure_mode ? (" first missing length " + std::to_string(*p.failure_mode)).c_str() : "");
    if (r.c_star)
      std::printf("c* ~ %.4f in [%.4f, %.4f]%s\n", *r.c_star, r.c_star_lo, r.c_star_hi,
                  fully_certified(r) ? "" : " (lower bound: some lengths were left unknown)");
    if (r.contradiction) {
      std::fprintf(stderr, "contradiction: a theorem-forced outcome was violated; see the JSON report\n");
      status = kContradiction;
    }
  });
}

void add_demo(CLI::App& app) {
  static int n = 400, seeds = 10;
  static double p = 0.03, fraction = 0.25;
  auto* demo = app.add_subcommand("demo", "demonstrations")->require_subcommand(1);
  auto* cmd = demo->add_subcommand("triangles", "triangle destroyer on G(n,p) across seeds");
  cmd->add_option("--n", n);
  cmd->add_option("--p", p);
  cmd->add_option("--seeds", seeds, "number of seeds (1..N)");
  cmd->add_option("--fraction", fraction, "budget as a fraction of np");
  cmd->callback([] {
    std::vector<std::uint64_t> list;
    for (int s = 1; s <= seeds; ++s) list.push_back(static_cast<std::uint64_t>(s));
    const TriangleDemoReport r = tightness_demo_triangles(n, p, list, fraction);
    std::printf("n=%d p=%g (p*sqrt(n)=%.3f) budget %.2f np\n", n, p, r.density_ratio, fraction);
    for (const auto& row : r.rows)
      std::printf("  seed %llu: budget %d, %s, deleted %zu edges, max per-vertex %d (%.3f np), "
                  "max triangles at a vertex %zu (n^2 p^3 = %.1f)\n",
                  static_cast<unsigned long long>(row.seed), row.budget, row.complete ? "triangle-free" : "blocked",
                  row.deleted_edges, row.max_deleted, row.max_fraction, row.max_vertex_triangles, row.triangle_scale);
    std::printf("complete in %d/%d seeds\n", r.complete_count(), seeds);
  });
}

void add_bondy(CLI::App& app, int& status) {
  static Input in;
  static std::uint64_t seed = 0;
  auto* cmd = app.add_subcommand("bondy", "check pancyclicity obligations");
  in.attach(cmd);
  cmd->add_option("--seed", seed);
  cmd->callback([&status] {
    const Graph g = in.residual(in.base());
    const BondyReport r = bondy_check(g, SearchBudget::thorough(), seed);
    std::printf("n=%d min degree %d: delta > n/2 %s\n", r.n, r.min_degree, r.dirac_hypothesis ? "holds" : "fails");
    std::printf("even-length obligations: %s\n", compress(r.even_obligations).c_str());
    if (!r.spectrum) std::printf("no obligation to check\n");
    else std::printf("forced lengths found: %zu/%zu\n", r.spectrum->lengths(Verdict::found).size(),
                     r.spectrum->verdicts.size());
    for (const auto& c : r.contradictions) std::fprintf(stderr, "contradiction: %s\n", c.c_str());
    if (!r.ok()) status = kContradiction;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resilab: local resilience experiments on random and pseudo-random graphs"};
  app.require_subcommand(1);
  int status = 0;
  add_gen(app);
  add_certify(app);
  add_mixing(app);
  add_attack(app);
  add_expand(app);
  add_cycles(app);
  add_probe(app, status);
  add_demo(app);
  add_bondy(app, status);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return status;
}
