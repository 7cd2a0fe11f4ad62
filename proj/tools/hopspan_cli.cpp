// hopspan command-line tool. Exit codes: 0 ok, 1 verification failure,
// 2 usage or input error. Errors go to stderr as "error: <code>: <message>".

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "hopspan/hopspan.hpp"

using namespace hopspan;

namespace {

// Verification failures that are not usage errors.
class Failed : public std::runtime_error {
 public:
  Failed(std::string code, const std::string& what)
      : std::runtime_error(what), code(std::move(code)) {}
  std::string code;
};

const std::set<std::string> kUsageCodes{"invalid_argument", "parse_error", "io_error",
                                        "duplicate_points"};

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  auto out = open_out(path);
  write(out);
}

PointSet load_points(const std::string& path) {
  auto in = open_in(path);
  return read_points(in);
}

RootedWeightedTree load_tree(const std::string& path) {
  auto in = open_in(path);
  return read_tree(in);
}

SpannerGraph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

std::string lower_kind(const std::string& kind) {
  return kind.rfind("tree-", 0) == 0 ? kind.substr(5) : kind;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind = "uniform";
  int n = 0;
  int dim = 2;
  std::uint64_t seed = 1;
  bool unit = false;
  std::string out;
};

void run_gen(const GenArgs& a) {
  if (a.n < 1) throw invalid_argument("n must be >= 1");
  if (a.kind.rfind("tree-", 0) == 0) {
    const auto t = generate_tree(parse_tree_kind(lower_kind(a.kind)), a.n, a.seed,
                                 a.unit ? WeightKind::kUnit : WeightKind::kUniform);
    emit(a.out, [&](std::ostream& o) { write_tree(o, t); });
    return;
  }
  const auto pts = generate_points(parse_point_kind(a.kind), a.n, a.dim, a.seed);
  emit(a.out, [&](std::ostream& o) { write_points(o, pts); });
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string variant;
  int k = 4;
  double eps = 0.5;
  double s = 8.0;
  std::string points, tree, list = "balanced";
  int n = 0;
  std::string out, stats;
};

void run_build(const BuildArgs& a) {
  if (a.k < 2) throw invalid_argument("k must be >= 2 (got " + std::to_string(a.k) + ")");
  SpannerGraph g;
  json stats;
  stats["variant"] = a.variant;
  stats["k"] = a.k;
  if (a.variant == "line-low" || a.variant == "line-high") {
    std::optional<LineInstance> inst;
    if (!a.points.empty())
      inst.emplace(LineInstance::from_points(load_points(a.points)));
    else if (a.n > 0)
      inst.emplace(LineInstance::uniform(a.n));
    else
      throw invalid_argument("line variants need --points or --n");
    g = a.variant == "line-low"
            ? build_line_low(*inst, a.k, LineOptions{parse_list_kind(a.list)})
            : build_line_high(*inst, a.k);
    stats["n"] = inst->size();
  } else if (a.variant == "tree-low" || a.variant == "tree-high") {
    if (a.tree.empty()) throw invalid_argument("tree variants need --tree");
    const auto t = load_tree(a.tree);
    TreeBuildInfo info;
    g = a.variant == "tree-low" ? build_tree_low(t, a.k, {}, &info)
                                : build_tree_high(t, a.k, &info);
    stats["n"] = t.size();
    stats["k_used"] = info.k_used;
    stats["levels"] = info.levels;
    const auto load = compute_load(t, g);
    stats["max_load"] = load.max_load;
  } else if (a.variant == "euclid-low" || a.variant == "euclid-high") {
    if (a.points.empty()) throw invalid_argument("euclid variants need --points");
    const auto pts = load_points(a.points);
    EuclidStats es;
    g = build_euclid_spanner(pts, a.eps, a.k,
                             a.variant == "euclid-low" ? TreeSpannerVariant::kLow
                                                       : TreeSpannerVariant::kHigh,
                             &es);
    stats["n"] = es.n;
    stats["eps"] = es.eps;
    stats["eps_wspd"] = es.eps_wspd;
    stats["eps_walk"] = es.eps_walk;
    stats["m"] = es.m;
    stats["lambda"] = es.lambda;
    stats["lightness"] = es.lightness;
  } else if (a.variant == "wspd") {
    if (a.points.empty()) throw invalid_argument("wspd variant needs --points");
    const auto pts = load_points(a.points);
    g = wspd_spanner(pts, a.s);
    stats["n"] = pts.size();
    stats["s"] = a.s;
    if (pts.size() > 1) stats["lightness"] = lightness(g, euclidean_metric(pts));
  } else {
    throw invalid_argument("unknown variant '" + a.variant + "'");
  }
  stats["edges"] = g.edge_count();
  stats["max_degree"] = max_degree(g);
  emit(a.out, [&](std::ostream& o) { write_graph(o, g); });
  if (!a.stats.empty()) emit(a.stats, [&](std::ostream& o) { write_json(o, stats); });
}

// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::string tree;
  int d = 0;
  std::string out;
};

void run_decompose(const DecomposeArgs& a) {
  const auto t = load_tree(a.tree);
  const Decomposition dec = decompose(t, a.d);
  json j;
  j["d"] = dec.d;
  j["cut_set"] = dec.cut_set;
  j["cut_set_tilde"] = dec.cut_set_tilde;
  json subs = json::array();
  for (const auto& s : dec.subtrees)
    subs.push_back({{"root", s.root}, {"sentinel", s.sentinel}, {"vertices", s.vertices}});
  j["subtrees"] = subs;
  j["induced_q"] = {{"vertices", dec.induced_q.vertices},
                    {"tree", tree_to_json(dec.induced_q.tree)}};
  emit(a.out, [&](std::ostream& o) { write_json(o, j); });
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string graph, points, tree;
  double t = 1.0;
  std::uint64_t seed = 1;
  std::string out;
};

void run_analyze(const AnalyzeArgs& a) {
  const auto g = load_graph(a.graph);
  MetricOracle metric;
  if (!a.points.empty() == !a.tree.empty())
    throw invalid_argument("give exactly one of --points and --tree");
  if (!a.points.empty()) {
    const auto pts = load_points(a.points);
    metric = euclidean_metric(pts);
  } else {
    metric = tree_metric(load_tree(a.tree));
  }
  if (g.size() != metric.n) throw invalid_argument("graph and metric differ in size");
  g.check_weights(metric);
  json j;
  j["n"] = g.size();
  j["edges"] = g.edge_count();
  j["max_degree"] = max_degree(g);
  j["t"] = a.t;
  if (g.size() > 1) {
    j["lightness"] = lightness(g, metric);
    const auto sr = stretch_report(g, metric, a.seed);
    j["stretch"] = sr.stretch;
    j["stretch_sampled"] = sr.sampled;
    j["stretch_pairs"] = sr.pairs;
    if (sr.stretch > a.t * (1 + kRelTol)) {
      j["lambda"] = nullptr;
      emit(a.out, [&](std::ostream& o) { write_json(o, j); });
      throw Failed("stretch_precondition", "stretch " + fmt_double(sr.stretch) +
                                               " exceeds t = " + fmt_double(a.t));
    }
    j["lambda"] = hop_diameter(g, metric, a.t);
  }
  emit(a.out, [&](std::ostream& o) { write_json(o, j); });
}

// ---------------------------------------------------------------------------

struct WspdArgs {
  std::string points;
  double s = 8.0;
  bool profile = false;
  std::vector<int> ns{256, 1024, 4096};
  int trials = 20;
  std::uint64_t seed = 1;
  std::string out;
};

void run_wspd(const WspdArgs& a) {
  if (a.profile) {
    const auto rows = wspd_weight_profile(a.ns, a.s, a.trials, a.seed);
    emit(a.out, [&](std::ostream& o) { write_profile_csv(o, rows); });
    return;
  }
  if (a.points.empty()) throw invalid_argument("wspd needs --points (or --profile)");
  const auto pts = load_points(a.points);
  const SplitTree tree = build_split_tree(pts);
  const Wspd w = wspd(tree, pts, a.s);
  json pairs = json::array();
  for (const auto& p : w.pairs)
    pairs.push_back({{"a", tree[p.u].points}, {"b", tree[p.v].points}, {"radius", p.radius}});
  json j;
  j["n"] = pts.size();
  j["s"] = a.s;
  j["split_tree_nodes"] = tree.size();
  j["pair_count"] = w.pairs.size();
  j["pairs"] = pairs;
  emit(a.out, [&](std::ostream& o) { write_json(o, j); });
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string points;
  double eps = 0.5;
  std::string out;
};

void run_verify(const VerifyArgs& a) {
  const auto pts = load_points(a.points);
  const auto forest = build_dumbbell_forest(pts, a.eps);
  const auto r = verify_dumbbell(forest, pts, a.eps);
  int max_label = 0;
  for (const auto& t : forest.trees)
    for (int c : t.label_counts(pts.size())) max_label = std::max(max_label, c);
  json j;
  j["n"] = pts.size();
  j["eps"] = a.eps;
  j["m"] = forest.size();
  j["max_stretch"] = r.max_stretch;
  j["max_label_count"] = max_label;
  j["passed"] = r.passed && max_label <= 2;
  emit(a.out, [&](std::ostream& o) { write_json(o, j); });
  if (!r.passed) throw Failed("dumbbell_stretch", "max stretch " + fmt_double(r.max_stretch));
  if (max_label > 2) throw Failed("label_count", "a label is used more than twice");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hop-diameter spanners: constructions, decompositions and analysis"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a point set (CSV) or tree (JSON)");
  g->add_option("--kind", gen.kind,
                "uniform|grid|collinear|clustered, or tree-random|tree-path|tree-star|"
                "tree-binary|tree-caterpillar");
  g->add_option("--n", gen.n, "number of points or vertices")->required();
  g->add_option("--dim", gen.dim, "point dimension");
  g->add_option("--seed", gen.seed, "master seed");
  g->add_flag("--unit-weights", gen.unit, "trees: all edge weights 1");
  g->add_option("-o,--output", gen.out, "output file (default stdout)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "build a spanner and write it as a graph file");
  b->add_option("--variant", build.variant,
                "line-low|line-high|tree-low|tree-high|euclid-low|euclid-high|wspd")
      ->required();
  b->add_option("--k", build.k, "degree parameter (>= 2)");
  b->add_option("--eps", build.eps, "stretch slack for euclid variants");
  b->add_option("--s", build.s, "separation ratio for the wspd variant");
  b->add_option("--points", build.points, "points CSV");
  b->add_option("--tree", build.tree, "tree JSON");
  b->add_option("--n", build.n, "line variants: use positions 1..n");
  b->add_option("--list", build.list, "list spanner for line-low: balanced|hierarchical");
  b->add_option("-o,--output", build.out, "graph output (default stdout)");
  b->add_option("--stats", build.stats, "write stats JSON here");

  DecomposeArgs dec;
  auto* d = app.add_subcommand("decompose", "cut vertices and residual subtrees of a tree");
  d->add_option("--tree", dec.tree, "tree JSON")->required();
  d->add_option("--d", dec.d, "threshold d (>= 1)")->required();
  d->add_option("-o,--output", dec.out, "JSON output (default stdout)");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "degree, lightness, stretch and hop diameter");
  a->add_option("--graph", an.graph, "graph file")->required();
  a->add_option("--points", an.points, "points CSV (Euclidean metric)");
  a->add_option("--tree", an.tree, "tree JSON (tree metric)");
  a->add_option("--t", an.t, "stretch at which the hop diameter is measured");
  a->add_option("--seed", an.seed, "seed for sampled stretch (n > 1024)");
  a->add_option("-o,--output", an.out, "JSON output (default stdout)");

  WspdArgs ws;
  auto* w = app.add_subcommand("wspd", "well-separated pair decomposition or weight profile");
  w->add_option("--points", ws.points, "points CSV");
  w->add_option("--s", ws.s, "separation ratio");
  w->add_flag("--profile", ws.profile, "w(E*)/sqrt(n) profile on uniform instances");
  w->add_option("--ns", ws.ns, "profile sizes")->delimiter(',');
  w->add_option("--trials", ws.trials, "profile trials per size");
  w->add_option("--seed", ws.seed, "profile master seed");
  w->add_option("-o,--output", ws.out, "output (default stdout)");

  VerifyArgs vd;
  auto* v = app.add_subcommand("verify-dumbbell", "build a dumbbell forest and check it");
  v->add_option("--points", vd.points, "points CSV")->required();
  v->add_option("--eps", vd.eps, "stretch slack");
  v->add_option("-o,--output", vd.out, "JSON output (default stdout)");

  ExperimentConfig sw;
  auto* s = app.add_subcommand("sweep", "parameter sweep to CSV");
  s->add_option("--variant", sw.variant, "construction name")->required();
  s->add_option("--n", sw.ns, "sizes, comma separated")->delimiter(',');
  s->add_option("--k", sw.ks, "k values, comma separated")->delimiter(',');
  s->add_option("--eps", sw.eps, "stretch slack for euclid variants");
  s->add_option("--seed", sw.seed, "master seed");
  s->add_option("--trials", sw.trials, "trials per (n, k)");
  s->add_flag("--timing", sw.timing, "record wall-clock milliseconds");
  s->add_option("-o,--output", sw.output, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*g) run_gen(gen);
    if (*b) run_build(build);
    if (*d) run_decompose(dec);
    if (*a) run_analyze(an);
    if (*w) run_wspd(ws);
    if (*v) run_verify(vd);
    if (*s) {
      sw.validate();
      emit(sw.output, [&](std::ostream& o) { run_sweep(sw, o); });
    }
  } catch (const Failed& e) {
    std::cerr << "error: " << e.code << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return kUsageCodes.count(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
