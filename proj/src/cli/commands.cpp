#include "dwlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "dwlab/approx.hpp"
#include "dwlab/domset.hpp"
#include "dwlab/generators.hpp"
#include "dwlab/io.hpp"
#include "dwlab/oracles.hpp"
#include "dwlab/reductions.hpp"
#include "dwlab/sparse.hpp"

namespace dwlab::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

/// Signals "no answer" after the report has been written.
struct NoAnswer {};

struct Options {
  bool timing = false;
  std::string input;
  std::string output;

  // gen
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;

  // solver modes
  bool exact = false, approx = false, bounds = false, sparse = false, fpt = false, greedy = false;
  bool serial = false;
  bool randomized = false;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> budget;  // fvs -k
  std::size_t s = 0;
  double c = 4.0;
  std::string m;

  // reduce
  std::string reduction;
  std::string sidecar;
  std::string assignment;
  std::string cover;

  // verify
  std::string ordering;
  std::string ordering_file;
  std::optional<std::size_t> claimed;

  // bench
  std::size_t n_min = 4, n_max = 10, count = 3;
  std::size_t bench_cap = 14;
};

struct Context {
  const std::vector<std::string>& args;
  std::istream& in;
  std::ostream& out;
  const Options& o;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_input(const Context& ctx) {
  if (ctx.o.input.empty() || ctx.o.input == "-") return read_all(ctx.in);
  std::ifstream f(ctx.o.input, std::ios::binary);
  if (!f) throw InvalidInput("cannot open input file '" + ctx.o.input + "'");
  return read_all(f);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open file '" + path + "'");
  return read_all(f);
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file '" + path + "'");
  f << bytes;
  if (!f) throw InvalidInput("failed writing '" + path + "'");
}

std::string hex_digest(std::string_view bytes) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

json vertices_json(std::span<const Vertex> vs) { return json(std::vector<Vertex>(vs.begin(), vs.end())); }
json set_json(const VertexSet& s) { return json(s.to_vector()); }
json arcs_json(std::span<const Arc> arcs) {
  json a = json::array();
  for (const auto& [u, v] : arcs) a.push_back({u, v});
  return a;
}

json base_report(const Context& ctx, std::string_view command, std::string_view input) {
  json r;
  r["command"] = command;
  r["argv"] = ctx.args;
  r["input_digest"] = hex_digest(input);
  return r;
}

void emit(const Context& ctx, json report, Clock::time_point start) {
  if (ctx.o.timing)
    report["time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  ctx.out << report.dump() << '\n';
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("witness failed revalidation: " + what);
}

std::size_t exact_cap(const Options& o) { return o.cap ? *o.cap : configured_exact_cap(); }

void exactly_one(std::initializer_list<bool> flags, const std::string& names) {
  int c = 0;
  for (bool f : flags) c += f ? 1 : 0;
  if (c != 1) throw InvalidInput("choose exactly one of " + names);
}

// ---- commands ----------------------------------------------------------------

void cmd_gen(const Context& ctx) {
  const Options& o = ctx.o;
  const auto start = Clock::now();
  GeneratorSpec spec;
  if (o.kind == "acyclic")
    spec = AcyclicSpec{o.n};
  else if (o.kind == "rotational")
    spec = RotationalSpec{o.k};
  else if (o.kind == "u")
    spec = USpec{o.n};
  else if (o.kind == "random")
    spec = RandomSpec{o.n, o.seed};
  else
    throw InvalidInput("unknown generator '" + o.kind + "' (acyclic, rotational, u, random)");
  const Generated g = generate(spec);
  const std::string text = emit_tournament(g.tournament);
  if (o.output.empty()) {
    ctx.out << text;
    return;
  }
  write_file(o.output, text);
  json r = base_report(ctx, "gen", "");
  r.erase("input_digest");
  r["kind"] = o.kind;
  r["n"] = g.tournament.size();
  r["output_digest"] = hex_digest(text);
  r["natural_ordering"] = vertices_json(g.natural.vertices());
  emit(ctx, r, start);
}

void cmd_dw(const Context& ctx) {
  const Options& o = ctx.o;
  exactly_one({o.exact, o.approx, o.bounds}, "--exact, --approx, --bounds");
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  json r = base_report(ctx, "dw", input);
  r["n"] = t.size();
  if (o.exact) {
    const OrderingResult res = o.serial ? serial::exact_degreewidth(t, exact_cap(o)) : exact_degreewidth(t, exact_cap(o));
    require(backward_profile(t, res.witness).width == res.value, "exact width");
    r["mode"] = "exact";
    r["value"] = res.value;
    r["ordering"] = vertices_json(res.witness.vertices());
    r["explored"] = res.explored;
  } else if (o.approx) {
    const ApproxResult res = approx_degreewidth(t);
    require(backward_profile(t, res.ordering).width == res.width, "approximate width");
    r["mode"] = "approx";
    r["width"] = res.width;
    r["ordering"] = vertices_json(res.ordering.vertices());
  } else {
    const BoundsReport b = degreewidth_bounds(t, exact_cap(o));
    r["mode"] = "bounds";
    r["lower_min_indegree"] = b.lower_min_indegree;
    r["upper_indegree_ordering"] = b.upper_indegree_ordering;
    r["upper_2ctw"] = b.upper_2ctw;
    r["upper_fas"] = b.upper_fas ? json(*b.upper_fas) : json(nullptr);
  }
  emit(ctx, r, start);
}

void cmd_sparse(const Context& ctx) {
  const Options& o = ctx.o;
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  const VertexSet m = parse_vertex_set(o.m, t.size());
  json r = base_report(ctx, "sparse", input);
  r["n"] = t.size();
  r["m"] = set_json(m);
  const auto cert = is_m_sparse(t, m);
  r["sparse"] = cert.has_value();
  if (!cert) {
    emit(ctx, r, start);
    throw NoAnswer{};
  }
  const BackwardProfile prof = backward_profile(t, cert->ordering);
  require(prof.width <= 1, "certificate width");
  m.for_each([&](Vertex v) { require(prof.per_vertex[v] == 0, "M vertex not free"); });
  r["ordering"] = vertices_json(cert->ordering.vertices());
  r["width"] = prof.width;
  r["total_backward"] = prof.total_backward;
  json blocks = json::array();
  for (const SparseBlock& b : cert->blocks) {
    json jb;
    jb["vertices"] = vertices_json(b.chain.vertices);
    jb["closure"] = to_string(b.chain.closure);
    if (b.chain.closure != Closure::Dominates) {
      jb["b"] = b.chain.b;
      jb["a"] = b.chain.a;
    }
    jb["kind"] = to_string(b.kind);
    jb["ordering"] = vertices_json(b.ordering);
    blocks.push_back(jb);
  }
  r["blocks"] = blocks;
  emit(ctx, r, start);
}

void cmd_fas(const Context& ctx) {
  const Options& o = ctx.o;
  exactly_one({o.sparse, o.exact}, "--sparse, --exact");
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  json r = base_report(ctx, "fas", input);
  r["n"] = t.size();
  std::vector<Arc> arcs;
  Ordering order;
  if (o.sparse) {
    FasResult res = fast_sparse(t);
    arcs = std::move(res.arcs);
    order = std::move(res.ordering);
    r["mode"] = "sparse";
  } else {
    const OrderingResult res = o.serial ? serial::exact_fas(t, exact_cap(o)) : exact_fas(t, exact_cap(o));
    order = res.witness;
    arcs = backward_arcs(t, order);
    require(arcs.size() == res.value, "exact FAS size");
    r["mode"] = "exact";
  }
  std::vector<Arc> flipped = t.arcs();
  std::vector<Arc> sorted_fas = arcs;
  std::sort(sorted_fas.begin(), sorted_fas.end());
  for (Arc& a : flipped)
    if (std::binary_search(sorted_fas.begin(), sorted_fas.end(), a)) std::swap(a.first, a.second);
  require(is_acyclic(Tournament::from_arcs(t.size(), flipped)), "reversing the arc set leaves a cycle");
  r["size"] = arcs.size();
  r["arcs"] = arcs_json(arcs);
  r["ordering"] = vertices_json(order.vertices());
  emit(ctx, r, start);
}

void cmd_fvs(const Context& ctx) {
  const Options& o = ctx.o;
  if (!o.exact) throw InvalidInput("fvs needs --exact");
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  json r = base_report(ctx, "fvs", input);
  r["n"] = t.size();
  std::optional<VertexSet> found;
  if (o.budget) {
    r["k"] = *o.budget;
    found = exact_fvst(t, *o.budget);
  } else {
    for (std::size_t k = 0; !found; ++k) found = exact_fvst(t, k);
    r["minimum"] = true;
  }
  r["found"] = found.has_value();
  if (!found) {
    emit(ctx, r, start);
    throw NoAnswer{};
  }
  require(is_feedback_vertex_set(t, *found), "feedback vertex set");
  r["size"] = found->count();
  r["set"] = set_json(*found);
  emit(ctx, r, start);
}

void cmd_ds(const Context& ctx) {
  const Options& o = ctx.o;
  exactly_one({o.fpt, o.greedy, o.exact}, "--fpt, --greedy, --exact");
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  json r = base_report(ctx, "ds", input);
  r["n"] = t.size();
  std::optional<VertexSet> set;
  if (o.fpt) {
    FamilyConfig cfg;
    cfg.mode = o.randomized ? FamilyMode::Randomized : FamilyMode::Exhaustive;
    cfg.seed = o.seed;
    cfg.c = o.c;
    r["mode"] = "fpt";
    r["s"] = o.s;
    r["family"] = o.randomized ? "randomized" : "exhaustive";
    if (o.randomized) r["seed"] = o.seed;
    set = o.serial ? serial::fpt_dominating_set(t, o.s, cfg) : fpt_dominating_set(t, o.s, cfg);
  } else if (o.greedy) {
    const ApproxResult a = approx_degreewidth(t);
    r["mode"] = "greedy";
    r["ordering_width"] = a.width;
    set = greedy_dominating_set(t, a.ordering);
  } else {
    const SetResult res = o.serial ? serial::exact_min_ds(t) : exact_min_ds(t);
    r["mode"] = "exact";
    set = res.witness;
    require(res.witness.count() == res.value, "exact dominating set size");
  }
  r["found"] = set.has_value();
  if (!set) {
    emit(ctx, r, start);
    throw NoAnswer{};
  }
  require(is_dominating_set(t, *set), "dominating set");
  r["size"] = set->count();
  r["set"] = set_json(*set);
  emit(ctx, r, start);
}

void write_reduction(const Context& ctx, const Tournament& t, json sidecar, Clock::time_point start) {
  const std::string text = emit_tournament(t);
  sidecar["tournament_digest"] = hex_digest(text);
  if (!ctx.o.output.empty()) write_file(ctx.o.output, text);
  if (!ctx.o.sidecar.empty()) write_file(ctx.o.sidecar, sidecar.dump() + "\n");
  if (ctx.o.output.empty())
    ctx.out << text;
  else
    emit(ctx, sidecar, start);
}

Assignment parse_assignment(std::string_view text, std::size_t n) {
  Assignment beta;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok != "0" && tok != "1") throw InvalidInput("assignment values must be 0 or 1, got '" + tok + "'");
    beta.push_back(tok == "1");
  }
  if (beta.size() != n)
    throw InvalidInput("assignment has " + std::to_string(beta.size()) + " values for " + std::to_string(n) +
                       " variables");
  return beta;
}

void cmd_reduce(const Context& ctx) {
  const Options& o = ctx.o;
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  json r = base_report(ctx, "reduce", input);
  r["reduction"] = o.reduction;
  if (o.reduction == "sat2dw") {
    const Balanced3Sat4 f = parse_dimacs_cnf(input);
    validate_balanced_3sat4(f, true);
    const Balanced3Sat4 norm = normalize_parity(f);
    const SatReductionInstance inst = sat_to_degreewidth(norm);
    const auto issues = audit_sat_instance(inst);
    require(issues.empty(), "structural audit: " + (issues.empty() ? std::string() : issues.front()));
    r["normalized"] = !(norm == f);
    r["n_vars"] = norm.n_vars;
    r["n_clauses"] = norm.clauses.size();
    r["W"] = inst.weight;
    r["threshold"] = inst.threshold;
    r["n"] = inst.tournament.size();
    json blocks;
    for (std::size_t b = 0; b < kBlockCount; ++b)
      blocks[std::string(to_string(static_cast<Block>(b)))] = {{"first", inst.blocks[b].first},
                                                                {"size", inst.blocks[b].size}};
    r["blocks"] = blocks;
    r["labels"] = inst.labels;
    if (!o.assignment.empty()) {
      Assignment beta = parse_assignment(o.assignment, f.n_vars);
      beta.resize(norm.n_vars, false);
      if (norm.n_vars == 2 * f.n_vars + 1 && norm.clauses.size() == 2 * f.clauses.size())
        for (std::size_t i = 0; i < f.n_vars; ++i) beta[f.n_vars + i] = beta[i];
      const Ordering order = nice_ordering_from_assignment(inst, beta);
      const std::size_t width = backward_profile(inst.tournament, order).width;
      r["nice_ordering"] = vertices_json(order.vertices());
      r["nice_width"] = width;
      r["satisfies"] = satisfies(norm, beta);
      require((width < inst.threshold) == satisfies(norm, beta), "nice ordering width vs satisfiability");
    }
    write_reduction(ctx, inst.tournament, r, start);
  } else if (o.reduction == "vc2fvst") {
    const CubicGraph g = parse_dimacs_edges(input);
    const FvstReductionInstance inst = cubic_to_fvst(g);
    r["graph_n"] = g.n;
    r["offset"] = inst.offset;
    r["n"] = inst.tournament.size();
    r["patterns"] = inst.patterns;
    json arcs = json::array();
    for (const TaggedArc& ta : inst.backward)
      arcs.push_back({{"tail", ta.arc.first},
                      {"head", ta.arc.second},
                      {"tag", ta.tag == ArcTag::VertexBackward ? "vertex" : "edge"},
                      {"i", ta.i},
                      {"j", ta.j}});
    r["arcs"] = arcs;
    r["sparse_ordering"] = vertices_json(inst.sparse_ordering.vertices());
    if (!o.cover.empty()) {
      const VertexSet s = parse_vertex_set(o.cover, g.n);
      const VertexSet x = vc_to_fvst_solution(inst, s);
      require(is_feedback_vertex_set(inst.tournament, x), "feedback vertex set");
      r["cover"] = set_json(s);
      r["fvs"] = set_json(x);
      r["fvs_size"] = x.count();
    }
    write_reduction(ctx, inst.tournament, r, start);
  } else {
    throw InvalidInput("unknown reduction '" + o.reduction + "' (sat2dw, vc2fvst)");
  }
}

void cmd_verify(const Context& ctx) {
  const Options& o = ctx.o;
  if (o.ordering.empty() == o.ordering_file.empty())
    throw InvalidInput("give exactly one of --ordering, --ordering-file");
  const std::string input = read_input(ctx);
  const auto start = Clock::now();
  const Tournament t = parse_tournament(input);
  const std::string text = o.ordering.empty() ? read_file(o.ordering_file) : o.ordering;
  const Ordering order = parse_ordering(text, t.size());
  const BackwardProfile prof = backward_profile(t, order);
  json r = base_report(ctx, "verify", input);
  r["n"] = t.size();
  r["width"] = prof.width;
  r["total_backward"] = prof.total_backward;
  r["max_cut"] = prof.max_cut;
  r["per_vertex"] = prof.per_vertex;
  r["backward_arcs"] = arcs_json(backward_arcs(t, order));
  if (o.claimed) {
    r["claimed"] = *o.claimed;
    r["matches"] = *o.claimed == prof.width;
  }
  emit(ctx, r, start);
  if (o.claimed && *o.claimed != prof.width) throw NoAnswer{};
}

std::string ms_or_na(bool timing, double ms) {
  if (!timing) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

void cmd_bench(const Context& ctx) {
  const Options& o = ctx.o;
  if (o.n_min == 0 || o.n_min > o.n_max) throw InvalidInput("need 1 <= --n-min <= --n-max");
  ctx.out << kBenchHeader << '\n';
  auto since = [](Clock::time_point s) { return std::chrono::duration<double, std::milli>(Clock::now() - s).count(); };
  for (std::size_t n = o.n_min; n <= o.n_max; ++n)
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::uint64_t seed = o.seed + i;
      const Tournament t = random_tournament(n, seed);
      const bool small = n <= o.bench_cap;

      auto s0 = Clock::now();
      const ApproxResult a = approx_degreewidth(t);
      const double t_approx = since(s0);
      const std::size_t ctw = cutwidth_tournament(t).value;

      std::string exact = "NA", ratio = "NA", fas = "NA", t_exact = "NA", t_fas = "NA";
      if (small) {
        s0 = Clock::now();
        const OrderingResult e = exact_degreewidth(t, o.bench_cap);
        t_exact = ms_or_na(o.timing, since(s0));
        exact = std::to_string(e.value);
        if (e.value > 0) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(a.width) / static_cast<double>(e.value));
          ratio = buf;
        }
        s0 = Clock::now();
        fas = std::to_string(exact_fas(t, o.bench_cap).value);
        t_fas = ms_or_na(o.timing, since(s0));
      }
      ctx.out << n << ',' << seed << ',' << exact << ',' << a.width << ',' << ratio << ',' << ctw << ',' << fas << ','
              << t_exact << ',' << ms_or_na(o.timing, t_approx) << ',' << t_fas << '\n';
    }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Degreewidth toolkit for tournaments", "dwlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--timing", o.timing, "Add wall-clock time to reports");

  auto input_opt = [&](CLI::App* sub) { sub->add_option("-i,--input", o.input, "Input file (default: stdin)"); };
  auto cap_opt = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Exact oracle size cap"); };

  CLI::App* gen = app.add_subcommand("gen", "Write a generated tournament");
  gen->add_option("kind", o.kind, "acyclic | rotational | u | random")->required();
  gen->add_option("-n", o.n, "Order (acyclic, u, random)");
  gen->add_option("-k", o.k, "Rotational parameter: order 2k+1");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_option("-o,--output", o.output, "Output file (default: stdout)");

  CLI::App* dw = app.add_subcommand("dw", "Degreewidth: exact, approximate, or bounds");
  input_opt(dw);
  cap_opt(dw);
  dw->add_flag("--exact", o.exact, "Subset DP, optimal ordering");
  dw->add_flag("--approx", o.approx, "In-degree ordering (at most 3x optimal)");
  dw->add_flag("--bounds", o.bounds, "Lower and upper bounds");
  dw->add_flag("--serial", o.serial, "Use the single-threaded kernel");

  CLI::App* sp = app.add_subcommand("sparse", "Sparse recognition with certificate");
  input_opt(sp);
  sp->add_option("-m", o.m, "Vertices that must be free (space separated)");

  CLI::App* fas = app.add_subcommand("fas", "Minimum feedback arc set");
  input_opt(fas);
  cap_opt(fas);
  fas->add_flag("--sparse", o.sparse, "Polynomial solver for sparse tournaments");
  fas->add_flag("--exact", o.exact, "Subset DP");
  fas->add_flag("--serial", o.serial, "Use the single-threaded kernel");

  CLI::App* fvs = app.add_subcommand("fvs", "Feedback vertex set");
  input_opt(fvs);
  fvs->add_flag("--exact", o.exact, "Branch on triangles");
  fvs->add_option("-k", o.budget, "Size budget (default: search for the minimum)");

  CLI::App* ds = app.add_subcommand("ds", "Dominating set (out-neighbour convention)");
  input_opt(ds);
  ds->add_flag("--fpt", o.fpt, "Universal-family search for a set of size <= s");
  ds->add_flag("--greedy", o.greedy, "Last vertex of the in-degree ordering plus its out-neighbours");
  ds->add_flag("--exact", o.exact, "Minimum by subset enumeration");
  ds->add_flag("--serial", o.serial, "Use the single-threaded kernel");
  ds->add_option("-s", o.s, "Size bound for --fpt");
  ds->add_flag("--randomized", o.randomized, "Randomized universal families");
  ds->add_option("--seed", o.seed, "Seed for --randomized");
  ds->add_option("--c", o.c, "Randomized family size multiplier");

  CLI::App* red = app.add_subcommand("reduce", "Build a reduction instance");
  red->add_option("reduction", o.reduction, "sat2dw | vc2fvst")->required();
  input_opt(red);
  red->add_option("-o,--output", o.output, "Tournament file (report then goes to stdout)");
  red->add_option("--sidecar", o.sidecar, "JSON sidecar file");
  red->add_option("--assignment", o.assignment, "sat2dw: 0/1 per variable; adds the nice ordering");
  red->add_option("--cover", o.cover, "vc2fvst: 0-based vertex cover; adds the mapped FVS");

  CLI::App* ver = app.add_subcommand("verify", "Recompute the backward profile of an ordering");
  input_opt(ver);
  ver->add_option("--ordering", o.ordering, "Vertex ids, space separated");
  ver->add_option("--ordering-file", o.ordering_file, "File holding the ordering");
  ver->add_option("--width", o.claimed, "Claimed width to compare against");

  CLI::App* bench = app.add_subcommand("bench", "Seeded sweep to CSV");
  bench->add_option("--n-min", o.n_min, "Smallest order");
  bench->add_option("--n-max", o.n_max, "Largest order");
  bench->add_option("--count", o.count, "Instances per n");
  bench->add_option("--seed", o.seed, "First seed");
  bench->add_option("--cap", o.bench_cap, "Largest n for exact columns");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const Context ctx{args, in, out, o};
  try {
    if (gen->parsed()) cmd_gen(ctx);
    if (dw->parsed()) cmd_dw(ctx);
    if (sp->parsed()) cmd_sparse(ctx);
    if (fas->parsed()) cmd_fas(ctx);
    if (fvs->parsed()) cmd_fvs(ctx);
    if (ds->parsed()) cmd_ds(ctx);
    if (red->parsed()) cmd_reduce(ctx);
    if (ver->parsed()) cmd_verify(ctx);
    if (bench->parsed()) cmd_bench(ctx);
  } catch (const NoAnswer&) {
    return kExitNo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace dwlab::cli
