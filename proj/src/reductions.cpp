#include "dwlab/reductions.hpp"

#include <algorithm>
#include <optional>

namespace dwlab {

namespace {

std::string var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::optional<Literal> literal_of(const Clause& c, std::size_t var) {
  for (const Literal& l : c)
    if (l.var == var) return l;
  return std::nullopt;
}

}  // namespace

void validate_balanced_3sat4(const Balanced3Sat4& f, bool allow_unused) {
  std::vector<std::size_t> pos(f.n_vars, 0);
  std::vector<std::size_t> neg(f.n_vars, 0);
  for (std::size_t l = 0; l < f.clauses.size(); ++l) {
    const Clause& c = f.clauses[l];
    for (std::size_t a = 0; a < 3; ++a) {
      if (c[a].var >= f.n_vars)
        throw InvalidInput("clause " + std::to_string(l + 1) + ": variable " + std::to_string(c[a].var + 1) +
                           " out of range");
      for (std::size_t b = 0; b < a; ++b)
        if (c[a].var == c[b].var)
          throw InvalidInput("clause " + std::to_string(l + 1) + ": repeated variable " + var_name(c[a].var));
      ++(c[a].positive ? pos : neg)[c[a].var];
    }
  }
  for (std::size_t i = 0; i < f.n_vars; ++i) {
    if (allow_unused && pos[i] == 0 && neg[i] == 0) continue;
    if (pos[i] != 2 || neg[i] != 2)
      throw InvalidInput(var_name(i) + " occurs " + std::to_string(pos[i]) + "x positively and " +
                         std::to_string(neg[i]) + "x negatively (expected 2 and 2)");
  }
}

Balanced3Sat4 duplicate_formula(const Balanced3Sat4& f) {
  Balanced3Sat4 out{2 * f.n_vars, f.clauses};
  for (Clause c : f.clauses) {
    for (Literal& l : c) l.var += f.n_vars;
    out.clauses.push_back(c);
  }
  return out;
}

Balanced3Sat4 normalize_parity(const Balanced3Sat4& f) {
  validate_balanced_3sat4(f, true);
  Balanced3Sat4 out = f.clauses.size() % 2 == 1 ? duplicate_formula(f) : f;
  if (out.n_vars % 2 == 0) ++out.n_vars;
  return out;
}

bool satisfies(const Balanced3Sat4& f, const Assignment& beta) {
  if (beta.size() != f.n_vars)
    throw InvalidInput("assignment has " + std::to_string(beta.size()) + " values for " + std::to_string(f.n_vars) +
                       " variables");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return beta[l.var] == l.positive; });
  });
}

std::size_t reduction_weight(std::size_t n_vars, std::size_t n_clauses) {
  const std::size_t floor = n_vars * n_vars * n_vars + n_clauses * n_clauses * n_clauses;
  std::size_t w = floor + 1;
  if (w % 2 == 0) ++w;
  while (((w + 1) / 2 + n_clauses + n_vars) % 2 == 0) w += 2;
  return w;
}

std::string_view to_string(Block block) {
  static constexpr std::array<std::string_view, kBlockCount> names{"A", "B", "C", "D", "X", "Y", "U", "H"};
  return names[static_cast<std::size_t>(block)];
}

// ---- construction ------------------------------------------------------------

namespace {

constexpr std::array<Block, kBlockCount> kLayout{Block::A, Block::B, Block::C, Block::D,
                                                 Block::X, Block::Y, Block::U, Block::H};

void orient_all(TournamentBuilder& tb, const BlockRange& from, const BlockRange& to) {
  for (Vertex a = from.first; a < from.first + from.size; ++a)
    for (Vertex b = to.first; b < to.first + to.size; ++b) tb.orient(a, b);
}

void orient_rotational(TournamentBuilder& tb, const BlockRange& r) {
  const std::size_t k = (r.size - 1) / 2;
  for (std::size_t i = 0; i < r.size; ++i)
    for (std::size_t d = 1; d <= k; ++d) tb.orient(r.first + i, r.first + (i + d) % r.size);
}

void orient_acyclic(TournamentBuilder& tb, const BlockRange& r) {
  for (Vertex a = r.first; a < r.first + r.size; ++a)
    for (Vertex b = a + 1; b < r.first + r.size; ++b) tb.orient(a, b);
}

void path(TournamentBuilder& tb, Vertex a, Vertex b, Vertex c) {
  tb.orient(a, b);
  tb.orient(b, c);
}

}  // namespace

SatReductionInstance sat_to_degreewidth(const Balanced3Sat4& f) {
  validate_balanced_3sat4(f, true);
  const std::size_t n = f.n_vars;
  const std::size_t m = f.clauses.size();
  if (n % 2 == 0 || m % 2 == 1)
    throw InvalidInput("reduction needs an odd number of variables and an even number of clauses (got n=" +
                       std::to_string(n) + ", m=" + std::to_string(m) + "); run normalize_parity first");

  SatReductionInstance inst;
  inst.formula = f;
  inst.weight = reduction_weight(n, m);
  const std::size_t w = inst.weight;
  inst.threshold = w + 2 * m + 3 * n + 4;

  const std::size_t outer = (w + 1) / 2 + m + n;
  const std::array<std::size_t, kBlockCount> sizes{outer, w, w, outer, 2 * n, 2 * m, 4 * n, 2};
  Vertex next = 0;
  for (std::size_t b = 0; b < kBlockCount; ++b) {
    inst.blocks[b] = {next, sizes[b]};
    next += sizes[b];
  }
  const std::size_t total = next;
  inst.block_of.resize(total);
  inst.labels.resize(total);
  for (Block b : kLayout) {
    const BlockRange& r = inst.range(b);
    for (std::size_t k = 0; k < r.size; ++k) inst.block_of[r.first + k] = b;
  }
  for (Block b : {Block::A, Block::B, Block::C, Block::D}) {
    const BlockRange& r = inst.range(b);
    std::string prefix(1, static_cast<char>('a' + static_cast<int>(b)));
    for (std::size_t k = 0; k < r.size; ++k) inst.labels[r.first + k] = prefix + std::to_string(k + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string s = std::to_string(i + 1);
    inst.labels[inst.v(i)] = "v" + s;
    inst.labels[inst.v_prime(i)] = "v'" + s;
    for (std::size_t p = 1; p <= 2; ++p) {
      inst.labels[inst.u(i, p, false)] = "u" + std::to_string(p) + "_" + s;
      inst.labels[inst.u(i, p, true)] = "ubar" + std::to_string(p) + "_" + s;
    }
  }
  for (std::size_t l = 0; l < m; ++l) {
    inst.labels[inst.q(l)] = "q" + std::to_string(l + 1);
    inst.labels[inst.q_prime(l)] = "q'" + std::to_string(l + 1);
  }
  inst.labels[inst.h(1)] = "h1";
  inst.labels[inst.h(2)] = "h2";

  const auto& A = inst.range(Block::A);
  const auto& B = inst.range(Block::B);
  const auto& C = inst.range(Block::C);
  const auto& D = inst.range(Block::D);
  const auto& X = inst.range(Block::X);
  const auto& Y = inst.range(Block::Y);
  const auto& U = inst.range(Block::U);
  const auto& H = inst.range(Block::H);

  TournamentBuilder tb(total);
  for (const BlockRange* r : {&A, &B, &C, &D}) orient_rotational(tb, *r);
  for (const BlockRange* r : {&X, &Y, &U, &H}) orient_acyclic(tb, *r);

  orient_all(tb, D, A);
  orient_all(tb, A, B);
  orient_all(tb, A, C);
  orient_all(tb, B, C);
  orient_all(tb, B, D);
  orient_all(tb, C, D);

  orient_all(tb, A, X);
  orient_all(tb, C, X);
  orient_all(tb, X, B);
  orient_all(tb, X, D);

  orient_all(tb, B, Y);
  orient_all(tb, D, Y);
  orient_all(tb, Y, A);
  orient_all(tb, Y, C);

  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex vi = inst.v(i), vp = inst.v_prime(i), q = inst.q(l), qp = inst.q_prime(l);
      if (const auto lit = literal_of(f.clauses[l], i)) {
        for (Vertex x : {vi, vp})
          for (Vertex y : {q, qp}) lit->positive ? tb.orient(x, y) : tb.orient(y, x);
      } else {
        path(tb, vi, q, vp);
        path(tb, vp, qp, vi);
      }
    }

  orient_all(tb, U, A);
  orient_all(tb, U, Y);
  orient_all(tb, U, C);
  orient_all(tb, B, U);
  orient_all(tb, D, U);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Vertex vk = inst.v(k), vpk = inst.v_prime(k);
      if (k != i) {
        for (std::size_t p = 1; p <= 2; ++p) {
          path(tb, vk, inst.u(i, p, false), vpk);
          path(tb, vpk, inst.u(i, p, true), vk);
        }
      } else {
        path(tb, vk, inst.u(i, 1, false), vpk);
        path(tb, vpk, inst.u(i, 2, false), vk);
        path(tb, vk, inst.u(i, 1, true), vpk);
        path(tb, vpk, inst.u(i, 2, true), vk);
      }
    }

  for (const BlockRange* r : {&B, &C, &X, &Y, &D}) orient_all(tb, *r, H);
  orient_all(tb, H, U);
  orient_all(tb, A, H);

  inst.tournament = tb.build();
  return inst;
}

// ---- audit -------------------------------------------------------------------

namespace {

// +1: row block beats column block, -1: column beats row, 0: decided elsewhere.
constexpr int kBlockRule[kBlockCount][kBlockCount] = {
    //        A   B   C   D   X   Y   U   H
    /* A */ {0, 1, 1, -1, 1, -1, -1, 1},
    /* B */ {-1, 0, 1, 1, -1, 1, 1, 1},
    /* C */ {-1, -1, 0, 1, 1, -1, -1, 1},
    /* D */ {1, -1, -1, 0, -1, 1, 1, 1},
    /* X */ {-1, 1, -1, 1, 0, 0, 0, 1},
    /* Y */ {1, -1, 1, -1, 0, 0, -1, 1},
    /* U */ {1, -1, 1, -1, 0, 1, 0, -1},
    /* H */ {-1, -1, -1, -1, -1, -1, 1, 0},
};

// Orientation of a pair {x in X, y in Y}: true when x -> y.
bool xy_rule(const SatReductionInstance& inst, Vertex x, Vertex y) {
  const std::size_t xo = x - inst.range(Block::X).first;
  const std::size_t yo = y - inst.range(Block::Y).first;
  const std::size_t i = xo / 2, l = yo / 2;
  const bool primed_x = xo % 2 == 1, primed_y = yo % 2 == 1;
  if (const auto lit = literal_of(inst.formula.clauses[l], i)) return lit->positive;
  // paths v -> q -> v' and v' -> q' -> v
  return primed_x == primed_y;
}

// Orientation of a pair {x in X, w in U}: true when x -> w.
bool xu_rule(const SatReductionInstance& inst, Vertex x, Vertex w) {
  const std::size_t xo = x - inst.range(Block::X).first;
  const std::size_t wo = w - inst.range(Block::U).first;
  const std::size_t k = xo / 2, i = wo / 4, slot = wo % 4;
  const bool primed = xo % 2 == 1;
  const bool bar = slot >= 2;
  const std::size_t p = slot % 2 + 1;
  bool unprimed_first;  // path starts at v_k
  if (k != i)
    unprimed_first = !bar;
  else
    unprimed_first = p == 1;
  return primed != unprimed_first;
}

bool rule_beats(const SatReductionInstance& inst, Vertex a, Vertex b) {
  const Block ba = inst.block_of[a], bb = inst.block_of[b];
  const auto ia = static_cast<std::size_t>(ba), ib = static_cast<std::size_t>(bb);
  if (ba == bb) {
    const BlockRange& r = inst.range(ba);
    if (ba == Block::A || ba == Block::B || ba == Block::C || ba == Block::D) {
      const std::size_t d = (b - a + r.size) % r.size;
      return d >= 1 && d <= (r.size - 1) / 2;
    }
    return a < b;
  }
  if (kBlockRule[ia][ib] != 0) return kBlockRule[ia][ib] > 0;
  if (ba == Block::X && bb == Block::Y) return xy_rule(inst, a, b);
  if (ba == Block::Y && bb == Block::X) return !xy_rule(inst, b, a);
  if (ba == Block::X && bb == Block::U) return xu_rule(inst, a, b);
  return !xu_rule(inst, b, a);
}

}  // namespace

std::vector<std::string> audit_sat_instance(const SatReductionInstance& inst) {
  std::vector<std::string> issues;
  const std::size_t n = inst.formula.n_vars;
  const std::size_t m = inst.formula.clauses.size();
  try {
    validate_balanced_3sat4(inst.formula, true);
  } catch (const InvalidInput& e) {
    issues.push_back(std::string("formula: ") + e.what());
    return issues;
  }
  if (n % 2 == 0 || m % 2 == 1) issues.push_back("parity: need n odd and m even");
  const std::size_t w = inst.weight;
  const std::size_t cube = n * n * n + m * m * m;
  if (w % 2 == 0 || w <= cube || ((w + 1) / 2 + m + n) % 2 == 0) issues.push_back("W violates the weight rule");
  if (w != reduction_weight(n, m)) issues.push_back("W is not the least admissible weight");
  if (inst.threshold != w + 2 * m + 3 * n + 4) issues.push_back("threshold != W + 2m + 3n + 4");

  const std::size_t outer = (w + 1) / 2 + m + n;
  const std::array<std::size_t, kBlockCount> sizes{outer, w, w, outer, 2 * n, 2 * m, 4 * n, 2};
  std::size_t total = 0;
  for (Block b : kLayout) {
    const BlockRange& r = inst.range(b);
    if (r.size != sizes[static_cast<std::size_t>(b)])
      issues.push_back("block " + std::string(to_string(b)) + " has size " + std::to_string(r.size) + ", expected " +
                       std::to_string(sizes[static_cast<std::size_t>(b)]));
    if (r.first != total) issues.push_back("block " + std::string(to_string(b)) + " is not contiguous");
    total += r.size;
  }
  if (total != 3 * w + 4 * m + 8 * n + 3) issues.push_back("total != 3W + 4m + 8n + 3");
  if (!issues.empty()) return issues;
  if (inst.tournament.size() != total || inst.block_of.size() != total) {
    issues.push_back("tournament or block map has the wrong size");
    return issues;
  }
  for (Block b : kLayout) {
    const BlockRange& r = inst.range(b);
    for (Vertex v = r.first; v < r.first + r.size; ++v)
      if (inst.block_of[v] != b) issues.push_back("vertex " + std::to_string(v) + " mislabelled");
  }
  if (!issues.empty()) return issues;

  for (Vertex a = 0; a < total; ++a)
    for (Vertex b = a + 1; b < total; ++b)
      if (inst.tournament.has_arc(a, b) != rule_beats(inst, a, b)) {
        const auto [tail, head] = inst.tournament.has_arc(a, b) ? Arc{a, b} : Arc{b, a};
        issues.push_back("arc " + inst.labels[tail] + " -> " + inst.labels[head] + " contradicts the construction");
      }

  for (Block b : {Block::A, Block::B, Block::C, Block::D}) {
    const BlockRange& r = inst.range(b);
    std::vector<Vertex> members(r.size);
    for (std::size_t k = 0; k < r.size; ++k) members[k] = r.first + k;
    const VertexSet s = VertexSet::of(total, members);
    for (Vertex v : members)
      if (inst.tournament.in_count_in(v, s) != (r.size - 1) / 2)
        issues.push_back("block " + std::string(to_string(b)) + " is not regular at " + inst.labels[v]);
  }
  return issues;
}

// ---- nice orderings ----------------------------------------------------------

Ordering nice_ordering_from_assignment(const SatReductionInstance& inst, const Assignment& beta) {
  const std::size_t n = inst.formula.n_vars;
  if (beta.size() != n)
    throw InvalidInput("assignment has " + std::to_string(beta.size()) + " values for " + std::to_string(n) +
                       " variables");
  std::vector<Vertex> perm;
  perm.reserve(inst.tournament.size());
  auto append = [&](Block b) {
    const BlockRange& r = inst.range(b);
    for (Vertex v = r.first; v < r.first + r.size; ++v) perm.push_back(v);
  };
  auto zone = [&](bool value) {
    for (std::size_t i = 0; i < n; ++i)
      if (beta[i] == value) {
        perm.push_back(inst.v(i));
        perm.push_back(inst.v_prime(i));
      }
  };
  append(Block::A);
  zone(true);
  append(Block::B);
  append(Block::U);
  append(Block::Y);
  append(Block::C);
  zone(false);
  append(Block::D);
  append(Block::H);
  return Ordering(std::move(perm));
}

Assignment assignment_from_nice_ordering(const SatReductionInstance& inst, const Ordering& order) {
  const Tournament& t = inst.tournament;
  if (order.size() != t.size())
    throw InvalidInput("ordering has " + std::to_string(order.size()) + " vertices, instance has " +
                       std::to_string(t.size()));

  auto lo = [&](Block b) {
    std::size_t p = order.size();
    const BlockRange& r = inst.range(b);
    for (Vertex v = r.first; v < r.first + r.size; ++v) p = std::min(p, order.position(v));
    return p;
  };
  auto hi = [&](Block b) {
    std::size_t p = 0;
    const BlockRange& r = inst.range(b);
    for (Vertex v = r.first; v < r.first + r.size; ++v) p = std::max(p, order.position(v));
    return p;
  };

  const std::array<Block, 7> chain{Block::A, Block::B, Block::U, Block::Y, Block::C, Block::D, Block::H};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (hi(chain[k]) > lo(chain[k + 1]))
      throw NotNice("block " + std::string(to_string(chain[k])) + " does not precede block " +
                    std::string(to_string(chain[k + 1])));

  for (Block b : {Block::U, Block::Y}) {
    const BlockRange& r = inst.range(b);
    for (Vertex v = r.first + 1; v < r.first + r.size; ++v)
      if (!order.before(v - 1, v))
        throw NotNice("block " + std::string(to_string(b)) + " is not in topological order at " + inst.labels[v]);
  }

  for (Block b : {Block::A, Block::B, Block::C, Block::D}) {
    const BlockRange& r = inst.range(b);
    std::vector<std::size_t> deg(r.size, 0);
    for (Vertex a = r.first; a < r.first + r.size; ++a)
      for (Vertex c = a + 1; c < r.first + r.size; ++c) {
        const bool forward = t.has_arc(a, c) == order.before(a, c);
        if (!forward) {
          ++deg[a - r.first];
          ++deg[c - r.first];
        }
      }
    if (*std::max_element(deg.begin(), deg.end()) != (r.size - 1) / 2)
      throw NotNice("block " + std::string(to_string(b)) + " is not ordered with optimal width");
  }

  const std::size_t n = inst.formula.n_vars;
  const std::size_t a_hi = hi(Block::A), b_lo = lo(Block::B), c_hi = hi(Block::C), d_lo = lo(Block::D);
  Assignment beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = order.position(inst.v(i)), pp = order.position(inst.v_prime(i));
    if (p > pp) throw NotNice("pair of " + var_name(i) + " is out of order");
    if (a_hi < p && pp < b_lo)
      beta[i] = true;
    else if (c_hi < p && pp < d_lo)
      beta[i] = false;
    else
      throw NotNice("pair of " + var_name(i) + " is not inside one zone");
  }

  const BackwardProfile prof = backward_profile(t, order);
  if (prof.width >= inst.threshold) {
    Vertex worst = 0;
    std::size_t worst_deg = 0;
    bool clause = false;
    for (Vertex v = 0; v < t.size(); ++v) {
      if (prof.per_vertex[v] < inst.threshold) continue;
      const bool is_clause = inst.block_of[v] == Block::Y;
      if ((is_clause && !clause) || (is_clause == clause && prof.per_vertex[v] > worst_deg)) {
        worst = v;
        worst_deg = prof.per_vertex[v];
        clause = is_clause;
      }
    }
    throw ThresholdReached("width " + std::to_string(prof.width) + " reaches threshold " +
                               std::to_string(inst.threshold) + " at " + inst.labels[worst],
                           worst, worst_deg);
  }
  if (!satisfies(inst.formula, beta))
    throw Error("nice ordering below threshold produced a non-satisfying assignment");
  return beta;
}

// ---- cubic graphs ------------------------------------------------------------

CubicGraph make_cubic_graph(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (Edge& e : edges) {
    if (e.first >= n || e.second >= n)
      throw InvalidInput("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} out of range");
    if (e.first == e.second) throw InvalidInput("self-loop at " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    ++deg[e.first];
    ++deg[e.second];
  }
  std::sort(edges.begin(), edges.end());
  if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidInput("duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] != 3)
      throw InvalidInput("vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) + ", expected 3");
  return {n, std::move(edges)};
}

std::vector<std::array<Vertex, 3>> neighbours(const CubicGraph& g) {
  std::vector<std::array<Vertex, 3>> adj(g.n);
  std::vector<std::size_t> fill(g.n, 0);
  for (const auto& [a, b] : g.edges) {
    adj[a][fill[a]++] = b;
    adj[b][fill[b]++] = a;
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool is_vertex_cover(const CubicGraph& g, const VertexSet& s) {
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const Edge& e) { return s.contains(e.first) || s.contains(e.second); });
}

Vertex FvstReductionInstance::u(std::size_t i, std::size_t j) const {
  const auto& row = adjacency[i];
  for (std::size_t s = 0; s < 3; ++s)
    if (row[s] == j) return patterns[i][1 + s];
  throw InvalidInput(std::to_string(j) + " is not a neighbour of " + std::to_string(i));
}

FvstReductionInstance cubic_to_fvst(const CubicGraph& g) {
  const CubicGraph checked = make_cubic_graph(g.n, g.edges);
  FvstReductionInstance inst;
  inst.graph = checked;
  inst.offset = checked.edges.size();
  inst.adjacency = neighbours(checked);
  inst.patterns.resize(checked.n);
  for (std::size_t i = 0; i < checked.n; ++i)
    for (std::size_t s = 0; s < 8; ++s) inst.patterns[i][s] = 8 * i + s;

  for (std::size_t i = 0; i < checked.n; ++i) inst.backward.push_back({{inst.t(i), inst.h(i)}, ArcTag::VertexBackward, i, i});
  for (const auto& [i, j] : checked.edges)
    inst.backward.push_back({{inst.u(j, i), inst.u(i, j)}, ArcTag::EdgeBackward, i, j});

  const std::size_t total = 8 * checked.n;
  TournamentBuilder tb(total);
  for (Vertex a = 0; a < total; ++a)
    for (Vertex b = a + 1; b < total; ++b) tb.orient(a, b);
  for (const TaggedArc& ta : inst.backward) tb.orient(ta.arc.first, ta.arc.second);
  inst.tournament = tb.build();
  inst.sparse_ordering = Ordering::identity(total);

  const BackwardProfile prof = backward_profile(inst.tournament, inst.sparse_ordering);
  if (prof.width > 1 || prof.total_backward != inst.backward.size())
    throw Error("constructed ordering is not sparse");
  return inst;
}

VertexSet vc_to_fvst_solution(const FvstReductionInstance& inst, const VertexSet& s) {
  const CubicGraph& g = inst.graph;
  if (s.universe() != g.n) throw InvalidInput("cover universe does not match the graph");
  if (!is_vertex_cover(g, s)) throw InvalidInput("set is not a vertex cover");
  VertexSet x(inst.tournament.size());
  for (std::size_t i = 0; i < g.n; ++i) {
    if (s.contains(i))
      x.insert(inst.h(i));
    else
      for (Vertex j : inst.adjacency[i]) x.insert(inst.u(i, j));
  }
  for (const auto& [i, j] : g.edges)
    if (s.contains(i) && s.contains(j)) x.insert(inst.u(j, i));
  if (x.count() != s.count() + g.edges.size() || !is_feedback_vertex_set(inst.tournament, x))
    throw Error("cover did not map to a feedback vertex set of size |S| + |E|");
  return x;
}

bool saturated(const FvstReductionInstance& inst, const Arc& arc, const VertexSet& x) {
  const std::size_t lo = inst.sparse_ordering.position(arc.second);
  const std::size_t hi = inst.sparse_ordering.position(arc.first);
  for (std::size_t p = lo + 1; p < hi; ++p)
    if (!x.contains(inst.sparse_ordering[p])) return false;
  return true;
}

VertexSet normalize_fvst_solution(const FvstReductionInstance& inst, const VertexSet& x) {
  const Tournament& t = inst.tournament;
  if (x.universe() != t.size()) throw InvalidInput("set universe does not match the tournament");
  if (!is_feedback_vertex_set(t, x)) throw InvalidInput("set is not a feedback vertex set");

  std::vector<const TaggedArc*> edge_arcs;
  for (const TaggedArc& ta : inst.backward)
    if (ta.tag == ArcTag::EdgeBackward) edge_arcs.push_back(&ta);
  std::sort(edge_arcs.begin(), edge_arcs.end(), [&](const TaggedArc* a, const TaggedArc* b) {
    return inst.sparse_ordering.position(a->arc.second) < inst.sparse_ordering.position(b->arc.second);
  });

  VertexSet out = x;
  // Unhit edge arcs are saturated; trade the x-vertices of the head's pattern
  // for its three u-vertices, leftmost arc first.
  for (const TaggedArc* ta : edge_arcs) {
    const auto [tail, head] = ta->arc;
    if (out.contains(tail) || out.contains(head)) continue;
    const std::size_t i = ta->i;
    for (Vertex j : inst.adjacency[i]) out.insert(inst.u(i, j));
    for (std::size_t r = 1; r <= 3; ++r) out.erase(inst.x(i, r));
  }
  // Doubly hit edge arcs: swap the head for h of its pattern.
  for (const TaggedArc* ta : edge_arcs) {
    const auto [tail, head] = ta->arc;
    if (out.contains(tail) && out.contains(head)) {
      out.erase(head);
      out.insert(inst.h(ta->i));
    }
  }
  for (std::size_t i = 0; i < inst.graph.n; ++i)
    for (std::size_t r = 1; r <= 3; ++r) out.erase(inst.x(i, r));

  if (out.count() > x.count() || !is_feedback_vertex_set(t, out))
    throw Error("normalization broke the feedback vertex set");
  return out;
}

VertexSet fvst_solution_to_vc(const FvstReductionInstance& inst, const VertexSet& x) {
  const VertexSet norm = normalize_fvst_solution(inst, x);
  VertexSet s(inst.graph.n);
  for (const TaggedArc& ta : inst.backward)
    if (ta.tag == ArcTag::VertexBackward && !saturated(inst, ta.arc, norm)) s.insert(ta.i);
  if (!is_vertex_cover(inst.graph, s) || s.count() + inst.offset > x.count())
    throw Error("feedback vertex set did not map to a vertex cover of size |X| - |E|");
  return s;
}

}  // namespace dwlab
