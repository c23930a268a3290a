#include "creg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace creg {

namespace {

int words_for(int n) { return (n + 63) / 64; }

std::invalid_argument bad(const std::string& what) { return std::invalid_argument(what); }

}  // namespace

Graph::Graph(int n) : n_(n), stride_(words_for(n)) {
  if (n < 0) throw bad("graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("graph: vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw bad("graph: edge {" + std::to_string(a) + "," + std::to_string(b) +
                "} has a label outside 0.." + std::to_string(n - 1));
    if (a == b) throw bad("graph: loop at vertex " + std::to_string(a));
    if (g.adjacent(a, b))
      throw bad("graph: duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    g.row(a)[b / 64] |= std::uint64_t{1} << (b % 64);
    g.row(b)[a / 64] |= std::uint64_t{1} << (a % 64);
    ++g.m_;
  }
  return g;
}

bool Graph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (row(i)[j / 64] >> (j % 64)) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < stride_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if ((row(v)[u / 64] >> (u % 64)) & 1U) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((row(i)[j / 64] >> (j % 64)) & 1U) out.emplace_back(i, j);
  return out;
}

std::uint64_t Graph::row64(int v) const {
  if (n_ > 64) throw std::logic_error("graph: row64 needs at most 64 vertices");
  check_vertex(v);
  return row(v)[0];
}

void GraphBuilder::add_edge(int i, int j) {
  g_.check_vertex(i);
  g_.check_vertex(j);
  if (i == j) throw bad("graph: loop at vertex " + std::to_string(i));
  if (g_.adjacent(i, j)) return;
  g_.row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
  g_.row(j)[i / 64] |= std::uint64_t{1} << (i % 64);
  ++g_.m_;
}

// ---------------------------------------------------------------------------

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw bad("cycle_graph: need n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph circulant(int n, std::span<const int> jumps) {
  if (n < 1) throw bad("circulant: n must be positive");
  for (int s : jumps)
    if (s < 1 || s > n / 2)
      throw bad("circulant: jump " + std::to_string(s) + " outside 1.." + std::to_string(n / 2));
  GraphBuilder b(n);
  for (int s : jumps)
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + s) % n);
  return std::move(b).build();
}

Graph circulant_without_jump(int n, int j) {
  if (j < 1 || j > n / 2) throw bad("circulant_without_jump: j outside 1..floor(n/2)");
  std::vector<int> s;
  for (int k = 1; k <= n / 2; ++k)
    if (k != j) s.push_back(k);
  return circulant(n, s);
}

Graph cubic_circulant(int n, int a) {
  if (n < 2 || a < 1 || a >= n) throw bad("cubic_circulant: need 1 <= a < n");
  const int s[] = {a, n};
  return circulant(2 * n, s);
}

Graph moebius(int n) {
  if (n < 2) throw bad("moebius: need n >= 2");
  const int s[] = {1, n};
  return circulant(2 * n, s);
}

Graph prism(int n) {
  if (n < 3 || n % 2 == 0) throw bad("prism: C_2n(2, n) needs n odd and n >= 3");
  const int s[] = {2, n};
  return circulant(2 * n, s);
}

Graph cubic_family(CubicKind kind, int n) {
  return kind == CubicKind::moebius ? moebius(n) : prism(n);
}

namespace {

// Ladder with t squares: top row 0..t, bottom row t+1..2t+1, plus `extra`
// trailing vertices for the caller to attach.
GraphBuilder ladder(int t, int extra) {
  GraphBuilder b(2 * (t + 1) + extra);
  const int bottom = t + 1;
  for (int i = 0; i < t; ++i) {
    b.add_edge(i, i + 1);
    b.add_edge(bottom + i, bottom + i + 1);
  }
  for (int i = 0; i <= t; ++i) b.add_edge(i, bottom + i);
  return b;
}

}  // namespace

Graph family_A(int t) {
  if (t < 1) throw bad("family_A: need t >= 1");
  auto b = ladder(t, 2);
  b.add_edge(2 * t + 2, 0);
  b.add_edge(2 * t + 3, t + 1);
  return std::move(b).build();
}

Graph family_B(int t) {
  if (t < 1) throw bad("family_B: need t >= 1");
  return std::move(ladder(t, 0)).build();
}

Graph family_D(int t) {
  if (t < 1 || t % 2 == 0) throw bad("family_D: need t odd and t >= 1");
  auto b = ladder(t, 2);
  b.add_edge(2 * t + 2, t + 1);  // w on v_1
  b.add_edge(2 * t + 3, t);      // w' on u_{t+1}
  return std::move(b).build();
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) b.add_edge(i, j);
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> labels(vertices.begin(), vertices.end());
  for (int v : labels)
    if (v < 0 || v >= g.order())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int k = static_cast<int>(labels.size());
  GraphBuilder b(k);
  for (int a = 0; a < k; ++a)
    for (int c = a + 1; c < k; ++c)
      if (g.adjacent(labels[a], labels[c])) b.add_edge(a, c);
  return {std::move(b).build(), std::move(labels)};
}

Graph delete_vertex(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("delete_vertex: vertex out of range");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (v != x) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

Graph delete_closed_neighborhood(const Graph& g, int x) {
  if (x < 0 || x >= g.order())
    throw std::out_of_range("delete_closed_neighborhood: vertex out of range");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (v != x && !g.adjacent(v, x)) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [i, j] : g.edges()) b.add_edge(i, j);
  for (auto [i, j] : h.edges()) b.add_edge(g.order() + i, g.order() + j);
  return std::move(b).build();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out.back().push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          q.push(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

CycleDecomposition cycle_decomposition(int n, int j) {
  if (j < 1 || j > n / 2) throw bad("cycle_decomposition: j outside 1..floor(n/2)");
  CycleDecomposition out;
  out.components = std::gcd(j, n);
  out.cycle_length = n / out.components;
  for (int i = 0; i < out.components; ++i) {
    std::vector<int> cls;
    for (int k = 0; k < out.cycle_length; ++k) cls.push_back((i + k * j) % n);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

CubicDecomposition davis_domke(int n, int a) {
  if (n < 2 || a < 1 || a >= n) throw bad("davis_domke: need 1 <= a < n");
  const int t = std::gcd(2 * n, a);
  if ((2 * n / t) % 2 == 0) return {t, n / t, 1};
  return {t / 2, 2 * n / t, 2};
}

// ---------------------------------------------------------------------------

std::vector<int> lex_bfs_elimination_order(const Graph& g) {
  const int n = g.order();
  // Quadratic LexBFS: labels are lists of visit stamps in decreasing order,
  // compared lexicographically.
  std::vector<std::vector<int>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<int> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best < 0 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    visit.push_back(best);
    for (int u : g.neighbors(best))
      if (!visited[u]) label[u].push_back(n - step);
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  const auto order = lex_bfs_elimination_order(g);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v : order) {
    // Later neighbours must form a clique; it suffices that they are all
    // adjacent to the earliest of them.
    int parent = -1;
    std::vector<int> later;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v]) {
        later.push_back(u);
        if (parent < 0 || pos[u] < pos[parent]) parent = u;
      }
    for (int u : later)
      if (u != parent && !g.adjacent(u, parent)) return false;
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c);
    const auto k = nb.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < k; ++d)
          if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d])) return false;
      }
  }
  return true;
}

bool is_gap_free(const Graph& g) {
  const auto es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      auto [p, q] = es[a];
      auto [r, s] = es[b];
      if (p == r || p == s || q == r || q == s) continue;
      if (!g.adjacent(p, r) && !g.adjacent(p, s) && !g.adjacent(q, r) && !g.adjacent(q, s))
        return false;
    }
  return true;
}

bool is_cochordal_cover(const Graph& g, std::span<const Graph> parts) {
  GraphBuilder covered(g.order());
  for (const auto& part : parts) {
    if (part.order() != g.order())
      throw bad("is_cochordal_cover: part has " + std::to_string(part.order()) +
                " vertices, graph has " + std::to_string(g.order()));
    for (auto [i, j] : part.edges()) {
      if (!g.adjacent(i, j))
        throw bad("is_cochordal_cover: part edge {" + std::to_string(i) + "," +
                  std::to_string(j) + "} is not an edge of the graph");
      covered.add_edge(i, j);
    }
  }
  if (std::move(covered).build().size() != g.size()) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [](const Graph& p) { return is_chordal(complement(p)); });
}

std::pair<Graph, Graph> cochordal_split_C4j(int j) {
  if (j < 1) throw bad("cochordal_split_C4j: need j >= 1");
  const int n = 4 * j;
  Graph g = circulant_without_jump(n, j);

  auto in_v1 = [j](int v) { return v < j || (v >= 2 * j && v < 3 * j); };
  auto dist = [n](int a, int b) {
    int d = std::abs(a - b);
    return std::min(d, n - d);
  };

  // G_1 = (C_4j(1..j-1) u G[V_1]) minus G[V_2]; G_2 symmetric with the
  // jumps j+1..2j.
  GraphBuilder b1(n), b2(n);
  for (auto [a, b] : g.edges()) {
    const bool both_v1 = in_v1(a) && in_v1(b);
    const bool both_v2 = !in_v1(a) && !in_v1(b);
    const int d = dist(a, b);
    if ((d < j || both_v1) && !both_v2) b1.add_edge(a, b);
    if ((d > j || both_v2) && !both_v1) b2.add_edge(a, b);
  }
  return {std::move(b1).build(), std::move(b2).build()};
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    os << (first ? "" : ", ") << i << "-" << j;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace creg
