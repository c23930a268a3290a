// Finite simple graphs and the circulant/ladder families whose edge ideals
// this library studies.
//
// A Graph is immutable once built. Vertices are labelled 0..n-1 and the
// adjacency is kept as one row of 64-bit words per vertex, so membership
// queries are O(1) and, for n <= 64, a vertex's neighbourhood is a single
// machine word (see Graph::row64).

#ifndef CREG_GRAPH_HPP
#define CREG_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace creg {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Each pair may be given in either
  /// orientation. Throws std::invalid_argument on loops, duplicate edges or
  /// labels outside 0..n-1.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(int i, int j) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighbourhood of v as a bit mask. Requires order() <= 64.
  std::uint64_t row64(int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  void check_vertex(int v) const;
  std::uint64_t* row(int v) { return rows_.data() + static_cast<std::size_t>(v) * stride_; }
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * stride_;
  }

  int n_ = 0;
  int stride_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Accumulates edges idempotently; used by the generators, where the same
/// pair can arise twice (e.g. distance j and n - j coincide when n = 2j).
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  void add_edge(int i, int j);
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

// ---------------------------------------------------------------------------
// Generators

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// C_n(S): {i, j} is an edge iff |i - j| or n - |i - j| lies in S.
/// Rejects S containing 0, negatives or values above floor(n/2).
Graph circulant(int n, std::span<const int> jumps);

/// C_n(1, ..., j-1, j+1, ..., floor(n/2)).
Graph circulant_without_jump(int n, int j);

/// C_{2n}(a, n), the general cubic circulant.
Graph cubic_circulant(int n, int a);

/// Moebius ladder C_{2n}(1, n); n >= 2.
Graph moebius(int n);

/// Prism C_{2n}(2, n); n >= 3 and odd.
Graph prism(int n);

enum class CubicKind { moebius, prism };

/// moebius(n) or prism(n).
Graph cubic_family(CubicKind kind, int n);

/// Ladder families with t squares. Labelling: the top row u_1..u_{t+1} is
/// 0..t and the bottom row v_1..v_{t+1} is t+1..2t+1. family_A additionally
/// has u_0 = 2t+2 and v_0 = 2t+3 hanging off u_1 and v_1 (no rung u_0 v_0).
/// family_D has w = 2t+2 on v_1 and w' = 2t+3 on u_{t+1}; t must be odd.
Graph family_A(int t);
Graph family_B(int t);
Graph family_D(int t);

// ---------------------------------------------------------------------------
// Derived graphs

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[new vertex] = original vertex
};

/// Induced subgraph on W, relabelled 0..|W|-1 in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph delete_vertex(const Graph& g, int x);
Graph delete_closed_neighborhood(const Graph& g, int x);

/// G + H with H's labels shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// ---------------------------------------------------------------------------
// Structure of C_n(j)

struct CycleDecomposition {
  int components = 0;    // d = gcd(j, n)
  int cycle_length = 0;  // n / d; 2 means the components are single edges
  std::vector<std::vector<int>> classes;  // {i, i+j, i+2j, ...} for 0 <= i < d
};

CycleDecomposition cycle_decomposition(int n, int j);

/// C_{2n}(a, n) as `copies` disjoint copies of C_{2*base_n}(base_a, base_n).
struct CubicDecomposition {
  int copies = 0;
  int base_n = 0;
  int base_a = 0;
};

CubicDecomposition davis_domke(int n, int a);

// ---------------------------------------------------------------------------
// Predicates

/// Lexicographic BFS followed by a perfect-elimination-ordering check.
bool is_chordal(const Graph& g);

/// The elimination ordering produced by lexicographic BFS (reverse visit
/// order). It is a perfect elimination ordering iff g is chordal.
std::vector<int> lex_bfs_elimination_order(const Graph& g);

bool is_claw_free(const Graph& g);

/// No induced C_4 in the complement, i.e. no induced 2K_2 in g.
bool is_gap_free(const Graph& g);

/// True iff the parts' edges cover E(g) and every part is co-chordal.
/// Throws std::invalid_argument if a part has the wrong vertex count or an
/// edge outside E(g).
bool is_cochordal_cover(const Graph& g, std::span<const Graph> parts);

/// The two co-chordal subgraphs covering C_{4j}(1, ..., j-1, j+1, ..., 2j)
/// built from the vertex halves V_1 = [0, j) u [2j, 3j) and
/// V_2 = [j, 2j) u [3j, 4j). For j = 1 the graph is 2K_2 and the parts are
/// its two edges.
std::pair<Graph, Graph> cochordal_split_C4j(int j);

std::string to_string(const Graph& g);

}  // namespace creg

#endif  // CREG_GRAPH_HPP
