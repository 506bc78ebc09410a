#pragma once

// Simple graphs on small vertex sets. Vertices are 0-based internally; every
// text format and user-facing message is 1-based.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nesto/bits.hpp"
#include "nesto/error.hpp"

namespace nesto {

class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  explicit Graph(int n);
  /// Edges given as 1-based vertex pairs.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int size() const noexcept { return n_; }
  Mask vertices() const noexcept { return full_mask(n_); }
  Mask neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return has(adj_[u], v); }
  int degree(int v) const { return popcount(adj_[v]); }
  int edge_count() const;
  /// 0-based pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// 0-based; rejects loops and out-of-range vertices.
  void add_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

enum class GraphFamily { Complete, Path, Cycle, Star };

/// K_n, L_n (1-2-...-n), C_n (n >= 3) or K_{1,n-1} with center 1.
Graph family_graph(GraphFamily kind, int n);
GraphFamily parse_family(std::string_view name);
std::string family_name(GraphFamily kind);

/// Induced subgraph on `subset`, relabeled order-preservingly.
Graph induced(const Graph& g, Mask subset);
/// Graph on the complement of `subset`; u ~ v iff uv is an edge or some
/// path u, w1, ..., wk, v has every wj in `subset`.
Graph contract(const Graph& g, Mask subset);
Graph delete_vertex(const Graph& g, int v);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex i of g becomes vertex perm[i].
Graph permuted(const Graph& g, std::span<const int> perm);

/// Vertices reachable from `start` inside `within` (start must lie in it).
Mask component_of(const Graph& g, Mask within, int start);
/// Connected components of g restricted to `within`, ordered by least vertex.
std::vector<Mask> components(const Graph& g, Mask within);
std::vector<Mask> components(const Graph& g);
bool is_connected_subset(const Graph& g, Mask subset);
bool is_connected(const Graph& g);

/// True iff g stays connected after deleting any set of at most q-1 vertices.
bool is_q_connected(const Graph& g, int q);
/// Largest q with is_q_connected(g, q); 0 for disconnected or empty graphs.
int connectivity(const Graph& g);

/// (f_{-1}, f_0, f_1, ...): independent sets counted by cardinality.
std::vector<std::int64_t> independence_fvector(const Graph& g);
bool is_independent(const Graph& g, Mask subset);

/// Minimal upper-triangle adjacency code over all vertex relabelings.
/// Exhaustive over n! orders with prefix pruning; n <= 10.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalVertices = 10;

CanonicalForm canonical_form(const Graph& g);
/// The relabeled graph realizing canonical_form(g).
Graph canonical_graph(const Graph& g);

inline constexpr int kMaxEnumerationVertices = 7;

/// One representative per isomorphism class on n vertices, ordered by edge
/// count then canonical code. n <= 7.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

// ---- formats ----

/// {"n":4,"edges":[[1,2],[2,3]]}
Graph parse_graph_json(std::string_view text);
std::string to_json(const Graph& g);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
/// One graph per non-empty line; lines starting with '>' or '#' are skipped.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Inline graph argument: "path:4" style shorthand, a JSON object, or
/// "g6:<graph6>".
Graph parse_graph_spec(std::string_view text);
/// Reads a file holding JSON or graph6 (first graph) content.
Graph parse_graph_text(std::string_view content);

std::string edge_list_string(const Graph& g);  // "12,23,34" style, 1-based

}  // namespace nesto
