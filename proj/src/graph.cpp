#include "nesto/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nesto {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0) throw InvalidInput("negative vertex count");
  require_capacity(n <= kMaxVertices, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adj_) twice += popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[u] & ~full_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidInput("edge endpoint out of range 1.." + std::to_string(n_));
  if (u == v) throw InvalidInput("loops are not allowed (vertex " + std::to_string(u + 1) + ")");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

// ------------------------------------------------------------------ families

Graph family_graph(GraphFamily kind, int n) {
  if (n < 1) throw InvalidInput("graph families need n >= 1");
  Graph g(n);
  switch (kind) {
    case GraphFamily::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case GraphFamily::Path:
      for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
      break;
    case GraphFamily::Cycle:
      if (n < 3) throw InvalidInput("cycle graphs need n >= 3");
      for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
      break;
    case GraphFamily::Star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
  }
  return g;
}

GraphFamily parse_family(std::string_view name) {
  if (name == "complete" || name == "K") return GraphFamily::Complete;
  if (name == "path" || name == "L") return GraphFamily::Path;
  if (name == "cycle" || name == "C") return GraphFamily::Cycle;
  if (name == "star" || name == "S") return GraphFamily::Star;
  throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(GraphFamily kind) {
  switch (kind) {
    case GraphFamily::Complete: return "complete";
    case GraphFamily::Path: return "path";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Star: return "star";
  }
  return "?";
}

// ------------------------------------------------------- induced / contract

namespace {

void check_subset(const Graph& g, Mask subset) {
  if (subset & ~g.vertices()) throw InvalidInput("vertex set exceeds 1.." + std::to_string(g.size()));
}

}  // namespace

Graph induced(const Graph& g, Mask subset) {
  check_subset(g, subset);
  Graph out(popcount(subset));
  int i = 0;
  for_each_bit(subset, [&](int u) {
    for_each_bit(compress(g.neighbors(u) & subset, subset), [&](int j) {
      if (j > i) out.add_edge(i, j);
    });
    ++i;
  });
  return out;
}

Graph contract(const Graph& g, Mask subset) {
  check_subset(g, subset);
  const Mask rest = g.vertices() & ~subset;
  // For each vertex, the part of `subset` reachable through `subset` only.
  std::vector<Mask> hull(g.size(), 0);
  for (const Mask c : components(g, subset))
    for_each_bit(c, [&](int w) { hull[w] = c; });
  Graph out(popcount(rest));
  std::vector<Mask> reach(g.size(), 0);
  for_each_bit(rest, [&](int u) {
    Mask r = g.neighbors(u);
    for_each_bit(g.neighbors(u) & subset, [&](int w) {
      for_each_bit(hull[w], [&](int x) { r |= g.neighbors(x); });
    });
    reach[u] = r & rest & ~bit(u);
  });
  int i = 0;
  for_each_bit(rest, [&](int u) {
    for_each_bit(compress(reach[u], rest), [&](int j) {
      if (j > i) out.add_edge(i, j);
    });
    ++i;
  });
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw InvalidInput("vertex out of range");
  return induced(g, g.vertices() & ~bit(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.size() + b.size());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.size() + u, a.size() + v);
  return out;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.size()) throw InvalidInput("permutation size mismatch");
  Graph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// -------------------------------------------------------------- connectivity

Mask component_of(const Graph& g, Mask within, int start) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Mask> components(const Graph& g, Mask within) {
  std::vector<Mask> out;
  while (within) {
    const Mask c = component_of(g, within, lowest(within));
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

std::vector<Mask> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected_subset(const Graph& g, Mask subset) {
  return subset != 0 && component_of(g, subset, lowest(subset)) == subset;
}

bool is_connected(const Graph& g) { return g.size() == 0 || is_connected_subset(g, g.vertices()); }

namespace {

// Calls f(s) for every subset of `base` with exactly k elements.
template <class F>
bool all_subsets_of_size(Mask base, int k, F&& f) {
  const auto elems = elements(base);
  const int n = static_cast<int>(elems.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= bit(elems[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_q_connected(const Graph& g, int q) {
  if (q < 1 || q > g.size()) throw InvalidInput("q must lie in 1..n");
  for (int removed = 0; removed < q; ++removed) {
    const bool ok = all_subsets_of_size(g.vertices(), removed, [&](Mask s) {
      return is_connected_subset(g, g.vertices() & ~s);
    });
    if (!ok) return false;
  }
  return true;
}

int connectivity(const Graph& g) {
  int q = 0;
  while (q < g.size() && is_q_connected(g, q + 1)) ++q;
  return q;
}

// ------------------------------------------------------------- independence

bool is_independent(const Graph& g, Mask subset) {
  bool ok = true;
  for_each_bit(subset, [&](int v) { ok = ok && !(g.neighbors(v) & subset); });
  return ok;
}

namespace {

void count_independent(const Graph& g, Mask available, int size, std::vector<std::int64_t>& counts) {
  if (static_cast<int>(counts.size()) <= size) counts.resize(size + 1, 0);
  ++counts[size];
  // Extend only with vertices above the current maximum to count each set once.
  for_each_bit(available, [&](int v) {
    const Mask above = available & ~full_mask(v + 1);
    count_independent(g, above & ~g.neighbors(v), size + 1, counts);
  });
}

}  // namespace

std::vector<std::int64_t> independence_fvector(const Graph& g) {
  std::vector<std::int64_t> counts;
  count_independent(g, g.vertices(), 0, counts);
  return counts;
}

// ------------------------------------------------------------ canonical form

namespace {

// Pair (i, j), i < j, sits at index j(j-1)/2 + i: the graph6 column order.
// In the code the first pair is the most significant bit.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.size()), pairs_(n_ * (n_ - 1) / 2) {
    order_.resize(n_);
    best_order_.resize(n_);
  }

  void run() {
    if (n_ == 0) return;
    search(0, 0, 0, false);
  }

  std::uint64_t best_code() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  // order_[0..level) holds the old vertices given new labels 0..level-1;
  // `code` holds the bits for every pair among them.
  void search(int level, Mask used, std::uint64_t code, bool below) {
    if (level == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const int shift_base = pairs_ - level * (level + 1) / 2;  // bits after this column
    for (int v = 0; v < n_; ++v) {
      if (has(used, v)) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < level; ++i) column = (column << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      const std::uint64_t next = code | (column << shift_base);
      bool next_below = below;
      if (have_best_ && !below) {
        // Compare the prefix fixed so far against the best code's prefix.
        const std::uint64_t prefix_mask = shift_base >= 64 ? 0 : ~((std::uint64_t{1} << shift_base) - 1);
        const std::uint64_t mine = next & prefix_mask;
        const std::uint64_t theirs = best_ & prefix_mask;
        if (mine > theirs) continue;
        next_below = mine < theirs;
      }
      order_[level] = v;
      search(level + 1, used | bit(v), next, next_below);
    }
  }

  const Graph& g_;
  int n_;
  int pairs_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  require_capacity(g.size() <= kMaxCanonicalVertices,
                   "canonical_form: n = " + std::to_string(g.size()) + " exceeds " +
                       std::to_string(kMaxCanonicalVertices));
  Canonicalizer c(g);
  c.run();
  return {g.size(), c.best_code()};
}

Graph canonical_graph(const Graph& g) {
  require_capacity(g.size() <= kMaxCanonicalVertices,
                   "canonical_graph: n = " + std::to_string(g.size()) + " exceeds " +
                       std::to_string(kMaxCanonicalVertices));
  Canonicalizer c(g);
  c.run();
  std::vector<int> perm(g.size());
  for (int i = 0; i < g.size(); ++i) perm[c.best_order()[i]] = i;
  return permuted(g, perm);
}

// --------------------------------------------------------------- enumeration

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0) throw InvalidInput("negative vertex count");
  require_capacity(n <= kMaxEnumerationVertices,
                   "enumerate_graphs: n = " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxEnumerationVertices));
  // Every graph on k+1 vertices is some graph on k vertices plus one vertex.
  std::map<CanonicalForm, Graph> layer{{canonical_form(Graph(0)), Graph(0)}};
  for (int k = 0; k < n; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const auto& [form, base] : layer) {
      for (Mask nbrs = 0; nbrs <= full_mask(k); ++nbrs) {
        Graph g(k + 1);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for_each_bit(nbrs, [&](int u) { g.add_edge(u, k); });
        const CanonicalForm cf = canonical_form(g);
        if (!next.contains(cf)) next.emplace(cf, canonical_graph(g));
        if (k == 0) break;  // full_mask(0) == 0
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [form, g] : layer)
    if (!connected_only || is_connected(g)) out.push_back(g);
  std::stable_sort(out.begin(), out.end(),
                   [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  return out;
}

}  // namespace nesto
