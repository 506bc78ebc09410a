#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "nesto/nestopoly.hpp"

using namespace nesto;

namespace {

BuildingSet graphical(GraphFamily kind, int n) { return from_graph(family_graph(kind, n)); }

const BuildingSet kSegment = BuildingSet::make(2, {0b11});
const BuildingSet kSimplex = BuildingSet::make(3, {0b111});

// Nested-set conditions checked directly: members pairwise nested or
// disjoint, and no union of two or more pairwise disjoint members in B.
bool brute_nested(const BuildingSet& b, const std::vector<Mask>& family) {
  for (Mask x : family)
    for (Mask y : family)
      if ((x & y) && (x & y) != x && (x & y) != y) return false;
  const int k = static_cast<int>(family.size());
  for (std::uint32_t pick = 1; pick < (1U << k); ++pick) {
    if (std::popcount(pick) < 2) continue;
    Mask u = 0;
    bool disjoint = true;
    for (int i = 0; i < k; ++i)
      if (pick >> i & 1U) {
        if (u & family[i]) disjoint = false;
        u |= family[i];
      }
    if (disjoint && b.contains(u)) return false;
  }
  return true;
}

struct BruteNested {
  std::vector<std::int64_t> by_size;
  std::vector<std::vector<Mask>> maximal;
};

BruteNested brute_nested_sets(const BuildingSet& b) {
  const auto maxi = b.maximal();
  std::vector<Mask> cand;
  for (Mask s : b.sets())
    if (std::find(maxi.begin(), maxi.end(), s) == maxi.end()) cand.push_back(s);
  BruteNested out;
  const int top = b.ground_size() - static_cast<int>(maxi.size());
  out.by_size.assign(top + 1, 0);
  for (std::uint32_t pick = 0; pick < (1U << cand.size()); ++pick) {
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (pick >> i & 1U) fam.push_back(cand[i]);
    if (!brute_nested(b, fam)) continue;
    REQUIRE(static_cast<int>(fam.size()) <= top);
    ++out.by_size[fam.size()];
    if (static_cast<int>(fam.size()) == top) {
      std::sort(fam.begin(), fam.end(), size_lex_less);
      out.maximal.push_back(fam);
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), size_lex_less);
  });
  return out;
}

bool descendants_first(const BTree& t, const std::vector<int>& word) {
  std::vector<int> pos(t.size());
  for (int i = 0; i < t.size(); ++i) pos[word[i] - 1] = i;
  for (int v = 0; v < t.size(); ++v)
    if (t.parent[v] >= 0 && pos[v] > pos[t.parent[v]]) return false;
  return true;
}

// Rooted unlabeled trees counted by the Euler transform recurrence.
std::vector<std::int64_t> rooted_tree_counts(int up_to) {
  std::vector<std::int64_t> a(up_to + 1, 0);
  a[1] = 1;
  for (int n = 1; n < up_to; ++n) {
    std::int64_t s = 0;
    for (int k = 1; k <= n; ++k) {
      std::int64_t d_sum = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) d_sum += d * a[d];
      s += d_sum * a[n - k + 1];
    }
    a[n + 1] = s / n;
  }
  return a;
}

}  // namespace

TEST_CASE("nested set membership") {
  const BuildingSet l4 = graphical(GraphFamily::Path, 4);
  std::string why;
  CHECK(is_nested(l4, {0b0001, 0b0011}));
  CHECK_FALSE(is_nested(l4, {0b0011, 0b0110}, &why));
  CHECK(why.find("12") != std::string::npos);
  CHECK_FALSE(is_nested(l4, {0b0001, 0b0010}, &why));
  CHECK(why.find("12") != std::string::npos);
  CHECK_THROWS_AS(is_nested(l4, {0b0101}), InvalidInput);
  CHECK_THROWS_AS(is_nested(l4, {0b1111}), InvalidInput);
  CHECK(is_nested(l4, {}));
}

TEST_CASE("nested set counts") {
  CHECK(nested_sets_by_size(graphical(GraphFamily::Path, 4)) == std::vector<std::int64_t>{1, 9, 21, 14});
  CHECK(nested_sets_by_size(graphical(GraphFamily::Complete, 3)).back() == 6);
  CHECK(nested_sets_by_size(kSimplex) == std::vector<std::int64_t>{1, 3, 3});
  CHECK(face_vector(kSimplex) == std::vector<std::int64_t>{3, 3, 1});
  CHECK(face_vector(graphical(GraphFamily::Path, 4)) == std::vector<std::int64_t>{14, 21, 9, 1});
  CHECK_THROWS_AS(nested_sets_by_size(BuildingSet::discrete(9)), CapacityError);
}

TEST_CASE("products of squares share a face vector") {
  const BuildingSet b1 = BuildingSet::make(4, {0b0011, 0b0111});
  const BuildingSet b2 = BuildingSet::make(4, {0b0011, 0b1100});
  CHECK(face_vector(b1) == std::vector<std::int64_t>{4, 4, 1});
  CHECK(face_vector(b2) == std::vector<std::int64_t>{4, 4, 1});
}

TEST_CASE("maximal nested sets") {
  CHECK(maximal_nested_sets(graphical(GraphFamily::Path, 3)).size() == 5);
  CHECK(maximal_nested_sets(graphical(GraphFamily::Complete, 4)).size() == 24);
  CHECK(maximal_nested_sets(kSegment) == std::vector<std::vector<Mask>>{{0b01}, {0b10}});
}

TEST_CASE("nested sets agree with subfamily enumeration") {
  std::vector<BuildingSet> cases = {graphical(GraphFamily::Path, 5), graphical(GraphFamily::Complete, 4),
                                    graphical(GraphFamily::Star, 4), graphical(GraphFamily::Cycle, 4),
                                    BuildingSet::make(4, {0b0011, 0b1100}), BuildingSet::discrete(3)};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) cases.push_back(random_building_set(1 + static_cast<int>(rng() % 4), 0.3, rng));
  for (const BuildingSet& b : cases) {
    INFO(to_string(b));
    const BruteNested brute = brute_nested_sets(b);
    CHECK(nested_sets_by_size(b) == brute.by_size);
    CHECK(maximal_nested_sets(b) == brute.maximal);
  }
}

TEST_CASE("B-trees") {
  const BTree k3 = b_tree(graphical(GraphFamily::Complete, 3), {0b001, 0b011});
  CHECK(k3.parent == std::vector<int>{1, 2, -1});
  CHECK(to_string(k3) == "3(2(1))");
  const BTree l3 = b_tree(graphical(GraphFamily::Path, 3), {0b001, 0b100});
  CHECK(l3.parent == std::vector<int>{1, -1, 1});
  CHECK(l3.roots() == std::vector<int>{1});
  CHECK(l3.children(1) == std::vector<int>{0, 2});
  CHECK(to_string(l3) == "2(1 3)");
  CHECK(b_tree(kSegment, {0b01}).parent == std::vector<int>{1, -1});
  CHECK_THROWS_AS(b_tree(graphical(GraphFamily::Path, 3), {0b001}), InvalidInput);
}

TEST_CASE("every B-tree is a spanning tree with one node per element") {
  for (const BuildingSet& b : {graphical(GraphFamily::Path, 5), graphical(GraphFamily::Complete, 4),
                               graphical(GraphFamily::Cycle, 5), graphical(GraphFamily::Star, 5)}) {
    for (const auto& n : maximal_nested_sets(b)) {
      CHECK(static_cast<int>(n.size()) == b.ground_size() - 1);
      const BTree t = b_tree(b, n);
      CHECK(t.roots().size() == 1);
      CHECK(shape_of(t).size() == b.ground_size());
    }
  }
}

TEST_CASE("vertex coordinates") {
  const BuildingSet k3 = graphical(GraphFamily::Complete, 3);
  CHECK(vertex_coordinates(k3, {0b001, 0b011}) == std::vector<std::int64_t>{1, 2, 4});
  std::set<std::vector<std::int64_t>> points;
  for (const auto& n : maximal_nested_sets(k3)) {
    auto x = vertex_coordinates(k3, n);
    points.insert(x);
    std::sort(x.begin(), x.end());
    CHECK(x == std::vector<std::int64_t>{1, 2, 4});
  }
  CHECK(points.size() == 6);
  const auto s = vertex_coordinates(kSimplex, {0b001, 0b010});
  CHECK(s == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("coordinates lie on the hyperplane and realize the polytope") {
  std::mt19937_64 rng(44);
  std::vector<BuildingSet> cases = {graphical(GraphFamily::Path, 4), graphical(GraphFamily::Complete, 4), kSegment};
  for (int i = 0; i < 20; ++i) {
    BuildingSet b = random_building_set(2 + static_cast<int>(rng() % 4), 0.3, rng);
    if (b.is_connected()) cases.push_back(b);
  }
  for (const BuildingSet& b : cases) {
    INFO(to_string(b));
    for (const auto& n : maximal_nested_sets(b)) {
      const auto x = vertex_coordinates(b, n);
      CHECK(std::accumulate(x.begin(), x.end(), std::int64_t{0}) == b.size());
    }
    const RealizationReport r = check_realization(b);
    CHECK(r.ok);
    CHECK(r.vertices == static_cast<int>(maximal_nested_sets(b).size()));
  }
}

TEST_CASE("tree shapes") {
  const auto counts = rooted_tree_counts(9);
  const std::int64_t known[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 1; n <= 9; ++n) {
    const auto shapes = enumerate_tree_shapes(n);
    CHECK(static_cast<std::int64_t>(shapes.size()) == counts[n]);
    CHECK(counts[n] == known[n]);
    CHECK(std::is_sorted(shapes.begin(), shapes.end()));
    for (const auto& s : shapes) {
      CHECK(s.size() == n);
      CHECK(shape_of(s.to_tree()) == s);
    }
  }
  CHECK_THROWS_AS(enumerate_tree_shapes(10), CapacityError);
}

TEST_CASE("tree shapes ignore labels") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    BTree t;
    t.parent.assign(n, -1);
    for (int v = 1; v < n; ++v) t.parent[v] = static_cast<int>(rng() % v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    BTree u;
    u.parent.assign(n, -1);
    for (int v = 0; v < n; ++v) u.parent[perm[v]] = t.parent[v] < 0 ? -1 : perm[t.parent[v]];
    CHECK(shape_of(t) == shape_of(u));
  }
}

TEST_CASE("tree multisets") {
  const auto l4 = tree_multiset(graphical(GraphFamily::Path, 4));
  std::int64_t total = 0;
  for (const auto& [s, c] : l4) {
    total += c;
    CHECK(s.size() == 4);
  }
  CHECK(total == 14);
  CHECK(l4.size() <= 4);
  const auto k2 = tree_multiset(graphical(GraphFamily::Complete, 2));
  REQUIRE(k2.size() == 1);
  CHECK(k2.begin()->second == 2);
  CHECK(k2.begin()->first == TreeShape{"(())"});
  const auto k3 = tree_multiset(graphical(GraphFamily::Complete, 3));
  REQUIRE(k3.size() == 1);
  CHECK(k3.begin()->second == 6);
  CHECK(k3.begin()->first == TreeShape{"((()))"});
}

TEST_CASE("linear extensions") {
  BTree chain{{1, 2, -1}};
  CHECK(linear_extensions(chain) == std::vector<Permutation>{{1, 2, 3}});
  BTree cherry{{2, 2, -1}};
  CHECK(linear_extensions(cherry) == std::vector<Permutation>{{1, 2, 3}, {2, 1, 3}});
  BTree forest{{-1, -1, -1}};
  CHECK(linear_extensions(forest).size() == 6);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    BTree t;
    t.parent.assign(n, -1);
    for (int v = 0; v < n; ++v)
      if (rng() % 4) {
        const int p = static_cast<int>(rng() % n);
        // Keep it acyclic: only attach to a higher label.
        if (p > v) t.parent[v] = p;
      }
    std::vector<Permutation> brute;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      if (descendants_first(t, w)) brute.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(linear_extensions(t) == brute);
  }
}

TEST_CASE("B-tree linear extensions partition the symmetric group") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) graphs.push_back(g);
  for (GraphFamily k : {GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Star, GraphFamily::Complete})
    graphs.push_back(family_graph(k, 6));
  for (const Graph& g : graphs) {
    const BuildingSet b = from_graph(g);
    std::set<Permutation> seen;
    std::size_t total = 0;
    for (const auto& n : maximal_nested_sets(b)) {
      const auto ext = linear_extensions(b_tree(b, n));
      total += ext.size();
      seen.insert(ext.begin(), ext.end());
    }
    std::size_t fact = 1;
    for (int i = 2; i <= g.size(); ++i) fact *= i;
    INFO(edge_list_string(g));
    CHECK(total == fact);
    CHECK(seen.size() == fact);
  }
}

TEST_CASE("strict labeling puts parents before children") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    BTree t;
    t.parent.assign(n, -1);
    for (int v = 1; v < n; ++v) t.parent[v] = static_cast<int>(rng() % v);
    const auto omega = strict_labeling(t);
    std::vector<int> sorted = omega;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(sorted == expect);
    for (int v = 0; v < n; ++v)
      if (t.parent[v] >= 0) CHECK(omega[t.parent[v]] < omega[v]);
  }
}

TEST_CASE("nested set rendering") {
  CHECK(nested_set_string({0b001, 0b011}, 3) == "{1,12}");
}
