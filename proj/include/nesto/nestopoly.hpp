#pragma once

// Face structure of nestohedra: nested sets, maximal nested sets, B-trees,
// unlabeled tree shapes and the integer vertex realization.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nesto/bits.hpp"
#include "nesto/buildset.hpp"
#include "nesto/qsym.hpp"

namespace nesto {

inline constexpr int kMaxNestedGround = 8;

/// Members of B that may appear in a nested set: everything except the
/// maximal members.
std::vector<Mask> nested_candidates(const BuildingSet& b);

/// Pairwise nested-or-disjoint, and no union of two or more pairwise
/// disjoint members lies in B. Throws InvalidInput if a member is not a
/// non-maximal member of B. `why` receives the violated condition.
bool is_nested(const BuildingSet& b, const std::vector<Mask>& family, std::string* why = nullptr);

/// Number of nested sets of each cardinality 0, 1, ..., n - #components.
/// The last entry is the vertex count, entry 1 the facet count. n <= 8.
std::vector<std::int64_t> nested_sets_by_size(const BuildingSet& b);

/// Polytope f-vector (f_0, f_1, ..., f_d) read off nested_sets_by_size.
std::vector<std::int64_t> face_vector(const BuildingSet& b);

/// Every maximal nested set, members in size-lex order; list sorted. n <= 8.
std::vector<std::vector<Mask>> maximal_nested_sets(const BuildingSet& b);

/// Rooted forest on [n]; parent[v] == -1 marks a root. Vertices 0-based.
struct BTree {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<int> roots() const;
  std::vector<int> children(int v) const;
  friend bool operator==(const BTree&, const BTree&) = default;
};

/// Tree of a maximal nested set: I -> i_I, the one element of I outside the
/// members strictly inside it; edges follow covering relations.
BTree b_tree(const BuildingSet& b, const std::vector<Mask>& nested);

/// x_{i_I} = mu(B|I) - sum over members J covered by I of mu(B|J).
std::vector<std::int64_t> vertex_coordinates(const BuildingSet& b, const std::vector<Mask>& nested);

struct RealizationReport {
  bool ok = true;
  int vertices = 0;
  std::string counterexample;
};

/// Each vertex satisfies sum x = mu(B), and sum_{i in I} x_i >= mu(B|I) for
/// every member I, with equality exactly on the nested set plus B_max.
RealizationReport check_realization(const BuildingSet& b);

/// Canonical unlabeled rooted tree (or forest): a tree is "(" followed by
/// the sorted codes of its subtrees and ")"; a forest concatenates the
/// sorted codes of its trees.
struct TreeShape {
  std::string code;

  int size() const;
  /// Labels nodes in preorder; children follow the code order.
  BTree to_tree() const;
  friend auto operator<=>(const TreeShape&, const TreeShape&) = default;
};

TreeShape shape_of(const BTree& t);

inline constexpr int kMaxTreeShapeNodes = 9;

/// Unlabeled rooted trees on n nodes, ordered by code. n <= 9.
std::vector<TreeShape> enumerate_tree_shapes(int n);

/// Shapes of all B-trees with multiplicity. n <= 8.
std::map<TreeShape, std::int64_t> tree_multiset(const BuildingSet& b);

/// Words in the tree's own 1-based labels listing every vertex after all of
/// its descendants, in lexicographic order. n <= 9.
std::vector<Permutation> linear_extensions(const BTree& t);

/// Strict labeling: roots first then breadth-first, so every parent carries
/// a smaller label than its children. omega[v] is the 1-based label of v.
std::vector<int> strict_labeling(const BTree& t);

/// Nested-parentheses rendering with 1-based labels, e.g. "3(1 2)".
std::string to_string(const BTree& t);
std::string nested_set_string(const std::vector<Mask>& nested, int n);

}  // namespace nesto
