#pragma once

// The lattice-point enumerator F(P_B) of a nestohedron, computed by several
// independent routes, and the graph invariants built from it.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/graph.hpp"
#include "nesto/nestopoly.hpp"
#include "nesto/qsym.hpp"

namespace nesto {

inline constexpr int kMaxSplittingGround = 10;
inline constexpr int kMaxColoringVertices = 8;
inline constexpr int kMaxRecurrenceVertices = 11;
inline constexpr int kMaxTreeNodes = 12;
inline constexpr int kMaxFundamentalGround = 7;

/// Number of splitting chains of type alpha: flags 0 = I_0 < ... < I_k = [n]
/// with |I_j \ I_{j-1}| = a_j and every (B|I_j)/I_{j-1} discrete.
Coeff zeta(const BuildingSet& b, const Composition& alpha);

/// sum_alpha zeta_alpha(B) M_alpha, memoized over the flag's last member.
QSymElement F_splitting(const BuildingSet& b);

/// Strict T-partition enumerator: F(T) = (prod F(T_i))_1 over the subtrees
/// below the root; a forest gives the product over its trees.
QSymElement F_tree(const TreeShape& shape);
QSymElement F_tree(const BTree& t);

/// Sum of F_tree over the B-trees of all vertices.
QSymElement F_btree_route(const BuildingSet& b);

/// Ordered colorings (V_1, ..., V_k): each component of the graph induced on
/// V_1 u ... u V_j meets V_j at most once. Uses the graph directly.
QSymElement F_graph_colorings(const Graph& g);

/// F = sum_v (F_{g - v})_1 for connected g, the product over components
/// otherwise, F of the empty graph = 1. Memoized by vertex subset.
QSymElement F_graph_recurrence(const Graph& g);

/// sum over B-trees T and linear extensions w of T of L_des(omega(w)), with
/// omega the strict labeling. Returned in the L basis.
QSymElement F_fundamental(const BuildingSet& b);

/// Antipode of F(P_B), in the L basis.
QSymElement F_star(const BuildingSet& b);

/// Enumerator of weak T-partitions (f(child) <= f(parent)) summed over the
/// B-trees, in the L basis. Equals the antipode image with compositions
/// read backwards, up to the sign (-1)^n.
QSymElement F_closed_cones(const BuildingSet& b);

/// Descent set complemented: L_alpha -> L_alpha^c. Maps F(P_B) to
/// F_closed_cones(B).
QSymElement complement_descents(const QSymElement& f);

// ---- symmetric functions ----

/// Linear combination of monomial symmetric functions m_mu.
struct SymElement {
  std::map<Partition, Coeff> terms;
  Coeff coefficient(const Partition& mu) const;
  friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// Stanley's chromatic symmetric function X = sum c_mu m_mu, where c_mu is
/// the number of proper colorings with colors 1, 2, ... whose color class
/// sizes, read in color order, are mu. Equivalently the number of ordered
/// sequences of independent sets of sizes mu_1, mu_2, ... covering V.
SymElement chromatic_symmetric(const Graph& g);

/// c_{s(alpha)} built from sequences of independent sets of type alpha.
Coeff ordered_independent_partitions(const Graph& g, const Composition& alpha);

std::string to_string(const SymElement& x);
std::string to_json(const SymElement& x);

// ---- coefficient properties of F for graphs ----

struct PropertyCheck {
  std::string name;
  bool ok = true;
  int checked = 0;
  std::string witness;         // first failure, if any
  bool informational = false;  // reported but not counted by ok()
};

struct CoefficientReport {
  std::vector<PropertyCheck> checks;
  bool ok() const;
};

/// Verifies, for F of g:
///  independence  zeta_(k,1^{n-k}) = (n-k)! f_{k-1}(Ind g)
///  vanishing     g q-connected: zeta_alpha = 0 if a_j > 1 for some j > k(alpha) - q
///  separators    for 1 <= q <= connectivity: zeta_(1^{n-q-k},k,1^q) =
///                sum over q-sets S of (n-q-k)! q! e_k(m_1, ..., m_c), where m_j
///                are the component sizes of g - S. When g - S has exactly k
///                components e_k is prod m_j; sets with more components are
///                compared in the informational `separators-exact-k` check.
///  monotone      zeta_alpha >= zeta_beta whenever alpha refines beta
///  chromatic     zeta_alpha <= c_{s(alpha)}
CoefficientReport check_coefficient_properties(const Graph& g);

// ---- graph families ----

enum class PolytopeFamily { Permutohedron, Associahedron, Cyclohedron, Stellohedron };

PolytopeFamily parse_polytope_family(std::string_view name);
std::string polytope_family_name(PolytopeFamily f);
/// K_n, L_n, C_n (L_n for n <= 2), K_{1,n-1}.
Graph defining_graph(PolytopeFamily f, int n);

inline constexpr int kMaxFamilyRecurrence = 12;

/// F of the family's n-vertex graph from the family recurrences
///   Pe: n (F_{n-1})_1               As: (sum_k F_{k-1} F_{n-k})_1
///   Cy: n (As_{n-1})_1              St: ((n-1) St_{n-1} + M_(1)^{n-1})_1
QSymElement family_F(PolytopeFamily f, int n);
/// family_F agrees with F_graph_recurrence on the defining graph.
bool family_recurrence_check(PolytopeFamily f, int n);

/// Closed forms (n!, Catalan C_n, C(2n-2, n-1), sum_{k<n} (n-1)!/k!).
std::array<Coeff, 4> family_vertex_counts(int n);

// ---- linear algebra on tree enumerators ----

struct TreeKernel {
  std::vector<TreeShape> shapes;
  std::vector<Composition> columns;            // compositions indexing the vectors
  std::vector<std::vector<Coeff>> vectors;     // F_tree per shape, one row each
  int rank = 0;
  std::vector<std::vector<Coeff>> kernel;      // primitive integer relations among the rows
};

inline constexpr int kMaxTreeKernelNodes = 7;

TreeKernel tree_matrix_kernel(int n);

/// Rank of an integer matrix by fraction-free elimination.
int integer_rank(std::vector<std::vector<Coeff>> rows);
/// Primitive integer basis of {c : sum_i c_i rows[i] = 0}, each vector with
/// positive leading entry.
std::vector<std::vector<Coeff>> integer_left_kernel(const std::vector<std::vector<Coeff>>& rows);

// ---- collision search ----

enum class InvariantKind { F, X };

struct CollisionReport {
  int n = 0;
  InvariantKind invariant = InvariantKind::F;
  bool connected_only = false;
  int classes = 0;
  int distinct_values = 0;
  /// Classes sharing the chosen invariant, each group of size >= 2.
  std::vector<std::vector<Graph>> collisions;
  /// Groups of classes with equal X whose F values are pairwise distinct.
  std::vector<std::vector<Graph>> x_groups_split_by_F;
  /// Groups with equal X where some pair also shares F.
  std::vector<std::vector<Graph>> x_groups_unsplit;
};

CollisionReport collision_search(int n, InvariantKind invariant, bool connected_only, int jobs = 1);

// ---- Hopf algebra morphism ----

struct HopfCheck {
  bool product = true;
  bool coproduct = true;
  bool antipode = true;
  std::string detail;
  bool ok() const { return product && coproduct && antipode; }
};

inline constexpr int kMaxHopfCheckGround = 5;

/// F extended multiplicatively over words and linearly over sums.
QSymElement F_of(const HopfWord& w);
QSymElement F_of(const HopfElement& e);

/// F(B1 B2) = F(B1) F(B2).
bool check_product(const BuildingSet& b1, const BuildingSet& b2);
/// Delta F(B) = sum_I F(B|I) (x) F(B/I).
bool check_coproduct(const BuildingSet& b);
/// F(S_Takeuchi(B)) = S(F(B)).
bool check_antipode(const BuildingSet& b);
/// All three, the product against B itself and against the 2-chain {1,2,12}.
HopfCheck hopf_morphism_check(const BuildingSet& b);

}  // namespace nesto
