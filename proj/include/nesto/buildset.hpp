#pragma once

// Building sets and the Hopf algebra they span: product is disjoint union,
// coproduct sums restriction (x) contraction over all subsets.

#include <compare>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nesto/bits.hpp"
#include "nesto/error.hpp"
#include "nesto/graph.hpp"

namespace nesto {

enum class SingletonPolicy {
  AutoInsert,  // add any missing {i}
  Strict,      // reject families without every {i}
};

/// Family of nonempty subsets of [n] holding every singleton and closed
/// under union of intersecting members. Members are kept in size-then-
/// lexicographic order.
class BuildingSet {
 public:
  static constexpr int kMaxGround = 20;

  /// The empty building set on the empty ground set (the Hopf unit).
  BuildingSet() = default;

  /// Validates `sets` on [n]; throws NotABuildingSet naming an offending pair.
  static BuildingSet make(int n, std::vector<Mask> sets, SingletonPolicy policy = SingletonPolicy::AutoInsert);
  /// Smallest building set containing `sets` and all singletons.
  static BuildingSet closure(int n, std::vector<Mask> sets);
  static BuildingSet discrete(int n);

  int ground_size() const noexcept { return n_; }
  Mask ground() const noexcept { return full_mask(n_); }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  /// mu(B): number of members.
  int size() const noexcept { return static_cast<int>(sets_.size()); }
  bool contains(Mask s) const;

  /// [n] is a member. The empty building set is not connected.
  bool is_connected() const { return n_ > 0 && contains(ground()); }
  /// Only singletons.
  bool is_discrete() const { return size() == n_; }
  /// Inclusion-maximal members, ordered by least element.
  std::vector<Mask> maximal() const;

  friend bool operator==(const BuildingSet& a, const BuildingSet& b) { return a.n_ == b.n_ && a.sets_ == b.sets_; }
  friend std::strong_ordering operator<=>(const BuildingSet& a, const BuildingSet& b);

 private:
  BuildingSet(int n, std::vector<Mask> sets);  // trusted: already a building set

  int n_ = 0;
  std::vector<Mask> sets_;
  std::vector<Mask> by_value_;  // sorted numerically for lookup

  friend BuildingSet restriction(const BuildingSet&, Mask);
  friend BuildingSet contraction(const BuildingSet&, Mask);
  friend BuildingSet product(const BuildingSet&, const BuildingSet&);
  friend BuildingSet from_graph(const Graph&);
  friend BuildingSet relabeled(const BuildingSet&, const std::vector<int>&);
};

/// All vertex sets inducing a connected subgraph.
BuildingSet from_graph(const Graph& g);

/// {J in B : J subset of I}, relabeled onto [|I|] order-preservingly.
BuildingSet restriction(const BuildingSet& b, Mask subset);
/// {J subset of [n]\I : J in B or I' u J in B for some I' in I}, relabeled.
BuildingSet contraction(const BuildingSet& b, Mask subset);
/// Disjoint union, the second factor shifted past the first.
BuildingSet product(const BuildingSet& a, const BuildingSet& b);
/// Element i becomes perm[i].
BuildingSet relabeled(const BuildingSet& b, const std::vector<int>& perm);

struct Component {
  Mask support;
  BuildingSet restricted;
};

/// Maximal members with the restrictions to them.
std::vector<Component> components(const BuildingSet& b);

struct CoproductTerm {
  Mask subset;
  BuildingSet restricted;
  BuildingSet contracted;
};

inline constexpr int kMaxCoproductGround = 12;

/// One term per subset I of [n], in increasing mask order.
std::vector<CoproductTerm> coproduct(const BuildingSet& b);

inline constexpr int kMaxCanonicalGround = 8;

/// Lexicographically least relabeling; equal iff isomorphic. n <= 8.
BuildingSet canonical_relabel(const BuildingSet& b);

/// Commutative monomial in building sets, stored as the sorted multiset of
/// canonical connected components. The empty word is the unit.
class HopfWord {
 public:
  HopfWord() = default;
  /// Splits every factor into components and canonicalizes them.
  explicit HopfWord(const std::vector<BuildingSet>& factors);
  /// Factors already canonical and connected; only sorts them.
  static HopfWord from_canonical(std::vector<BuildingSet> factors);

  const std::vector<BuildingSet>& factors() const noexcept { return factors_; }
  int degree() const;
  friend auto operator<=>(const HopfWord&, const HopfWord&) = default;

 private:
  std::vector<BuildingSet> factors_;
};

using HopfElement = std::map<HopfWord, Coeff>;

inline constexpr int kMaxTakeuchiGround = 6;

/// Takeuchi expansion: sum over strict chains 0 = I_0 < I_1 < ... < I_k = [n]
/// of (-1)^k prod_j (B|I_j)/I_{j-1}. n <= 6.
HopfElement takeuchi_antipode(const BuildingSet& b);

/// Random building set: each non-singleton subset is seeded with
/// probability `density`, then closed.
BuildingSet random_building_set(int n, double density, std::mt19937_64& rng);

// ---- formats ----

/// {"n":4,"sets":[[1],[2],[1,2]]}
BuildingSet parse_buildset_json(std::string_view text, SingletonPolicy policy = SingletonPolicy::AutoInsert);
std::string to_json(const BuildingSet& b);
/// "{1,2,3,12,123}"; members of ground sets above 9 are bracketed.
std::string to_string(const BuildingSet& b);
std::string set_string(Mask s, int n);
std::string to_string(const HopfWord& w);
std::string to_string(const HopfElement& e);

/// Parses "1,3" or "13" or "[1,3]" (1-based) into a mask over [n].
Mask parse_vertex_set(std::string_view text, int n);

}  // namespace nesto
