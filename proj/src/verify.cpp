#include "nesto/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <tuple>

#include "nesto/invariants.hpp"
#include "nesto/nestopoly.hpp"

namespace nesto {

namespace {

using Clock = std::chrono::steady_clock;

QSymElement m_elem(std::initializer_list<std::pair<Composition, Coeff>> terms) { return QSymElement(Basis::M, terms); }
QSymElement l_elem(std::initializer_list<std::pair<Composition, Coeff>> terms) { return QSymElement(Basis::L, terms); }

const QSymElement& associahedron_F() {
  static const QSymElement f = m_elem({{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  return f;
}

struct Ledger {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!detail.empty()) detail += "; ";
      detail += what;
      ok = false;
    }
  }
};

CriterionResult criterion_path_four_routes() {
  Ledger l;
  const Graph g = family_graph(GraphFamily::Path, 4);
  const BuildingSet b = from_graph(g);
  const std::pair<const char*, QSymElement> routes[] = {
      {"splitting", F_splitting(b)},
      {"trees", F_btree_route(b)},
      {"colorings", F_graph_colorings(g)},
      {"recurrence", F_graph_recurrence(g)},
  };
  for (const auto& [name, f] : routes)
    l.require(f == associahedron_F(), std::string(name) + " route gives " + to_string(f));
  return {1, "path L4: four routes give 24*M[1,1,1,1] + 6*M[2,1,1] + 4*M[1,2,1]", l.ok,
          l.ok ? "all four routes agree" : l.detail, 0, 1};
}

CriterionResult criterion_path_fundamental() {
  Ledger l;
  const BuildingSet b = from_graph(family_graph(GraphFamily::Path, 4));
  const QSymElement expected_l = l_elem({{{1, 1, 1, 1}, 14}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  const QSymElement expected_star = l_elem({{{4}, 14}, {{1, 3}, 6}, {{2, 2}, 4}});
  const QSymElement fl = F_fundamental(b);
  l.require(fl == expected_l, "linear-extension route gives " + to_string(fl));
  l.require(to_fundamental(F_splitting(b)) == expected_l,
            "basis change gives " + to_string(to_fundamental(F_splitting(b))));
  const QSymElement star = F_star(b);
  l.require(star == expected_star, "antipode gives " + to_string(star) + ", expected " + to_string(expected_star) +
                                       " (the descent-complement image is " +
                                       to_string(complement_descents(fl)) + ")");
  return {2, "path L4: fundamental expansion 14*L[1,1,1,1] + 6*L[2,1,1] + 4*L[1,2,1] and its antipode", l.ok,
          l.ok ? "both expansions exact" : l.detail, 0, 0};
}

CriterionResult criterion_family_counts() {
  Ledger l;
  const PolytopeFamily families[] = {PolytopeFamily::Permutohedron, PolytopeFamily::Associahedron,
                                     PolytopeFamily::Cyclohedron, PolytopeFamily::Stellohedron};
  int checked = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto closed = family_vertex_counts(n);
    for (int i = 0; i < 4; ++i) {
      const PolytopeFamily f = families[i];
      const BuildingSet b = from_graph(defining_graph(f, n));
      const auto by_nested = static_cast<Coeff>(maximal_nested_sets(b).size());
      const Coeff by_chi = vertex_count(F_splitting(b), n);
      const Coeff by_recurrence = vertex_count(family_F(f, n), n);
      l.require(by_nested == closed[i] && by_chi == closed[i] && by_recurrence == closed[i],
                polytope_family_name(f) + " n=" + std::to_string(n) + ": closed " + std::to_string(closed[i]) +
                    ", nested " + std::to_string(by_nested) + ", chi " + std::to_string(by_chi) +
                    ", recurrence " + std::to_string(by_recurrence));
      ++checked;
    }
  }
  return {3, "vertex counts n!, Catalan, C(2n-2,n-1), sum (n-1)!/k! for n = 1..7 three ways", l.ok,
          l.ok ? std::to_string(checked) + " family/size pairs agree" : l.detail, 0, 30};
}

CriterionResult criterion_four_routes_all_graphs() {
  Ledger l;
  int checked = 0;
  for (int n : {4, 5}) {
    const auto graphs = enumerate_graphs(n, false);
    l.require(graphs.size() == (n == 4 ? 11u : 34u), "unexpected class count at n=" + std::to_string(n));
    for (const auto& g : graphs) {
      const BuildingSet b = from_graph(g);
      const QSymElement ref = F_splitting(b);
      const bool same = F_btree_route(b) == ref && F_graph_colorings(g) == ref && F_graph_recurrence(g) == ref;
      l.require(same, "routes disagree on graph " + to_graph6(g));
      ++checked;
    }
  }
  return {4, "four routes agree on all 11 graphs with 4 vertices and all 34 with 5", l.ok,
          l.ok ? std::to_string(checked) + " classes agree" : l.detail, 0, 60};
}

CriterionResult criterion_collisions(int jobs) {
  Ledger l;
  const CollisionReport f = collision_search(5, InvariantKind::F, false, jobs);
  const CollisionReport x = collision_search(5, InvariantKind::X, false, jobs);
  l.require(f.classes == 34, "expected 34 classes, found " + std::to_string(f.classes));
  l.require(f.distinct_values == 34, "F takes " + std::to_string(f.distinct_values) + " distinct values");
  l.require(!x.collisions.empty(), "X has no collision");
  l.require(x.x_groups_unsplit.empty(), std::to_string(x.x_groups_unsplit.size()) + " X-collision groups not separated by F");
  std::string detail = "F: " + std::to_string(f.distinct_values) + " distinct values over " +
                       std::to_string(f.classes) + " classes; X: " + std::to_string(x.collisions.size()) +
                       " collision group(s), all separated by F";
  return {5, "5-vertex graphs: F pairwise distinct, X collides, F separates every X collision", l.ok,
          l.ok ? detail : l.detail, 0, 0};
}

CriterionResult criterion_disconnected_pair() {
  Ledger l;
  const BuildingSet b1 = BuildingSet::make(4, {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0111});
  const BuildingSet b2 = BuildingSet::make(4, {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100});
  const QSymElement f1 = F_splitting(b1);
  const QSymElement f2 = F_splitting(b2);
  const auto v1 = face_vector(b1);
  const auto v2 = face_vector(b2);
  l.require(f1 != f2, "F values coincide");
  l.require(v1 == v2, "face counts differ");
  auto fv = [](const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return {6, "{1,2,3,4,12,123} vs {1,2,3,4,12,34}: F differs, face counts agree", l.ok,
          l.ok ? "face vector " + fv(v1) + " for both; F(B1) = " + to_string(f1) + ", F(B2) = " + to_string(f2)
               : l.detail,
          0, 0};
}

CriterionResult criterion_tree_kernel() {
  Ledger l;
  const TreeKernel k5 = tree_matrix_kernel(5);
  const TreeKernel k4 = tree_matrix_kernel(4);
  l.require(k5.shapes.size() == 9, "n=5: " + std::to_string(k5.shapes.size()) + " shapes");
  l.require(k5.rank == 8, "n=5: rank " + std::to_string(k5.rank));
  l.require(k5.kernel.size() == 1, "n=5: kernel dimension " + std::to_string(k5.kernel.size()));
  for (const auto& v : k5.kernel)
    for (std::size_t c = 0; c < k5.columns.size(); ++c) {
      Coeff s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s = checked_add(s, checked_mul(v[i], k5.vectors[i][c]));
      l.require(s == 0, "n=5: kernel vector fails on column " + to_string(k5.columns[c]));
    }
  l.require(k4.rank == 4 && k4.kernel.empty(), "n=4: rank " + std::to_string(k4.rank));
  std::string relation;
  if (!k5.kernel.empty())
    for (std::size_t i = 0; i < k5.kernel[0].size(); ++i) relation += (i ? "," : "") + std::to_string(k5.kernel[0][i]);
  return {7, "tree enumerators: rank 8 with a 1-dimensional integer kernel at n = 5, rank 4 at n = 4", l.ok,
          l.ok ? "n=5 relation (" + relation + ")" : l.detail, 0, 5};
}

CriterionResult criterion_hopf() {
  Ledger l;
  const auto sets = hopf_test_building_sets(20);
  for (const auto& b : sets) {
    const HopfCheck h = hopf_morphism_check(b);
    l.require(h.ok(), h.detail);
  }
  return {8, "F is a Hopf morphism: product, coproduct and Takeuchi antipode", l.ok,
          l.ok ? std::to_string(sets.size()) + " building sets checked" : l.detail, 0, 60};
}

CriterionResult criterion_qsym_properties() {
  Ledger l;
  int cases = 0;
  for (const auto& p : qsym_property_suite(20240601)) {
    l.require(p.ok, p.name + ": " + p.witness);
    cases += p.cases;
  }
  return {9, "QSym kernel: round trip, quasi-shuffle, coassociativity, antipode axiom, ps_m", l.ok,
          l.ok ? std::to_string(cases) + " cases" : l.detail, 0, 30};
}

CriterionResult criterion_coefficients() {
  Ledger l;
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : enumerate_graphs(n, false)) graphs.push_back(std::move(g));
  for (auto& g : six_vertex_samples()) graphs.push_back(std::move(g));
  int notes = 0;
  for (const auto& g : graphs) {
    const CoefficientReport r = check_coefficient_properties(g);
    for (const auto& c : r.checks) {
      if (c.informational) {
        notes += c.ok ? 0 : 1;
        continue;
      }
      l.require(c.ok, c.name + " on " + to_graph6(g) + ": " + c.witness);
    }
  }
  std::string detail = std::to_string(graphs.size()) + " graphs";
  if (notes) detail += "; " + std::to_string(notes) + " graph(s) where q-sets leaving more than k components contribute";
  return {10, "coefficient properties (independence, vanishing, separators, monotone, chromatic bound)", l.ok,
          l.ok ? detail : l.detail, 0, 0};
}

CriterionResult criterion_realization() {
  Ledger l;
  int vertices = 0;
  for (GraphFamily fam : {GraphFamily::Complete, GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Star})
    for (int n = 1; n <= 5; ++n) {
      if (fam == GraphFamily::Cycle && n < 3) continue;
      const RealizationReport r = check_realization(from_graph(family_graph(fam, n)));
      l.require(r.ok, family_name(fam) + ":" + std::to_string(n) + " " + r.counterexample);
      vertices += r.vertices;
    }
  const BuildingSet k3 = from_graph(family_graph(GraphFamily::Complete, 3));
  std::set<std::vector<std::int64_t>> found;
  for (const auto& nested : maximal_nested_sets(k3)) found.insert(vertex_coordinates(k3, nested));
  std::set<std::vector<std::int64_t>> expected;
  std::vector<std::int64_t> p{1, 2, 4};
  do expected.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  l.require(found == expected, "K3 vertices are not the permutations of (1,2,4)");
  return {11, "vertex coordinates satisfy the hyperplane and facet inequalities with the predicted tight sets", l.ok,
          l.ok ? std::to_string(vertices) + " vertices checked; K3 gives the permutations of (1,2,4)" : l.detail, 0,
          0};
}

Coeff pick(std::mt19937_64& rng, Coeff lo, Coeff hi) { return std::uniform_int_distribution<Coeff>(lo, hi)(rng); }

}  // namespace

CriterionResult run_criterion(int id, int jobs) {
  const auto start = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = criterion_path_four_routes(); break;
      case 2: r = criterion_path_fundamental(); break;
      case 3: r = criterion_family_counts(); break;
      case 4: r = criterion_four_routes_all_graphs(); break;
      case 5: r = criterion_collisions(jobs); break;
      case 6: r = criterion_disconnected_pair(); break;
      case 7: r = criterion_tree_kernel(); break;
      case 8: r = criterion_hopf(); break;
      case 9: r = criterion_qsym_properties(); break;
      case 10: r = criterion_coefficients(); break;
      case 11: r = criterion_realization(); break;
      default: throw InvalidInput("no criterion " + std::to_string(id));
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const Error& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.correct = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance_suite(int jobs, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, jobs));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  std::string out = std::string(r.pass() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" +
                    timing + ")";
  if (r.correct && !r.pass()) out += " over time budget";
  if (!r.detail.empty()) out += ": " + r.detail;
  return out;
}

// ------------------------------------------------------------- QSym properties

QSymElement random_qsym(std::mt19937_64& rng, int max_degree, int max_terms) {
  QSymElement f(Basis::M);
  const int terms = static_cast<int>(pick(rng, 1, max_terms));
  for (int t = 0; t < terms; ++t) {
    const int n = static_cast<int>(pick(rng, 0, max_degree));
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      const int p = static_cast<int>(pick(rng, 1, left));
      parts.push_back(p);
      left -= p;
    }
    f.add(Composition(std::move(parts)), pick(rng, -5, 5));
  }
  return f;
}

std::vector<PropertyOutcome> qsym_property_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyOutcome> out;
  auto record = [&](PropertyOutcome& p, bool ok, const std::string& what) {
    ++p.cases;
    if (!ok && p.ok) {
      p.ok = false;
      p.witness = what;
    }
  };

  PropertyOutcome round_trip{.name = "basis round trip"};
  for (int i = 0; i < 200; ++i) {
    const QSymElement f = random_qsym(rng, 7, 6);
    record(round_trip, from_fundamental(to_fundamental(f)) == f, to_string(f));
  }
  out.push_back(round_trip);

  PropertyOutcome product{.name = "quasi-shuffle associativity, commutativity, unit"};
  for (int i = 0; i < 100; ++i) {
    const QSymElement f = random_qsym(rng, 3, 3);
    const QSymElement g = random_qsym(rng, 3, 3);
    const QSymElement h = random_qsym(rng, 3, 3);
    record(product, (f * g) * h == f * (g * h), "associativity on " + to_string(f));
    record(product, f * g == g * f, "commutativity on " + to_string(f));
    record(product, f * QSymElement::unit() == f, "unit on " + to_string(f));
  }
  out.push_back(product);

  PropertyOutcome coassoc{.name = "coassociativity"};
  using Triple = std::tuple<Composition, Composition, Composition>;
  for (int i = 0; i < 100; ++i) {
    const QSymElement f = random_qsym(rng, 5, 4);
    std::map<Triple, Coeff> left, right;
    const QSymTensor once = coproduct(f);
    for (const auto& [key, k] : once.terms()) {
      const QSymTensor first = coproduct(QSymElement::basis_element(Basis::M, key.first));
      const QSymTensor second = coproduct(QSymElement::basis_element(Basis::M, key.second));
      for (const auto& [inner, k2] : first.terms()) left[{inner.first, inner.second, key.second}] += k * k2;
      for (const auto& [inner, k2] : second.terms()) right[{key.first, inner.first, inner.second}] += k * k2;
    }
    std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
    record(coassoc, left == right, to_string(f));
  }
  out.push_back(coassoc);

  PropertyOutcome axiom{.name = "antipode axiom"};
  for (int n = 0; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const QSymElement f = QSymElement::basis_element(Basis::M, alpha);
      QSymElement left(Basis::M), right(Basis::M);
      const QSymTensor split = coproduct(f);
      for (const auto& [key, k] : split.terms()) {
        const QSymElement a = QSymElement::basis_element(Basis::M, key.first);
        const QSymElement b = QSymElement::basis_element(Basis::M, key.second);
        left.add(antipode(a) * b, k);
        right.add(a * antipode(b), k);
      }
      const QSymElement expected = counit(f) * QSymElement::unit();
      record(axiom, left == expected && right == expected, "M" + to_string(alpha));
    }
  out.push_back(axiom);

  PropertyOutcome anti{.name = "antipode multiplicative"};
  for (int i = 0; i < 60; ++i) {
    const QSymElement f = random_qsym(rng, 3, 3);
    const QSymElement g = random_qsym(rng, 3, 3);
    record(anti, antipode(f * g) == antipode(f) * antipode(g), to_string(f) + " and " + to_string(g));
  }
  out.push_back(anti);

  PropertyOutcome ps{.name = "ps_m multiplicative"};
  for (int i = 0; i < 100; ++i) {
    const QSymElement f = random_qsym(rng, 4, 3);
    const QSymElement g = random_qsym(rng, 4, 3);
    for (Coeff m = -2; m <= 3; ++m)
      record(ps, principal_specialization(f * g, m) == principal_specialization(f, m) * principal_specialization(g, m),
             "m = " + std::to_string(m) + " on " + to_string(f));
  }
  out.push_back(ps);
  return out;
}

std::vector<Graph> six_vertex_samples() {
  std::vector<Graph> out;
  out.push_back(family_graph(GraphFamily::Cycle, 6));
  std::vector<std::pair<int, int>> k33;
  for (int a = 1; a <= 3; ++a)
    for (int b = 4; b <= 6; ++b) k33.emplace_back(a, b);
  out.push_back(Graph::from_edges(6, k33));
  // Petersen graph: outer 5-cycle, spokes, inner pentagram (0-based).
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  for (Mask s : {Mask{0b0000111111}, Mask{0b0011100111}, Mask{0b1110100101}, Mask{0b1011010011}})
    out.push_back(induced(petersen, s));
  return out;
}

std::vector<BuildingSet> hopf_test_building_sets(int random_count) {
  std::vector<BuildingSet> out;
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n, false)) out.push_back(from_graph(g));
  std::mt19937_64 rng(7);
  for (int i = 0; i < random_count; ++i) {
    const int n = static_cast<int>(pick(rng, 1, 4));
    out.push_back(random_building_set(n, 0.3, rng));
  }
  return out;
}

}  // namespace nesto
