#include "nesto/invariants.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace nesto {

namespace {

void require_ground(int n, int limit, const char* what) {
  require_capacity(n <= limit, std::string(what) + ": n = " + std::to_string(n) + " exceeds " + std::to_string(limit));
}

// (B|prev u block)/prev is discrete: no member inside prev u block meets
// the block twice.
bool splits(const BuildingSet& b, Mask prev, Mask block) {
  const Mask within = prev | block;
  for (Mask s : b.sets())
    if ((s & ~within) == 0 && popcount(s & block) >= 2) return false;
  return true;
}

QSymElement prepend_part(int part, const QSymElement& tail) {
  QSymElement out(Basis::M);
  for (const auto& [c, k] : tail.terms()) {
    std::vector<int> parts{part};
    parts.insert(parts.end(), c.parts().begin(), c.parts().end());
    out.add(Composition(std::move(parts)), k);
  }
  return out;
}

// Top-level groups of a tree code: "(..)(..)" -> {"(..)", "(..)"}.
std::vector<std::string> split_top(const std::string& code) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    depth += code[i] == '(' ? 1 : -1;
    if (depth == 0) {
      out.push_back(code.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

// M_(a_1..a_k) -> M_(a_1..a_k + 1); the empty composition vanishes.
QSymElement grow_last(const QSymElement& f) {
  QSymElement out(Basis::M);
  for (const auto& [c, k] : f.terms()) {
    if (c.empty()) continue;
    auto parts = c.parts();
    ++parts.back();
    out.add(Composition(std::move(parts)), k);
  }
  return out;
}

QSymElement weak_tree_enumerator(const std::string& code, std::map<std::string, QSymElement>& memo) {
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  const auto trees = split_top(code);
  QSymElement out = QSymElement::unit();
  if (trees.size() == 1) {
    QSymElement below = QSymElement::unit();
    for (const auto& c : split_top(code.substr(1, code.size() - 2))) below = below * weak_tree_enumerator(c, memo);
    // The root is strictly above every other value, or ties the largest.
    out = shift1(below) + grow_last(below);
  } else {
    for (const auto& t : trees) out = out * weak_tree_enumerator(t, memo);
  }
  memo.emplace(code, out);
  return out;
}

Coeff factorial(int n) {
  Coeff r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace

// ----------------------------------------------------------- splitting chains

Coeff zeta(const BuildingSet& b, const Composition& alpha) {
  const int n = b.ground_size();
  require_ground(n, kMaxSplittingGround, "zeta");
  if (alpha.weight() != n)
    throw InvalidInput("composition " + to_string(alpha) + " does not have weight n = " + std::to_string(n));
  const auto& parts = alpha.parts();
  std::function<Coeff(Mask, std::size_t)> count = [&](Mask prev, std::size_t j) -> Coeff {
    if (j == parts.size()) return 1;
    const Mask rest = b.ground() & ~prev;
    Coeff total = 0;
    for (Mask block = rest; block; block = (block - 1) & rest)
      if (popcount(block) == parts[j] && splits(b, prev, block))
        total = checked_add(total, count(prev | block, j + 1));
    return total;
  };
  return count(0, 0);
}

QSymElement F_splitting(const BuildingSet& b) {
  const int n = b.ground_size();
  require_ground(n, kMaxSplittingGround, "F_splitting");
  std::vector<std::optional<QSymElement>> memo(std::size_t{1} << n);
  std::function<const QSymElement&(Mask)> from = [&](Mask prev) -> const QSymElement& {
    auto& slot = memo[prev];
    if (slot) return *slot;
    const Mask rest = b.ground() & ~prev;
    QSymElement acc(Basis::M);
    if (rest == 0) acc = QSymElement::unit();
    for (Mask block = rest; block; block = (block - 1) & rest)
      if (splits(b, prev, block)) acc += prepend_part(popcount(block), from(prev | block));
    slot = std::move(acc);
    return *slot;
  };
  return from(0);
}

// ----------------------------------------------------------- tree enumerators

QSymElement F_tree(const TreeShape& shape) {
  thread_local std::map<std::string, QSymElement> memo;
  require_ground(shape.size(), kMaxTreeNodes, "F_tree");
  std::function<QSymElement(const std::string&)> eval = [&](const std::string& code) -> QSymElement {
    if (auto it = memo.find(code); it != memo.end()) return it->second;
    const auto trees = split_top(code);
    QSymElement out = QSymElement::unit();
    if (trees.size() == 1) {
      for (const auto& c : split_top(code.substr(1, code.size() - 2))) out = out * eval(c);
      out = shift1(out);
    } else {
      for (const auto& t : trees) out = out * eval(t);
    }
    memo.emplace(code, out);
    return out;
  };
  return eval(shape.code);
}

QSymElement F_tree(const BTree& t) { return F_tree(shape_of(t)); }

QSymElement F_btree_route(const BuildingSet& b) {
  QSymElement out(Basis::M);
  for (const auto& [shape, count] : tree_multiset(b)) out.add(F_tree(shape), count);
  if (b.ground_size() == 0) out = QSymElement::unit();
  return out;
}

QSymElement F_fundamental(const BuildingSet& b) {
  require_ground(b.ground_size(), kMaxFundamentalGround, "F_fundamental");
  QSymElement out(Basis::L);
  for (const auto& nested : maximal_nested_sets(b)) {
    const BTree t = b_tree(b, nested);
    const auto omega = strict_labeling(t);
    for (const auto& w : linear_extensions(t)) {
      std::vector<int> labeled;
      labeled.reserve(w.size());
      for (int v : w.word()) labeled.push_back(omega[v - 1]);
      out.add(descent_composition(Permutation(std::move(labeled))), 1);
    }
  }
  return out;
}

QSymElement F_star(const BuildingSet& b) { return antipode(F_fundamental(b)); }

QSymElement F_closed_cones(const BuildingSet& b) {
  std::map<std::string, QSymElement> memo;
  QSymElement out(Basis::M);
  for (const auto& [shape, count] : tree_multiset(b)) out.add(weak_tree_enumerator(shape.code, memo), count);
  if (b.ground_size() == 0) out = QSymElement::unit();
  return to_fundamental(out);
}

QSymElement complement_descents(const QSymElement& f) {
  const QSymElement l = in_basis(f, Basis::L);
  QSymElement out(Basis::L);
  for (const auto& [c, k] : l.terms()) {
    const int n = c.weight();
    if (n == 0) {
      out.add(c, k);
      continue;
    }
    const auto d = c.descent_set();
    std::vector<int> comp;
    for (int i = 1; i < n; ++i)
      if (!std::binary_search(d.begin(), d.end(), i)) comp.push_back(i);
    out.add(Composition::from_descent_set(comp, n), k);
  }
  return in_basis(out, f.basis());
}

// ---------------------------------------------------------------- graph routes

QSymElement F_graph_colorings(const Graph& g) {
  const int n = g.size();
  require_ground(n, kMaxColoringVertices, "F_graph_colorings");
  QSymElement out(Basis::M);
  std::vector<int> type;
  std::function<void(Mask)> color = [&](Mask done) {
    const Mask rest = g.vertices() & ~done;
    if (rest == 0) {
      out.add(Composition(type), 1);
      return;
    }
    for (Mask block = rest; block; block = (block - 1) & rest) {
      bool ok = true;
      for (Mask c : components(g, done | block))
        if (popcount(c & block) > 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      type.push_back(popcount(block));
      color(done | block);
      type.pop_back();
    }
  };
  color(0);
  return out;
}

QSymElement F_graph_recurrence(const Graph& g) {
  const int n = g.size();
  require_ground(n, kMaxRecurrenceVertices, "F_graph_recurrence");
  std::vector<std::optional<QSymElement>> memo(std::size_t{1} << n);
  std::function<const QSymElement&(Mask)> eval = [&](Mask s) -> const QSymElement& {
    auto& slot = memo[s];
    if (slot) return *slot;
    QSymElement acc = QSymElement::unit();
    if (s != 0) {
      const auto parts = components(g, s);
      if (parts.size() > 1) {
        for (Mask p : parts) acc = acc * eval(p);
      } else {
        acc = QSymElement(Basis::M);
        for_each_bit(s, [&](int v) { acc += shift1(eval(s & ~bit(v))); });
      }
    }
    slot = std::move(acc);
    return *slot;
  };
  return eval(g.vertices());
}

// ----------------------------------------------------------------- families

PolytopeFamily parse_polytope_family(std::string_view name) {
  if (name == "pe" || name == "permutohedron") return PolytopeFamily::Permutohedron;
  if (name == "as" || name == "associahedron") return PolytopeFamily::Associahedron;
  if (name == "cy" || name == "cyclohedron") return PolytopeFamily::Cyclohedron;
  if (name == "st" || name == "stellohedron") return PolytopeFamily::Stellohedron;
  throw InvalidInput("unknown polytope family '" + std::string(name) + "' (expected pe, as, cy or st)");
}

std::string polytope_family_name(PolytopeFamily f) {
  switch (f) {
    case PolytopeFamily::Permutohedron: return "permutohedron";
    case PolytopeFamily::Associahedron: return "associahedron";
    case PolytopeFamily::Cyclohedron: return "cyclohedron";
    case PolytopeFamily::Stellohedron: return "stellohedron";
  }
  return "?";
}

Graph defining_graph(PolytopeFamily f, int n) {
  if (n < 1) throw InvalidInput("family graphs need n >= 1");
  switch (f) {
    case PolytopeFamily::Permutohedron: return family_graph(GraphFamily::Complete, n);
    case PolytopeFamily::Associahedron: return family_graph(GraphFamily::Path, n);
    case PolytopeFamily::Cyclohedron:
      return family_graph(n >= 3 ? GraphFamily::Cycle : GraphFamily::Path, n);
    case PolytopeFamily::Stellohedron: return family_graph(GraphFamily::Star, n);
  }
  throw InvalidInput("unknown family");
}

QSymElement family_F(PolytopeFamily f, int n) {
  if (n < 0) throw InvalidInput("family_F needs n >= 0");
  require_ground(n, kMaxFamilyRecurrence, "family_F");
  std::vector<QSymElement> as{QSymElement::unit()};
  for (int m = 1; m <= n; ++m) {
    QSymElement sum(Basis::M);
    for (int k = 1; k <= m; ++k) sum += as[k - 1] * as[m - k];
    as.push_back(shift1(sum));
  }
  switch (f) {
    case PolytopeFamily::Associahedron: return as[n];
    case PolytopeFamily::Permutohedron: {
      QSymElement pe = QSymElement::unit();
      for (int m = 1; m <= n; ++m) pe = m * shift1(pe);
      return pe;
    }
    case PolytopeFamily::Cyclohedron:
      if (n == 0) return QSymElement::unit();
      return n * shift1(as[n - 1]);
    case PolytopeFamily::Stellohedron: {
      QSymElement st = QSymElement::unit();
      const QSymElement m1 = QSymElement::basis_element(Basis::M, Composition{1});
      for (int m = 1; m <= n; ++m) st = shift1((m - 1) * st + power(m1, m - 1));
      return st;
    }
  }
  throw InvalidInput("unknown family");
}

bool family_recurrence_check(PolytopeFamily f, int n) {
  return family_F(f, n) == F_graph_recurrence(defining_graph(f, n));
}

std::array<Coeff, 4> family_vertex_counts(int n) {
  if (n < 1) throw InvalidInput("family_vertex_counts needs n >= 1");
  require_ground(n, 20, "family_vertex_counts");
  const Coeff p = factorial(n);
  const Coeff a = binomial(2 * n, n) / (n + 1);
  const Coeff c = binomial(2 * n - 2, n - 1);
  Coeff s = 0;
  const Coeff top = factorial(n - 1);
  for (int k = 0; k < n; ++k) s = checked_add(s, top / factorial(k));
  return {p, a, c, s};
}

// ---------------------------------------------------------- integer algebra

namespace {

Coeff gcd_abs(Coeff a, Coeff b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void make_primitive(std::vector<Coeff>& v) {
  Coeff g = 0;
  for (Coeff x : v) g = gcd_abs(g, x);
  if (g > 1)
    for (Coeff& x : v) x /= g;
}

struct Echelon {
  std::vector<std::vector<Coeff>> rows;  // nonzero rows, fully reduced
  std::vector<int> pivots;               // pivot column of each row
};

// Fraction-free Gauss-Jordan elimination: integer row operations only,
// each row divided by its content after every update.
Echelon echelon(std::vector<std::vector<Coeff>> m) {
  Echelon e;
  if (m.empty()) return e;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    if (m[r][c] < 0)
      for (Coeff& x : m[r]) x = -x;
    make_primitive(m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Coeff g = gcd_abs(m[r][c], m[i][c]);
      const Coeff fr = m[i][c] / g;
      const Coeff fi = m[r][c] / g;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = checked_sub(checked_mul(fi, m[i][j]), checked_mul(fr, m[r][j]));
      make_primitive(m[i]);
    }
    e.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::vector<std::vector<Coeff>> transpose(const std::vector<std::vector<Coeff>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::vector<Coeff>> t(rows[0].size(), std::vector<Coeff>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) t[j][i] = rows[i][j];
  return t;
}

}  // namespace

int integer_rank(std::vector<std::vector<Coeff>> rows) { return static_cast<int>(echelon(std::move(rows)).rows.size()); }

std::vector<std::vector<Coeff>> integer_left_kernel(const std::vector<std::vector<Coeff>>& rows) {
  if (rows.empty()) return {};
  const std::size_t m = rows.size();
  if (rows[0].empty()) {
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Coeff> v(m, 0);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  // Left kernel of A is the right kernel of A^T: columns of A^T are the rows.
  const Echelon e = echelon(transpose(rows));
  std::vector<bool> is_pivot(m, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    // Scale so every pivot variable comes out integral.
    Coeff scale = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Coeff piv = e.rows[i][e.pivots[i]];
      if (e.rows[i][f] != 0) scale = checked_mul(scale / std::gcd(scale, piv), piv);
    }
    std::vector<Coeff> v(m, 0);
    v[f] = scale;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Coeff piv = e.rows[i][e.pivots[i]];
      v[e.pivots[i]] = -checked_mul(e.rows[i][f], scale / piv);
    }
    make_primitive(v);
    for (Coeff x : v)
      if (x != 0) {
        if (x < 0)
          for (Coeff& y : v) y = -y;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

TreeKernel tree_matrix_kernel(int n) {
  if (n < 1) throw InvalidInput("tree_matrix_kernel needs n >= 1");
  require_ground(n, kMaxTreeKernelNodes, "tree_matrix_kernel");
  TreeKernel k;
  k.shapes = enumerate_tree_shapes(n);
  std::vector<QSymElement> fs;
  std::map<Composition, int> index;
  for (const auto& s : k.shapes) {
    fs.push_back(F_tree(s));
    for (const auto& [c, coeff] : fs.back().terms()) index.emplace(c, 0);
  }
  for (auto& [c, i] : index) {
    i = static_cast<int>(k.columns.size());
    k.columns.push_back(c);
  }
  for (const auto& f : fs) {
    std::vector<Coeff> row(k.columns.size(), 0);
    for (const auto& [c, coeff] : f.terms()) row[index.at(c)] = coeff;
    k.vectors.push_back(std::move(row));
  }
  k.rank = integer_rank(k.vectors);
  k.kernel = integer_left_kernel(k.vectors);
  return k;
}

// ------------------------------------------------------------ collision search

CollisionReport collision_search(int n, InvariantKind invariant, bool connected_only, int jobs) {
  CollisionReport report;
  report.n = n;
  report.invariant = invariant;
  report.connected_only = connected_only;
  const auto graphs = enumerate_graphs(n, connected_only);
  report.classes = static_cast<int>(graphs.size());

  std::vector<std::string> f_keys(graphs.size());
  std::vector<std::string> x_keys(graphs.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < graphs.size(); i += stride) {
      f_keys[i] = to_string(F_graph_recurrence(graphs[i]));
      x_keys[i] = to_string(chromatic_symmetric(graphs[i]));
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  auto group = [&](const std::vector<std::string>& keys) {
    std::map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < keys.size(); ++i) by_key[keys[i]].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, members] : by_key) out.push_back(members);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  };
  auto to_graphs = [&](const std::vector<std::size_t>& idx) {
    std::vector<Graph> out;
    for (auto i : idx) out.push_back(graphs[i]);
    return out;
  };

  const auto chosen = group(invariant == InvariantKind::F ? f_keys : x_keys);
  report.distinct_values = static_cast<int>(chosen.size());
  for (const auto& g : chosen)
    if (g.size() > 1) report.collisions.push_back(to_graphs(g));

  for (const auto& g : group(x_keys)) {
    if (g.size() < 2) continue;
    std::vector<std::string> fs;
    for (auto i : g) fs.push_back(f_keys[i]);
    std::sort(fs.begin(), fs.end());
    const bool all_distinct = std::adjacent_find(fs.begin(), fs.end()) == fs.end();
    (all_distinct ? report.x_groups_split_by_F : report.x_groups_unsplit).push_back(to_graphs(g));
  }
  return report;
}

// ------------------------------------------------------------ Hopf morphism

QSymElement F_of(const HopfWord& w) {
  thread_local std::map<BuildingSet, QSymElement> memo;
  QSymElement out = QSymElement::unit();
  for (const auto& f : w.factors()) {
    auto it = memo.find(f);
    if (it == memo.end()) it = memo.emplace(f, F_splitting(f)).first;
    out = out * it->second;
  }
  return out;
}

QSymElement F_of(const HopfElement& e) {
  QSymElement out(Basis::M);
  for (const auto& [w, k] : e) out.add(F_of(w), k);
  return out;
}

bool check_product(const BuildingSet& b1, const BuildingSet& b2) {
  return F_splitting(product(b1, b2)) == F_splitting(b1) * F_splitting(b2);
}

bool check_coproduct(const BuildingSet& b) {
  QSymTensor rhs;
  for (const auto& term : coproduct(b)) rhs.add_product(F_splitting(term.restricted), F_splitting(term.contracted));
  return coproduct(F_splitting(b)) == rhs;
}

bool check_antipode(const BuildingSet& b) { return F_of(takeuchi_antipode(b)) == antipode(F_splitting(b)); }

HopfCheck hopf_morphism_check(const BuildingSet& b) {
  require_ground(b.ground_size(), kMaxHopfCheckGround, "hopf_morphism_check");
  HopfCheck out;
  const BuildingSet chain = BuildingSet::make(2, {0b01, 0b10, 0b11});
  out.product = check_product(b, b) && check_product(b, chain);
  out.coproduct = check_coproduct(b);
  out.antipode = check_antipode(b);
  if (!out.product) out.detail += "product mismatch; ";
  if (!out.coproduct) out.detail += "coproduct mismatch; ";
  if (!out.antipode) out.detail += "antipode mismatch; ";
  if (!out.detail.empty()) out.detail = "on " + to_string(b) + ": " + out.detail;
  return out;
}

}  // namespace nesto
