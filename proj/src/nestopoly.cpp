#include "nesto/nestopoly.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nesto {

namespace {

void require_nested_capacity(const BuildingSet& b, const char* what) {
  require_capacity(b.ground_size() <= kMaxNestedGround, std::string(what) + ": n = " +
                                                            std::to_string(b.ground_size()) + " exceeds " +
                                                            std::to_string(kMaxNestedGround));
}

// Maximal members of B inside T; they are disjoint and cover T.
std::vector<Mask> maximal_within(const BuildingSet& b, Mask t) {
  std::vector<Mask> out;
  Mask covered = 0;
  const auto& sets = b.sets();
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const Mask s = *it;
    if ((s & t) == s && !(s & covered)) {
      out.push_back(s);
      covered |= s;
    }
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask c) { return lowest(a) < lowest(c); });
  return out;
}

int mu_within(const BuildingSet& b, Mask t) {
  int count = 0;
  for (Mask s : b.sets())
    if ((s & t) == s) ++count;
  return count;
}

// True if acc together with some nonempty pairwise disjoint choice among
// pool[start..] (each disjoint from acc) has its union in B.
bool disjoint_union_hits(const BuildingSet& b, Mask acc, const std::vector<Mask>& pool, std::size_t start,
                         Mask* hit = nullptr) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i] & acc) continue;
    const Mask next = acc | pool[i];
    if (b.contains(next)) {
      if (hit) *hit = next;
      return true;
    }
    if (disjoint_union_hits(b, next, pool, i + 1, hit)) return true;
  }
  return false;
}

bool laminar(Mask a, Mask c) { return !(a & c) || (a & c) == a || (a & c) == c; }

// Whether x can join `chosen` keeping the family nested.
bool compatible(const BuildingSet& b, const std::vector<Mask>& chosen, Mask x) {
  std::vector<Mask> disjoint;
  for (Mask c : chosen) {
    if (!laminar(c, x)) return false;
    if (!(c & x)) disjoint.push_back(c);
  }
  return !disjoint_union_hits(b, x, disjoint, 0);
}

void sort_family(std::vector<Mask>& f) { std::sort(f.begin(), f.end(), size_lex_less); }

struct Cover {
  std::vector<Mask> all;      // nested set plus B_max
  std::vector<int> label;     // i_I per member of `all`
  std::vector<int> cover;     // index into `all` of the covering member, -1 for B_max
};

Cover analyse(const BuildingSet& b, const std::vector<Mask>& nested) {
  std::string why;
  if (!is_nested(b, nested, &why)) throw InvalidInput("not a nested set: " + why);
  const auto top = b.maximal();
  if (static_cast<int>(nested.size()) != b.ground_size() - static_cast<int>(top.size()))
    throw InvalidInput("nested set is not maximal: " + std::to_string(nested.size()) + " members, expected " +
                       std::to_string(b.ground_size() - static_cast<int>(top.size())));
  Cover c;
  c.all = nested;
  c.all.insert(c.all.end(), top.begin(), top.end());
  const std::size_t m = c.all.size();
  c.label.assign(m, -1);
  c.cover.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const Mask s = c.all[i];
    Mask inner = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Mask t = c.all[j];
      if (t != s && (t & s) == t) inner |= t;
      if (t != s && (t & s) == s && (c.cover[i] < 0 || popcount(t) < popcount(c.all[c.cover[i]])))
        c.cover[i] = static_cast<int>(j);
    }
    const Mask rest = s & ~inner;
    if (popcount(rest) != 1) throw InvalidInput("nested set is not maximal: member " + set_string(s, b.ground_size()) +
                                                " has " + std::to_string(popcount(rest)) + " uncovered elements");
    c.label[i] = lowest(rest);
  }
  return c;
}

}  // namespace

std::vector<Mask> nested_candidates(const BuildingSet& b) {
  const auto top = b.maximal();
  std::vector<Mask> out;
  for (Mask s : b.sets())
    if (std::find(top.begin(), top.end(), s) == top.end()) out.push_back(s);
  return out;
}

bool is_nested(const BuildingSet& b, const std::vector<Mask>& family, std::string* why) {
  const auto candidates = nested_candidates(b);
  const int n = b.ground_size();
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (Mask s : family)
    if (std::find(candidates.begin(), candidates.end(), s) == candidates.end())
      throw InvalidInput(set_string(s, n) + " is not a non-maximal member of the building set");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j]) return fail("member " + set_string(family[i], n) + " repeated");
      if (!laminar(family[i], family[j]))
        return fail(set_string(family[i], n) + " and " + set_string(family[j], n) +
                    " overlap without nesting (N1)");
    }
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Mask> pool;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!(family[j] & family[i])) pool.push_back(family[j]);
    Mask hit = 0;
    if (disjoint_union_hits(b, family[i], pool, 0, &hit))
      return fail("disjoint members have union " + set_string(hit, n) + " in the building set (N2)");
  }
  return true;
}

std::vector<std::int64_t> nested_sets_by_size(const BuildingSet& b) {
  require_nested_capacity(b, "nested_sets_by_size");
  const auto candidates = nested_candidates(b);
  std::vector<std::int64_t> counts(b.ground_size() - b.maximal().size() + 1, 0);
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    ++counts[chosen.size()];
    for (std::size_t j = from; j < candidates.size(); ++j) {
      if (!compatible(b, chosen, candidates[j])) continue;
      chosen.push_back(candidates[j]);
      extend(j + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return counts;
}

std::vector<std::int64_t> face_vector(const BuildingSet& b) {
  auto by_size = nested_sets_by_size(b);
  std::reverse(by_size.begin(), by_size.end());
  return by_size;
}

std::vector<std::vector<Mask>> maximal_nested_sets(const BuildingSet& b) {
  require_nested_capacity(b, "maximal_nested_sets");
  using Families = std::vector<std::vector<Mask>>;
  std::map<Mask, Families> memo;

  // Products of independent choices, one family list per factor.
  auto combine = [](const std::vector<const Families*>& factors) {
    Families out{{}};
    for (const Families* f : factors) {
      Families next;
      for (const auto& left : out)
        for (const auto& right : *f) {
          auto merged = left;
          merged.insert(merged.end(), right.begin(), right.end());
          next.push_back(std::move(merged));
        }
      out = std::move(next);
    }
    return out;
  };

  // Maximal nested sets of B|S (S a member), S itself excluded.
  std::function<const Families&(Mask)> below = [&](Mask s) -> const Families& {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    Families result;
    if (popcount(s) == 1) {
      result.push_back({});
    } else {
      for_each_bit(s, [&](int r) {
        const auto parts = maximal_within(b, s & ~bit(r));
        std::vector<Families> withs;
        withs.reserve(parts.size());
        for (Mask p : parts) {
          Families f = below(p);
          for (auto& fam : f) fam.push_back(p);
          withs.push_back(std::move(f));
        }
        std::vector<const Families*> ptrs;
        for (const auto& w : withs) ptrs.push_back(&w);
        for (auto& fam : combine(ptrs)) result.push_back(std::move(fam));
      });
    }
    return memo.emplace(s, std::move(result)).first->second;
  };

  std::vector<const Families*> ptrs;
  for (Mask top : b.maximal()) ptrs.push_back(&below(top));
  Families out = combine(ptrs);
  for (auto& f : out) sort_family(f);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), size_lex_less);
  });
  return out;
}

std::vector<int> BTree::roots() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (parent[v] < 0) out.push_back(v);
  return out;
}

std::vector<int> BTree::children(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (parent[u] == v) out.push_back(u);
  return out;
}

BTree b_tree(const BuildingSet& b, const std::vector<Mask>& nested) {
  const Cover c = analyse(b, nested);
  BTree t;
  t.parent.assign(b.ground_size(), -1);
  for (std::size_t i = 0; i < c.all.size(); ++i)
    if (c.cover[i] >= 0) t.parent[c.label[i]] = c.label[c.cover[i]];
  return t;
}

std::vector<std::int64_t> vertex_coordinates(const BuildingSet& b, const std::vector<Mask>& nested) {
  const Cover c = analyse(b, nested);
  std::vector<std::int64_t> x(b.ground_size(), 0);
  for (std::size_t i = 0; i < c.all.size(); ++i) {
    x[c.label[i]] += mu_within(b, c.all[i]);
    if (c.cover[i] >= 0) x[c.label[c.cover[i]]] -= mu_within(b, c.all[i]);
  }
  return x;
}

RealizationReport check_realization(const BuildingSet& b) {
  RealizationReport report;
  const int n = b.ground_size();
  const auto top = b.maximal();
  for (const auto& nested : maximal_nested_sets(b)) {
    ++report.vertices;
    const auto x = vertex_coordinates(b, nested);
    auto coords = [&] {
      std::string s = "(";
      for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(x[i]);
      return s + ")";
    };
    std::int64_t total = 0;
    for (auto v : x) total += v;
    if (total != b.size()) {
      report.ok = false;
      report.counterexample = "vertex " + coords() + " sums to " + std::to_string(total) + ", expected " +
                              std::to_string(b.size());
      return report;
    }
    for (Mask s : b.sets()) {
      std::int64_t lhs = 0;
      for_each_bit(s, [&](int i) { lhs += x[i]; });
      const int rhs = mu_within(b, s);
      const bool expect_tight = std::find(nested.begin(), nested.end(), s) != nested.end() ||
                                std::find(top.begin(), top.end(), s) != top.end();
      if (lhs < rhs || (lhs == rhs) != expect_tight) {
        report.ok = false;
        report.counterexample = "vertex " + coords() + " of nested set " + nested_set_string(nested, n) +
                                ": sum over " + set_string(s, n) + " is " + std::to_string(lhs) + " against " +
                                std::to_string(rhs) + (expect_tight ? " (should be tight)" : " (should be slack)");
        return report;
      }
    }
  }
  return report;
}

// ------------------------------------------------------------------- shapes

int TreeShape::size() const { return static_cast<int>(std::count(code.begin(), code.end(), '(')); }

BTree TreeShape::to_tree() const {
  BTree t;
  std::vector<int> stack;
  for (char ch : code) {
    if (ch == '(') {
      const int id = t.size();
      t.parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(id);
    } else if (ch == ')') {
      if (stack.empty()) throw InvalidInput("unbalanced tree code");
      stack.pop_back();
    } else {
      throw InvalidInput("tree code may only contain parentheses");
    }
  }
  if (!stack.empty()) throw InvalidInput("unbalanced tree code");
  return t;
}

TreeShape shape_of(const BTree& t) {
  std::vector<std::vector<int>> kids(t.size());
  for (int v = 0; v < t.size(); ++v)
    if (t.parent[v] >= 0) kids[t.parent[v]].push_back(v);
  std::function<std::string(int)> code = [&](int v) {
    std::vector<std::string> parts;
    for (int c : kids[v]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    return out + ")";
  };
  std::vector<std::string> trees;
  for (int r : t.roots()) trees.push_back(code(r));
  std::sort(trees.begin(), trees.end());
  TreeShape s;
  for (auto& p : trees) s.code += p;
  return s;
}

std::vector<TreeShape> enumerate_tree_shapes(int n) {
  if (n < 1) throw InvalidInput("tree shapes need n >= 1");
  require_capacity(n <= kMaxTreeShapeNodes, "enumerate_tree_shapes: n = " + std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxTreeShapeNodes));
  // by_size[k]: codes of all rooted trees on k nodes.
  std::vector<std::vector<std::string>> by_size(n + 1);
  by_size[1] = {"()"};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::pair<int, const std::string*>> pool;  // (size, code) of smaller trees
    for (int s = 1; s < k; ++s)
      for (const auto& c : by_size[s]) pool.emplace_back(s, &c);
    std::set<std::string> found;
    std::vector<std::string> picked;
    std::function<void(int, std::size_t)> pick = [&](int remaining, std::size_t from) {
      if (remaining == 0) {
        auto parts = picked;
        std::sort(parts.begin(), parts.end());
        std::string code = "(";
        for (auto& p : parts) code += p;
        found.insert(code + ")");
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i].first > remaining) continue;
        picked.push_back(*pool[i].second);
        pick(remaining - pool[i].first, i);
        picked.pop_back();
      }
    };
    pick(k - 1, 0);
    by_size[k].assign(found.begin(), found.end());
  }
  std::vector<TreeShape> out;
  for (auto& c : by_size[n]) out.push_back({c});
  return out;
}

std::map<TreeShape, std::int64_t> tree_multiset(const BuildingSet& b) {
  std::map<TreeShape, std::int64_t> out;
  for (const auto& nested : maximal_nested_sets(b)) ++out[shape_of(b_tree(b, nested))];
  return out;
}

std::vector<Permutation> linear_extensions(const BTree& t) {
  const int n = t.size();
  require_capacity(n <= kMaxTreeShapeNodes, "linear_extensions: n = " + std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxTreeShapeNodes));
  std::vector<Mask> below(n, 0);  // children of v
  for (int v = 0; v < n; ++v)
    if (t.parent[v] >= 0) below[t.parent[v]] |= bit(v);
  std::vector<Permutation> out;
  std::vector<int> word;
  std::function<void(Mask)> place = [&](Mask done) {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (has(done, v) || (below[v] & ~done)) continue;
      word.push_back(v + 1);
      place(done | bit(v));
      word.pop_back();
    }
  };
  place(0);
  return out;
}

std::vector<int> strict_labeling(const BTree& t) {
  std::vector<int> omega(t.size(), 0);
  std::vector<int> queue = t.roots();
  int next = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    omega[v] = next++;
    for (int c : t.children(v)) queue.push_back(c);
  }
  return omega;
}

std::string to_string(const BTree& t) {
  std::function<std::string(int)> render = [&](int v) {
    std::string out = std::to_string(v + 1);
    const auto kids = t.children(v);
    if (kids.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? " " : "") + render(kids[i]);
    return out + ")";
  };
  std::string out;
  for (int r : t.roots()) out += (out.empty() ? "" : " ") + render(r);
  return out;
}

std::string nested_set_string(const std::vector<Mask>& nested, int n) {
  std::string out = "{";
  for (std::size_t i = 0; i < nested.size(); ++i) out += (i ? "," : "") + set_string(nested[i], n);
  return out + "}";
}

}  // namespace nesto
