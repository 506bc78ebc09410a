#include <algorithm>
#include <functional>

#include "json.hpp"
#include "nesto/invariants.hpp"

namespace nesto {

namespace {

Coeff factorial(int n) {
  Coeff r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// Elementary symmetric polynomial e_k of the values.
Coeff elementary(const std::vector<int>& values, int k) {
  std::vector<Coeff> e(k + 1, 0);
  e[0] = 1;
  for (int v : values)
    for (int j = k; j >= 1; --j) e[j] = checked_add(e[j], checked_mul(e[j - 1], v));
  return e[k];
}

std::string composition_with(int ones_before, int k, int ones_after) {
  std::vector<int> parts(ones_before, 1);
  parts.push_back(k);
  parts.insert(parts.end(), ones_after, 1);
  return to_string(Composition(parts));
}

}  // namespace

Coeff SymElement::coefficient(const Partition& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? 0 : it->second;
}

SymElement chromatic_symmetric(const Graph& g) {
  const int n = g.size();
  require_capacity(n <= kMaxColoringVertices, "chromatic_symmetric: n = " + std::to_string(n) + " exceeds " +
                                                  std::to_string(kMaxColoringVertices));
  SymElement x;
  std::vector<int> sizes;
  // Color classes of non-increasing size; each such sequence is one proper
  // coloring of type exactly mu.
  std::function<void(Mask, int)> color = [&](Mask done, int cap) {
    const Mask rest = g.vertices() & ~done;
    if (rest == 0) {
      auto& slot = x.terms[Partition(sizes)];
      slot = checked_add(slot, 1);
      return;
    }
    for (Mask block = rest; block; block = (block - 1) & rest) {
      if (popcount(block) > cap || !is_independent(g, block)) continue;
      sizes.push_back(popcount(block));
      color(done | block, popcount(block));
      sizes.pop_back();
    }
  };
  color(0, n);
  return x;
}

Coeff ordered_independent_partitions(const Graph& g, const Composition& alpha) {
  if (alpha.weight() != g.size()) throw InvalidInput("composition weight must equal the vertex count");
  const auto& parts = alpha.parts();
  std::function<Coeff(Mask, std::size_t)> count = [&](Mask done, std::size_t j) -> Coeff {
    if (j == parts.size()) return 1;
    const Mask rest = g.vertices() & ~done;
    Coeff total = 0;
    for (Mask block = rest; block; block = (block - 1) & rest)
      if (popcount(block) == parts[j] && is_independent(g, block)) total = checked_add(total, count(done | block, j + 1));
    return total;
  };
  return count(0, 0);
}

std::string to_string(const SymElement& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [mu, k] : x.terms) {
    const bool neg = k < 0;
    const auto mag = neg ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "m" + to_string(mu);
  }
  return out;
}

std::string to_json(const SymElement& x) {
  nlohmann::ordered_json j;
  j["basis"] = "m";
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mu, k] : x.terms) {
    nlohmann::ordered_json t;
    t["part"] = mu.parts();
    t["coeff"] = k;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

bool CoefficientReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.ok || c.informational; });
}

CoefficientReport check_coefficient_properties(const Graph& g) {
  const int n = g.size();
  CoefficientReport report;
  const QSymElement f = F_graph_recurrence(g);
  const SymElement x = chromatic_symmetric(g);
  const auto comps = n > 0 ? compositions_of(n) : std::vector<Composition>{};

  auto fail = [](PropertyCheck& c, std::string what) {
    if (c.ok) c.witness = std::move(what);
    c.ok = false;
  };

  PropertyCheck independence{"independence"};
  const auto fv = independence_fvector(g);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> parts{k};
    parts.insert(parts.end(), n - k, 1);
    const Composition alpha(parts);
    const Coeff faces = k < static_cast<int>(fv.size()) ? fv[k] : 0;
    const Coeff expected = checked_mul(factorial(n - k), faces);
    ++independence.checked;
    if (f.coefficient(alpha) != expected)
      fail(independence, "zeta" + to_string(alpha) + " = " + std::to_string(f.coefficient(alpha)) + ", expected " +
                             std::to_string(expected));
  }
  report.checks.push_back(independence);

  const int q_max = connectivity(g);
  PropertyCheck vanishing{"vanishing"};
  if (q_max >= 1) {
    for (const auto& alpha : comps) {
      const int len = alpha.length();
      bool must_vanish = false;
      for (int j = std::max(1, len - q_max + 1); j <= len; ++j)
        if (alpha[j - 1] > 1) must_vanish = true;
      if (!must_vanish) continue;
      ++vanishing.checked;
      if (f.coefficient(alpha) != 0)
        fail(vanishing, "zeta" + to_string(alpha) + " = " + std::to_string(f.coefficient(alpha)) +
                            " should vanish for a " + std::to_string(q_max) + "-connected graph");
    }
  }
  report.checks.push_back(vanishing);

  PropertyCheck separators{"separators"};
  PropertyCheck exact_k{"separators-exact-k"};
  exact_k.informational = true;
  for (int q = 1; q <= q_max; ++q)
    for (int k = 1; n - q - k >= 0; ++k) {
      Coeff general = 0;
      Coeff product_only = 0;
      for (Mask s = 0; s <= g.vertices(); ++s) {
        if (popcount(s) != q) continue;
        std::vector<int> sizes;
        for (Mask c : components(g, g.vertices() & ~s)) sizes.push_back(popcount(c));
        const Coeff frame = checked_mul(factorial(n - q - k), factorial(q));
        general = checked_add(general, checked_mul(frame, elementary(sizes, k)));
        if (static_cast<int>(sizes.size()) == k) product_only = checked_add(product_only, checked_mul(frame, elementary(sizes, k)));
        if (s == g.vertices()) break;
      }
      std::vector<int> parts(n - q - k, 1);
      parts.push_back(k);
      parts.insert(parts.end(), q, 1);
      const Coeff z = f.coefficient(Composition(parts));
      ++separators.checked;
      ++exact_k.checked;
      if (z != general)
        fail(separators, "zeta" + composition_with(n - q - k, k, q) + " = " + std::to_string(z) +
                             ", separator count " + std::to_string(general));
      if (z != product_only)
        fail(exact_k, "q = " + std::to_string(q) + ": zeta" + composition_with(n - q - k, k, q) + " = " +
                          std::to_string(z) + ", sets with exactly " + std::to_string(k) + " components give " +
                          std::to_string(product_only));
    }
  report.checks.push_back(separators);
  report.checks.push_back(exact_k);

  PropertyCheck monotone{"monotone"};
  for (const auto& beta : comps)
    for (const auto& alpha : coarsenings(beta)) {
      if (alpha == beta) continue;
      ++monotone.checked;
      if (f.coefficient(alpha) > f.coefficient(beta))
        fail(monotone, "zeta" + to_string(alpha) + " = " + std::to_string(f.coefficient(alpha)) + " exceeds zeta" +
                           to_string(beta) + " = " + std::to_string(f.coefficient(beta)));
    }
  report.checks.push_back(monotone);

  PropertyCheck chromatic{"chromatic"};
  for (const auto& alpha : comps) {
    const Partition mu = Partition::sorted_from(alpha);
    ++chromatic.checked;
    if (f.coefficient(alpha) > x.coefficient(mu))
      fail(chromatic, "zeta" + to_string(alpha) + " = " + std::to_string(f.coefficient(alpha)) + " exceeds c" +
                          to_string(mu) + " = " + std::to_string(x.coefficient(mu)));
  }
  report.checks.push_back(chromatic);
  return report;
}

}  // namespace nesto
