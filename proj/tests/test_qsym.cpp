#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "nesto/qsym.hpp"
#include "nesto/verify.hpp"

using namespace nesto;

namespace {

QSymElement M(std::initializer_list<std::pair<Composition, Coeff>> t) { return QSymElement(Basis::M, t); }
QSymElement L(std::initializer_list<std::pair<Composition, Coeff>> t) { return QSymElement(Basis::L, t); }

// Polynomial in `vars` variables, exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Coeff>;

// M_alpha truncated to `vars` variables: every strictly increasing choice of
// positions carrying the parts of alpha.
Poly monomial_poly(const Composition& alpha, int vars) {
  Poly p;
  const int k = alpha.length();
  std::vector<int> pos(k);
  std::function<void(int, int)> place = [&](int i, int from) {
    if (i == k) {
      std::vector<int> e(vars, 0);
      for (int j = 0; j < k; ++j) e[pos[j]] = alpha[j];
      p[e] += 1;
      return;
    }
    for (int v = from; v < vars; ++v) {
      pos[i] = v;
      place(i + 1, v + 1);
    }
  };
  place(0, 0);
  return p;
}

Poly to_poly(const QSymElement& f, int vars) {
  Poly out;
  for (const auto& [c, k] : f.terms())
    for (const auto& [e, v] : monomial_poly(c, vars)) out[e] += k * v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Reads the M expansion back off a quasisymmetric polynomial: the
// coefficient of M_gamma is that of x_1^g1 ... x_k^gk.
QSymElement from_poly(const Poly& p) {
  QSymElement out(Basis::M);
  for (const auto& [e, c] : p) {
    std::vector<int> parts;
    bool packed = true;
    bool seen_zero = false;
    for (int x : e) {
      if (x == 0) seen_zero = true;
      else if (seen_zero) packed = false;
      else parts.push_back(x);
    }
    if (packed) out.add(Composition(parts), c);
  }
  return out;
}

}  // namespace

TEST_CASE("refines cuts beta into blocks summing to alpha's parts") {
  CHECK(refines({1, 1, 1, 1}, {2, 1, 1}));
  CHECK(refines({2, 2}, {2, 2}));
  CHECK_FALSE(refines({1, 2, 1}, {2, 2}));
  CHECK(refines({}, {}));
  CHECK_FALSE(refines({1}, {2}));
}

TEST_CASE("coarsenings merge adjacent parts") {
  auto sorted = [](std::vector<Composition> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(coarsenings({1, 1})) == sorted({{1, 1}, {2}}));
  CHECK(coarsenings({2}) == std::vector<Composition>{{2}});
  CHECK(sorted(coarsenings({1, 1, 1})) == sorted({{1, 1, 1}, {2, 1}, {1, 2}, {3}}));
  for (const auto& a : compositions_of(6)) CHECK(coarsenings(a).size() == (std::size_t{1} << (a.length() - 1)));
}

TEST_CASE("compositions_of counts 2^(n-1) in canonical order") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = compositions_of(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
}

TEST_CASE("quasi-shuffle product") {
  CHECK(M({{{1}, 1}}) * M({{{1}, 1}}) == M({{{1, 1}, 2}, {{2}, 1}}));
  const QSymElement f = M({{{2, 1}, 3}, {{1}, -1}});
  CHECK(QSymElement::unit() * f == f);
  CHECK(M({{{1, 1}, 1}}) * M({{{1, 1}, 1}}) ==
        M({{{1, 1, 1, 1}, 6}, {{2, 1, 1}, 2}, {{1, 2, 1}, 2}, {{1, 1, 2}, 2}, {{2, 2}, 1}}));
}

TEST_CASE("quasi-shuffle agrees with multiplying truncated power series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const QSymElement f = random_qsym(rng, 3, 3);
    const QSymElement g = random_qsym(rng, 3, 3);
    // Enough variables to see every composition of the product's degree.
    const int vars = 6;
    CHECK(from_poly(poly_mul(to_poly(f, vars), to_poly(g, vars))) == f * g);
  }
}

TEST_CASE("shift1 appends a part 1") {
  CHECK(shift1(M({{{2, 1}, 1}})) == M({{{2, 1, 1}, 1}}));
  CHECK(shift1(QSymElement::unit()) == M({{{1}, 1}}));
  CHECK(shift1(M({{{1, 1}, 2}, {{2}, 1}})) == M({{{1, 1, 1}, 2}, {{2, 1}, 1}}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const QSymElement f = random_qsym(rng, 5, 4);
    const QSymElement s = shift1(f);
    CHECK(s.size() == f.size());
    for (const auto& [c, k] : s.terms()) CHECK(f.coefficient(Composition(std::vector<int>(c.parts().begin(), c.parts().end() - 1))) == k);
  }
}

TEST_CASE("deconcatenation coproduct") {
  QSymTensor t = coproduct(M({{{2, 1}, 1}}));
  QSymTensor expected;
  expected.add({}, {2, 1}, 1);
  expected.add({2}, {1}, 1);
  expected.add({2, 1}, {}, 1);
  CHECK(t == expected);

  QSymTensor unit;
  unit.add({}, {}, 1);
  CHECK(coproduct(QSymElement::unit()) == unit);

  QSymTensor three;
  three.add({}, {3}, 1);
  three.add({3}, {}, 1);
  CHECK(coproduct(M({{{3}, 1}})) == three);
}

TEST_CASE("basis change between M and L") {
  CHECK(from_fundamental(L({{{2}, 1}})) == M({{{2}, 1}, {{1, 1}, 1}}));
  CHECK(to_fundamental(M({{{1, 1}, 1}})) == L({{{1, 1}, 1}}));
  CHECK(to_fundamental(M({{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}})) ==
        L({{{1, 1, 1, 1}, 14}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const QSymElement f = random_qsym(rng, 7, 6);
    CHECK(from_fundamental(to_fundamental(f)) == f);
  }
}

TEST_CASE("descent compositions") {
  CHECK(descent_composition(Permutation{2, 4, 1, 5, 3}) == Composition{2, 2, 1});
  CHECK(descent_composition(Permutation{1, 2, 3, 4, 5}) == Composition{5});
  CHECK(descent_composition(Permutation{4, 3, 2, 1}) == Composition{1, 1, 1, 1});
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) CHECK(descent_composition(permutation_with_descents(a)) == a);
}

TEST_CASE("antipode on the fundamental basis") {
  CHECK(antipode(L({{{1, 1, 1, 1}, 1}})) == L({{{4}, 1}}));
  CHECK(antipode(QSymElement::unit(Basis::L)) == QSymElement::unit(Basis::L));
  CHECK(antipode(M({{{1}, 1}})) == M({{{1}, -1}}));
  // Enumerator of the 3-dimensional associahedron: the antipode sends
  // L[2,1,1] to L[3,1], its composition read backwards then complemented.
  const QSymElement as3 = L({{{1, 1, 1, 1}, 14}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  CHECK(antipode(as3) == L({{{4}, 14}, {{3, 1}, 6}, {{2, 2}, 4}}));
  // The result is returned in the argument's basis.
  CHECK(antipode(from_fundamental(as3)).basis() == Basis::M);
  CHECK(to_fundamental(antipode(from_fundamental(as3))) == antipode(as3));
}

TEST_CASE("antipode rule does not depend on the permutation chosen") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation pi(w);
      const Composition a = descent_composition(pi);
      const Coeff sign = n % 2 ? -1 : 1;
      CHECK(antipode(QSymElement::basis_element(Basis::L, a)) ==
            QSymElement::basis_element(Basis::L, descent_composition(pi.reversed()), sign));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("antipode axiom and multiplicativity") {
  for (const auto& p : qsym_property_suite(99)) {
    INFO(p.name << ": " << p.witness);
    CHECK(p.ok);
  }
}

TEST_CASE("principal specialization") {
  CHECK(principal_specialization(M({{{1, 1}, 2}}), 2) == 2);
  const QSymElement as3 = M({{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  CHECK(principal_specialization(as3, -1) == 14);
  for (int n = 1; n <= 6; ++n) CHECK(principal_specialization(M({{{n}, 1}}), 1) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(10, 0) == 1);
}

TEST_CASE("principal specialization counts points in the m-cube") {
  // ps_m(M_alpha) counts strictly increasing position choices in [m].
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n))
      for (int m = 0; m <= 5; ++m)
        CHECK(principal_specialization(QSymElement::basis_element(Basis::M, a), m) ==
              static_cast<Coeff>(monomial_poly(a, m).size()));
}

TEST_CASE("vertex_count") {
  const QSymElement as3 = M({{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  CHECK(vertex_count(as3, 4) == 14);
  CHECK(vertex_count(M({{{1}, 1}}), 1) == 1);
  CHECK(vertex_count(M({{{1, 1, 1}, 6}}), 3) == 6);
  CHECK_THROWS_AS(vertex_count(M({{{1, 1}, 1}}), 3), InvalidInput);
  CHECK_THROWS_AS(vertex_count(M({{{2}, 1}}), 2), InvalidInput);
}

TEST_CASE("overflow is detected") {
  QSymElement big = M({{{1}, std::numeric_limits<Coeff>::max()}});
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(big * M({{{1}, 2}}), OverflowError);
}

TEST_CASE("text and JSON round trips") {
  const QSymElement f = M({{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{1, 2, 1}, 4}});
  CHECK(to_string(f) == "4*M[1,2,1] + 6*M[2,1,1] + 24*M[1,1,1,1]");
  CHECK(parse_qsym(to_string(f)) == f);
  CHECK(parse_qsym(to_json(f)) == f);
  CHECK(parse_qsym("24*M[1,1,1,1] + 6*M[2,1,1] + 4*M[1,2,1]") == f);
  CHECK(to_json(f) ==
        R"({"basis":"M","terms":[{"comp":[1,2,1],"coeff":4},{"comp":[2,1,1],"coeff":6},{"comp":[1,1,1,1],"coeff":24}]})");
  CHECK(parse_qsym("0").is_zero());
  CHECK(parse_qsym("-L[2] + 3 L[1,1]") == L({{{2}, -1}, {{1, 1}, 3}}));
  CHECK(parse_qsym("M[]") == QSymElement::unit());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const QSymElement g = random_qsym(rng, 6, 5);
    CHECK(parse_qsym(to_string(g)) == g);
    CHECK(parse_qsym(to_json(g)) == g);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_qsym("2*M[1,1] + X[2]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_THROWS_AS(parse_qsym("M[1,0]"), ParseError);
  CHECK_THROWS_AS(parse_qsym("M[1] + L[1]"), ParseError);
  CHECK_THROWS_AS(parse_qsym(""), ParseError);
  CHECK_THROWS_AS(parse_qsym("{\"basis\":\"Q\",\"terms\":[]}"), ParseError);
}

TEST_CASE("composition and permutation invariants") {
  CHECK_THROWS_AS(Composition({1, 0}), InvalidInput);
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidInput);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
  CHECK(Partition::sorted_from({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(Composition({2, 1, 3}).descent_set() == std::vector<int>{2, 3});
  CHECK(Composition::from_descent_set({2, 3}, 6) == Composition{2, 1, 3});
}
