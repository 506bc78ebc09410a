#include "nesto/qsym.hpp"

#include <algorithm>
#include <numeric>

#include "nesto/bits.hpp"

namespace nesto {

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("composition parts must be positive");
    weight_ += p;
  }
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) out.push_back(acc += parts_[i]);
  return out;
}

Composition Composition::from_descent_set(const std::vector<int>& set, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : set) {
    if (d <= prev || d >= n) throw InvalidInput("descent set must be increasing inside [1, n-1]");
    parts.push_back(d - prev);
    prev = d;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

// ------------------------------------------------------------------ Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be non-increasing");
  }
}

Partition Partition::sorted_from(const Composition& c) {
  std::vector<int> parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw InvalidInput("permutation word must use each of 1..n exactly once");
    seen[v] = true;
  }
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(word_.rbegin(), word_.rend()));
}

Permutation Permutation::complemented() const {
  std::vector<int> w(word_.size());
  const int n = size();
  std::transform(word_.begin(), word_.end(), w.begin(), [n](int v) { return n + 1 - v; });
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------- QSymElement

char basis_letter(Basis b) { return b == Basis::M ? 'M' : 'L'; }

QSymElement::QSymElement(Basis basis, std::initializer_list<std::pair<Composition, Coeff>> terms)
    : basis_(basis) {
  for (const auto& [c, k] : terms) add(c, k);
}

QSymElement QSymElement::unit(Basis basis) { return basis_element(basis, Composition{}); }

QSymElement QSymElement::basis_element(Basis basis, Composition c, Coeff coeff) {
  QSymElement e(basis);
  e.add(c, coeff);
  return e;
}

Coeff QSymElement::coefficient(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

void QSymElement::add(const Composition& c, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void QSymElement::add(const QSymElement& other, Coeff scale) {
  if (other.basis_ != basis_) throw InvalidInput("cannot add elements expressed in different bases");
  for (const auto& [c, k] : other.terms_) add(c, checked_mul(scale, k));
}

int QSymElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.weight();
  return terms_.rbegin()->first.weight() == d ? d : -2;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  add(other, 1);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
  add(other, -1);
  return *this;
}

QSymElement operator*(Coeff s, const QSymElement& a) {
  QSymElement out(a.basis());
  out.add(a, s);
  return out;
}

// ----------------------------------------------------------------- QSymTensor

Coeff QSymTensor::coefficient(const Composition& left, const Composition& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? 0 : it->second;
}

void QSymTensor::add(const Composition& left, const Composition& right, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void QSymTensor::add_product(const QSymElement& a, const QSymElement& b, Coeff coeff) {
  if (a.basis() != Basis::M || b.basis() != Basis::M)
    throw InvalidInput("tensor factors must be in the monomial basis");
  for (const auto& [ca, ka] : a.terms())
    for (const auto& [cb, kb] : b.terms()) add(ca, cb, checked_mul(coeff, checked_mul(ka, kb)));
}

// --------------------------------------------------- composition combinatorics

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.weight() != alpha.weight()) return false;
  std::size_t j = 0;
  for (int a : alpha.parts()) {
    int acc = 0;
    while (acc < a && j < beta.parts().size()) acc += beta[j++];
    if (acc != a) return false;
  }
  return j == beta.parts().size();
}

std::vector<Composition> coarsenings(const Composition& alpha) {
  std::vector<Composition> out;
  const int k = alpha.length();
  if (k == 0) return {alpha};
  for (Mask keep = 0; keep < (Mask{1} << (k - 1)); ++keep) {
    std::vector<int> parts;
    int acc = alpha[0];
    for (int i = 1; i < k; ++i) {
      if ((keep >> (i - 1)) & 1U) {
        parts.push_back(acc);
        acc = alpha[i];
      } else {
        acc += alpha[i];
      }
    }
    parts.push_back(acc);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw InvalidInput("negative weight");
  if (n == 0) return {Composition{}};
  require_capacity(n <= 30, "compositions_of: n must be at most 30");
  std::vector<Composition> out;
  for (Mask cuts = 0; cuts < (Mask{1} << (n - 1)); ++cuts) {
    std::vector<int> set;
    for (int i = 1; i < n; ++i)
      if ((cuts >> (i - 1)) & 1U) set.push_back(i);
    out.push_back(Composition::from_descent_set(set, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<std::vector<int>> acc{{}};
  for (int a : alpha.parts()) {
    std::vector<std::vector<int>> next;
    for (const Composition& piece : compositions_of(a))
      for (const auto& prefix : acc) {
        auto w = prefix;
        w.insert(w.end(), piece.parts().begin(), piece.parts().end());
        next.push_back(std::move(w));
      }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& w : acc) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

Composition descent_composition(const Permutation& pi) {
  std::vector<int> parts;
  const auto& w = pi.word();
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++run;
    if (i + 1 == w.size() || w[i + 1] < w[i]) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(parts));
}

Permutation permutation_with_descents(const Composition& alpha) {
  std::vector<int> word;
  word.reserve(alpha.weight());
  int top = alpha.weight();
  for (int part : alpha.parts()) {
    for (int v = top - part + 1; v <= top; ++v) word.push_back(v);
    top -= part;
  }
  return Permutation(std::move(word));
}

// -------------------------------------------------------------------- algebra

namespace {

void require_m(const QSymElement& f, const char* op) {
  if (f.basis() != Basis::M) throw InvalidInput(std::string(op) + " expects the monomial basis");
}

// Appends every quasi-shuffle of a[i..] and b[j..] to `prefix`, adding
// `coeff` for each completed word.
void quasi_shuffle(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                   std::vector<int>& prefix, Coeff coeff, QSymElement& out) {
  if (i == a.size() || j == b.size()) {
    const std::size_t mark = prefix.size();
    prefix.insert(prefix.end(), a.begin() + i, a.end());
    prefix.insert(prefix.end(), b.begin() + j, b.end());
    out.add(Composition(prefix), coeff);
    prefix.resize(mark);
    return;
  }
  prefix.push_back(a[i]);
  quasi_shuffle(a, i + 1, b, j, prefix, coeff, out);
  prefix.back() = b[j];
  quasi_shuffle(a, i, b, j + 1, prefix, coeff, out);
  prefix.back() = a[i] + b[j];
  quasi_shuffle(a, i + 1, b, j + 1, prefix, coeff, out);
  prefix.pop_back();
}

}  // namespace

QSymElement mul(const QSymElement& f, const QSymElement& g) {
  require_m(f, "mul");
  require_m(g, "mul");
  QSymElement out(Basis::M);
  std::vector<int> prefix;
  for (const auto& [a, ka] : f.terms())
    for (const auto& [b, kb] : g.terms())
      quasi_shuffle(a.parts(), 0, b.parts(), 0, prefix, checked_mul(ka, kb), out);
  return out;
}

QSymElement operator*(const QSymElement& f, const QSymElement& g) { return mul(f, g); }

QSymElement power(const QSymElement& f, int exponent) {
  if (exponent < 0) throw InvalidInput("negative exponent");
  QSymElement out = QSymElement::unit();
  for (int i = 0; i < exponent; ++i) out = mul(out, f);
  return out;
}

QSymElement shift1(const QSymElement& f) {
  require_m(f, "shift1");
  QSymElement out(Basis::M);
  for (const auto& [c, k] : f.terms()) {
    auto parts = c.parts();
    parts.push_back(1);
    out.add(Composition(std::move(parts)), k);
  }
  return out;
}

QSymTensor coproduct(const QSymElement& f) {
  require_m(f, "coproduct");
  QSymTensor out;
  for (const auto& [c, k] : f.terms()) {
    const auto& p = c.parts();
    for (std::size_t i = 0; i <= p.size(); ++i)
      out.add(Composition(std::vector<int>(p.begin(), p.begin() + i)),
              Composition(std::vector<int>(p.begin() + i, p.end())), k);
  }
  return out;
}

Coeff counit(const QSymElement& f) { return f.coefficient(Composition{}); }

QSymElement to_fundamental(const QSymElement& f) {
  if (f.basis() == Basis::L) return f;
  QSymElement out(Basis::L);
  for (const auto& [alpha, k] : f.terms())
    for (const Composition& beta : refinements(alpha))
      out.add(beta, (beta.length() - alpha.length()) % 2 == 0 ? k : checked_mul(k, -1));
  return out;
}

QSymElement from_fundamental(const QSymElement& f) {
  if (f.basis() == Basis::M) return f;
  QSymElement out(Basis::M);
  for (const auto& [alpha, k] : f.terms())
    for (const Composition& beta : refinements(alpha)) out.add(beta, k);
  return out;
}

QSymElement in_basis(const QSymElement& f, Basis basis) {
  return basis == Basis::M ? from_fundamental(f) : to_fundamental(f);
}

QSymElement antipode(const QSymElement& f) {
  const QSymElement lf = to_fundamental(f);
  QSymElement out(Basis::L);
  for (const auto& [alpha, k] : lf.terms()) {
    const Permutation pi = permutation_with_descents(alpha);
    const Composition image = descent_composition(pi.reversed());
    out.add(image, alpha.weight() % 2 == 0 ? k : checked_mul(k, -1));
  }
  return in_basis(out, f.basis());
}

Coeff binomial(Coeff m, int k) {
  if (k < 0) return 0;
  __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (static_cast<__int128>(m) - i);
    r /= (i + 1);
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowError("binomial coefficient overflows 64 bits");
  }
  return static_cast<Coeff>(r);
}

Coeff principal_specialization(const QSymElement& f, Coeff m) {
  const QSymElement mf = from_fundamental(f);
  Coeff total = 0;
  for (const auto& [c, k] : mf.terms()) total = checked_add(total, checked_mul(k, binomial(m, c.length())));
  return total;
}

Coeff vertex_count(const QSymElement& f, int n) {
  const int d = from_fundamental(f).homogeneous_degree();
  if (d != n) throw InvalidInput("vertex_count: element is not homogeneous of degree " + std::to_string(n));
  Coeff v = principal_specialization(f, -1);
  if (n % 2 != 0) v = checked_mul(v, -1);
  if (v < 0) throw InvalidInput("vertex_count: negative result, not a nestohedron enumerator");
  return v;
}

}  // namespace nesto
