#pragma once

// Quasisymmetric functions with exact integer coefficients, in the monomial
// (M) and fundamental (L) bases.

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nesto/error.hpp"

namespace nesto {

/// Finite sequence of positive integers. The empty composition is the
/// unique composition of 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Parts in reverse order.
  Composition reversed() const;
  /// Partial sums a1, a1+a2, ..., excluding the total.
  std::vector<int> descent_set() const;
  static Composition from_descent_set(const std::vector<int>& set, int n);

  /// Canonical order: by weight, then length, then lexicographically.
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Weakly decreasing composition; the sorted shape s(alpha) of a composition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  static Partition sorted_from(const Composition& c);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
};

/// A word using each of 1..n exactly once.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  const std::vector<int>& word() const noexcept { return word_; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator[](std::size_t i) const { return word_[i]; }

  /// pi composed with the order-reversing permutation on positions: the
  /// word read backwards.
  Permutation reversed() const;
  /// i -> n+1-pi(i).
  Permutation complemented() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

enum class Basis { M, L };

char basis_letter(Basis b);

/// Finite linear combination of basis elements indexed by compositions.
/// Zero coefficients are never stored; iteration follows the canonical
/// composition order. Inhomogeneous sums are allowed.
class QSymElement {
 public:
  using Terms = std::map<Composition, Coeff>;

  explicit QSymElement(Basis basis = Basis::M) : basis_(basis) {}
  QSymElement(Basis basis, std::initializer_list<std::pair<Composition, Coeff>> terms);

  static QSymElement unit(Basis basis = Basis::M);
  static QSymElement basis_element(Basis basis, Composition c, Coeff coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coefficient(const Composition& c) const;

  /// Adds coeff to the coefficient of c, dropping the term if it cancels.
  void add(const Composition& c, Coeff coeff);
  void add(const QSymElement& other, Coeff scale = 1);

  /// -1 for the zero element, the common degree for homogeneous elements,
  /// and -2 for an inhomogeneous one.
  int homogeneous_degree() const;

  QSymElement& operator+=(const QSymElement& other);
  QSymElement& operator-=(const QSymElement& other);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
  friend QSymElement operator*(Coeff s, const QSymElement& a);
  friend bool operator==(const QSymElement&, const QSymElement&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

/// Element of QSym (x) QSym in the M (x) M basis; keys ordered left slot major.
class QSymTensor {
 public:
  using Key = std::pair<Composition, Composition>;
  using Terms = std::map<Key, Coeff>;

  const Terms& terms() const noexcept { return terms_; }
  Coeff coefficient(const Composition& left, const Composition& right) const;
  void add(const Composition& left, const Composition& right, Coeff coeff);
  /// Adds coeff * (a (x) b).
  void add_product(const QSymElement& a, const QSymElement& b, Coeff coeff = 1);
  bool is_zero() const noexcept { return terms_.empty(); }
  friend bool operator==(const QSymTensor&, const QSymTensor&) = default;

 private:
  Terms terms_;
};

// ---- composition combinatorics ----

/// True iff beta is obtained from alpha by splitting parts, i.e. beta can
/// be cut into consecutive blocks summing to the parts of alpha.
bool refines(const Composition& beta, const Composition& alpha);

/// All compositions that alpha refines (alpha included), canonical order.
std::vector<Composition> coarsenings(const Composition& alpha);

/// All refinements of alpha (alpha included), canonical order.
std::vector<Composition> refinements(const Composition& alpha);

/// All compositions of n in canonical order.
std::vector<Composition> compositions_of(int n);

/// Lengths of the maximal increasing runs of the word.
Composition descent_composition(const Permutation& pi);

/// The permutation whose runs are filled with consecutive ascending values,
/// the first run receiving the largest block, so that des(result) = alpha.
Permutation permutation_with_descents(const Composition& alpha);

// ---- algebra ----

/// Quasi-shuffle product of monomial-basis elements.
QSymElement mul(const QSymElement& f, const QSymElement& g);
QSymElement operator*(const QSymElement& f, const QSymElement& g);
QSymElement power(const QSymElement& f, int exponent);

/// Linear map M_alpha -> M_(alpha,1).
QSymElement shift1(const QSymElement& f);

/// Deconcatenation coproduct on the M basis.
QSymTensor coproduct(const QSymElement& f);

/// Coefficient of M_().
Coeff counit(const QSymElement& f);

QSymElement to_fundamental(const QSymElement& f);
QSymElement from_fundamental(const QSymElement& f);
/// Converts to the requested basis (no-op when already there).
QSymElement in_basis(const QSymElement& f, Basis basis);

/// Hopf antipode. On the fundamental basis
/// S(L_des(pi)) = (-1)^n L_des(pi read backwards). The result is returned in
/// the basis of the argument.
QSymElement antipode(const QSymElement& f);

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k! for any integer m.
Coeff binomial(Coeff m, int k);

/// ps_m: sum of coeff * C(m, length) over the monomial expansion.
Coeff principal_specialization(const QSymElement& f, Coeff m);

/// (-1)^n ps_{-1}(f) for f homogeneous of degree n. Throws InvalidInput when
/// f is not of degree n or the result is negative.
Coeff vertex_count(const QSymElement& f, int n);

// ---- text and JSON ----

std::string to_string(const Composition& c);   // "[2,1,1]"
std::string to_string(const Partition& p);     // "[2,1,1]"
std::string to_string(const Permutation& p);   // "24153" for n < 10, else "2,4,..."

/// "4*M[1,2,1] + 6*M[2,1,1] + 24*M[1,1,1,1]"; the zero element is "0".
std::string to_string(const QSymElement& f);
std::string to_string(const QSymTensor& t);

/// {"basis":"M","terms":[{"comp":[...],"coeff":c},...]}
std::string to_json(const QSymElement& f);

/// Accepts either the text rendering or the JSON form.
QSymElement parse_qsym(std::string_view text);

}  // namespace nesto
