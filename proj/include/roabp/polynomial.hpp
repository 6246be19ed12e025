#ifndef ROABP_POLYNOMIAL_HPP
#define ROABP_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roabp/field.hpp"
#include "roabp/monomial.hpp"

namespace roabp {

/// Sparse multivariate polynomial with exact coefficients over a fixed field
/// and fixed arity. Canonical form: no stored coefficient is zero, so
/// structural equality is semantic equality. Immutable value semantics; all
/// operations are pure and exact.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, GradedLexLess>;

  /// Rational zero of arity 0; exists for containers. Use zero(field, arity).
  Polynomial() = default;

  static Polynomial zero(const FieldDescriptor& field, int arity);
  static Polynomial one(const FieldDescriptor& field, int arity);
  static Polynomial constant(const FieldDescriptor& field, int arity, const FieldElement& c);
  static Polynomial constant(const FieldDescriptor& field, int arity, long c);
  static Polynomial variable(const FieldDescriptor& field, int arity, int var);
  static Polynomial term(const FieldDescriptor& field, const Monomial& m, const FieldElement& c);

  const FieldDescriptor& field() const { return field_; }
  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t sparsity() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  int degree() const;             // max total degree; -1 for the zero polynomial
  int degree_in(int var) const;   // max exponent of var; 0 if absent

  /// Coefficient of m (zero element if absent).
  FieldElement coef(const Monomial& m) const;
  /// Constant term.
  FieldElement constant_term() const { return coef(Monomial(arity_)); }

  /// Accumulates c * m, keeping canonical form. Builder-style mutator.
  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const FieldElement& c) const;
  Polynomial pow(long e) const;  // e >= 0; f^0 = 1

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Composition: replaces variable v by images.at(v); unmapped variables map
  /// to themselves in the target arity (images must agree on field/arity).
  Polynomial substitute(const std::map<int, Polynomial>& images) const;

  /// Partial evaluation: entries with a value are substituted, the rest stay
  /// symbolic. Result has the same ambient arity.
  Polynomial specialize(const std::vector<std::optional<FieldElement>>& point) const;

  /// Full evaluation; point.size() must equal arity().
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  /// The unique h over the complement of Y with f = sum over Y-monomials of
  /// m_Y * h_{m_Y}. m_y must be supported on Y. Keeps the ambient arity.
  Polynomial coef_extract(const std::vector<bool>& Y, const Monomial& m_y) const;

  /// All Y-monomials occurring in f (graded-lex ascending, deduplicated).
  std::vector<Monomial> support_restricted(const std::vector<bool>& Y) const;

  Polynomial derivative(int var) const;

  /// Renames x_i to x_{perm[i]}; perm must be a bijection on [arity].
  Polynomial permute_variables(const std::vector<int>& perm) const;

  /// Same polynomial in a larger ambient arity (extra variables unused).
  Polynomial extended(int new_arity) const;

  /// Same polynomial in a smaller ambient arity; throws if any dropped
  /// variable is used.
  Polynomial truncated(int new_arity) const;

  /// Lex-leading monomial (x_0 heaviest); polynomial must be nonzero.
  const Monomial& leading_monomial_lex() const;

  /// Canonical text (graded lex, highest degree first, ties by lex).
  std::string str() const;

 private:
  FieldDescriptor field_;
  int arity_ = 0;
  TermMap terms_;

  void check_compatible(const Polynomial& o) const;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Parses the polynomial grammar:
///   term  ::= coeff ('*' var)* | var-product
///   var   ::= 'x'<int>            (1-indexed)
///   coeff ::= integer | integer '/' integer   (fractions only over q)
/// '^' marks exponents, '+'/'-' separate terms, whitespace is insignificant.
/// If arity is absent it is inferred from the largest variable index.
Polynomial parse_polynomial(const std::string& text, const FieldDescriptor& field,
                            std::optional<int> arity = std::nullopt);

/// parse(format(f)) == f; deterministic term order.
std::string format_polynomial(const Polynomial& f);

// Elimination-kernel hooks.
inline Polynomial zero_like(const Polynomial& f) {
  return Polynomial::zero(f.field(), f.arity());
}
inline Polynomial one_like(const Polynomial& f) {
  return Polynomial::one(f.field(), f.arity());
}
inline bool is_zero_elem(const Polynomial& f) { return f.is_zero(); }
/// Exact polynomial division (throws DomainError if the division leaves a
/// remainder). Used by fraction-free elimination over the polynomial ring.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

}  // namespace roabp

namespace Eigen {
template <>
struct NumTraits<roabp::Polynomial> : GenericNumTraits<roabp::Polynomial> {
  using Real = roabp::Polynomial;
  using NonInteger = roabp::Polynomial;
  using Nested = roabp::Polynomial;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 128,
    MulCost = 256,
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // ROABP_POLYNOMIAL_HPP
