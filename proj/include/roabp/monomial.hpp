#ifndef ROABP_MONOMIAL_HPP
#define ROABP_MONOMIAL_HPP

#include <numeric>
#include <vector>

#include "roabp/errors.hpp"

namespace roabp {

/// A power product x_0^{e_0} ... x_{n-1}^{e_n-1} with a fixed arity n.
/// Exponent vectors are dense; variable ids are 0-based internally
/// (the textual grammar is 1-based).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : exps_(static_cast<std::size_t>(arity), 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial unit(int arity, int var, int e = 1) {
    Monomial m(arity);
    m.set_exp(var, e);
    return m;
  }

  int arity() const { return static_cast<int>(exps_.size()); }
  int exp(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  void set_exp(int var, int e) {
    if (e < 0) throw DomainError("negative exponent");
    exps_[static_cast<std::size_t>(var)] = e;
  }
  const std::vector<int>& exps() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// o / *this, assuming divides(o).
  Monomial divide_into(const Monomial& o) const {
    check_arity(o);
    Monomial m = o;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      m.exps_[i] -= exps_[i];
      if (m.exps_[i] < 0) throw DomainError("monomial division is not exact");
    }
    return m;
  }

  /// Keeps exponents of variables with mask[v] set, zeroes the rest.
  Monomial restricted(const std::vector<bool>& mask) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (!mask[i]) m.exps_[i] = 0;
    return m;
  }

  bool supported_on(const std::vector<bool>& mask) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && !mask[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  /// Pure lex with x_0 weighing heaviest.
  static bool lex_less(const Monomial& a, const Monomial& b) {
    return a.exps_ < b.exps_;
  }

  /// Total degree first, ties by lex.
  static bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps_ < b.exps_;
  }

 private:
  std::vector<int> exps_;

  void check_arity(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw MismatchError("monomial arity mismatch");
  }
};

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::graded_lex_less(a, b);
  }
};

}  // namespace roabp

#endif  // ROABP_MONOMIAL_HPP
