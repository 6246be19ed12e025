#ifndef ROABP_FIELD_HPP
#define ROABP_FIELD_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "roabp/errors.hpp"

namespace roabp {

enum class FieldKind { Rationals, PrimeField };

/// Describes an exact coefficient field: the rationals, or F_p for prime p.
class FieldDescriptor {
 public:
  FieldDescriptor() : kind_(FieldKind::Rationals), modulus_(0) {}

  static FieldDescriptor rationals() { return FieldDescriptor(); }

  /// Prime field of order p. Throws DomainError if p is not prime.
  static FieldDescriptor prime_field(std::uint64_t p);

  /// Parses a field spec string: "q" for the rationals, "fp:<p>" for F_p.
  static FieldDescriptor parse(const std::string& spec);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  /// Field order for prime fields; 0 for the rationals.
  std::uint64_t modulus() const { return modulus_; }

  /// 0 for the rationals, p for F_p.
  std::uint64_t characteristic() const { return modulus_; }

  /// Canonical spec string ("q" or "fp:<p>").
  std::string str() const;

  bool operator==(const FieldDescriptor& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const FieldDescriptor& other) const { return !(*this == other); }

 private:
  FieldKind kind_;
  std::uint64_t modulus_;
};

/// Deterministic 64-bit Miller-Rabin.
bool is_prime_u64(std::uint64_t n);

/// An exact field value. Rationals are stored as fully reduced GMP rationals
/// with positive denominator; prime-field values as canonical residues in
/// [0, p). Arithmetic between elements of different fields throws
/// MismatchError. All operations are exact; values are immutable in spirit
/// (operators return fresh values) and safe to share across threads.
class FieldElement {
 public:
  /// Rational zero. Exists so containers (Eigen included) can default-init;
  /// real code should use zero(field).
  FieldElement() : res_(0) {}

  static FieldElement zero(const FieldDescriptor& field) {
    return from_integer(field, 0);
  }
  static FieldElement one(const FieldDescriptor& field) {
    return from_integer(field, 1);
  }
  static FieldElement from_integer(const FieldDescriptor& field, long value);
  static FieldElement from_integer(const FieldDescriptor& field, const mpz_class& value);
  /// Rationals only.
  static FieldElement from_rational(mpq_class value);
  /// num/den with den != 0; over F_p den must be a unit.
  static FieldElement from_fraction(const FieldDescriptor& field, const mpz_class& num,
                                    const mpz_class& den);
  /// Prime fields only; value is reduced mod p.
  static FieldElement from_residue(const FieldDescriptor& field, std::uint64_t value);

  const FieldDescriptor& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  /// Exact division; throws DomainError on division by zero.
  FieldElement operator/(const FieldElement& o) const;

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  /// e may be negative (uses the inverse); 0^0 = 1.
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Exact decimal text: "-3/2", "7". Prime-field values print the residue.
  std::string str() const;

  /// Rational payload; only valid over the rationals.
  const mpq_class& rat() const { return rat_; }
  /// Residue payload; only valid over prime fields.
  std::uint64_t residue() const { return res_; }

 private:
  FieldDescriptor field_;
  mpq_class rat_;
  std::uint64_t res_;

  void check_same_field(const FieldElement& o) const;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f);

/// Smallest field element of multiplicative order exactly k, i.e. w with
/// w^k = 1 and w^j != 1 for 0 < j < k. Over the rationals this exists only
/// for k in {1, 2}; over F_p iff k divides p - 1. Throws NoRootError
/// otherwise, naming k and the field.
FieldElement primitive_root_of_unity(const FieldDescriptor& field, std::uint64_t k);

// Elimination-kernel hooks (see linalg.hpp).
inline FieldElement zero_like(const FieldElement& x) { return FieldElement::zero(x.field()); }
inline FieldElement one_like(const FieldElement& x) { return FieldElement::one(x.field()); }
inline bool is_zero_elem(const FieldElement& x) { return x.is_zero(); }
inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

inline mpz_class zero_like(const mpz_class&) { return mpz_class(0); }
inline mpz_class one_like(const mpz_class&) { return mpz_class(1); }
inline bool is_zero_elem(const mpz_class& x) { return sgn(x) == 0; }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace roabp

namespace Eigen {
template <>
struct NumTraits<roabp::FieldElement> : GenericNumTraits<roabp::FieldElement> {
  using Real = roabp::FieldElement;
  using NonInteger = roabp::FieldElement;
  using Nested = roabp::FieldElement;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32,
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // ROABP_FIELD_HPP
