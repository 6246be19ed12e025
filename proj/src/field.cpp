#include "roabp/field.hpp"

#include <ostream>
#include <sstream>

namespace roabp {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // a, b < p; avoids overflow for p close to 2^64
  return a >= p - b && b != 0 ? a - (p - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  // unsigned long is 64-bit on every platform this builds for
  mpz_class m, pz(static_cast<unsigned long>(p));
  mpz_mod(m.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
  return mpz_get_ui(m.get_mpz_t());
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw DomainError("prime-field modulus must be prime, got " + std::to_string(p));
  }
  FieldDescriptor f;
  f.kind_ = FieldKind::PrimeField;
  f.modulus_ = p;
  return f;
}

FieldDescriptor FieldDescriptor::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed field spec '" + spec + "': expected \"q\" or \"fp:<p>\"");
    }
    std::uint64_t p = 0;
    try {
      p = std::stoull(digits);
    } catch (const std::exception&) {
      throw ParseError("field modulus out of range in '" + spec + "'");
    }
    return prime_field(p);
  }
  throw ParseError("malformed field spec '" + spec + "': expected \"q\" or \"fp:<p>\"");
}

std::string FieldDescriptor::str() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(modulus_);
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) {
    throw MismatchError("field mismatch: " + field_.str() + " vs " + o.field_.str());
  }
}

FieldElement FieldElement::from_integer(const FieldDescriptor& field, long value) {
  return from_integer(field, mpz_class(value));
}

FieldElement FieldElement::from_integer(const FieldDescriptor& field, const mpz_class& value) {
  FieldElement x;
  x.field_ = field;
  if (field.is_rationals()) {
    x.rat_ = mpq_class(value);
  } else {
    x.res_ = reduce_mpz(value, field.modulus());
  }
  return x;
}

FieldElement FieldElement::from_rational(mpq_class value) {
  FieldElement x;
  x.field_ = FieldDescriptor::rationals();
  value.canonicalize();
  x.rat_ = std::move(value);
  return x;
}

FieldElement FieldElement::from_fraction(const FieldDescriptor& field, const mpz_class& num,
                                         const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("fraction with zero denominator");
  if (field.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q);
  }
  return from_integer(field, num) / from_integer(field, den);
}

FieldElement FieldElement::from_residue(const FieldDescriptor& field, std::uint64_t value) {
  if (!field.is_prime_field()) throw DomainError("from_residue requires a prime field");
  FieldElement x;
  x.field_ = field;
  x.res_ = value % field.modulus();
  return x;
}

bool FieldElement::is_zero() const {
  return field_.is_rationals() ? sgn(rat_) == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

FieldElement FieldElement::operator-() const {
  FieldElement x = *this;
  if (field_.is_rationals()) {
    x.rat_ = -rat_;
  } else {
    x.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  }
  return x;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  FieldElement x = *this;
  if (field_.is_rationals()) {
    x.rat_ = rat_ + o.rat_;
  } else {
    x.res_ = add_mod(res_, o.res_, field_.modulus());
  }
  return x;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  FieldElement x = *this;
  if (field_.is_rationals()) {
    x.rat_ = rat_ - o.rat_;
  } else {
    x.res_ = sub_mod(res_, o.res_, field_.modulus());
  }
  return x;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  FieldElement x = *this;
  if (field_.is_rationals()) {
    x.rat_ = rat_ * o.rat_;
  } else {
    x.res_ = mul_mod(res_, o.res_, field_.modulus());
  }
  return x;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  if (o.is_zero()) throw DomainError("division by zero over " + field_.str());
  FieldElement x = *this;
  if (field_.is_rationals()) {
    x.rat_ = rat_ / o.rat_;
  } else {
    x.res_ = mul_mod(res_, inv_mod(o.res_, field_.modulus()), field_.modulus());
  }
  return x;
}

FieldElement FieldElement::inverse() const {
  return one(field_) / *this;
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = one(field_);
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElement::str() const {
  if (field_.is_rationals()) {
    std::ostringstream os;
    os << rat_;
    return os.str();
  }
  return std::to_string(res_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) { return os << f.str(); }

FieldElement primitive_root_of_unity(const FieldDescriptor& field, std::uint64_t k) {
  if (k == 0) throw DomainError("root-of-unity order must be positive");
  if (k == 1) return FieldElement::one(field);
  if (field.is_rationals()) {
    if (k == 2) return FieldElement::from_integer(field, -1);
    throw NoRootError("no primitive " + std::to_string(k) + "-th root of unity over " + field.str());
  }
  const std::uint64_t p = field.modulus();
  if ((p - 1) % k != 0) {
    throw NoRootError("no primitive " + std::to_string(k) + "-th root of unity over " + field.str() +
                      " (" + std::to_string(k) + " does not divide p-1)");
  }
  // Exhaustive: smallest element whose multiplicative order is exactly k.
  // Cost O(k) per candidate, no factoring needed.
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t x = a % p;
    std::uint64_t order = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
      if (x == 1) {
        order = j;
        break;
      }
      x = mul_mod(x, a, p);
    }
    if (order == k) return FieldElement::from_residue(field, a);
  }
  throw NoRootError("no primitive " + std::to_string(k) + "-th root of unity over " + field.str());
}

}  // namespace roabp
