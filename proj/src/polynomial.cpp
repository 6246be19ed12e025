#include "roabp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace roabp {

Polynomial Polynomial::zero(const FieldDescriptor& field, int arity) {
  if (arity < 0) throw DomainError("negative arity");
  Polynomial f;
  f.field_ = field;
  f.arity_ = arity;
  return f;
}

Polynomial Polynomial::one(const FieldDescriptor& field, int arity) {
  return constant(field, arity, 1);
}

Polynomial Polynomial::constant(const FieldDescriptor& field, int arity, const FieldElement& c) {
  Polynomial f = zero(field, arity);
  f.add_term(Monomial(arity), c);
  return f;
}

Polynomial Polynomial::constant(const FieldDescriptor& field, int arity, long c) {
  return constant(field, arity, FieldElement::from_integer(field, c));
}

Polynomial Polynomial::variable(const FieldDescriptor& field, int arity, int var) {
  if (var < 0 || var >= arity) throw DomainError("variable id out of range");
  Polynomial f = zero(field, arity);
  f.add_term(Monomial::unit(arity, var), FieldElement::one(field));
  return f;
}

Polynomial Polynomial::term(const FieldDescriptor& field, const Monomial& m, const FieldElement& c) {
  Polynomial f = zero(field, m.arity());
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // terms are graded-lex ascending, so the last key has maximal degree
  return terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

FieldElement Polynomial::coef(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (m.arity() != arity_) throw MismatchError("monomial arity mismatch");
  if (c.field() != field_) throw MismatchError("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (field_ != o.field_) {
    throw MismatchError("polynomial field mismatch: " + field_.str() + " vs " + o.field_.str());
  }
  if (arity_ != o.arity_) {
    throw MismatchError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial f = zero(field_, arity_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial f = *this;
  for (const auto& [m, c] : o.terms_) f.add_term(m, c);
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial f = *this;
  for (const auto& [m, c] : o.terms_) f.add_term(m, -c);
  return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial f = zero(field_, arity_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) f.add_term(ma * mb, ca * cb);
  return f;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.field() != field_) throw MismatchError("scalar field mismatch");
  Polynomial f = zero(field_, arity_);
  if (c.is_zero()) return f;
  for (const auto& [m, t] : terms_) f.terms_.emplace(m, t * c);
  return f;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial acc = one(field_, arity_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && arity_ == o.arity_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images) const {
  if (images.empty()) return *this;
  const Polynomial& first = images.begin()->second;
  const int target_arity = first.arity();
  for (const auto& [v, img] : images) {
    if (v < 0 || v >= arity_) throw DomainError("substitution of unknown variable");
    if (img.field() != field_) throw MismatchError("substitution image field mismatch");
    if (img.arity() != target_arity) throw MismatchError("substitution images disagree on arity");
  }
  // power cache per source variable
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(arity_));
  auto image_pow = [&](int v, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(v)];
    if (cache.empty()) {
      cache.push_back(Polynomial::one(field_, target_arity));
      auto it = images.find(v);
      if (it != images.end()) {
        cache.push_back(it->second);
      } else {
        if (v >= target_arity)
          throw DomainError("unmapped variable x" + std::to_string(v + 1) +
                            " outside the target arity");
        cache.push_back(Polynomial::variable(field_, target_arity, v));
      }
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  };

  Polynomial out = zero(field_, target_arity);
  for (const auto& [m, c] : terms_) {
    Polynomial part = constant(field_, target_arity, c);
    for (int v = 0; v < arity_; ++v) {
      const int e = m.exp(v);
      if (e > 0) part *= image_pow(v, e);
    }
    out += part;
  }
  return out;
}

Polynomial Polynomial::specialize(const std::vector<std::optional<FieldElement>>& point) const {
  if (static_cast<int>(point.size()) != arity_) throw MismatchError("specialize point arity mismatch");
  Polynomial out = zero(field_, arity_);
  for (const auto& [m, c] : terms_) {
    FieldElement coeff = c;
    Monomial rest(arity_);
    for (int v = 0; v < arity_; ++v) {
      const int e = m.exp(v);
      if (e == 0) continue;
      if (point[static_cast<std::size_t>(v)].has_value()) {
        coeff *= point[static_cast<std::size_t>(v)]->pow(e);
      } else {
        rest.set_exp(v, e);
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != arity_) throw MismatchError("evaluation point arity mismatch");
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int v = 0; v < arity_; ++v) {
      const int e = m.exp(v);
      if (e > 0) t *= point[static_cast<std::size_t>(v)].pow(e);
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::coef_extract(const std::vector<bool>& Y, const Monomial& m_y) const {
  if (static_cast<int>(Y.size()) != arity_ || m_y.arity() != arity_)
    throw MismatchError("coef_extract arity mismatch");
  if (!m_y.supported_on(Y)) throw DomainError("coef_extract monomial not supported on Y");
  std::vector<bool> Z(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i) Z[i] = !Y[i];
  Polynomial h = zero(field_, arity_);
  for (const auto& [m, c] : terms_) {
    if (m.restricted(Y) == m_y) h.add_term(m.restricted(Z), c);
  }
  return h;
}

std::vector<Monomial> Polynomial::support_restricted(const std::vector<bool>& Y) const {
  if (static_cast<int>(Y.size()) != arity_) throw MismatchError("support arity mismatch");
  std::map<Monomial, bool, GradedLexLess> seen;
  for (const auto& [m, c] : terms_) seen.emplace(m.restricted(Y), true);
  std::vector<Monomial> out;
  out.reserve(seen.size());
  for (const auto& [m, _] : seen) out.push_back(m);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= arity_) throw DomainError("derivative variable out of range");
  Polynomial out = zero(field_, arity_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(var);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set_exp(var, e - 1);
    out.add_term(dm, c * FieldElement::from_integer(field_, e));
  }
  return out;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw MismatchError("permutation arity mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= arity_ || hit[static_cast<std::size_t>(v)])
      throw DomainError("variable permutation is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  Polynomial out = zero(field_, arity_);
  for (const auto& [m, c] : terms_) {
    Monomial pm(arity_);
    for (int v = 0; v < arity_; ++v) pm.set_exp(perm[static_cast<std::size_t>(v)], m.exp(v));
    out.add_term(pm, c);
  }
  return out;
}

Polynomial Polynomial::extended(int new_arity) const {
  if (new_arity < arity_) throw DomainError("extended arity must not shrink");
  Polynomial out = zero(field_, new_arity);
  for (const auto& [m, c] : terms_) {
    Monomial em(new_arity);
    for (int v = 0; v < arity_; ++v) em.set_exp(v, m.exp(v));
    out.terms_.emplace(em, c);
  }
  return out;
}

Polynomial Polynomial::truncated(int new_arity) const {
  if (new_arity > arity_) throw DomainError("truncated arity must not grow");
  if (new_arity < 0) throw DomainError("negative arity");
  Polynomial out = zero(field_, new_arity);
  for (const auto& [m, c] : terms_) {
    Monomial tm(new_arity);
    for (int v = 0; v < arity_; ++v) {
      if (m.exp(v) == 0) continue;
      if (v >= new_arity) throw DomainError("truncated would drop a used variable");
      tm.set_exp(v, m.exp(v));
    }
    out.terms_.emplace(tm, c);
  }
  return out;
}

const Monomial& Polynomial::leading_monomial_lex() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (Monomial::lex_less(best->first, it->first)) best = it;
  }
  return best->first;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot = Polynomial::zero(a.field(), a.arity());
  const Monomial& lead_b = b.leading_monomial_lex();
  const FieldElement lead_bc = b.coef(lead_b);
  while (!rem.is_zero()) {
    const Monomial& lead_r = rem.leading_monomial_lex();
    if (!lead_b.divides(lead_r)) throw DomainError("polynomial division is not exact");
    const Monomial q = lead_b.divide_into(lead_r);
    const FieldElement qc = rem.coef(lead_r) / lead_bc;
    Polynomial piece = Polynomial::term(a.field(), q, qc);
    quot += piece;
    rem -= piece * b;
  }
  return quot;
}

namespace {

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (int v = 0; v < m.arity(); ++v) {
    const int e = m.exp(v);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string format_coeff_magnitude(const FieldElement& c) {
  if (c.field().is_rationals()) {
    mpq_class v = c.rat();
    if (sgn(v) < 0) v = -v;
    std::ostringstream os;
    os << v;
    return os.str();
  }
  return c.str();
}

bool coeff_negative(const FieldElement& c) {
  return c.field().is_rationals() && sgn(c.rat()) < 0;
}

}  // namespace

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  // highest degree first, ties broken by lex as stored
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = coeff_negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mag = format_coeff_magnitude(c);
    const std::string mono = format_monomial(m);
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

std::string Polynomial::str() const { return format_polynomial(*this); }

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

namespace {

struct Token {
  enum class Kind { Number, Var, Plus, Minus, Star, Slash, Caret, End };
  Kind kind;
  std::size_t pos;
  mpz_class number;
  int var = 0;  // 0-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    const std::size_t pos = i_;
    if (i_ >= text_.size()) return {Token::Kind::End, pos, 0, 0};
    const char c = text_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Kind::Plus, pos, 0, 0};
      case '-': ++i_; return {Token::Kind::Minus, pos, 0, 0};
      case '*': ++i_; return {Token::Kind::Star, pos, 0, 0};
      case '/': ++i_; return {Token::Kind::Slash, pos, 0, 0};
      case '^': ++i_; return {Token::Kind::Caret, pos, 0, 0};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      Token t{Token::Kind::Number, pos, 0, 0};
      t.number = mpz_class(text_.substr(start, i_ - start));
      return t;
    }
    if (c == 'x' || c == 'X') {
      ++i_;
      const std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected variable index after 'x' at position " + std::to_string(pos));
      const long idx = std::stol(text_.substr(start, i_ - start));
      if (idx < 1) throw ParseError("variables are 1-indexed; got x" + std::to_string(idx) +
                                    " at position " + std::to_string(pos));
      Token t{Token::Kind::Var, pos, 0, 0};
      t.var = static_cast<int>(idx - 1);
      return t;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(pos));
  }

 private:
  const std::string& text_;
  std::size_t i_ = 0;
};

struct RawTerm {
  mpz_class num{1};
  mpz_class den{1};
  std::map<int, int> exps;
  bool negative = false;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldDescriptor& field,
                            std::optional<int> arity) {
  Lexer lex(text);
  Token tok = lex.next();
  std::vector<RawTerm> raw;

  auto parse_exponent = [&](std::size_t var_pos) -> int {
    tok = lex.next();
    if (tok.kind != Token::Kind::Number)
      throw ParseError("expected exponent after '^' at position " + std::to_string(var_pos));
    if (!tok.number.fits_sint_p()) throw ParseError("exponent too large");
    const int e = static_cast<int>(tok.number.get_si());
    tok = lex.next();
    return e;
  };

  bool first = true;
  while (tok.kind != Token::Kind::End) {
    RawTerm term;
    if (tok.kind == Token::Kind::Plus || tok.kind == Token::Kind::Minus) {
      term.negative = tok.kind == Token::Kind::Minus;
      tok = lex.next();
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(tok.pos));
    }
    first = false;

    bool saw_factor = false;
    if (tok.kind == Token::Kind::Number) {
      term.num = tok.number;
      saw_factor = true;
      tok = lex.next();
      if (tok.kind == Token::Kind::Slash) {
        tok = lex.next();
        if (tok.kind != Token::Kind::Number)
          throw ParseError("expected denominator at position " + std::to_string(tok.pos));
        if (!field.is_rationals())
          throw ParseError("coefficient not in field: fractions are only valid over q");
        if (sgn(tok.number) == 0) throw ParseError("zero denominator");
        term.den = tok.number;
        tok = lex.next();
      }
      if (tok.kind == Token::Kind::Star) tok = lex.next();
      else if (tok.kind == Token::Kind::Var)
        throw ParseError("expected '*' between coefficient and variable at position " +
                         std::to_string(tok.pos));
    }
    while (tok.kind == Token::Kind::Var) {
      const int v = tok.var;
      const std::size_t pos = tok.pos;
      saw_factor = true;
      tok = lex.next();
      int e = 1;
      if (tok.kind == Token::Kind::Caret) e = parse_exponent(pos);
      if (e < 0) throw ParseError("negative exponent at position " + std::to_string(pos));
      term.exps[v] += e;
      if (tok.kind == Token::Kind::Star) {
        tok = lex.next();
        if (tok.kind != Token::Kind::Var)
          throw ParseError("expected variable after '*' at position " + std::to_string(tok.pos));
      }
    }
    if (!saw_factor) throw ParseError("empty term at position " + std::to_string(tok.pos));
    raw.push_back(std::move(term));
  }

  int max_var = -1;
  for (const auto& t : raw)
    for (const auto& [v, e] : t.exps)
      if (e > 0) max_var = std::max(max_var, v);
  const int n = arity.value_or(max_var + 1);
  if (max_var >= n) {
    throw ParseError("variable x" + std::to_string(max_var + 1) + " exceeds arity " + std::to_string(n));
  }

  Polynomial f = Polynomial::zero(field, n);
  for (const auto& t : raw) {
    mpz_class num = t.negative ? mpz_class(-t.num) : t.num;
    FieldElement c = FieldElement::from_fraction(field, num, t.den);
    Monomial m(n);
    for (const auto& [v, e] : t.exps) {
      if (e > 0) m.set_exp(v, e);
    }
    f.add_term(m, c);
  }
  return f;
}

}  // namespace roabp
