#include <doctest.h>

#include "oracles.hpp"
#include "roabp/polynomial.hpp"

using namespace roabp;

namespace {
const FieldDescriptor kQ = FieldDescriptor::rationals();

Polynomial P(const std::string& text, const FieldDescriptor& field = kQ,
             std::optional<int> arity = std::nullopt) {
  return parse_polynomial(text, field, arity);
}
}  // namespace

TEST_CASE("parsing and canonical formatting") {
  const auto f = P("3*x1^2*x2 - 1/2");
  CHECK(f.sparsity() == 2);
  CHECK(f.str() == "3*x1^2*x2 - 1/2");
  CHECK(P("x1 + x1").str() == "2*x1");
  CHECK(P("x1*x1").str() == "x1^2");
  CHECK(P("2*x1 - 2*x1").is_zero());
  CHECK(P("0").is_zero());
  CHECK(P("0").str() == "0");
  CHECK_THROWS_AS(P("x0"), ParseError);          // 1-indexed variables
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("3 x1"), ParseError);        // '*' required
  CHECK_THROWS_AS(P("y1"), ParseError);
  CHECK_THROWS_AS(P("1/2", FieldDescriptor::prime_field(7)), ParseError);  // not in field
  CHECK(P("5", FieldDescriptor::prime_field(7)).constant_term().residue() == 5);
  CHECK(P("-12", FieldDescriptor::prime_field(7)).constant_term().residue() == 2);
}

TEST_CASE("parse of format is the identity") {
  SplitMix64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto f = testing::random_polynomial(kQ, 4, 5, 12, rng);
    CHECK(parse_polynomial(f.str(), kQ, 4) == f);
  }
  const auto f7 = FieldDescriptor::prime_field(7);
  for (int t = 0; t < 30; ++t) {
    const auto f = testing::random_polynomial(f7, 3, 4, 8, rng);
    CHECK(parse_polynomial(f.str(), f7, 3) == f);
  }
}

TEST_CASE("arithmetic matches hand expansions") {
  CHECK(P("x1 + 1") * P("x1 - 1") == P("x1^2 - 1"));
  CHECK(P("x1*x2 + x3*x4").pow(0) == Polynomial::one(kQ, 4));
  CHECK(P("x1*x2 + x3*x4").pow(2) == P("x1^2*x2^2 + 2*x1*x2*x3*x4 + x3^2*x4^2"));
  CHECK_THROWS_AS(P("x1") + P("x1", FieldDescriptor::prime_field(5), 1), MismatchError);
  CHECK_THROWS_AS(P("x1", kQ, 1) + P("x1", kQ, 2), MismatchError);
}

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(23);
  for (int t = 0; t < 25; ++t) {
    const auto f = testing::random_polynomial(kQ, 3, 3, 6, rng);
    const auto g = testing::random_polynomial(kQ, 3, 3, 6, rng);
    const auto h = testing::random_polynomial(kQ, 3, 3, 6, rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK(f.sparsity() * g.sparsity() >= (f * g).sparsity());
  }
}

TEST_CASE("substitution") {
  // y1^2 with y1 -> x1 + x2
  const auto f = P("x1^2", kQ, 1);
  std::map<int, Polynomial> images{{0, P("x1 + x2", kQ, 2)}};
  CHECK(f.substitute(images) == P("x1^2 + 2*x1*x2 + x2^2"));

  const auto g = P("x1*x2", kQ, 2);
  std::map<int, Polynomial> to_zero{{0, Polynomial::zero(kQ, 2)}, {1, Polynomial::zero(kQ, 2)}};
  CHECK(g.substitute(to_zero).is_zero());

  // f(y1,y2) = y2 + y1 with y1 -> x1+x2, y2 -> x1*x2
  const auto h = P("x2 + x1", kQ, 2);
  std::map<int, Polynomial> sym{{0, P("x1 + x2", kQ, 2)}, {1, P("x1*x2", kQ, 2)}};
  CHECK(h.substitute(sym) == P("x1*x2 + x1 + x2"));

  // unmapped variables map to themselves
  const auto k = P("x1*x2", kQ, 2);
  std::map<int, Polynomial> only_first{{0, P("x2^2", kQ, 2)}};
  CHECK(k.substitute(only_first) == P("x2^3", kQ, 2));
}

TEST_CASE("coefficient extraction") {
  const auto f = P("x1*x2 + x1 + 1", kQ, 2);
  const std::vector<bool> y{true, false};
  CHECK(f.coef_extract(y, Monomial::unit(2, 0)) == P("x2 + 1", kQ, 2));
  CHECK(f.coef_extract(y, Monomial::unit(2, 0, 2)).is_zero());
  const auto g = P("1 + x1*x2", kQ, 2).pow(2);
  CHECK(g.coef_extract(y, Monomial::unit(2, 0)) == P("2*x2", kQ, 2));
  CHECK_THROWS_AS(f.coef_extract(y, Monomial::unit(2, 1)), DomainError);  // m not on Y
}

TEST_CASE("extraction reconstructs the polynomial") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto f = testing::random_polynomial(kQ, 4, 4, 10, rng);
    std::vector<bool> y(4);
    for (int v = 0; v < 4; ++v) y[static_cast<std::size_t>(v)] = rng.below(2) == 1;
    Polynomial back = Polynomial::zero(kQ, 4);
    for (const Monomial& m : f.support_restricted(y)) {
      back += Polynomial::term(kQ, m, FieldElement::one(kQ)) * f.coef_extract(y, m);
    }
    CHECK(back == f);
  }
}

TEST_CASE("specialize, evaluate, derivative, permute") {
  const auto f = P("x1^2*x2 + 3*x2", kQ, 2);
  std::vector<std::optional<FieldElement>> point(2);
  point[0] = FieldElement::from_integer(kQ, 2);
  CHECK(f.specialize(point) == P("7*x2", kQ, 2));
  CHECK(f.evaluate({FieldElement::from_integer(kQ, 2), FieldElement::from_integer(kQ, 5)}) ==
        FieldElement::from_integer(kQ, 35));
  CHECK(f.derivative(0) == P("2*x1*x2", kQ, 2));
  CHECK(f.derivative(1) == P("x1^2 + 3", kQ, 2));
  CHECK(f.permute_variables({1, 0}) == P("x2^2*x1 + 3*x1", kQ, 2));

  // derivative can vanish in characteristic p
  const auto f2 = FieldDescriptor::prime_field(2);
  CHECK(P("x1^2", f2, 1).derivative(0).is_zero());
}

TEST_CASE("exact polynomial division") {
  const auto a = P("x1^2 - x2^2", kQ, 2);
  const auto b = P("x1 - x2", kQ, 2);
  CHECK(exact_div(a, b) == P("x1 + x2", kQ, 2));
  CHECK_THROWS_AS(exact_div(P("x1^2 + 1", kQ, 2), b), DomainError);
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto f = testing::random_polynomial(kQ, 3, 3, 5, rng);
    const auto g = testing::random_polynomial(kQ, 3, 3, 5, rng);
    if (g.is_zero()) continue;
    CHECK(exact_div(f * g, g) == f);
  }
}

TEST_CASE("graded-lex output order") {
  CHECK(P("x2 + x1^2 + 1 + x1*x2").str() == "x1^2 + x1*x2 + x2 + 1");
}
