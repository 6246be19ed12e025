#include <doctest.h>

#include "oracles.hpp"
#include "roabp/field.hpp"

using namespace roabp;

TEST_CASE("field spec parsing") {
  CHECK(FieldDescriptor::parse("q").is_rationals());
  CHECK(FieldDescriptor::parse("fp:7").modulus() == 7);
  CHECK(FieldDescriptor::parse("fp:7").characteristic() == 7);
  CHECK(FieldDescriptor::parse("q").characteristic() == 0);
  CHECK_THROWS_AS(FieldDescriptor::parse("fp:4"), DomainError);   // 4 is not prime
  CHECK_THROWS_AS(FieldDescriptor::parse("fp:1"), DomainError);
  CHECK_THROWS_AS(FieldDescriptor::parse("fp:"), ParseError);
  CHECK_THROWS_AS(FieldDescriptor::parse("gf:7"), ParseError);
  CHECK_THROWS_AS(FieldDescriptor::parse("fp:seven"), ParseError);
  CHECK(FieldDescriptor::parse("fp:2").str() == "fp:2");
}

TEST_CASE("rational arithmetic is exact and reduced") {
  const auto q = FieldDescriptor::rationals();
  const auto half = FieldElement::from_fraction(q, 1, 2);
  const auto third = FieldElement::from_fraction(q, 1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(FieldElement::from_fraction(q, 2, -4).str() == "-1/2");  // canonical sign
  CHECK(half.inverse().str() == "2");
  CHECK(half.pow(-2).str() == "4");
  CHECK_THROWS_AS(half / FieldElement::zero(q), DomainError);
}

TEST_CASE("prime field arithmetic uses canonical residues") {
  const auto f7 = FieldDescriptor::prime_field(7);
  const auto a = FieldElement::from_integer(f7, -1);
  CHECK(a.residue() == 6);
  CHECK((a * a).residue() == 1);
  const auto b = FieldElement::from_residue(f7, 3);
  CHECK(b.inverse().residue() == 5);  // 3*5 = 15 = 1 mod 7
  CHECK(b.pow(6).is_one());
  CHECK((a + b).residue() == 2);
  CHECK_THROWS_AS(a + FieldElement::one(FieldDescriptor::rationals()), MismatchError);
}

TEST_CASE("field axioms on random samples") {
  for (const auto& field : {FieldDescriptor::rationals(), FieldDescriptor::prime_field(101)}) {
    SplitMix64 rng(7);
    auto draw = [&]() {
      if (field.is_rationals())
        return FieldElement::from_fraction(field, static_cast<long>(rng.below(41)) - 20,
                                           1 + static_cast<long>(rng.below(9)));
      return FieldElement::from_residue(field, rng.below(101));
    };
    for (int t = 0; t < 200; ++t) {
      const auto a = draw(), b = draw(), c = draw();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("primitive roots of unity") {
  const auto q = FieldDescriptor::rationals();
  CHECK(primitive_root_of_unity(q, 1).is_one());
  CHECK(primitive_root_of_unity(q, 2) == FieldElement::from_integer(q, -1));
  CHECK_THROWS_AS(primitive_root_of_unity(q, 3), NoRootError);

  const auto f7 = FieldDescriptor::prime_field(7);
  const auto w = primitive_root_of_unity(f7, 3);
  CHECK(w.residue() == 2);
  CHECK(testing::multiplicative_order(w.residue(), 7) == 3);

  const auto f11 = FieldDescriptor::prime_field(11);
  const auto w5 = primitive_root_of_unity(f11, 5);
  CHECK(w5.residue() == 3);
  // orbit 3, 9, 5, 4, 1
  CHECK(w5.pow(2).residue() == 9);
  CHECK(w5.pow(3).residue() == 5);
  CHECK(w5.pow(4).residue() == 4);
  CHECK(w5.pow(5).residue() == 1);
  CHECK(testing::multiplicative_order(3, 11) == 5);

  CHECK_THROWS_AS(primitive_root_of_unity(f7, 4), NoRootError);  // 4 does not divide 6
}

TEST_CASE("powers of a primitive root are pairwise distinct") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 3}, {7, 6}, {11, 5}, {13, 4}, {31, 15}}) {
    const auto field = FieldDescriptor::prime_field(p);
    const auto w = primitive_root_of_unity(field, k);
    std::vector<FieldElement> seen;
    for (std::uint64_t j = 0; j < k; ++j) {
      const auto x = w.pow(static_cast<std::int64_t>(j));
      for (const auto& y : seen) CHECK(x != y);
      seen.push_back(x);
    }
    CHECK(testing::multiplicative_order(w.residue(), p) == k);
  }
}

TEST_CASE("64-bit primality check") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));        // Carmichael
  CHECK(is_prime_u64(1000000007));
  CHECK(!is_prime_u64(1000000007ull * 3));
}
