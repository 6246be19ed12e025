#include "roabp/sylvester.hpp"

namespace roabp {

SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, int y) {
  if (f.field() != g.field() || f.arity() != g.arity())
    throw MismatchError("sylvester_matrix operands disagree on field/arity");
  if (y < 0 || y >= f.arity()) throw DomainError("y variable out of range");
  if (f.is_zero() || g.is_zero()) throw DomainError("sylvester_matrix of the zero polynomial");
  const int d1 = f.degree_in(y);
  const int d2 = g.degree_in(y);
  if (d1 == 0 || d2 == 0) throw DomainError("sylvester_matrix needs positive y-degree");

  const FieldDescriptor& field = f.field();
  const int arity = f.arity();
  std::vector<bool> only_y(static_cast<std::size_t>(arity), false);
  only_y[static_cast<std::size_t>(y)] = true;
  auto ycoef = [&](const Polynomial& p, int i) {
    return p.coef_extract(only_y, Monomial::unit(arity, y, i));
  };

  SylvesterMatrix s;
  s.d1 = d1;
  s.d2 = d2;
  s.y = y;
  const int dim = d1 + d2;
  s.entries = PolyMatrix::Constant(dim, dim, Polynomial::zero(field, arity));
  for (int c = 0; c < d2; ++c) {
    for (int i = 0; i <= d1; ++i) s.entries(c + i, c) = ycoef(f, d1 - i);
  }
  for (int c = 0; c < d1; ++c) {
    for (int i = 0; i <= d2; ++i) s.entries(c + i, d2 + c) = ycoef(g, d2 - i);
  }
  return s;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, int y) {
  const SylvesterMatrix s = sylvester_matrix(f, g, y);
  return fraction_free_determinant<Polynomial>(s.entries, Polynomial::one(f.field(), f.arity()));
}

Polynomial discriminant(const Polynomial& f, int y) {
  const Polynomial df = f.derivative(y);
  if (df.is_zero()) {
    throw DomainError("discriminant degenerates: the y-derivative vanishes over " +
                      f.field().str());
  }
  return resultant(f, df, y);
}

DiscInstance disc_hardness_instance(const Polynomial& g, int d) {
  if (d < 2) throw DomainError("disc_hardness_instance needs d >= 2");
  if (g.is_zero()) throw DomainError("disc_hardness_instance needs g nonzero");
  const FieldDescriptor& field = g.field();
  const int arity = g.arity() + 1;
  const int y = g.arity();
  const Polynomial ge = g.extended(arity);
  const Polynomial yv = Polynomial::variable(field, arity, y);

  DiscInstance out;
  out.y = y;
  out.f = yv.pow(d) - ge * yv;
  FieldElement c = FieldElement::from_integer(field, d - 1).pow(d - 1);
  out.expected_disc = ge.pow(d).scaled(-c);
  return out;
}

}  // namespace roabp
