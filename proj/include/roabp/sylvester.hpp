#ifndef ROABP_SYLVESTER_HPP
#define ROABP_SYLVESTER_HPP

#include "roabp/roabp.hpp"

namespace roabp {

/// Banded (d1+d2) x (d1+d2) coefficient matrix of two polynomials viewed in
/// F[x][y]: the first d2 columns carry f's y-coefficients f_{d1}..f_0 shifted
/// down, the last d1 columns carry g's. Degrees are taken from the actual
/// y-degrees, never caller-declared.
struct SylvesterMatrix {
  PolyMatrix entries;
  int d1 = 0;
  int d2 = 0;
  int y = 0;
};

SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, int y);

/// Determinant of the Sylvester matrix, computed fraction-free over the
/// multivariate polynomial ring (every division in the elimination is exact).
Polynomial resultant(const Polynomial& f, const Polynomial& g, int y);

/// Disc_y(f) := Res_y(f, d f / d y), with no leading-coefficient
/// normalization. A vanishing y-derivative (a characteristic-p degeneracy) is
/// reported as an explicit error.
Polynomial discriminant(const Polynomial& f, int y);

/// The hardness pair of the discriminant family: f = y^d - g*y on one more
/// variable (y is the new last variable), together with the closed form
/// -(d-1)^{d-1} g^d the discriminant must equal.
struct DiscInstance {
  Polynomial f;
  Polynomial expected_disc;
  int y = 0;
};
DiscInstance disc_hardness_instance(const Polynomial& g, int d);

}  // namespace roabp

#endif  // ROABP_SYLVESTER_HPP
