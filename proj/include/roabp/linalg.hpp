#ifndef ROABP_LINALG_HPP
#define ROABP_LINALG_HPP

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "roabp/field.hpp"

namespace roabp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using FieldMatrix = DenseMatrix<FieldElement>;
using IntMatrix = DenseMatrix<mpz_class>;

/// Rank by ordinary Gaussian elimination with exact field divisions.
/// Pivots are the first nonzero entry per column in row-major scan order;
/// the result is pivot-order independent. Works over any exact field scalar.
template <typename Scalar>
int eliminate_rank_field(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!is_zero_elem(m(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Scalar inv_p = exact_div(one_like(m(row, col)), m(row, col));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (is_zero_elem(m(r, col))) continue;
      const Scalar factor = m(r, col) * inv_p;
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Rank by one-step fraction-free (Bareiss) elimination. Needs only exact
/// divisions in the coefficient domain, so it runs over Z without ever
/// leaving it; entry growth stays polynomial instead of exponential.
template <typename Scalar>
int eliminate_rank_fraction_free(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  Scalar prev = rows > 0 && cols > 0 ? one_like(m(0, 0)) : Scalar();
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!is_zero_elem(m(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        m(r, c) = exact_div(m(row, col) * m(r, c) - m(r, col) * m(row, c), prev);
      }
      m(r, col) = zero_like(m(r, col));
    }
    prev = m(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

/// Determinant by fraction-free elimination over any integral domain with
/// exact division (fields, Z, multivariate polynomial rings). The matrix must
/// be square; the determinant of the empty matrix is one.
template <typename Scalar>
Scalar fraction_free_determinant(DenseMatrix<Scalar> m, const Scalar& one_elem) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return one_elem;
  Scalar prev = one_like(m(0, 0));
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!is_zero_elem(m(r, k))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return zero_like(m(0, 0));
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      for (Eigen::Index c = k + 1; c < n; ++c) {
        m(r, c) = exact_div(m(k, k) * m(r, c) - m(r, k) * m(k, c), prev);
      }
      m(r, k) = zero_like(m(r, k));
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (sign < 0) det = zero_like(det) - det;
  return det;
}

/// Plain product with explicit loops; safe for any exact scalar.
template <typename Scalar>
DenseMatrix<Scalar> exact_matmul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b,
                                 const Scalar& zero_elem) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in product");
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Constant(a.rows(), b.cols(), zero_elem);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero_elem(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (is_zero_elem(b(k, j))) continue;
        out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
  return out;
}

/// Exact rank of a FieldElement matrix. Over the rationals each row is first
/// scaled to integers (denominator LCM) and the rank is computed fraction-free
/// over Z; over prime fields plain elimination is used.
int exact_rank(const FieldMatrix& m);

/// Exact determinant of a FieldElement matrix (fraction-free, field division).
FieldElement exact_determinant(const FieldMatrix& m, const FieldDescriptor& field);

/// Solves A X = B exactly in one elimination of the augmented matrix
/// (one factorization, many right-hand sides). A must have full column rank
/// and the system must be consistent; throws DomainError otherwise.
FieldMatrix solve_exact(const FieldMatrix& a, const FieldMatrix& b, const FieldDescriptor& field);

/// Runs fn(i) for i in [0, count) on a small worker pool; results must be
/// written to disjoint slots so the merge order is deterministic.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                        unsigned threads = 0);

}  // namespace roabp

#endif  // ROABP_LINALG_HPP
