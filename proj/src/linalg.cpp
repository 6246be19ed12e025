#include "roabp/linalg.hpp"

#include <thread>

namespace roabp {

namespace {

// Scale each row to integer entries (multiply by the LCM of denominators);
// row scaling by nonzero constants preserves rank.
IntMatrix integerize_rows(const FieldMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    mpz_class lcm_den(1);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c).rat();
      mpz_class den = v.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c).rat();
      out(r, c) = v.get_num() * (lcm_den / v.get_den());
    }
  }
  return out;
}

}  // namespace

int exact_rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const FieldDescriptor field = m(0, 0).field();
  if (field.is_rationals()) {
    return eliminate_rank_fraction_free(integerize_rows(m));
  }
  return eliminate_rank_field<FieldElement>(m);
}

FieldElement exact_determinant(const FieldMatrix& m, const FieldDescriptor& field) {
  return fraction_free_determinant<FieldElement>(m, FieldElement::one(field));
}

FieldMatrix solve_exact(const FieldMatrix& a, const FieldMatrix& b, const FieldDescriptor& field) {
  if (a.rows() != b.rows()) throw DomainError("solve_exact shape mismatch");
  const Eigen::Index rows = a.rows(), cols = a.cols(), rhs = b.cols();
  FieldMatrix aug = FieldMatrix::Constant(rows, cols + rhs, FieldElement::zero(field));
  aug.block(0, 0, rows, cols) = a;
  aug.block(0, cols, rows, rhs) = b;

  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!aug(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) aug.row(piv).swap(aug.row(row));
    const FieldElement inv_p = aug(row, col).inverse();
    for (Eigen::Index c = col; c < cols + rhs; ++c) aug(row, c) *= inv_p;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || aug(r, col).is_zero()) continue;
      const FieldElement factor = aug(r, col);
      for (Eigen::Index c = col; c < cols + rhs; ++c)
        aug(r, c) -= factor * aug(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(pivot_cols.size()) != cols)
    throw DomainError("solve_exact: coefficient matrix is rank deficient");
  for (Eigen::Index r = row; r < rows; ++r) {
    for (Eigen::Index c = cols; c < cols + rhs; ++c) {
      if (!aug(r, c).is_zero()) throw DomainError("solve_exact: inconsistent system");
    }
  }
  FieldMatrix x = FieldMatrix::Constant(cols, rhs, FieldElement::zero(field));
  for (Eigen::Index i = 0; i < cols; ++i) x.row(i) = aug.block(i, cols, 1, rhs);
  return x;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                        unsigned threads) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace roabp
