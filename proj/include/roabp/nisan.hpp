#ifndef ROABP_NISAN_HPP
#define ROABP_NISAN_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "roabp/linalg.hpp"
#include "roabp/order.hpp"
#include "roabp/polynomial.hpp"

namespace roabp {

/// Coefficient matrix of f for a variable bipartition (Y, Z): entry at
/// (m_Y, m_Z) is coef_{m_Y * m_Z}(f). Rows and columns are restricted to the
/// monomials actually occurring in f; dropped all-zero rows/columns do not
/// affect the rank. Immutable after construction.
struct NisanMatrix {
  FieldDescriptor field;
  std::vector<bool> y_mask;
  std::vector<Monomial> rows;  // graded-lex ascending
  std::vector<Monomial> cols;  // graded-lex ascending
  std::map<std::pair<int, int>, FieldElement> entries;

  std::size_t nnz() const { return entries.size(); }
  FieldMatrix dense() const;
  NisanMatrix transposed() const;
};

NisanMatrix nisan_matrix(const Polynomial& f, const std::vector<bool>& Y);

/// Exact rank over the coefficient field: fraction-free elimination over Z
/// for rationals, plain elimination for prime fields.
int rank(const NisanMatrix& m);

/// rank(nisan_matrix(f, Y)) without keeping the matrix around.
int nisan_rank(const Polynomial& f, const std::vector<bool>& Y);

/// Rank profile of all n prefix cuts of an order, with the width (max) and
/// size (sum) of the minimal roABP in that order. Zero polynomial: all ranks
/// zero, width 0, size 0 by convention.
struct CutProfile {
  VariableOrder order;
  std::vector<int> ranks;
  int width = 0;
  std::int64_t size = 0;
};

CutProfile width_profile(const Polynomial& f, const VariableOrder& order);

/// How to scan the order space.
struct OrderScan {
  enum class Mode { All, Random };
  Mode mode = Mode::All;
  int sample_count = 0;
  std::uint64_t seed = 0;
  int exhaustive_cap = 8;

  static OrderScan all(int cap = 8);
  static OrderScan random(int count, std::uint64_t seed);
  /// "all" or "random:<N>".
  static OrderScan parse(const std::string& text, std::uint64_t seed, int cap = 8);
};

/// Profiles for every scanned order (deterministic enumeration order,
/// computed on a worker pool).
std::vector<CutProfile> scan_orders(const Polynomial& f, const OrderScan& scan);

struct MinWidthResult {
  VariableOrder order;
  int width = 0;
  bool exhaustive = false;  // true when every order was examined
};

/// Order achieving the minimum width among those examined (first hit wins,
/// so the result is deterministic given the seed).
MinWidthResult min_width_over_orders(const Polynomial& f, const OrderScan& scan);

/// Rank of the matrix whose rows are coefficient vectors (over the
/// Y-monomials of f) of f(Y, a) for `samples` seeded random assignments to
/// the complement of Y. Always a lower bound on rank(nisan_matrix(f, Y)).
int eval_dim_lower_bound(const Polynomial& f, const std::vector<bool>& Y, int samples,
                         std::uint64_t seed);

}  // namespace roabp

#endif  // ROABP_NISAN_HPP
