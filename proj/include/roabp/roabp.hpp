#ifndef ROABP_ROABP_HPP
#define ROABP_ROABP_HPP

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "roabp/linalg.hpp"
#include "roabp/order.hpp"
#include "roabp/polynomial.hpp"

namespace roabp {

using PolyMatrix = DenseMatrix<Polynomial>;

/// Read-once oblivious ABP in matrix-product form: n layers L_1 .. L_n with
/// shapes chaining 1 x w_1, w_1 x w_2, ..., w_{n-1} x 1, where every entry of
/// L_i is a univariate polynomial in the i-th variable of the order. The
/// computed polynomial is the 1x1 symbolic product. Immutable after
/// construction.
class Roabp {
 public:
  Roabp(FieldDescriptor field, VariableOrder order, std::vector<PolyMatrix> layers);

  const FieldDescriptor& field() const { return field_; }
  int arity() const { return order_.arity(); }
  const VariableOrder& order() const { return order_; }
  const std::vector<PolyMatrix>& layers() const { return layers_; }

  /// w_i = column count of L_i, for i in [n] (w_n = 1).
  std::vector<int> layer_widths() const;
  /// max_i w_i.
  int width() const;
  /// sum_i w_i.
  std::int64_t size() const;

  /// The 1x1 numeric product L_1(a) ... L_n(a).
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  /// The computed polynomial, by symbolic matrix product.
  Polynomial expand() const;

  nlohmann::json to_json() const;
  static Roabp from_json(const nlohmann::json& j);

 private:
  FieldDescriptor field_;
  VariableOrder order_;
  std::vector<PolyMatrix> layers_;
};

/// Minimal-width roABP for f in the given order: layer widths equal the
/// Nisan rank profile exactly, and expand() returns f exactly. Maintains a
/// greedy graded-lex basis of the row-polynomial span at each prefix cut and
/// solves the transition coordinates exactly (one elimination per layer).
/// Rejects the zero polynomial.
Roabp synthesize(const Polynomial& f, const VariableOrder& order);

}  // namespace roabp

#endif  // ROABP_ROABP_HPP
