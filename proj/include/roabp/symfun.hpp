#ifndef ROABP_SYMFUN_HPP
#define ROABP_SYMFUN_HPP

#include <cstdint>
#include <vector>

#include "roabp/polynomial.hpp"
#include "roabp/roabp.hpp"

namespace roabp {

/// Elementary symmetric polynomial ESym_n^d on x_1..x_n (0 for d > n, 1 for d = 0).
Polynomial esym(const FieldDescriptor& field, int n, int d);

/// ESym of degree d on a subset of the variables of an ambient arity.
Polynomial esym_on(const FieldDescriptor& field, int arity, const std::vector<int>& vars, int d);

/// Both sides of ESym_n^d(Y, Z) = sum_i ESym^i(Y) * ESym^{d-i}(Z) for the
/// split Y = {x_1..x_m}, Z = {x_{m+1}..x_n}, expanded exactly.
struct PartitionCheck {
  Polynomial lhs;
  Polynomial rhs;
  bool equal = false;
};
PartitionCheck esym_partition_check(const FieldDescriptor& field, int n, int d, int m);

/// Exact check of prod_i (1 + x_i t) = sum_d ESym_n^d t^d with t adjoined as
/// variable x_{n+1}.
bool generating_function_check(const FieldDescriptor& field, int n);

/// Width-min(d+1, n-d+1) roABP for ESym_n^d in any order, entries using only
/// coefficients 0 and 1: layer i routes state j (variables taken so far) to j
/// with label 1 and to j+1 with label x, keeping only states that can still
/// reach exactly d.
Roabp esym_roabp(const FieldDescriptor& field, int n, int d, const VariableOrder& order);

/// Interpolation through the n-th roots of unity: beta_j = w^{-jd} / n makes
/// sum_j beta_j prod_i (1 + w^j x_i) pick out the degree-d slice of the
/// generating function mod n. The sum always equals the degree-(d mod n)
/// fold sum_{t <= n, t = d (mod n)} ESym_n^t (verified by exact expansion,
/// throws on violation); it equals ESym_n^d itself iff 1 <= d <= n-1.
struct BenOrResult {
  std::vector<FieldElement> beta;
  Polynomial sum;            // the expanded beta-combination
  Polynomial esym_target;    // ESym_n^d
  Polynomial folded_target;  // fold of all degrees = d (mod n)
  bool matches_esym = false;
};
BenOrResult ben_or_identity(const FieldDescriptor& field, int n, int d);

/// f(e_1, ..., e_n): substitutes the d-th elementary symmetric polynomial for
/// the d-th input coordinate. Result is symmetric.
Polynomial symmetrize(const Polynomial& f);

/// True iff f is invariant under all adjacent transpositions (they generate
/// the full symmetric group). On failure *violating_swap is the 0-based
/// position j of the offending swap (x_{j+1} <-> x_{j+2}).
bool is_symmetric(const Polynomial& f, int* violating_swap = nullptr);

/// The unique f with symmetrize(f) = g, by repeated subtraction of the
/// lex-leading term's elementary-symmetric product. Throws NotSymmetricError
/// (naming a violating transposition) for non-symmetric input.
struct SymDecomposition {
  Polynomial f;
  int n = 0;
};
SymDecomposition decompose_symmetric(const Polynomial& g);

/// The circulant polynomial: f(y_1..y_n) = prod_{j=0}^{k-1} (1 + sum_i y_i w^{ji})
/// for a primitive k-th root of unity w. The expansion does not depend on
/// which primitive root is used (cross-checked with a second root for k <= 7).
Polynomial circulant_poly(const FieldDescriptor& field, int n, int k);

/// Exhaustive nonsingularity scan of all square submatrices of the k x k DFT
/// matrix (w^{ji}). Zero minors are reported, not asserted (they cannot occur
/// in characteristic zero, but can over F_p). Counts include the empty minor,
/// so total = C(2k, k).
struct DftMinorReport {
  int k = 0;
  FieldElement omega;
  std::uint64_t total = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> zero_minors;  // 0-based row/col sets
  bool all_nonsingular = false;
};
DftMinorReport dft_minor_check(const FieldDescriptor& field, int k);

}  // namespace roabp

#endif  // ROABP_SYMFUN_HPP
