#include "roabp/roabp.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace roabp {

Roabp::Roabp(FieldDescriptor field, VariableOrder order, std::vector<PolyMatrix> layers)
    : field_(field), order_(std::move(order)), layers_(std::move(layers)) {
  const int n = order_.arity();
  if (n == 0) throw DomainError("roABP needs at least one variable");
  if (static_cast<int>(layers_.size()) != n)
    throw DomainError("roABP needs one layer per variable");
  Eigen::Index prev = 1;
  for (int i = 0; i < n; ++i) {
    const PolyMatrix& layer = layers_[static_cast<std::size_t>(i)];
    if (layer.rows() != prev) throw DomainError("roABP layer shapes do not chain");
    std::vector<bool> only_var(static_cast<std::size_t>(n), false);
    only_var[static_cast<std::size_t>(order_.var_at(i))] = true;
    for (Eigen::Index r = 0; r < layer.rows(); ++r) {
      for (Eigen::Index c = 0; c < layer.cols(); ++c) {
        const Polynomial& e = layer(r, c);
        if (e.field() != field_ || e.arity() != n)
          throw MismatchError("roABP layer entry field/arity mismatch");
        for (const auto& [m, coef] : e.terms()) {
          if (!m.supported_on(only_var))
            throw DomainError("layer " + std::to_string(i + 1) + " entry involves a variable other than x" +
                              std::to_string(order_.var_at(i) + 1));
        }
      }
    }
    prev = layer.cols();
  }
  if (prev != 1) throw DomainError("last roABP layer must have one column");
}

std::vector<int> Roabp::layer_widths() const {
  std::vector<int> w;
  w.reserve(layers_.size());
  for (const auto& layer : layers_) w.push_back(static_cast<int>(layer.cols()));
  return w;
}

int Roabp::width() const {
  int w = 0;
  for (const auto& layer : layers_) w = std::max(w, static_cast<int>(layer.cols()));
  return w;
}

std::int64_t Roabp::size() const {
  std::int64_t s = 0;
  for (const auto& layer : layers_) s += layer.cols();
  return s;
}

FieldElement Roabp::evaluate(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != arity()) throw MismatchError("evaluation point arity mismatch");
  for (const auto& x : point) {
    if (x.field() != field_) throw MismatchError("evaluation point field mismatch");
  }
  FieldMatrix acc = FieldMatrix::Constant(1, 1, FieldElement::one(field_));
  for (const auto& layer : layers_) {
    FieldMatrix num = FieldMatrix::Constant(layer.rows(), layer.cols(), FieldElement::zero(field_));
    for (Eigen::Index r = 0; r < layer.rows(); ++r)
      for (Eigen::Index c = 0; c < layer.cols(); ++c) num(r, c) = layer(r, c).evaluate(point);
    acc = exact_matmul<FieldElement>(acc, num, FieldElement::zero(field_));
  }
  return acc(0, 0);
}

Polynomial Roabp::expand() const {
  const Polynomial zero = Polynomial::zero(field_, arity());
  PolyMatrix acc = PolyMatrix::Constant(1, 1, Polynomial::one(field_, arity()));
  for (const auto& layer : layers_) acc = exact_matmul<Polynomial>(acc, layer, zero);
  return acc(0, 0);
}

nlohmann::json Roabp::to_json() const {
  nlohmann::json j;
  j["field"] = field_.str();
  j["order"] = order_.one_based();
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const PolyMatrix& layer = layers_[i];
    const int var = order_.var_at(static_cast<int>(i));
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < layer.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < layer.cols(); ++c) {
        nlohmann::json entry = nlohmann::json::array();
        for (const auto& [m, coef] : layer(r, c).terms()) {
          entry.push_back({coef.str(), m.exp(var)});
        }
        row.push_back(entry);
      }
      rows.push_back(row);
    }
    layers.push_back(rows);
  }
  j["layers"] = layers;
  return j;
}

Roabp Roabp::from_json(const nlohmann::json& j) {
  const FieldDescriptor field = FieldDescriptor::parse(j.at("field").get<std::string>());
  std::vector<int> perm;
  for (const auto& v : j.at("order")) perm.push_back(v.get<int>() - 1);
  VariableOrder order(perm);
  const int n = order.arity();
  std::vector<PolyMatrix> layers;
  const auto& jlayers = j.at("layers");
  for (std::size_t i = 0; i < jlayers.size(); ++i) {
    const auto& rows = jlayers[i];
    const Eigen::Index nr = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index nc = nr > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    PolyMatrix layer = PolyMatrix::Constant(nr, nc, Polynomial::zero(field, n));
    const int var = order.var_at(static_cast<int>(i));
    for (Eigen::Index r = 0; r < nr; ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != nc)
        throw ParseError("ragged roABP layer in JSON");
      for (Eigen::Index c = 0; c < nc; ++c) {
        Polynomial e = Polynomial::zero(field, n);
        for (const auto& pair : rows[r][c]) {
          const std::string coeff_text = pair.at(0).get<std::string>();
          const int exp = pair.at(1).get<int>();
          const Polynomial cpoly = parse_polynomial(coeff_text, field, n);
          if (!cpoly.is_constant()) throw ParseError("roABP coefficient is not a constant");
          e.add_term(Monomial::unit(n, var, exp), cpoly.constant_term());
        }
        layer(r, c) = e;
      }
    }
    layers.push_back(std::move(layer));
  }
  return Roabp(field, order, std::move(layers));
}

namespace {

// Dense coefficient vector of h over the index of Z-monomials.
std::vector<FieldElement> coeff_vector(const Polynomial& h,
                                       const std::map<Monomial, int, GradedLexLess>& col_of,
                                       const FieldDescriptor& field) {
  std::vector<FieldElement> v(col_of.size(), FieldElement::zero(field));
  for (const auto& [m, c] : h.terms()) {
    const auto it = col_of.find(m);
    if (it == col_of.end()) throw DomainError("internal: monomial outside cut support");
    v[static_cast<std::size_t>(it->second)] = c;
  }
  return v;
}

// Incremental exact row echelon used for the greedy independence test.
class EchelonSketch {
 public:
  explicit EchelonSketch(const FieldDescriptor& field) : field_(field) {}

  // Returns true (and absorbs the vector) iff v is independent of the rows seen so far.
  bool try_insert(std::vector<FieldElement> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (!v[p].is_zero()) {
        const FieldElement factor = v[p];
        for (std::size_t c = p; c < v.size(); ++c) v[c] -= factor * rows_[i][c];
      }
    }
    std::size_t pivot = v.size();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot == v.size()) return false;
    const FieldElement inv = v[pivot].inverse();
    for (std::size_t c = pivot; c < v.size(); ++c) v[c] *= inv;
    // keep rows sorted by pivot so reduction stays one pass
    std::size_t at = rows_.size();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      if (pivots_[i] > pivot) {
        at = i;
        break;
      }
    }
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
  }

 private:
  FieldDescriptor field_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Roabp synthesize(const Polynomial& f, const VariableOrder& order) {
  if (f.is_zero()) throw DomainError("cannot synthesize an roABP for the zero polynomial");
  if (order.arity() != f.arity()) throw MismatchError("order arity mismatch");
  const int n = f.arity();
  if (n == 0) throw DomainError("roABP needs at least one variable");
  const FieldDescriptor& field = f.field();

  std::vector<PolyMatrix> layers;
  layers.reserve(static_cast<std::size_t>(n));
  std::vector<Polynomial> prev_basis{f};  // G_0

  for (int i = 1; i <= n; ++i) {
    const int var = order.var_at(i - 1);
    std::vector<Polynomial> basis;

    if (i == n) {
      basis.push_back(Polynomial::one(field, n));
    } else {
      const std::vector<bool> y_mask = order.prefix_mask(i);
      std::vector<bool> z_mask(y_mask.size());
      for (std::size_t v = 0; v < y_mask.size(); ++v) z_mask[v] = !y_mask[v];
      std::map<Monomial, int, GradedLexLess> col_of;
      for (const Monomial& m : f.support_restricted(z_mask))
        col_of.emplace(m, static_cast<int>(col_of.size()));

      EchelonSketch sketch(field);
      for (const Monomial& m : f.support_restricted(y_mask)) {
        Polynomial h = f.coef_extract(y_mask, m);
        if (h.is_zero()) continue;
        if (sketch.try_insert(coeff_vector(h, col_of, field))) basis.push_back(std::move(h));
      }
    }

    // Transition coordinates: g_{i-1,s} = sum_e x_var^e sum_t X[t, (s,e)] g_{i,t}.
    PolyMatrix layer = PolyMatrix::Constant(static_cast<Eigen::Index>(prev_basis.size()),
                                            static_cast<Eigen::Index>(basis.size()),
                                            Polynomial::zero(field, n));
    std::vector<bool> only_var(static_cast<std::size_t>(n), false);
    only_var[static_cast<std::size_t>(var)] = true;

    if (i == n) {
      // previous basis elements are univariate in the last variable
      for (std::size_t s = 0; s < prev_basis.size(); ++s) {
        layer(static_cast<Eigen::Index>(s), 0) = prev_basis[s];
      }
    } else {
      const std::vector<bool> y_mask = order.prefix_mask(i);
      std::vector<bool> z_mask(y_mask.size());
      for (std::size_t v = 0; v < y_mask.size(); ++v) z_mask[v] = !y_mask[v];
      std::map<Monomial, int, GradedLexLess> col_of;
      for (const Monomial& m : f.support_restricted(z_mask))
        col_of.emplace(m, static_cast<int>(col_of.size()));

      FieldMatrix a = FieldMatrix::Constant(static_cast<Eigen::Index>(col_of.size()),
                                            static_cast<Eigen::Index>(basis.size()),
                                            FieldElement::zero(field));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        const auto v = coeff_vector(basis[t], col_of, field);
        for (std::size_t r = 0; r < v.size(); ++r)
          a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) = v[r];
      }

      struct RhsRef {
        std::size_t s;
        int e;
      };
      std::vector<RhsRef> refs;
      std::vector<std::vector<FieldElement>> rhs_cols;
      for (std::size_t s = 0; s < prev_basis.size(); ++s) {
        const int dmax = prev_basis[s].degree_in(var);
        for (int e = 0; e <= dmax; ++e) {
          Polynomial h = prev_basis[s].coef_extract(only_var, Monomial::unit(n, var, e));
          if (h.is_zero()) continue;
          refs.push_back({s, e});
          rhs_cols.push_back(coeff_vector(h, col_of, field));
        }
      }
      FieldMatrix b = FieldMatrix::Constant(static_cast<Eigen::Index>(col_of.size()),
                                            static_cast<Eigen::Index>(rhs_cols.size()),
                                            FieldElement::zero(field));
      for (std::size_t c = 0; c < rhs_cols.size(); ++c)
        for (std::size_t r = 0; r < rhs_cols[c].size(); ++r)
          b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rhs_cols[c][r];

      const FieldMatrix x = solve_exact(a, b, field);  // one elimination, many RHS
      for (std::size_t c = 0; c < refs.size(); ++c) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
          const FieldElement& coef = x(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(c));
          if (coef.is_zero()) continue;
          layer(static_cast<Eigen::Index>(refs[c].s), static_cast<Eigen::Index>(t))
              .add_term(Monomial::unit(n, var, refs[c].e), coef);
        }
      }
    }

    layers.push_back(std::move(layer));
    prev_basis = std::move(basis);
  }

  return Roabp(field, order, std::move(layers));
}

}  // namespace roabp
