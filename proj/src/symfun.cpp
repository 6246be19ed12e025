#include "roabp/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace roabp {

Polynomial esym_on(const FieldDescriptor& field, int arity, const std::vector<int>& vars, int d) {
  if (d < 0) throw DomainError("negative elementary symmetric degree");
  // E[j] accumulates ESym^j of the variables seen so far
  std::vector<Polynomial> e(static_cast<std::size_t>(d) + 1, Polynomial::zero(field, arity));
  e[0] = Polynomial::one(field, arity);
  for (int v : vars) {
    const Polynomial x = Polynomial::variable(field, arity, v);
    for (int j = std::min<int>(d, static_cast<int>(vars.size())); j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
    }
  }
  return e[static_cast<std::size_t>(d)];
}

Polynomial esym(const FieldDescriptor& field, int n, int d) {
  if (n < 0) throw DomainError("negative arity");
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 0);
  return esym_on(field, n, vars, d);
}

PartitionCheck esym_partition_check(const FieldDescriptor& field, int n, int d, int m) {
  if (m < 0 || m > n) throw DomainError("split point out of range");
  PartitionCheck out;
  out.lhs = esym(field, n, d);
  std::vector<int> left, right;
  for (int v = 0; v < m; ++v) left.push_back(v);
  for (int v = m; v < n; ++v) right.push_back(v);
  out.rhs = Polynomial::zero(field, n);
  for (int i = 0; i <= d; ++i) {
    out.rhs += esym_on(field, n, left, i) * esym_on(field, n, right, d - i);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

bool generating_function_check(const FieldDescriptor& field, int n) {
  const int arity = n + 1;
  const int t = n;  // adjoined variable
  Polynomial lhs = Polynomial::one(field, arity);
  for (int v = 0; v < n; ++v) {
    lhs *= Polynomial::one(field, arity) +
           Polynomial::variable(field, arity, v) * Polynomial::variable(field, arity, t);
  }
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 0);
  Polynomial rhs = Polynomial::zero(field, arity);
  for (int d = 0; d <= n; ++d) {
    rhs += esym_on(field, arity, vars, d) * Polynomial::variable(field, arity, t).pow(d);
  }
  return lhs == rhs;
}

Roabp esym_roabp(const FieldDescriptor& field, int n, int d, const VariableOrder& order) {
  if (d < 0 || d > n) throw DomainError("esym_roabp needs 0 <= d <= n");
  if (order.arity() != n) throw MismatchError("order arity mismatch");
  // states at vertex layer i: counts j reachable and still able to finish at d
  auto states = [&](int i) {
    std::vector<int> s;
    const int lo = std::max(0, d - (n - i));
    const int hi = std::min(d, i);
    for (int j = lo; j <= hi; ++j) s.push_back(j);
    return s;
  };
  std::vector<PolyMatrix> layers;
  layers.reserve(static_cast<std::size_t>(n));
  const Polynomial zero = Polynomial::zero(field, n);
  const Polynomial one = Polynomial::one(field, n);
  for (int i = 1; i <= n; ++i) {
    const std::vector<int> prev = states(i - 1);
    const std::vector<int> cur = states(i);
    PolyMatrix layer = PolyMatrix::Constant(static_cast<Eigen::Index>(prev.size()),
                                            static_cast<Eigen::Index>(cur.size()), zero);
    const Polynomial x = Polynomial::variable(field, n, order.var_at(i - 1));
    for (std::size_t r = 0; r < prev.size(); ++r) {
      for (std::size_t c = 0; c < cur.size(); ++c) {
        if (cur[c] == prev[r]) layer(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = one;
        if (cur[c] == prev[r] + 1) layer(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = x;
      }
    }
    layers.push_back(std::move(layer));
  }
  return Roabp(field, order, std::move(layers));
}

BenOrResult ben_or_identity(const FieldDescriptor& field, int n, int d) {
  if (n < 1) throw DomainError("ben_or_identity needs n >= 1");
  if (d < 0 || d > n) throw DomainError("ben_or_identity needs 0 <= d <= n");
  const FieldElement n_elem = FieldElement::from_integer(field, n);
  if (n_elem.is_zero())
    throw DomainError("n is not invertible over " + field.str());
  const FieldElement omega = primitive_root_of_unity(field, static_cast<std::uint64_t>(n));

  BenOrResult out;
  out.sum = Polynomial::zero(field, n);
  for (int j = 0; j < n; ++j) {
    const FieldElement beta = omega.pow(static_cast<std::int64_t>(-j) * d) / n_elem;
    out.beta.push_back(beta);
    Polynomial prod = Polynomial::constant(field, n, beta);
    for (int i = 0; i < n; ++i) {
      prod *= Polynomial::one(field, n) +
              Polynomial::variable(field, n, i).scaled(omega.pow(j));
    }
    out.sum += prod;
  }
  out.esym_target = esym(field, n, d);
  out.folded_target = Polynomial::zero(field, n);
  for (int t = 0; t <= n; ++t) {
    if ((t - d) % n == 0) out.folded_target += esym(field, n, t);
  }
  if (out.sum != out.folded_target) {
    throw DomainError("root-of-unity interpolation failed to reproduce the degree fold");
  }
  out.matches_esym = out.sum == out.esym_target;
  return out;
}

Polynomial symmetrize(const Polynomial& f) {
  const int n = f.arity();
  std::map<int, Polynomial> images;
  for (int dd = 1; dd <= n; ++dd) images.emplace(dd - 1, esym(f.field(), n, dd));
  return f.substitute(images);
}

bool is_symmetric(const Polynomial& f, int* violating_swap) {
  const int n = f.arity();
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(j + 1)]);
    if (f.permute_variables(perm) != f) {
      if (violating_swap) *violating_swap = j;
      return false;
    }
  }
  return true;
}

SymDecomposition decompose_symmetric(const Polynomial& g) {
  int swap_pos = 0;
  if (!is_symmetric(g, &swap_pos)) {
    throw NotSymmetricError("input is not symmetric: swapping x" + std::to_string(swap_pos + 1) +
                            " and x" + std::to_string(swap_pos + 2) + " changes it");
  }
  const int n = g.arity();
  const FieldDescriptor& field = g.field();
  std::vector<Polynomial> e;
  for (int dd = 1; dd <= n; ++dd) e.push_back(esym(field, n, dd));

  SymDecomposition out;
  out.n = n;
  out.f = Polynomial::zero(field, n);
  Polynomial rem = g;
  while (!rem.is_zero()) {
    const Monomial lead = rem.leading_monomial_lex();
    const FieldElement c = rem.coef(lead);
    Monomial y(n);
    Polynomial sub = Polynomial::constant(field, n, c);
    for (int dd = 0; dd < n; ++dd) {
      const int next = dd + 1 < n ? lead.exp(dd + 1) : 0;
      const int b = lead.exp(dd) - next;
      if (b < 0) {
        // cannot happen for symmetric input: the lex-leading exponent vector
        // of a symmetric polynomial is non-increasing
        throw DomainError("internal: non-monotone leading exponent in decomposition");
      }
      if (b > 0) {
        y.set_exp(dd, b);
        sub *= e[static_cast<std::size_t>(dd)].pow(b);
      }
    }
    out.f.add_term(y, c);
    rem -= sub;
  }
  return out;
}

Polynomial circulant_poly(const FieldDescriptor& field, int n, int k) {
  if (k < 1 || k > n) throw DomainError("circulant_poly needs 1 <= k <= n");
  const FieldElement omega = primitive_root_of_unity(field, static_cast<std::uint64_t>(k));
  auto build = [&](const FieldElement& w) {
    Polynomial f = Polynomial::one(field, n);
    for (int j = 0; j < k; ++j) {
      Polynomial factor = Polynomial::one(field, n);
      for (int i = 1; i <= n; ++i) {
        factor += Polynomial::variable(field, n, i - 1).scaled(w.pow(static_cast<std::int64_t>(j) * i));
      }
      f *= factor;
    }
    return f;
  };
  const Polynomial f = build(omega);
  if (k >= 3 && k <= 7) {
    // the expansion must not depend on the choice of primitive root
    for (int m = 2; m < k; ++m) {
      if (std::gcd(m, k) == 1) {
        if (build(omega.pow(m)) != f)
          throw DomainError("circulant expansion depends on the primitive root choice");
        break;
      }
    }
  }
  return f;
}

namespace {

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  if (size == 0) {
    fn({});
    return;
  }
  if (size > n) return;
  while (true) {
    fn(pick);
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

DftMinorReport dft_minor_check(const FieldDescriptor& field, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (!is_prime_u64(static_cast<std::uint64_t>(k))) throw DomainError("k must be prime");
  if (k > 7) throw CapError("exhaustive minor scan capped at k = 7 (C(2k,k) determinants)");

  DftMinorReport report;
  report.k = k;
  report.omega = primitive_root_of_unity(field, static_cast<std::uint64_t>(k));
  FieldMatrix w = FieldMatrix::Constant(k, k, FieldElement::zero(field));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      w(j, i) = report.omega.pow(static_cast<std::int64_t>(j) * i);

  report.total = 1;  // empty minor, det = 1
  for (int s = 1; s <= k; ++s) {
    for_each_subset(k, s, [&](const std::vector<int>& rows) {
      for_each_subset(k, s, [&](const std::vector<int>& cols) {
        ++report.total;
        FieldMatrix sub = FieldMatrix::Constant(s, s, FieldElement::zero(field));
        for (int r = 0; r < s; ++r)
          for (int c = 0; c < s; ++c)
            sub(r, c) = w(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
        if (exact_determinant(sub, field).is_zero()) {
          report.zero_minors.emplace_back(rows, cols);
        }
      });
    });
  }
  report.all_nonsingular = report.zero_minors.empty();
  return report;
}

}  // namespace roabp
