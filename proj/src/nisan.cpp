#include "roabp/nisan.hpp"

#include <algorithm>
#include <atomic>

namespace roabp {

FieldMatrix NisanMatrix::dense() const {
  FieldMatrix m = FieldMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                        static_cast<Eigen::Index>(cols.size()),
                                        FieldElement::zero(field));
  for (const auto& [rc, v] : entries) m(rc.first, rc.second) = v;
  return m;
}

NisanMatrix NisanMatrix::transposed() const {
  NisanMatrix t;
  t.field = field;
  t.y_mask.assign(y_mask.size(), false);
  for (std::size_t i = 0; i < y_mask.size(); ++i) t.y_mask[i] = !y_mask[i];
  t.rows = cols;
  t.cols = rows;
  for (const auto& [rc, v] : entries) t.entries.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

NisanMatrix nisan_matrix(const Polynomial& f, const std::vector<bool>& Y) {
  if (static_cast<int>(Y.size()) != f.arity()) throw MismatchError("Y mask arity mismatch");
  std::vector<bool> Z(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i) Z[i] = !Y[i];

  NisanMatrix m;
  m.field = f.field();
  m.y_mask = Y;
  m.rows = f.support_restricted(Y);
  m.cols = f.support_restricted(Z);

  std::map<Monomial, int, GradedLexLess> row_index, col_index;
  for (std::size_t i = 0; i < m.rows.size(); ++i) row_index.emplace(m.rows[i], static_cast<int>(i));
  for (std::size_t j = 0; j < m.cols.size(); ++j) col_index.emplace(m.cols[j], static_cast<int>(j));

  for (const auto& [mono, c] : f.terms()) {
    const int r = row_index.at(mono.restricted(Y));
    const int cidx = col_index.at(mono.restricted(Z));
    m.entries.emplace(std::make_pair(r, cidx), c);
  }
  return m;
}

int rank(const NisanMatrix& m) {
  if (m.rows.empty() || m.cols.empty()) return 0;
  return exact_rank(m.dense());
}

int nisan_rank(const Polynomial& f, const std::vector<bool>& Y) {
  return rank(nisan_matrix(f, Y));
}

CutProfile width_profile(const Polynomial& f, const VariableOrder& order) {
  if (order.arity() != f.arity()) throw MismatchError("order arity mismatch");
  CutProfile p;
  p.order = order;
  const int n = f.arity();
  p.ranks.resize(static_cast<std::size_t>(n), 0);
  if (f.is_zero()) return p;  // width 0, size 0 by convention
  for (int i = 1; i <= n; ++i) {
    const int r = nisan_rank(f, order.prefix_mask(i));
    p.ranks[static_cast<std::size_t>(i - 1)] = r;
    p.width = std::max(p.width, r);
    p.size += r;
  }
  return p;
}

OrderScan OrderScan::all(int cap) {
  OrderScan s;
  s.mode = Mode::All;
  s.exhaustive_cap = cap;
  return s;
}

OrderScan OrderScan::random(int count, std::uint64_t seed) {
  OrderScan s;
  s.mode = Mode::Random;
  s.sample_count = count;
  s.seed = seed;
  return s;
}

OrderScan OrderScan::parse(const std::string& text, std::uint64_t seed, int cap) {
  if (text == "all") return all(cap);
  if (text.rfind("random:", 0) == 0) {
    int count = 0;
    try {
      count = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      throw ParseError("bad order strategy '" + text + "'");
    }
    if (count <= 0) throw ParseError("order sample count must be positive");
    return random(count, seed);
  }
  throw ParseError("bad order strategy '" + text + "' (expected \"all\" or \"random:<N>\")");
}

std::vector<CutProfile> scan_orders(const Polynomial& f, const OrderScan& scan) {
  const std::vector<VariableOrder> orders =
      scan.mode == OrderScan::Mode::All ? all_orders(f.arity(), scan.exhaustive_cap)
                                        : sample_orders(f.arity(), scan.sample_count, scan.seed);
  std::vector<CutProfile> profiles(orders.size());
  parallel_for_index(orders.size(),
                     [&](std::size_t i) { profiles[i] = width_profile(f, orders[i]); });
  return profiles;
}

MinWidthResult min_width_over_orders(const Polynomial& f, const OrderScan& scan) {
  const std::vector<CutProfile> profiles = scan_orders(f, scan);
  if (profiles.empty()) throw DomainError("no orders scanned");
  std::size_t best = 0;
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    if (profiles[i].width < profiles[best].width) best = i;
  }
  MinWidthResult r;
  r.order = profiles[best].order;
  r.width = profiles[best].width;
  r.exhaustive = scan.mode == OrderScan::Mode::All;
  return r;
}

int eval_dim_lower_bound(const Polynomial& f, const std::vector<bool>& Y, int samples,
                         std::uint64_t seed) {
  if (static_cast<int>(Y.size()) != f.arity()) throw MismatchError("Y mask arity mismatch");
  if (samples <= 0) throw DomainError("sample count must be positive");
  const FieldDescriptor& field = f.field();
  if (field.is_prime_field() && field.modulus() < 5) {
    throw DomainError("sampling domain too small: need p >= 5 over prime fields");
  }

  const std::vector<Monomial> y_monomials = f.support_restricted(Y);
  if (y_monomials.empty()) return 0;  // zero polynomial
  std::map<Monomial, int, GradedLexLess> col_of;
  for (std::size_t j = 0; j < y_monomials.size(); ++j)
    col_of.emplace(y_monomials[j], static_cast<int>(j));

  // coefficient polynomials h_m over the complement of Y
  std::vector<std::pair<Monomial, Polynomial>> parts;
  parts.reserve(y_monomials.size());
  for (const Monomial& m : y_monomials) parts.emplace_back(m, f.coef_extract(Y, m));

  SplitMix64 rng(seed);
  auto draw = [&]() {
    if (field.is_rationals()) {
      // small random integers keep elimination cheap without hurting genericity
      const long v = static_cast<long>(rng.below(201)) - 100;
      return FieldElement::from_integer(field, v);
    }
    return FieldElement::from_residue(field, rng.below(field.modulus()));
  };

  FieldMatrix m = FieldMatrix::Constant(samples, static_cast<Eigen::Index>(y_monomials.size()),
                                        FieldElement::zero(field));
  const int n = f.arity();
  for (int s = 0; s < samples; ++s) {
    // assignment to the complement of Y; Y coordinates are never read
    std::vector<FieldElement> a(static_cast<std::size_t>(n), FieldElement::zero(field));
    for (int v = 0; v < n; ++v) {
      if (!Y[static_cast<std::size_t>(v)]) a[static_cast<std::size_t>(v)] = draw();
    }
    for (const auto& [mono, h] : parts) {
      FieldElement val = FieldElement::zero(field);
      for (const auto& [hm, hc] : h.terms()) {
        FieldElement t = hc;
        for (int v = 0; v < n; ++v) {
          const int e = hm.exp(v);
          if (e > 0) t *= a[static_cast<std::size_t>(v)].pow(e);
        }
        val += t;
      }
      m(s, col_of.at(mono)) = val;
    }
  }
  return exact_rank(m);
}

}  // namespace roabp
