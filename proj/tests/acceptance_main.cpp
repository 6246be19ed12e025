// Acceptance suite: every headline claim is checked at desk scale with exact
// arithmetic (exact equality / exact inequality, no epsilon). One line per
// criterion; exit code 0 iff all pass. Two checks (8 and 9) assert pinned
// constants that the exact computation refutes; they are kept as stated and
// reported red with the exactly computed values (see the notes they print).
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "roabp/experiments.hpp"
#include "roabp/nisan.hpp"
#include "roabp/roabp.hpp"
#include "roabp/symfun.hpp"
#include "roabp/sylvester.hpp"

using namespace roabp;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

Polynomial random_sparse(const FieldDescriptor& field, int arity, int max_deg, int max_terms,
                         SplitMix64& rng) {
  Polynomial f = Polynomial::zero(field, arity);
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    Monomial m(arity);
    int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
    while (budget-- > 0) {
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(arity)));
      m.set_exp(v, m.exp(v) + 1);
    }
    long c = static_cast<long>(rng.below(19)) - 9;
    if (c == 0) c = 3;
    f.add_term(m, FieldElement::from_integer(field, c));
  }
  return f;
}

std::uint64_t smallest_prime_1_mod(int n) {
  for (std::uint64_t p = 2;; ++p) {
    if ((p - 1) % static_cast<std::uint64_t>(n) == 0 && is_prime_u64(p)) return p;
  }
}

// --- criterion 1: constructive Nisan characterization on random inputs
Criterion criterion_1() {
  Criterion c{1, "synthesis widths equal the rank profile and expansion round-trips ( 50 random )"};
  SplitMix64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.below(5));  // up to 6 variables
    Polynomial f = random_sparse(kQ, n, 4, 30, rng);
    if (f.is_zero()) f += Polynomial::one(kQ, n);
    const VariableOrder order = sample_orders(n, 1, rng.next())[0];
    const Roabp a = synthesize(f, order);
    const CutProfile prof = width_profile(f, order);
    c.require(a.layer_widths() == prof.ranks,
              "layer widths differ from rank profile at trial " + std::to_string(t));
    c.require(a.expand() == f, "expansion mismatch at trial " + std::to_string(t));
    if (!c.pass) break;
  }
  return c;
}

// --- criterion 2: permutation-matrix rank d^n
Criterion criterion_2() {
  Criterion c{2, "rank of the interleaved product matrix is exactly d^n"};
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      Polynomial f = Polynomial::one(kQ, 2 * n);
      for (int i = 0; i < n; ++i) {
        Monomial yz(2 * n);
        yz.set_exp(i, 1);
        yz.set_exp(n + i, 1);
        const Polynomial base = Polynomial::term(kQ, yz, FieldElement::one(kQ));
        Polynomial factor = Polynomial::one(kQ, 2 * n);
        for (int e = 1; e < d; ++e) factor += base.pow(e);
        f *= factor;
      }
      std::vector<bool> y(static_cast<std::size_t>(2 * n), false);
      for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = true;
      long long want = 1;
      for (int i = 0; i < n; ++i) want *= d;
      const int got = nisan_rank(f, y);
      c.require(got == want, "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": rank " +
                                 std::to_string(got) + " != " + std::to_string(want));
    }
  }
  return c;
}

// --- criterion 3: ESym width is min(d+1, n-d+1) in every order
Criterion criterion_3() {
  Criterion c{3, "ESym width equals min(d+1, n-d+1) in every order; counting roABP expands exactly"};
  for (int n = 1; n <= 8; ++n) {
    const bool exhaustive = n <= 6;
    const std::vector<VariableOrder> orders =
        exhaustive ? all_orders(n) : sample_orders(n, 200, 1234 + static_cast<std::uint64_t>(n));
    for (int d = 0; d <= n; ++d) {
      const Polynomial e = esym(kQ, n, d);
      const int want = std::min(d + 1, n - d + 1);
      std::vector<int> widths(orders.size(), 0);
      std::vector<bool> expand_ok(orders.size(), false);
      parallel_for_index(orders.size(), [&](std::size_t i) {
        widths[i] = width_profile(e, orders[i]).width;
        const Roabp a = esym_roabp(kQ, n, d, orders[i]);
        expand_ok[i] = a.width() == want && a.expand() == e;
      });
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (widths[i] != want) {
          c.require(false, "width(ESym_" + std::to_string(n) + "^" + std::to_string(d) + ") = " +
                               std::to_string(widths[i]) + " != " + std::to_string(want) +
                               " in order " + orders[i].str());
          return c;
        }
        if (!expand_ok[i]) {
          c.require(false, "counting roABP mismatch at n=" + std::to_string(n) +
                               " d=" + std::to_string(d) + " order " + orders[i].str());
          return c;
        }
      }
    }
  }
  c.note("n <= 6 exhaustive over all n! orders; n in {7, 8} over 200 sampled orders each");
  return c;
}

// --- criterion 4: fundamental theorem round-trip and rejection
Criterion criterion_4() {
  Criterion c{4, "decompose(symmetrize(f)) = f (50 random); 20 non-symmetric inputs rejected"};
  SplitMix64 rng(404);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng.below(5));
    Polynomial f = Polynomial::zero(kQ, n);
    const int terms = 1 + static_cast<int>(rng.below(4));
    for (int k = 0; k < terms; ++k) {
      Monomial m(n);
      int weight = 0;
      while (true) {
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (weight + v + 1 > 6) break;
        m.set_exp(v, m.exp(v) + 1);
        weight += v + 1;
        if (rng.below(2) == 0) break;
      }
      long coef = static_cast<long>(rng.below(9)) - 4;
      if (coef == 0) coef = 1;
      f.add_term(m, FieldElement::from_integer(kQ, coef));
    }
    if (f.is_zero()) f = Polynomial::one(kQ, n);
    const SymDecomposition dec = decompose_symmetric(symmetrize(f));
    c.require(dec.f == f, "round-trip failed at trial " + std::to_string(t));
    if (!c.pass) return c;
  }
  int rejected = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.below(4));
    Polynomial g = random_sparse(kQ, n, 3, 6, rng);
    if (is_symmetric(g)) {
      Monomial skew(n);
      skew.set_exp(0, 2);
      skew.set_exp(1, 1);
      g.add_term(skew, FieldElement::one(kQ));
    }
    if (is_symmetric(g)) continue;
    try {
      decompose_symmetric(g);
    } catch (const NotSymmetricError&) {
      ++rejected;
    }
  }
  c.require(rejected == 20, "only " + std::to_string(rejected) + "/20 non-symmetric inputs rejected");
  return c;
}

// --- criterion 5: partition lemma and generating function
Criterion criterion_5() {
  Criterion c{5, "variable-partition and generating-function identities, n <= 6, all splits and degrees"};
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int d = 0; d <= n + 1; ++d) {
        if (!esym_partition_check(kQ, n, d, m).equal) {
          c.require(false, "partition identity failed at n=" + std::to_string(n) +
                               " d=" + std::to_string(d) + " m=" + std::to_string(m));
          return c;
        }
      }
    }
    c.require(generating_function_check(kQ, n),
              "generating function failed at n=" + std::to_string(n));
  }
  return c;
}

// --- criterion 6: Ben-Or identity by exact expansion
Criterion criterion_6() {
  Criterion c{6, "root-of-unity interpolation reproduces ESym exactly (interior degrees)"};
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t p = smallest_prime_1_mod(n);
    const FieldDescriptor field = FieldDescriptor::prime_field(p);
    for (int d = 0; d <= n; ++d) {
      const BenOrResult r = ben_or_identity(field, n, d);  // throws if the fold fails
      const bool interior = d >= 1 && d <= n - 1;
      c.require(r.matches_esym == interior,
                "n=" + std::to_string(n) + " d=" + std::to_string(d) + " over fp:" +
                    std::to_string(p) + ": matches_esym=" + (r.matches_esym ? "true" : "false"));
    }
    c.note("n=" + std::to_string(n) + " over fp:" + std::to_string(p));
  }
  const BenOrResult rq = ben_or_identity(kQ, 2, 1);
  c.require(rq.matches_esym && rq.beta[0] == FieldElement::from_fraction(kQ, 1, 2) &&
                rq.beta[1] == FieldElement::from_fraction(kQ, -1, 2),
            "n=2 over q: beta != (1/2, -1/2)");
  c.note("boundary degrees d in {0, n} fold to ESym^0 + ESym^n (verified exactly inside the op)");
  return c;
}

// --- criterion 7: powers of ESym
Criterion criterion_7() {
  Criterion c{7, "rank of (ESym_n^k)^d at the size-k prefix equals C(k+d, k)"};
  const std::vector<std::array<int, 3>> cases{{4, 2, 2}, {4, 2, 3}, {6, 3, 2}};
  for (const auto& [n, k, d] : cases) {
    const Polynomial f = esym(kQ, n, k).pow(d);
    const int got = nisan_rank(f, VariableOrder::identity(n).prefix_mask(k));
    const long long want = binomial(k + d, k);
    c.require(got == want, "(n,k,d)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                               std::to_string(d) + "): rank " + std::to_string(got) + " != C(k+d,k)=" +
                               std::to_string(want));
  }
  const auto res = min_width_over_orders(esym(kQ, 4, 2).pow(2), OrderScan::all());
  c.require(res.width >= 6, "(4,2,2): min width over 24 orders = " + std::to_string(res.width) + " < 6");
  c.note("(4,2,2): min width over all 24 orders = " + std::to_string(res.width));
  return c;
}

// --- criterion 8: circulant family
Criterion criterion_8() {
  Criterion c{8, "circulant identity, product-form width, and the restricted polynomial's min width"};
  const std::vector<std::array<int, 3>> cases{{3, 3, 7}, {5, 5, 11}};
  for (const auto& [n, k, p] : cases) {
    const FieldDescriptor field = FieldDescriptor::prime_field(static_cast<std::uint64_t>(p));
    const Polynomial f = circulant_poly(field, n, k);

    Polynomial target = Polynomial::one(field, n);
    for (int i = 0; i < n; ++i)
      target *= Polynomial::one(field, n) + Polynomial::variable(field, n, i).pow(k);
    c.require(symmetrize(f) == target, "circulant identity failed at (n,k,p)=(" + std::to_string(n) +
                                           "," + std::to_string(k) + "," + std::to_string(p) + ")");

    // pinned claim: every cut rank of the product form equals 2
    int max_rank = 0, min_rank = 1 << 20;
    for (const auto& order : all_orders(n)) {
      for (int r : width_profile(target, order).ranks) {
        max_rank = std::max(max_rank, r);
        min_rank = std::min(min_rank, r);
      }
    }
    c.require(min_rank == 2 && max_rank == 2,
              "prod(1+x_i^k) cut ranks at (n,k,p)=(" + std::to_string(n) + "," + std::to_string(k) +
                  "," + std::to_string(p) + ") are exactly " + std::to_string(max_rank) +
                  " at every cut of every order, not 2 (the product form is separable, so the"
                  " exact rank per cut is 1; the constant-width statement itself holds)");

    std::vector<std::optional<FieldElement>> zeros(static_cast<std::size_t>(n));
    for (int v = k; v < n; ++v) zeros[static_cast<std::size_t>(v)] = FieldElement::zero(field);
    const Polynomial fprime = f.specialize(zeros).truncated(k);
    const auto res = min_width_over_orders(fprime, OrderScan::all());
    const long long bound = 1ll << ((k - 1) / 2);
    c.require(res.width >= bound,
              "min width of the restriction = " + std::to_string(res.width) + " < 2^((k-1)/2)");
    c.note("(n,k,p)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(p) +
           "): min-over-orders width of the restriction = " + std::to_string(res.width) +
           " (needs >= " + std::to_string(bound) + ")");
  }
  return c;
}

// --- criterion 9: factor non-closure at desk scale
Criterion criterion_9() {
  Criterion c{9, "factorization identity, sparsity, cofactor width over all orders, f stays easy"};
  const Graph g = Graph::from_edges(4, {{0, 2}, {1, 3}});
  for (int d : {2, 3}) {
    const FactorInstance inst = factor_nonclosure_instance(kQ, g, d);
    const Polynomial pg_poly = p_g(kQ, g, d);

    Polynomial lin = Polynomial::one(kQ, 4);
    for (const auto& [u, v] : g.edges()) {
      Monomial m(4);
      m.set_exp(u, 1);
      m.set_exp(v, 1);
      lin *= Polynomial::term(kQ, m, FieldElement::one(kQ)) - Polynomial::one(kQ, 4);
    }
    c.require(pg_poly == q_g_factor(kQ, g, d) * lin, "P_G != Q_G * prod at d=" + std::to_string(d));
    c.require(pg_poly.sparsity() == 4, "sparsity(P_G) != 4 at d=" + std::to_string(d));

    const auto res = min_width_over_orders(inst.g, OrderScan::all());
    const long long want = static_cast<long long>(d) * d;
    c.require(res.width >= want,
              "min-over-120-orders width of Q_G + z at d=" + std::to_string(d) + " is " +
                  std::to_string(res.width) + ", below the pinned d^2 = " + std::to_string(want) +
                  " (no 4-vertex graph crosses an induced 2-matching on every balanced cut; the"
                  " per-cut bound rank >= d^t holds for every order, and the max over orders"
                  " reaches d^2 exactly)");
    int max_w = 0;
    for (const auto& prof : scan_orders(inst.g, OrderScan::all()))
      max_w = std::max(max_w, prof.width);
    c.note("d=" + std::to_string(d) + ": min width over orders = " + std::to_string(res.width) +
           ", max = " + std::to_string(max_w) + " (= d^2)");

    const long long fs = static_cast<long long>(inst.f.sparsity());
    for (const auto& prof : scan_orders(inst.f, OrderScan::all())) {
      for (int r : prof.ranks) {
        if (r > fs) {
          c.require(false, "a cut rank of f exceeds sparsity(f)");
          return c;
        }
      }
    }
  }
  return c;
}

// --- criterion 10: quadratic powering
Criterion criterion_10() {
  Criterion c{10, "rank of (x1*x2 + x3*x4)^d at every midpoint cut is exactly d+1 >= C(d+1, 1)"};
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  for (int d : {2, 3}) {
    const Polynomial f = quadratic(kQ, g).pow(d);
    for (const auto& order : all_orders(4)) {
      const int r = nisan_rank(f, order.prefix_mask(2));
      if (r < binomial(d + 1, 1) || r != d + 1) {
        c.require(false, "midpoint rank " + std::to_string(r) + " at order " + order.str() +
                             ", d=" + std::to_string(d));
        return c;
      }
    }
  }
  return c;
}

// --- criterion 11: discriminant closed form and split-form resultants
Criterion criterion_11() {
  Criterion c{11, "Disc_y(y^d - g*y) = -(d-1)^(d-1) g^d; split-form resultants multiply out"};
  struct Case {
    Polynomial g;
    int d;
  };
  const std::vector<Case> cases{
      {parse_polynomial("x1", kQ), 3},
      {parse_polynomial("x1", kQ), 5},
      {parse_polynomial("x1*x2 + x3*x4", kQ), 4},
      {Polynomial::one(kQ, 0), 2},
  };
  for (const auto& [g, d] : cases) {
    const DiscInstance inst = disc_hardness_instance(g, d);
    c.require(discriminant(inst.f, inst.y) == inst.expected_disc,
              "closed form failed for d=" + std::to_string(d) + ", g=" + g.str());
  }

  // Res(prod(y - a_i), prod(y - b_j)) = prod_i prod_j (a_i - b_j), symbolically
  for (int na = 1; na <= 3; ++na) {
    for (int nb = 1; nb <= 3; ++nb) {
      const int arity = na + nb + 1;
      const int y = arity - 1;
      const Polynomial yv = Polynomial::variable(kQ, arity, y);
      Polynomial f = Polynomial::one(kQ, arity);
      for (int i = 0; i < na; ++i) f *= yv - Polynomial::variable(kQ, arity, i);
      Polynomial gg = Polynomial::one(kQ, arity);
      for (int j = 0; j < nb; ++j) gg *= yv - Polynomial::variable(kQ, arity, na + j);
      Polynomial want = Polynomial::one(kQ, arity);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          want *= Polynomial::variable(kQ, arity, i) - Polynomial::variable(kQ, arity, na + j);
      c.require(resultant(f, gg, y) == want,
                "split-form resultant failed at (" + std::to_string(na) + "," + std::to_string(nb) + ")");
    }
  }
  return c;
}

// --- criterion 12: Chebotarev minors
Criterion criterion_12() {
  Criterion c{12, "all square DFT submatrices nonsingular for k in {2, 3, 5}"};
  const std::vector<std::pair<int, std::uint64_t>> cases{{2, 3}, {3, 7}, {5, 11}};
  const std::vector<std::uint64_t> totals{6, 20, 252};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto [k, p] = cases[i];
    const DftMinorReport rep = dft_minor_check(FieldDescriptor::prime_field(p), k);
    c.require(rep.total == totals[i], "minor count mismatch at k=" + std::to_string(k));
    if (!rep.all_nonsingular) {
      for (const auto& [rows, cols] : rep.zero_minors) {
        std::string desc = "zero minor at k=" + std::to_string(k) + " rows{";
        for (int r : rows) desc += std::to_string(r) + " ";
        desc += "} cols{";
        for (int col : cols) desc += std::to_string(col) + " ";
        desc += "}";
        c.require(false, desc);
      }
    }
  }
  return c;
}

// --- criterion 13: evaluation dimension vs Nisan rank
Criterion criterion_13() {
  Criterion c{13, "evalDim <= Nisan rank on 30 random instances, equal with #rows + 4 samples over q"};
  SplitMix64 rng(1313);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.below(4));
    Polynomial f = random_sparse(kQ, n, 3, 12, rng);
    if (f.is_zero()) f += Polynomial::one(kQ, n);
    std::vector<bool> y(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) y[static_cast<std::size_t>(v)] = rng.below(2) == 1;
    const int nisan = nisan_rank(f, y);
    const int rows = static_cast<int>(f.support_restricted(y).size());
    const int few = eval_dim_lower_bound(f, y, std::max(1, rows / 2), rng.next());
    const int full = eval_dim_lower_bound(f, y, rows + 4, rng.next());
    c.require(few <= nisan && full <= nisan, "evalDim exceeded the Nisan rank at trial " + std::to_string(t));
    c.require(full == nisan, "evalDim " + std::to_string(full) + " != rank " + std::to_string(nisan) +
                                 " with " + std::to_string(rows + 4) + " samples at trial " +
                                 std::to_string(t));
    if (!c.pass) return c;
  }
  return c;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::function<Criterion()>> checks{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
      criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13};
  bool all = true;
  for (const auto& run : checks) {
    const auto c0 = std::chrono::steady_clock::now();
    const Criterion c = run();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - c0);
    std::printf("criterion %2d [%s] %s (%lld ms)\n", c.id, c.pass ? "PASS" : "FAIL",
                c.title.c_str(), static_cast<long long>(ms.count()));
    for (const auto& note : c.notes) std::printf("              - %s\n", note.c_str());
    all = all && c.pass;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::printf("%s in %lld ms\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED",
              static_cast<long long>(total.count()));
  return all ? 0 : 1;
}
