#include "roabp/gadgets.hpp"

#include <algorithm>
#include <sstream>

#include "roabp/order.hpp"

namespace roabp {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("loops are not allowed");
  const auto e = std::minmax(u, v);
  if (!edges_.emplace(e.first, e.second).second) throw DomainError("duplicate edge");
}

Graph Graph::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw ParseError("graph line needs two vertices: '" + line + "'");
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens on graph line: '" + line + "'");
    if (u < 1 || v < 1) throw ParseError("graph vertices are 1-indexed");
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return from_edges(max_vertex, edges);
}

std::string Graph::to_text() const {
  std::string out;
  for (const auto& [u, v] : edges_) {
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  return {edges_.begin(), edges_.end()};
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto e = std::minmax(u, v);
  return edges_.count({e.first, e.second}) > 0;
}

int Graph::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

namespace {

bool edges_conflict(const Graph& g, const std::pair<int, int>& a, const std::pair<int, int>& b) {
  // shared vertex, or any graph edge joining the two pairs
  for (int x : {a.first, a.second})
    for (int y : {b.first, b.second}) {
      if (x == y) return true;
      if (g.has_edge(x, y)) return true;
    }
  return false;
}

bool is_induced_crossing_matching(const Graph& g, const std::vector<bool>& s,
                                  const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [u, v] : pairs) {
    if (s[static_cast<std::size_t>(u)] == s[static_cast<std::size_t>(v)]) return false;
    if (!g.has_edge(u, v)) return false;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (edges_conflict(g, pairs[i], pairs[j])) return false;
  return true;
}

}  // namespace

InducedMatching induced_matching(const Graph& g, const std::vector<bool>& s) {
  if (static_cast<int>(s.size()) != g.vertex_count()) throw MismatchError("cut mask size mismatch");
  std::vector<std::pair<int, int>> crossing;
  for (const auto& [u, v] : g.edges()) {
    if (s[static_cast<std::size_t>(u)] != s[static_cast<std::size_t>(v)]) crossing.emplace_back(u, v);
  }

  std::vector<std::pair<int, int>> best;
  if (g.vertex_count() <= 16) {
    // exact: maximum independent set in the conflict graph of crossing edges
    const std::size_t m = crossing.size();
    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        conflict[i][j] = conflict[j][i] = edges_conflict(g, crossing[i], crossing[j]);
    std::vector<std::size_t> chosen, best_idx;
    std::function<void(std::size_t)> search = [&](std::size_t at) {
      if (chosen.size() + (m - at) <= best_idx.size()) return;  // bound
      if (at == m) {
        if (chosen.size() > best_idx.size()) best_idx = chosen;
        return;
      }
      bool ok = true;
      for (std::size_t c : chosen) {
        if (conflict[c][at]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(at);
        search(at + 1);
        chosen.pop_back();
      }
      search(at + 1);
    };
    search(0);
    for (std::size_t i : best_idx) best.push_back(crossing[i]);
  } else {
    // greedy constant-factor fallback
    for (const auto& e : crossing) {
      bool ok = true;
      for (const auto& c : best) {
        if (edges_conflict(g, e, c)) {
          ok = false;
          break;
        }
      }
      if (ok) best.push_back(e);
    }
  }

  if (!is_induced_crossing_matching(g, s, best)) {
    throw DomainError("internal: candidate matching failed the induced check");
  }
  InducedMatching out;
  out.pairs = std::move(best);
  out.side_s = s;
  return out;
}

Graph random_regular_graph(int n, int k, std::uint64_t seed) {
  if (k < 0 || k >= n) throw DomainError("regular graph needs 0 <= k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw DomainError("regular graph needs n*k even (got n=" + std::to_string(n) + ", k=" +
                      std::to_string(k) + ")");
  SplitMix64 rng(seed);
  const int attempts = 100000;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < k; ++c) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(stubs[i - 1], stubs[j]);
    }
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v || g.has_edge(u, v)) {
        simple = false;
        break;
      }
      g.add_edge(u, v);
    }
    if (simple) return g;
  }
  throw DomainError("pairing model failed to produce a simple " + std::to_string(k) +
                    "-regular graph on " + std::to_string(n) + " vertices");
}

namespace {

Polynomial edge_monomial(const FieldDescriptor& field, int arity, int u, int v) {
  Monomial m(arity);
  m.set_exp(u, 1);
  m.set_exp(v, 1);
  return Polynomial::term(field, m, FieldElement::one(field));
}

}  // namespace

Polynomial p_g(const FieldDescriptor& field, const Graph& g, int d) {
  if (d < 1) throw DomainError("p_g needs d >= 1");
  const int n = g.vertex_count();
  Polynomial f = Polynomial::one(field, n);
  for (const auto& [u, v] : g.edges()) {
    f *= edge_monomial(field, n, u, v).pow(d) - Polynomial::one(field, n);
  }
  return f;
}

Polynomial q_g_factor(const FieldDescriptor& field, const Graph& g, int d) {
  if (d < 1) throw DomainError("q_g_factor needs d >= 1");
  const int n = g.vertex_count();
  Polynomial f = Polynomial::one(field, n);
  for (const auto& [u, v] : g.edges()) {
    Polynomial factor = Polynomial::zero(field, n);
    for (int e = 0; e < d; ++e) factor += edge_monomial(field, n, u, v).pow(e);
    f *= factor;
  }
  return f;
}

Polynomial quadratic(const FieldDescriptor& field, const Graph& g) {
  const int n = g.vertex_count();
  Polynomial f = Polynomial::zero(field, n);
  for (const auto& [u, v] : g.edges()) f += edge_monomial(field, n, u, v);
  return f;
}

FactorInstance factor_nonclosure_instance(const FieldDescriptor& field, const Graph& g, int d) {
  if (d < 2) throw DomainError("factor_nonclosure_instance needs d >= 2");
  const int n = g.vertex_count();
  const int arity = n + 1;
  const int z = n;
  FactorInstance out;
  out.aux_var = z;
  out.g = q_g_factor(field, g, d).extended(arity) + Polynomial::variable(field, arity, z);
  Polynomial lin = Polynomial::one(field, arity);
  for (const auto& [u, v] : g.edges()) {
    lin *= edge_monomial(field, arity, u, v) - Polynomial::one(field, arity);
  }
  out.f = out.g * lin;
  const Polynomial direct =
      p_g(field, g, d).extended(arity) + Polynomial::variable(field, arity, z) * lin;
  if (out.f != direct) throw DomainError("internal: factor-instance identity failed");
  return out;
}

}  // namespace roabp
