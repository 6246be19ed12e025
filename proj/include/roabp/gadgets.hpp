#ifndef ROABP_GADGETS_HPP
#define ROABP_GADGETS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "roabp/polynomial.hpp"

namespace roabp {

/// Undirected simple graph on vertices 0..n-1 (1-based in the file format).
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Lines "i j" with 1-based vertices; '#' starts a comment.
  static Graph parse_text(const std::string& text);
  std::string to_text() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Normalized (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;
  bool has_edge(int u, int v) const;
  int max_degree() const;

  void add_edge(int u, int v);  // rejects loops and duplicates

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;
};

/// A set of vertex-disjoint edges crossing the cut (S, V \ S) such that no
/// other graph edge joins two distinct matched pairs.
struct InducedMatching {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> side_s;
  int size() const { return static_cast<int>(pairs.size()); }
};

/// Maximum induced matching across the cut for graphs up to 16 vertices
/// (branch-and-bound over crossing edges); greedy beyond. The induced
/// property of the result is verified before returning.
InducedMatching induced_matching(const Graph& g, const std::vector<bool>& s);

/// Simple k-regular graph by pairing-model resampling; deterministic given
/// the seed. Requires n*k even and k < n.
Graph random_regular_graph(int n, int k, std::uint64_t seed);

/// P_G = prod_{(i,j) in E} ((x_i x_j)^d - 1); sparsity 2^|E| for simple G.
Polynomial p_g(const FieldDescriptor& field, const Graph& g, int d);

/// Q_G = prod_{(i,j) in E} (1 + (x_i x_j) + ... + (x_i x_j)^{d-1}), the
/// cofactor with P_G = Q_G * prod (x_i x_j - 1).
Polynomial q_g_factor(const FieldDescriptor& field, const Graph& g, int d);

/// The quadratic edge polynomial sum_{(i,j) in E} x_i x_j.
Polynomial quadratic(const FieldDescriptor& field, const Graph& g);

/// The factor non-closure pair on |V|+1 variables (the last one is the
/// auxiliary z): g = Q_G + z, f = g * prod (x_i x_j - 1) = P_G + z * prod(..).
/// The displayed identity is re-verified by exact expansion.
struct FactorInstance {
  Polynomial f;
  Polynomial g;
  int aux_var = 0;  // 0-based id of z
};
FactorInstance factor_nonclosure_instance(const FieldDescriptor& field, const Graph& g, int d);

}  // namespace roabp

#endif  // ROABP_GADGETS_HPP
