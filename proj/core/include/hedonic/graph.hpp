#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace hedonic {

// Undirected simple graph on vertices 0..n-1, adjacency matrix backed.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return degree_[v]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  // Sorted (u < v) pairs, lexicographic.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const { return edge_count_; }

  SimpleGraph complement() const;

  // Components sorted by smallest vertex, members ascending.
  std::vector<std::vector<int>> connected_components() const;

  bool is_clique(const std::vector<int>& vertices) const;
  bool induces_connected(const std::vector<int>& vertices) const;

 private:
  int n_;
  int edge_count_ = 0;
  std::vector<bool> matrix_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> degree_;
};

struct ComponentBipartition {
  // sides[0] holds the component's smallest vertex; smaller_side says which
  // side has fewer vertices (ties resolved to 0).
  std::array<std::vector<int>, 2> sides;
  int smaller_side = 0;
};

// One entry per component, ordered by smallest vertex; nullopt when some
// component has an odd cycle.
std::optional<std::vector<ComponentBipartition>> bipartition(const SimpleGraph& graph);

}  // namespace hedonic
