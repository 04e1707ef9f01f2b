#include "hedonic/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hedonic {

SimpleGraph::SimpleGraph(int n)
    : n_(n), matrix_(static_cast<size_t>(n) * n, false), adjacency_(n), degree_(n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self loop");
  if (has_edge(u, v)) return;
  matrix_[static_cast<size_t>(u) * n_ + v] = true;
  matrix_[static_cast<size_t>(v) * n_ + u] = true;
  adjacency_[u].insert(std::lower_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(std::lower_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  return matrix_[static_cast<size_t>(u) * n_ + v];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> SimpleGraph::connected_components() const {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(n_, false);
  for (int start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    std::vector<int> stack{start};
    std::vector<int> members;
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

bool SimpleGraph::is_clique(const std::vector<int>& vertices) const {
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (!has_edge(vertices[a], vertices[b])) return false;
  return true;
}

bool SimpleGraph::induces_connected(const std::vector<int>& vertices) const {
  if (vertices.empty()) return false;
  std::vector<bool> inside(n_, false);
  for (int v : vertices) inside[v] = true;
  std::vector<int> stack{vertices[0]};
  std::vector<bool> seen(n_, false);
  seen[vertices[0]] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (inside[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices.size();
}

std::optional<std::vector<ComponentBipartition>> bipartition(const SimpleGraph& graph) {
  int n = graph.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<ComponentBipartition> out;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    ComponentBipartition part;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.sides[color[v]].push_back(v);
      for (int w : graph.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
    std::sort(part.sides[0].begin(), part.sides[0].end());
    std::sort(part.sides[1].begin(), part.sides[1].end());
    part.smaller_side = part.sides[1].size() < part.sides[0].size() ? 1 : 0;
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace hedonic
