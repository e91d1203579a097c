#pragma once

#include <utility>
#include <vector>

namespace hreg {

// Simple undirected graph on dense vertex ids [0, n).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // stored with u < v

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
      ++d[u];
      ++d[v];
    }
    return d;
  }
};

}  // namespace hreg
