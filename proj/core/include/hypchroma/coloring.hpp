#pragma once

// Simple undirected graphs, proper colorings and chromatic numbers.

#include <cstdint>
#include <vector>

namespace hypchroma {

struct Graph {
  std::vector<std::vector<int>> adj;  // sorted, no loops, symmetric

  Graph() = default;
  explicit Graph(int n) : adj(n) {}

  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::int64_t edge_count() const;
  int max_degree() const;
  /// Subgraph induced on `vertices` (relabeled 0..k-1 in the given order).
  Graph induced(const std::vector<int>& vertices) const;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph petersen();
};

struct Coloring {
  std::vector<int> colors;  // color per vertex, from 0
  int count = 0;
};

enum class ColorOrder { Natural, LargestFirst, DSatur };

Coloring greedy_color(const Graph& g, ColorOrder order = ColorOrder::DSatur);

/// No edge joins equal colors and every vertex has a color in [0, count).
bool is_proper(const Graph& g, const Coloring& c);

/// Exact chromatic number by DSATUR branch and bound. Throws size-exceeded
/// when the graph has more than `vertex_limit` vertices.
int exact_chromatic(const Graph& g, int vertex_limit = 40);

/// Exhaustive k-coloring test; intended for tiny graphs (oracle use).
bool brute_force_colorable(const Graph& g, int k);
int brute_force_chromatic(const Graph& g);

/// A maximum clique (exact, branch and bound), vertices ascending.
std::vector<int> max_clique(const Graph& g);
int max_clique_size(const Graph& g);
/// A clique found greedily (lower bound).
std::vector<int> greedy_clique(const Graph& g);

}  // namespace hypchroma
