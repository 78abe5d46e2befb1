#include "hypchroma/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypchroma/errors.hpp"

namespace hypchroma {

void Graph::add_edge(int u, int v) {
  if (u == v) fail(ErrorKind::InvalidInput, "loops are not allowed");
  if (u < 0 || v < 0 || u >= size() || v >= size()) fail(ErrorKind::InvalidInput, "edge endpoint out of range");
  auto insert = [](std::vector<int>& list, int x) {
    const auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj[u], v);
  insert(adj[v], u);
}

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj.at(u).begin(), adj.at(u).end(), v); }

std::int64_t Graph::edge_count() const {
  std::int64_t s = 0;
  for (const auto& a : adj) s += static_cast<std::int64_t>(a.size());
  return s / 2;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& a : adj) m = std::max(m, static_cast<int>(a.size()));
  return m;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (int i = 0; i < h.size(); ++i)
    for (int j = i + 1; j < h.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n < 3) fail(ErrorKind::InvalidInput, "cycles need at least 3 vertices");
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

namespace {

int first_free(const std::vector<char>& used) {
  int c = 0;
  while (c < static_cast<int>(used.size()) && used[c]) ++c;
  return c;
}

Coloring color_in_order(const Graph& g, const std::vector<int>& order) {
  Coloring c;
  c.colors.assign(g.size(), -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(g.adj[v].size() + 1, 0);
    for (int u : g.adj[v])
      if (c.colors[u] >= 0 && c.colors[u] < static_cast<int>(used.size())) used[c.colors[u]] = 1;
    c.colors[v] = first_free(used);
    c.count = std::max(c.count, c.colors[v] + 1);
  }
  return c;
}

Coloring dsatur(const Graph& g) {
  const int n = g.size();
  Coloring c;
  c.colors.assign(n, -1);
  std::vector<std::vector<char>> seen(n);  // seen[v][k]: a neighbor of v has color k
  std::vector<int> sat(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (c.colors[v] >= 0) continue;
      if (best == -1 || sat[v] > sat[best] ||
          (sat[v] == sat[best] && g.adj[v].size() > g.adj[best].size()))
        best = v;
    }
    std::vector<char> used(g.adj[best].size() + 1, 0);
    for (int u : g.adj[best])
      if (c.colors[u] >= 0 && c.colors[u] < static_cast<int>(used.size())) used[c.colors[u]] = 1;
    const int k = first_free(used);
    c.colors[best] = k;
    c.count = std::max(c.count, k + 1);
    for (int u : g.adj[best]) {
      auto& s = seen[u];
      if (static_cast<int>(s.size()) <= k) s.resize(k + 1, 0);
      if (!s[k]) {
        s[k] = 1;
        ++sat[u];
      }
    }
  }
  return c;
}

class ExactColorer {
 public:
  explicit ExactColorer(const Graph& g) : g_(g), n_(g.size()) {}

  int solve() {
    if (n_ == 0) return 0;
    const Coloring start = dsatur(g_);
    best_ = start.count;
    lower_ = static_cast<int>(greedy_clique(g_).size());
    if (lower_ >= best_) return best_;
    colors_.assign(n_, -1);
    count_.assign(n_, std::vector<int>(n_ + 1, 0));
    sat_.assign(n_, 0);
    branch(0, 0);
    return best_;
  }

 private:
  void assign(int v, int k) {
    colors_[v] = k;
    for (int u : g_.adj[v])
      if (count_[u][k]++ == 0) ++sat_[u];
  }
  void unassign(int v, int k) {
    colors_[v] = -1;
    for (int u : g_.adj[v])
      if (--count_[u][k] == 0) --sat_[u];
  }

  void branch(int colored, int used) {
    if (best_ == lower_) return;
    if (colored == n_) {
      best_ = std::min(best_, used);
      return;
    }
    int v = -1;
    for (int x = 0; x < n_; ++x) {
      if (colors_[x] >= 0) continue;
      if (v == -1 || sat_[x] > sat_[v] || (sat_[x] == sat_[v] && g_.adj[x].size() > g_.adj[v].size())) v = x;
    }
    // Existing colors first, then at most one new color.
    for (int k = 0; k <= used && k < best_ - 1; ++k) {
      if (count_[v][k] > 0) continue;
      assign(v, k);
      branch(colored + 1, std::max(used, k + 1));
      unassign(v, k);
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  int best_ = 0;
  int lower_ = 0;
  std::vector<int> colors_;
  std::vector<std::vector<int>> count_;
  std::vector<int> sat_;
};

void clique_search(const Graph& g, std::vector<int>& current, std::vector<int> candidates, std::vector<int>& best) {
  if (current.size() > best.size()) best = current;
  while (!candidates.empty()) {
    if (current.size() + candidates.size() <= best.size()) return;
    const int v = candidates.back();
    candidates.pop_back();
    std::vector<int> next;
    for (int u : candidates)
      if (g.has_edge(u, v)) next.push_back(u);
    current.push_back(v);
    clique_search(g, current, std::move(next), best);
    current.pop_back();
  }
}

}  // namespace

Coloring greedy_color(const Graph& g, ColorOrder order) {
  std::vector<int> seq(g.size());
  std::iota(seq.begin(), seq.end(), 0);
  switch (order) {
    case ColorOrder::Natural:
      return color_in_order(g, seq);
    case ColorOrder::LargestFirst:
      std::stable_sort(seq.begin(), seq.end(), [&g](int a, int b) { return g.adj[a].size() > g.adj[b].size(); });
      return color_in_order(g, seq);
    case ColorOrder::DSatur:
      return dsatur(g);
  }
  fail(ErrorKind::InvalidInput, "unknown color order");
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (c.colors[v] < 0 || c.colors[v] >= c.count) return false;
    for (int u : g.adj[v])
      if (c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

int exact_chromatic(const Graph& g, int vertex_limit) {
  if (g.size() > vertex_limit)
    fail(ErrorKind::SizeExceeded,
         "exact chromatic number limited to " + std::to_string(vertex_limit) + " vertices, graph has " + std::to_string(g.size()));
  return ExactColorer(g).solve();
}

bool brute_force_colorable(const Graph& g, int k) {
  const int n = g.size();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> col(n, 0);
  for (;;) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int u : g.adj[v])
        if (u > v && col[u] == col[v]) {
          ok = false;
          break;
        }
    if (ok) return true;
    int i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) return false;
  }
}

int brute_force_chromatic(const Graph& g) {
  int k = 0;
  while (!brute_force_colorable(g, k)) ++k;
  return k;
}

std::vector<int> max_clique(const Graph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  // Candidates are popped from the back, so high-degree vertices branch first.
  std::stable_sort(order.begin(), order.end(), [&g](int a, int b) { return g.adj[a].size() < g.adj[b].size(); });
  std::vector<int> best;
  std::vector<int> current;
  clique_search(g, current, order, best);
  std::sort(best.begin(), best.end());
  return best;
}

int max_clique_size(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> best;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> clique{s};
    std::vector<int> cand = g.adj[s];
    std::stable_sort(cand.begin(), cand.end(), [&g](int a, int b) { return g.adj[a].size() > g.adj[b].size(); });
    for (int v : cand) {
      if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, v); })) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

}  // namespace hypchroma
