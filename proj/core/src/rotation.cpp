#include "hypchroma/rotation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "hypchroma/bounds.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/parallel.hpp"

namespace hypchroma {

// ---------------------------------------------------------------------------
// RotationSystem

RotationSystem::RotationSystem(std::vector<std::vector<int>> rotation) : rot_(std::move(rotation)) {
  const int n = vertex_count();
  pos_.assign(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      const int u = rot_[v][i];
      if (u < 0 || u >= n) fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(u));
      if (u == v) fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " lists itself");
      if (pos_[v][u] != -1)
        fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(u) + " twice");
      pos_[v][u] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : rot_[v])
      if (pos_[u][v] == -1)
        fail(ErrorKind::Validation, "edge " + std::to_string(v) + "-" + std::to_string(u) + " is missing from the rotation at " +
                                        std::to_string(u));
}

std::int64_t RotationSystem::edge_count() const {
  std::int64_t darts = 0;
  for (const auto& r : rot_) darts += static_cast<std::int64_t>(r.size());
  return darts / 2;
}

int RotationSystem::successor(int v, int u) const {
  const int i = pos_.at(v).at(u);
  if (i < 0) fail(ErrorKind::Validation, "no edge " + std::to_string(v) + "-" + std::to_string(u));
  const auto& r = rot_[v];
  return r[(i + 1) % r.size()];
}

bool RotationSystem::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : rot_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

bool RotationSystem::is_complete() const {
  const int n = vertex_count();
  return std::all_of(rot_.begin(), rot_.end(), [n](const auto& r) { return static_cast<int>(r.size()) == n - 1; });
}

std::optional<int> RotationSystem::regular_degree() const {
  if (rot_.empty()) return std::nullopt;
  const auto deg = rot_.front().size();
  for (const auto& r : rot_)
    if (r.size() != deg) return std::nullopt;
  return static_cast<int>(deg);
}

RotationSystem RotationSystem::relabeled(const std::vector<int>& perm) const {
  const int n = vertex_count();
  if (static_cast<int>(perm.size()) != n) fail(ErrorKind::InvalidInput, "permutation size mismatch");
  std::vector<std::vector<int>> out(n);
  for (int v = 0; v < n; ++v) {
    auto& r = out.at(perm[v]);
    for (int u : rot_[v]) r.push_back(perm[u]);
  }
  return RotationSystem(std::move(out));
}

// ---------------------------------------------------------------------------
// Text format

RotationSystem parse_rotation_system(std::istream& in) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorKind::Validation, "line " + std::to_string(line_no) + ": expected 'v: a b c ...'");
    std::istringstream head(line.substr(0, colon));
    int v = -1;
    if (!(head >> v) || v < 0) fail(ErrorKind::Validation, "line " + std::to_string(line_no) + ": bad vertex label");
    std::string rest;
    if (head >> rest) fail(ErrorKind::Validation, "line " + std::to_string(line_no) + ": bad vertex label");
    std::istringstream body(line.substr(colon + 1));
    std::vector<int> nbrs;
    std::string tok;
    while (body >> tok) {
      std::size_t used = 0;
      int u = 0;
      try {
        u = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail(ErrorKind::Validation, "line " + std::to_string(line_no) + ": bad neighbor '" + tok + "'");
      nbrs.push_back(u);
    }
    rows.emplace_back(v, std::move(nbrs));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<int>> rot(n);
  std::vector<char> seen(n, 0);
  for (auto& [v, nbrs] : rows) {
    if (v >= n) fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " rows");
    if (seen[v]) fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    rot[v] = std::move(nbrs);
  }
  return RotationSystem(std::move(rot));
}

RotationSystem parse_rotation_system(const std::string& text) {
  std::istringstream in(text);
  return parse_rotation_system(in);
}

RotationSystem load_rotation_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open rotation system file " + path.string());
  return parse_rotation_system(in);
}

std::string format_rotation_system(const RotationSystem& rs, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  for (int v = 0; v < rs.vertex_count(); ++v) {
    os << v << ':';
    for (int u : rs.rotation(v)) os << ' ' << u;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Faces and genus

std::vector<Face> trace_faces(const RotationSystem& rs) {
  const int n = rs.vertex_count();
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(rs.degree(v), 0);
  // Dart u -> v is indexed by the position of v in the rotation at u.
  auto index_of = [&rs](int u, int v) {
    const auto& r = rs.rotation(u);
    return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
  };
  std::vector<Face> faces;
  for (int u0 = 0; u0 < n; ++u0) {
    for (int i0 = 0; i0 < rs.degree(u0); ++i0) {
      if (used[u0][i0]) continue;
      Face face;
      int u = u0;
      int v = rs.rotation(u0)[i0];
      int i = i0;
      while (!used[u][i]) {
        used[u][i] = 1;
        face.push_back(u);
        const int w = rs.successor(v, u);
        u = v;
        v = w;
        i = index_of(u, v);
      }
      if (u != u0 || i != i0) fail(ErrorKind::InternalConsistency, "face tracing did not close");
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::int64_t genus_of(const RotationSystem& rs) {
  if (!rs.is_connected()) fail(ErrorKind::Connectivity, "genus needs a connected graph");
  const std::int64_t chi = rs.vertex_count() - rs.edge_count() + static_cast<std::int64_t>(trace_faces(rs).size());
  if ((2 - chi) % 2 != 0) fail(ErrorKind::InternalConsistency, "Euler characteristic with odd parity");
  return (2 - chi) / 2;
}

bool is_triangular(const RotationSystem& rs) {
  const auto faces = trace_faces(rs);
  return std::all_of(faces.begin(), faces.end(), [](const Face& f) { return f.size() == 3; });
}

FaceReport face_report(const RotationSystem& rs) {
  FaceReport r;
  const auto faces = trace_faces(rs);
  r.vertices = rs.vertex_count();
  r.edges = rs.edge_count();
  r.faces = static_cast<std::int64_t>(faces.size());
  r.genus = genus_of(rs);
  r.triangular = !faces.empty();
  for (const auto& f : faces) {
    if (f.size() != 3) r.triangular = false;
    if (r.face_lengths.size() <= f.size()) r.face_lengths.resize(f.size() + 1, 0);
    ++r.face_lengths[f.size()];
  }
  return r;
}

bool verify_ringel_youngs(const RotationSystem& rs, int n) {
  if (rs.vertex_count() != n || !rs.is_complete())
    fail(ErrorKind::Validation, "rotation system is not a rotation system of K_" + std::to_string(n));
  return genus_of(rs) == bounds::ringel_youngs_genus(n);
}

bool triangular_order_admissible(int n) {
  if (n < 3) return false;
  const int r = n % 12;
  return r == 0 || r == 3 || r == 4 || r == 7;
}

// ---------------------------------------------------------------------------
// Triangular embedding search

namespace {

class TriangleSearch {
 public:
  TriangleSearch(const std::vector<std::vector<int>>& adj, std::uint64_t seed, std::int64_t budget)
      : adj_(adj), n_(static_cast<int>(adj.size())), rng_(seed), budget_(budget) {
    is_edge_.assign(n_, std::vector<char>(n_, 0));
    for (int v = 0; v < n_; ++v)
      for (int u : adj_[v]) {
        if (u < 0 || u >= n_ || u == v) fail(ErrorKind::InvalidInput, "adjacency lists must describe a simple graph");
        is_edge_[v][u] = 1;
      }
    for (int v = 0; v < n_; ++v)
      for (int u : adj_[v])
        if (!is_edge_[u][v]) fail(ErrorKind::InvalidInput, "adjacency lists must be symmetric");
    succ_.assign(n_, std::vector<int>(n_, -1));
    pred_.assign(n_, std::vector<int>(n_, -1));
    for (int v = 0; v < n_; ++v) remaining_ += static_cast<int>(adj_[v].size());
  }

  std::optional<RotationSystem> run() {
    if (!recurse()) return std::nullopt;
    std::vector<std::vector<int>> rot(n_);
    for (int v = 0; v < n_; ++v) {
      if (adj_[v].empty()) continue;
      int u = adj_[v].front();
      do {
        rot[v].push_back(u);
        u = succ_[v][u];
      } while (u != adj_[v].front());
    }
    return RotationSystem(std::move(rot));
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // Setting succ at v from u to w must not close a cycle shorter than deg(v).
  bool closes_early(int v, int u, int w) const {
    int steps = 1;
    int x = w;
    while (x != -1 && x != u) {
      x = succ_[v][x];
      ++steps;
    }
    return x == u && steps < static_cast<int>(adj_[v].size());
  }

  bool can_set(int v, int u, int w) const {
    return succ_[v][u] == -1 && pred_[v][w] == -1 && !closes_early(v, u, w);
  }

  // Face u -> v -> w: succ_v(u) = w, succ_w(v) = u, succ_u(w) = v.
  bool can_place(int u, int v, int w) const {
    return is_edge_[u][w] && can_set(v, u, w) && can_set(w, v, u) && can_set(u, w, v);
  }

  void set(int v, int u, int w) {
    succ_[v][u] = w;
    pred_[v][w] = u;
  }
  void unset(int v, int u, int w) {
    succ_[v][u] = -1;
    pred_[v][w] = -1;
  }

  bool recurse() {
    if (remaining_ == 0) return true;
    if (nodes_ >= budget_) return false;
    // Most constrained open slot (v, u): fewest admissible w.
    int best_v = -1, best_u = -1;
    std::vector<int> best;
    std::vector<int> cand;
    for (int v = 0; v < n_ && (best_v == -1 || best.size() > 1); ++v) {
      for (int u : adj_[v]) {
        if (succ_[v][u] != -1) continue;
        cand.clear();
        for (int w : adj_[v])
          if (w != u && can_place(u, v, w)) cand.push_back(w);
        if (best_v == -1 || cand.size() < best.size()) {
          best_v = v;
          best_u = u;
          best = cand;
          if (best.size() <= 1) break;
        }
      }
    }
    if (best.empty()) return false;
    std::shuffle(best.begin(), best.end(), rng_);
    const int v = best_v, u = best_u;
    for (int w : best) {
      if (nodes_ >= budget_) return false;
      ++nodes_;
      set(v, u, w);
      set(w, v, u);
      set(u, w, v);
      remaining_ -= 3;
      if (recurse()) return true;
      remaining_ += 3;
      unset(v, u, w);
      unset(w, v, u);
      unset(u, w, v);
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::mt19937_64 rng_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  int remaining_ = 0;
  std::vector<std::vector<char>> is_edge_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
};

std::vector<std::vector<int>> complete_adjacency(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) adj[v].push_back(u);
  return adj;
}

}  // namespace

SearchResult search_triangular_embedding(const std::vector<std::vector<int>>& adjacency, std::uint64_t seed,
                                         std::int64_t budget) {
  if (budget < 0) fail(ErrorKind::InvalidInput, "budget must be >= 0");
  TriangleSearch search(adjacency, seed, budget);
  SearchResult out;
  out.seed = seed;
  auto found = search.run();
  out.nodes = search.nodes();
  if (found) {
    if (!is_triangular(*found)) fail(ErrorKind::InternalConsistency, "search produced a non-triangular embedding");
    out.system = std::move(found);
  }
  return out;
}

SearchResult search_triangular_embedding(int n, std::uint64_t seed, std::int64_t budget) {
  if (!triangular_order_admissible(n))
    fail(ErrorKind::InvalidInput, "K_" + std::to_string(n) + " has no triangular embedding (need n = 0, 3, 4, 7 mod 12)");
  SearchResult out = search_triangular_embedding(complete_adjacency(n), seed, budget);
  if (out.system && !verify_ringel_youngs(*out.system, n))
    fail(ErrorKind::InternalConsistency, "search result misses the Ringel-Youngs genus");
  return out;
}

SearchResult search_triangular_embedding_sharded(int n, std::uint64_t seed0, int shards, std::int64_t budget,
                                                 int threads) {
  if (shards < 1) fail(ErrorKind::InvalidInput, "shards must be >= 1");
  if (!triangular_order_admissible(n))
    fail(ErrorKind::InvalidInput, "K_" + std::to_string(n) + " has no triangular embedding (need n = 0, 3, 4, 7 mod 12)");
  std::vector<SearchResult> results(shards);
  run_shards(shards, threads, [&](int i) { results[i] = search_triangular_embedding(n, seed0 + i, budget); });
  SearchResult total;
  total.seed = seed0;
  for (auto& r : results) {
    total.nodes += r.nodes;
    if (!total.system && r.system) {
      total.system = r.system;
      total.seed = r.seed;
    }
  }
  return total;
}

}  // namespace hypchroma
