#pragma once

// Rotation systems: cellular embeddings of graphs in oriented surfaces given
// by a cyclic order of neighbors at every vertex.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hypchroma {

class RotationSystem {
 public:
  RotationSystem() = default;

  /// rotation[v] lists the neighbors of v in cyclic (counter-clockwise)
  /// order. Throws validation when adjacency is not symmetric, a neighbor
  /// repeats, a vertex is its own neighbor or an index is out of range.
  explicit RotationSystem(std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  std::int64_t edge_count() const;
  int degree(int v) const { return static_cast<int>(rot_.at(v).size()); }
  const std::vector<int>& rotation(int v) const { return rot_.at(v); }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }

  /// Neighbor following `u` in the rotation at `v`.
  int successor(int v, int u) const;

  bool is_connected() const;
  /// Every pair of distinct vertices adjacent.
  bool is_complete() const;
  /// Common degree when all vertices have the same degree.
  std::optional<int> regular_degree() const;

  /// Same embedding with vertex v renamed to perm[v].
  RotationSystem relabeled(const std::vector<int>& perm) const;

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int>> pos_;  // pos_[v][u]: index of u in rot_[v], -1 if absent
};

/// Parses the "v: a b c ..." text format ('#' starts a comment).
RotationSystem parse_rotation_system(std::istream& in);
RotationSystem parse_rotation_system(const std::string& text);
RotationSystem load_rotation_system(const std::filesystem::path& path);
std::string format_rotation_system(const RotationSystem& rs, const std::string& comment = {});

/// A face as its boundary walk: darts (f[i] -> f[i+1]) cyclically.
using Face = std::vector<int>;

/// Faces by the rule: the dart after u -> v is v -> successor(v, u).
std::vector<Face> trace_faces(const RotationSystem& rs);

struct FaceReport {
  int vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t genus = 0;
  bool triangular = false;
  std::vector<int> face_lengths;  // histogram: face_lengths[k] = faces of length k
};

/// Genus from V - E + F = 2 - 2g. Throws connectivity for disconnected
/// systems and internal-consistency on odd parity.
std::int64_t genus_of(const RotationSystem& rs);
bool is_triangular(const RotationSystem& rs);
FaceReport face_report(const RotationSystem& rs);

/// genus_of(rs) == floor((n-3)(n-4)/12). Throws validation unless rs is a
/// rotation system of K_n.
bool verify_ringel_youngs(const RotationSystem& rs, int n);

/// Orders that admit triangular embeddings of K_n: n = 0, 3, 4, 7 mod 12.
bool triangular_order_admissible(int n);

struct SearchResult {
  std::optional<RotationSystem> system;
  std::int64_t nodes = 0;
  std::uint64_t seed = 0;
};

/// Backtracking search for a triangular embedding of the simple graph
/// `adjacency`: every dart is placed in exactly one triangular face. Stops
/// after `budget` search nodes. Deterministic in `seed`.
SearchResult search_triangular_embedding(const std::vector<std::vector<int>>& adjacency, std::uint64_t seed,
                                         std::int64_t budget);

/// The same for K_n; throws invalid-input for inadmissible n.
SearchResult search_triangular_embedding(int n, std::uint64_t seed, std::int64_t budget);

/// Runs seeds seed0, seed0+1, ... seed0+shards-1 (concurrently up to
/// `threads`) and returns the success of the lowest shard index.
SearchResult search_triangular_embedding_sharded(int n, std::uint64_t seed0, int shards, std::int64_t budget,
                                                 int threads);

}  // namespace hypchroma
