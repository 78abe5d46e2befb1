#include "hypchroma/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hypchroma/coloring.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"

namespace hypchroma {

namespace {

constexpr double kLengthTolerance = 1e-10;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::string side_name(const SideRef& r) {
  return "side " + std::to_string(r.side) + " of polygon " + std::to_string(r.polygon);
}

void check_side_ref(const GluedSurface& s, const SideRef& r) {
  if (r.polygon < 0 || r.polygon >= static_cast<int>(s.polygons.size()))
    fail(ErrorKind::ConstructionRule, "pairing references unknown polygon " + std::to_string(r.polygon));
  if (r.side < 0 || r.side >= s.polygons[r.polygon].side_count())
    fail(ErrorKind::ConstructionRule, "pairing references unknown " + side_name(r));
}

// partner[p][side] as an index into s.pairings, -1 when unpaired.
std::vector<std::vector<int>> pairing_index(const GluedSurface& s) {
  std::vector<std::vector<int>> idx(s.polygons.size());
  for (std::size_t p = 0; p < s.polygons.size(); ++p) idx[p].assign(s.polygons[p].side_count(), -1);
  for (std::size_t k = 0; k < s.pairings.size(); ++k) {
    for (const SideRef& r : {s.pairings[k].a, s.pairings[k].b}) {
      check_side_ref(s, r);
      if (idx[r.polygon][r.side] != -1) fail(ErrorKind::ConstructionRule, side_name(r) + " is paired twice");
      idx[r.polygon][r.side] = static_cast<int>(k);
    }
  }
  return idx;
}

std::vector<int> corner_offsets(const GluedSurface& s) {
  std::vector<int> off(s.polygons.size() + 1, 0);
  for (std::size_t p = 0; p < s.polygons.size(); ++p) off[p + 1] = off[p] + s.polygons[p].corner_count();
  return off;
}

// Polygon components under side pairings and boundary pastings.
int polygon_components(const GluedSurface& s) {
  const int n = static_cast<int>(s.polygons.size());
  UnionFind uf(n);
  for (const auto& pr : s.pairings) uf.unite(pr.a.polygon, pr.b.polygon);
  for (const auto& [x, y] : s.boundary_pairings) {
    const int px = s.boundaries.at(x).polygon;
    const int py = s.boundaries.at(y).polygon;
    if (px >= 0 && py >= 0) uf.unite(px, py);
  }
  std::set<int> roots;
  for (int p = 0; p < n; ++p) roots.insert(uf.find(p));
  return static_cast<int>(roots.size());
}

std::optional<std::vector<int>> orientation_signs(const GluedSurface& s) {
  const int n = static_cast<int>(s.polygons.size());
  std::vector<std::vector<std::pair<int, bool>>> nbr(n);
  for (const auto& pr : s.pairings) {
    nbr[pr.a.polygon].push_back({pr.b.polygon, pr.reversed});
    nbr[pr.b.polygon].push_back({pr.a.polygon, pr.reversed});
  }
  std::vector<int> sign(n, 0);
  for (int s0 = 0; s0 < n; ++s0) {
    if (sign[s0] != 0) continue;
    sign[s0] = 1;
    std::vector<int> stack{s0};
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (auto [q, rev] : nbr[p]) {
        const int want = rev ? -sign[p] : sign[p];
        if (sign[q] == 0) {
          sign[q] = want;
          stack.push_back(q);
        } else if (sign[q] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

// Boundary curves formed by polygon-boundary arcs and unpaired sides, plus
// the curves inside polygons.
std::vector<BoundaryCurve> derive_boundaries(const GluedSurface& s, BoundaryCap cap) {
  int classes = 0;
  const auto cls = corner_classes(s, &classes);
  const auto idx = pairing_index(s);
  struct Arc {
    int a, b, polygon;
    double length;
  };
  std::vector<Arc> arcs;
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    const auto& spec = s.polygons[p];
    for (int k = 0; k < spec.arc_count(); ++k) {
      const auto [c0, c1] = spec.arc_corners(k);
      arcs.push_back({cls[p][c0], cls[p][c1], static_cast<int>(p), spec.t});
    }
    for (int k = 0; k < spec.side_count(); ++k) {
      if (idx[p][k] != -1) continue;
      const auto [c0, c1] = spec.side_corners(k);
      const auto len = spec.side_length(k);
      arcs.push_back({cls[p][c0], cls[p][c1], static_cast<int>(p), len ? *len : 0.0});
    }
  }
  UnionFind uf(std::max(classes, 1));
  for (const auto& a : arcs) uf.unite(a.a, a.b);
  std::map<int, BoundaryCurve> by_root;
  for (const auto& a : arcs) {
    auto [it, fresh] = by_root.try_emplace(uf.find(a.a));
    BoundaryCurve& c = it->second;
    if (fresh) {
      c.cap = cap;
      c.polygon = a.polygon;
    }
    c.length += a.length;
    ++c.arcs;
  }
  std::vector<BoundaryCurve> out;
  for (auto& [root, c] : by_root) out.push_back(c);
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    const auto& spec = s.polygons[p];
    for (int k = 0; k < spec.internal_boundaries(); ++k)
      out.push_back({spec.t, BoundaryCap::Open, static_cast<int>(p), 0});
  }
  return out;
}

void check_one_side_per_pair(const GluedSurface& s) {
  const int count = static_cast<int>(s.polygons.size());
  std::vector<std::vector<int>> shared(count, std::vector<int>(count, 0));
  for (const auto& pr : s.pairings) {
    if (pr.a.polygon == pr.b.polygon)
      fail(ErrorKind::ConstructionRule, "polygon " + std::to_string(pr.a.polygon) + " is glued to itself");
    ++shared[pr.a.polygon][pr.b.polygon];
    ++shared[pr.b.polygon][pr.a.polygon];
  }
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (shared[i][j] != 1) {
        std::ostringstream os;
        os << "polygons " << i << " and " << j << " share " << shared[i][j] << " sides (exactly one required)";
        fail(ErrorKind::ConstructionRule, os.str());
      }
}

GluedSurface build_clique_surface(const std::string& name, int n, const PolygonSpec& spec,
                                  std::optional<std::vector<Pairing>> pairing, double edge_length, bool funnels) {
  GluedSurface s;
  s.construction = name;
  s.polygons.assign(n + 1, spec);
  s.pairings = pairing ? std::move(*pairing) : canonical_pairing(n + 1);
  pairing_index(s);
  if (polygon_components(s) != 1) fail(ErrorKind::Connectivity, "pairing leaves the surface disconnected");
  check_one_side_per_pair(s);
  if (funnels) s.boundaries = derive_boundaries(s, BoundaryCap::Funnel);
  CliqueData c;
  c.vertices = CliqueData::Vertices::PolygonCenters;
  c.members.resize(n + 1);
  std::iota(c.members.begin(), c.members.end(), 0);
  c.edge_length = edge_length;
  c.n_reading = n;
  s.clique = c;
  audit(s);
  return s;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// PolygonSpec

std::string to_string(PolygonKind kind) {
  switch (kind) {
    case PolygonKind::IdealRegular:
      return "ideal-regular";
    case PolygonKind::SemiRegular2N:
      return "semi-regular-2n";
    case PolygonKind::Equilateral:
      return "equilateral";
    case PolygonKind::HoledTriangle:
      return "holed-triangle";
    case PolygonKind::GenusPatch:
      return "genus-patch";
  }
  return "unknown";
}

PolygonSpec PolygonSpec::ideal(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "ideal polygons need N >= 3");
  PolygonSpec s;
  s.kind = PolygonKind::IdealRegular;
  s.n = n;
  return s;
}

PolygonSpec PolygonSpec::semi_regular(int n, double t) {
  if (n < 3) fail(ErrorKind::InvalidInput, "semi-regular 2N-gons need N >= 3");
  if (!std::isfinite(t) || !(t > 0.0)) fail(ErrorKind::InvalidInput, "t must be finite and > 0");
  PolygonSpec s;
  s.kind = PolygonKind::SemiRegular2N;
  s.n = n;
  s.t = t;
  return s;
}

PolygonSpec PolygonSpec::equilateral(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "triangle angle 2pi/N needs N >= 3");
  PolygonSpec s;
  s.kind = PolygonKind::Equilateral;
  s.n = n;
  return s;
}

PolygonSpec PolygonSpec::holed_triangle(int n, double t) {
  if (n < 3) fail(ErrorKind::InvalidInput, "triangle angle 2pi/N needs N >= 3");
  if (!std::isfinite(t) || !(t > 0.0)) fail(ErrorKind::InvalidInput, "hole length must be finite and > 0");
  PolygonSpec s;
  s.kind = PolygonKind::HoledTriangle;
  s.n = n;
  s.t = t;
  return s;
}

PolygonSpec PolygonSpec::genus_patch(int genus, int boundaries, double t) {
  if (genus < 0 || boundaries < 0) fail(ErrorKind::InvalidInput, "patch genus and boundary count must be >= 0");
  PolygonSpec s;
  s.kind = PolygonKind::GenusPatch;
  s.n = 0;
  s.t = t;
  s.genus = genus;
  s.patch_boundaries = boundaries;
  return s;
}

int PolygonSpec::side_count() const {
  switch (kind) {
    case PolygonKind::IdealRegular:
    case PolygonKind::SemiRegular2N:
      return n;
    case PolygonKind::Equilateral:
    case PolygonKind::HoledTriangle:
      return 3;
    case PolygonKind::GenusPatch:
      return 0;
  }
  return 0;
}

int PolygonSpec::corner_count() const { return kind == PolygonKind::SemiRegular2N ? 2 * n : side_count(); }

std::pair<int, int> PolygonSpec::side_corners(int side) const {
  if (side < 0 || side >= side_count()) fail(ErrorKind::InvalidInput, "side index out of range");
  if (kind == PolygonKind::SemiRegular2N) return {2 * side, 2 * side + 1};
  return {side, (side + 1) % side_count()};
}

int PolygonSpec::arc_count() const { return kind == PolygonKind::SemiRegular2N ? n : 0; }

std::pair<int, int> PolygonSpec::arc_corners(int arc) const {
  if (arc < 0 || arc >= arc_count()) fail(ErrorKind::InvalidInput, "arc index out of range");
  return {2 * arc + 1, (2 * arc + 2) % (2 * n)};
}

int PolygonSpec::internal_boundaries() const {
  if (kind == PolygonKind::HoledTriangle) return 1;
  if (kind == PolygonKind::GenusPatch) return patch_boundaries;
  return 0;
}

int PolygonSpec::face_euler() const {
  switch (kind) {
    case PolygonKind::HoledTriangle:
      return 0;
    case PolygonKind::GenusPatch:
      return 2 - 2 * genus - patch_boundaries;
    default:
      return 1;
  }
}

bool PolygonSpec::realizable() const {
  if (kind == PolygonKind::Equilateral || kind == PolygonKind::HoledTriangle) return n >= 7;
  return kind != PolygonKind::GenusPatch;
}

std::optional<double> PolygonSpec::side_length(int side) const {
  if (side < 0 || side >= side_count()) fail(ErrorKind::InvalidInput, "side index out of range");
  if (!realizable()) return std::nullopt;
  switch (kind) {
    case PolygonKind::IdealRegular:
      return std::numeric_limits<double>::infinity();
    case PolygonKind::SemiRegular2N:
      return formulas::semi_regular_paste_side(n, t);
    case PolygonKind::Equilateral:
      return formulas::equilateral_side(n);
    case PolygonKind::HoledTriangle:
      return formulas::holed_triangle_metrics(n, t).side;
    case PolygonKind::GenusPatch:
      break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Topology

std::vector<std::vector<int>> corner_classes(const GluedSurface& s, int* class_count) {
  const auto off = corner_offsets(s);
  UnionFind uf(std::max(off.back(), 1));
  for (const auto& pr : s.pairings) {
    check_side_ref(s, pr.a);
    check_side_ref(s, pr.b);
    const auto [a0, a1] = s.polygons[pr.a.polygon].side_corners(pr.a.side);
    const auto [b0, b1] = s.polygons[pr.b.polygon].side_corners(pr.b.side);
    const int oa = off[pr.a.polygon], ob = off[pr.b.polygon];
    if (pr.reversed) {
      uf.unite(oa + a0, ob + b0);
      uf.unite(oa + a1, ob + b1);
    } else {
      uf.unite(oa + a0, ob + b1);
      uf.unite(oa + a1, ob + b0);
    }
  }
  std::map<int, int> number;
  std::vector<std::vector<int>> out(s.polygons.size());
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    for (int c = 0; c < s.polygons[p].corner_count(); ++c) {
      const int root = uf.find(off[p] + c);
      auto [it, fresh] = number.try_emplace(root, static_cast<int>(number.size()));
      out[p].push_back(it->second);
    }
  }
  if (class_count) *class_count = static_cast<int>(number.size());
  return out;
}

EulerData euler(const GluedSurface& s) {
  EulerData e;
  if (s.polygons.empty()) return e;
  if (polygon_components(s) != 1) fail(ErrorKind::Connectivity, "surface is disconnected");
  const auto idx = pairing_index(s);
  int classes = 0;
  const auto cls = corner_classes(s, &classes);

  std::vector<char> ideal(classes, 0), finite(classes, 0);
  std::int64_t face_chi = 0;
  std::int64_t edges = static_cast<std::int64_t>(s.pairings.size());
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    const auto& spec = s.polygons[p];
    face_chi += spec.face_euler();
    edges += spec.arc_count();
    for (int k = 0; k < spec.side_count(); ++k)
      if (idx[p][k] == -1) ++edges;
    for (int c : cls[p]) (spec.ideal_corners() ? ideal : finite)[c] = 1;
  }
  for (int c = 0; c < classes; ++c) {
    if (ideal[c] && finite[c]) fail(ErrorKind::ConstructionRule, "an ideal corner is glued to a finite corner");
    if (ideal[c]) ++e.cusps;
    if (finite[c]) ++e.vertices;
  }
  e.faces = static_cast<std::int64_t>(s.polygons.size());
  e.edges = edges;
  e.chi = face_chi - edges + e.vertices;

  const auto curves = derive_boundaries(s, BoundaryCap::Open);
  std::set<int> pasted;
  for (const auto& [x, y] : s.boundary_pairings) {
    if (x == y || !pasted.insert(x).second || !pasted.insert(y).second)
      fail(ErrorKind::Pairing, "a boundary curve is pasted twice");
    if (x < 0 || y < 0 || x >= static_cast<int>(curves.size()) || y >= static_cast<int>(curves.size()))
      fail(ErrorKind::Pairing, "boundary pairing references an unknown curve");
  }
  e.boundaries = static_cast<std::int64_t>(curves.size()) - static_cast<std::int64_t>(pasted.size());

  e.orientable = orientation_signs(s).has_value();
  if (e.orientable) {
    const std::int64_t twice = 2 - e.chi - e.boundaries - e.cusps;
    if (twice % 2 != 0 || twice < 0) fail(ErrorKind::InternalConsistency, "Euler characteristic with impossible parity");
    e.genus = twice / 2;
  }
  return e;
}

void audit(const GluedSurface& s) {
  const auto idx = pairing_index(s);
  if (!s.polygons.empty() && polygon_components(s) != 1) fail(ErrorKind::Connectivity, "surface is disconnected");
  for (const auto& pr : s.pairings) {
    const auto la = s.polygons[pr.a.polygon].side_length(pr.a.side);
    const auto lb = s.polygons[pr.b.polygon].side_length(pr.b.side);
    if (!la || !lb) continue;
    if (std::isinf(*la) != std::isinf(*lb) || (std::isfinite(*la) && std::abs(*la - *lb) > kLengthTolerance)) {
      fail(ErrorKind::ConstructionRule, side_name(pr.a) + " and " + side_name(pr.b) + " have different lengths (" +
                                            fmt(*la) + " vs " + fmt(*lb) + ")");
    }
  }
  for (const auto& [x, y] : s.boundary_pairings) {
    if (std::abs(s.boundaries.at(x).length - s.boundaries.at(y).length) > kLengthTolerance)
      fail(ErrorKind::Pairing, "pasted boundary curves have different lengths");
  }
  corner_classes(s);
  euler(s);
}

std::vector<double> angle_sums(const GluedSurface& s) {
  int classes = 0;
  const auto cls = corner_classes(s, &classes);
  std::vector<double> sums(classes, 0.0);
  std::vector<char> finite(classes, 0);
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    const auto& spec = s.polygons[p];
    if (spec.ideal_corners() || spec.kind == PolygonKind::GenusPatch) continue;
    if (!spec.realizable()) fail(ErrorKind::GeometryInfeasible, "polygon " + std::to_string(p) + " is not realizable");
    std::vector<double> corner_angles(spec.corner_count(), 0.0);
    if (spec.kind == PolygonKind::HoledTriangle) {
      // Each corner is the meeting point of two congruent quadrilaterals.
      const auto quad = solve_right_quadrilateral(spec.t / 3.0, kPi / spec.n);
      const auto v = realize(quad);
      const double half = angle_at(v.summit_right, v.summit_left, v.base_right);
      std::fill(corner_angles.begin(), corner_angles.end(), 2.0 * half);
    } else {
      // Corners of the realized polygon in counter-clockwise order.
      const PolygonFrame f = polygon_frame(spec);
      std::vector<HPoint> corners(spec.corner_count());
      for (int k = 0; k < spec.side_count(); ++k) {
        const auto [c0, c1] = spec.side_corners(k);
        corners[c0] = (*f.sides[k].endpoints)[0];
        corners[c1] = (*f.sides[k].endpoints)[1];
      }
      const int m = spec.corner_count();
      for (int c = 0; c < m; ++c) corner_angles[c] = angle_at(corners[c], corners[(c + m - 1) % m], corners[(c + 1) % m]);
    }
    for (int c = 0; c < spec.corner_count(); ++c) {
      sums[cls[p][c]] += corner_angles[c];
      finite[cls[p][c]] = 1;
    }
  }
  std::vector<double> out;
  for (int c = 0; c < classes; ++c)
    if (finite[c]) out.push_back(sums[c]);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

int canonical_side(int count, int from, int to) {
  if (from == to || from < 0 || to < 0 || from >= count || to >= count)
    fail(ErrorKind::InvalidInput, "canonical side needs two distinct polygons");
  return ((to - from - 1) % count + count) % count;
}

std::vector<Pairing> canonical_pairing(int count) {
  std::vector<Pairing> out;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      out.push_back({{i, canonical_side(count, i, j)}, {j, canonical_side(count, j, i)}, false});
  return out;
}

GluedSurface build_ideal_surface(int n, std::optional<std::vector<Pairing>> pairing) {
  const PolygonSpec spec = PolygonSpec::ideal(n);
  return build_clique_surface("ideal", n, spec, std::move(pairing), formulas::ideal_clique_distance(n), false);
}

GluedSurface build_truncated_surface(int n, double t, std::optional<std::vector<Pairing>> pairing) {
  const PolygonSpec spec = PolygonSpec::semi_regular(n, t);
  GluedSurface s = build_clique_surface("truncated", n, spec, std::move(pairing), formulas::truncated_clique_distance(n, t),
                                        true);
  if (!orientation_signs(s)) fail(ErrorKind::Orientability, "pairing produces a non-orientable surface");
  return s;
}

GluedSurface build_triangle_complex(const RotationSystem& rs, TriangleMode mode) {
  if (rs.vertex_count() == 0) fail(ErrorKind::Blueprint, "empty rotation system");
  const auto faces = trace_faces(rs);
  for (const auto& f : faces)
    if (f.size() != 3) fail(ErrorKind::Blueprint, "rotation system has a face of length " + std::to_string(f.size()));
  const auto degree = rs.regular_degree();
  if (!degree) fail(ErrorKind::Blueprint, "rotation system is not regular");
  const int n = *degree;
  double t = 0.0;
  if (mode.holed) {
    t = mode.t > 0.0 ? mode.t : formulas::default_hole_length();
    if (!std::isfinite(t)) fail(ErrorKind::InvalidInput, "hole length must be finite");
  }

  GluedSurface s;
  s.construction = mode.holed ? "holed-triangles" : "equilateral-triangles";
  std::map<std::pair<int, int>, SideRef> dart_side;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    PolygonSpec spec = mode.holed ? PolygonSpec::holed_triangle(n, t) : PolygonSpec::equilateral(n);
    spec.labels = faces[f];
    s.polygons.push_back(spec);
    for (int k = 0; k < 3; ++k)
      dart_side[{faces[f][k], faces[f][(k + 1) % 3]}] = {static_cast<int>(f), k};
  }
  for (const auto& [dart, side] : dart_side) {
    if (dart.first > dart.second) continue;
    const auto it = dart_side.find({dart.second, dart.first});
    if (it == dart_side.end()) fail(ErrorKind::InternalConsistency, "dart without reverse");
    s.pairings.push_back({side, it->second, false});
  }
  if (mode.holed)
    for (std::size_t f = 0; f < faces.size(); ++f) s.boundaries.push_back({t, BoundaryCap::Open, static_cast<int>(f), 0});

  Graph g(rs.vertex_count());
  for (int v = 0; v < rs.vertex_count(); ++v)
    for (int u : rs.rotation(v))
      if (u > v) g.add_edge(v, u);
  CliqueData c;
  c.vertices = CliqueData::Vertices::CornerLabels;
  c.members = max_clique(g);
  c.n_reading = n;
  const PolygonSpec& first = s.polygons.front();
  if (first.realizable()) c.edge_length = *first.side_length(0);
  s.clique = c;
  return s;
}

GluedSurface build_triangle_surface(const RotationSystem& rs, TriangleMode mode) {
  GluedSurface s = build_triangle_complex(rs, mode);
  const int n = s.polygons.front().n;
  if (n <= 6) {
    const auto e = euler(s);
    std::ostringstream os;
    os << "triangles with angles 2pi/" << n << " are not hyperbolic (degree " << n
       << " <= 6); combinatorial genus " << (e.genus ? *e.genus : -1);
    fail(ErrorKind::GeometryInfeasible, os.str());
  }
  if (mode.holed) {
    const auto m = formulas::holed_triangle_metrics(n, s.polygons.front().t);
    if (!(m.margin() > 0.0))
      fail(ErrorKind::GeometryInfeasible, "hole length leaves a - l/2 = " + fmt(m.margin()) + " <= 0");
  }
  audit(s);
  return s;
}

GluedSurface patch_surface(int genus, int boundaries, double t) {
  GluedSurface s;
  s.construction = "patch";
  s.polygons.push_back(PolygonSpec::genus_patch(genus, boundaries, t));
  for (int k = 0; k < boundaries; ++k) s.boundaries.push_back({t, BoundaryCap::Open, 0, 0});
  return s;
}

GluedSurface close_surface(const GluedSurface& f, int extra_genus,
                           std::optional<std::vector<std::pair<int, int>>> boundary_pairing) {
  if (extra_genus < 0) fail(ErrorKind::InvalidInput, "extra genus must be >= 0");
  GluedSurface s = f;
  s.construction = f.construction + "+closed";
  std::set<int> pasted;
  for (const auto& [x, y] : s.boundary_pairings) {
    pasted.insert(x);
    pasted.insert(y);
  }
  std::vector<int> open;
  for (int b = 0; b < static_cast<int>(s.boundaries.size()); ++b)
    if (!pasted.count(b)) open.push_back(b);

  if (extra_genus > 0) {
    if (open.empty()) fail(ErrorKind::Pairing, "no open boundary to attach the genus patch to");
    const int patch_b = open.size() % 2 == 1 ? 1 : 2;
    const double t = s.boundaries[open.front()].length;
    const int patch = static_cast<int>(s.polygons.size());
    s.polygons.push_back(PolygonSpec::genus_patch(extra_genus, patch_b, t));
    for (int k = 0; k < patch_b; ++k) {
      const int id = static_cast<int>(s.boundaries.size());
      s.boundaries.push_back({t, BoundaryCap::Open, patch, 0});
      s.boundary_pairings.push_back({open.front(), id});
      open.erase(open.begin());
    }
  }

  if (boundary_pairing) {
    std::set<int> remaining(open.begin(), open.end());
    for (const auto& [x, y] : *boundary_pairing) {
      if (x == y || !remaining.erase(x) || !remaining.erase(y))
        fail(ErrorKind::Pairing, "boundary pairing must use each open boundary exactly once");
      s.boundary_pairings.push_back({x, y});
    }
    if (!remaining.empty()) fail(ErrorKind::Pairing, "boundary pairing leaves boundaries open");
  } else {
    if (open.size() % 2 != 0)
      fail(ErrorKind::Pairing, "odd number of open boundaries (" + std::to_string(open.size()) + ") and no genus patch");
    for (std::size_t k = 0; k + 1 < open.size(); k += 2) s.boundary_pairings.push_back({open[k], open[k + 1]});
  }
  for (const auto& [x, y] : s.boundary_pairings)
    if (std::abs(s.boundaries[x].length - s.boundaries[y].length) > kLengthTolerance)
      fail(ErrorKind::Pairing, "boundaries " + std::to_string(x) + " and " + std::to_string(y) + " have different lengths");
  audit(s);
  return s;
}

GluedSurface disjoint_union(const std::vector<GluedSurface>& parts, std::vector<int>* polygon_offsets,
                            std::vector<int>* boundary_offsets) {
  GluedSurface out;
  out.construction = "union";
  if (polygon_offsets) polygon_offsets->clear();
  if (boundary_offsets) boundary_offsets->clear();
  for (const auto& part : parts) {
    const int po = static_cast<int>(out.polygons.size());
    const int bo = static_cast<int>(out.boundaries.size());
    if (polygon_offsets) polygon_offsets->push_back(po);
    if (boundary_offsets) boundary_offsets->push_back(bo);
    out.polygons.insert(out.polygons.end(), part.polygons.begin(), part.polygons.end());
    for (auto pr : part.pairings) {
      pr.a.polygon += po;
      pr.b.polygon += po;
      out.pairings.push_back(pr);
    }
    for (auto b : part.boundaries) {
      if (b.polygon >= 0) b.polygon += po;
      out.boundaries.push_back(b);
    }
    for (const auto& [x, y] : part.boundary_pairings) out.boundary_pairings.push_back({x + bo, y + bo});
  }
  return out;
}

ChainDescriptor build_infinite_chain(const std::vector<ChainBlockInput>& blocks, std::size_t prefix) {
  ChainDescriptor out;
  const std::size_t used = std::min(prefix, blocks.size());
  std::vector<GluedSurface> parts;
  int best = 0;
  for (std::size_t i = 0; i < used; ++i) {
    const auto& in = blocks[i];
    if (in.system.vertex_count() == 0) fail(ErrorKind::Blueprint, "block '" + in.label + "' has no rotation system");
    ChainBlock b;
    b.label = in.label;
    b.vertices = in.system.vertex_count();
    b.degree = in.system.regular_degree();
    Graph g(b.vertices);
    for (int v = 0; v < b.vertices; ++v)
      for (int u : in.system.rotation(v))
        if (u > v) g.add_edge(v, u);
    b.clique = max_clique_size(g);
    b.genus = genus_of(in.system);
    try {
      GluedSurface block = build_triangle_surface(in.system, TriangleMode::with_holes());
      b.feasible = true;
      b.edge_length = block.clique->edge_length;
      b.boundaries = static_cast<std::int64_t>(block.boundaries.size());
      b.contribution = b.clique;
      parts.push_back(std::move(block));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GeometryInfeasible && e.kind() != ErrorKind::Blueprint) throw;
      b.reason = e.what();
      b.boundaries = is_triangular(in.system) ? static_cast<std::int64_t>(trace_faces(in.system).size()) : 0;
    }
    best = std::max(best, b.contribution);
    out.prefix_bounds.push_back(best);
    out.blocks.push_back(std::move(b));
  }
  out.lower_bound = best;

  std::vector<int> boff;
  out.surface = disjoint_union(parts, nullptr, &boff);
  out.surface.construction = "chain";
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    // Last hole of block k to the first hole of block k+1.
    const int x = boff[k] + static_cast<int>(parts[k].boundaries.size()) - 1;
    const int y = boff[k + 1];
    out.surface.boundary_pairings.push_back({x, y});
    out.joins.push_back({x, y});
  }
  if (!parts.empty()) audit(out.surface);
  return out;
}

// ---------------------------------------------------------------------------
// Frames

PolygonFrame polygon_frame(const PolygonSpec& spec) {
  if (!spec.realizable() || spec.kind == PolygonKind::HoledTriangle || spec.kind == PolygonKind::GenusPatch)
    fail(ErrorKind::ConstructionRule, to_string(spec.kind) + " polygons have no planar frame");
  PolygonFrame f;
  const int n = spec.n;
  switch (spec.kind) {
    case PolygonKind::IdealRegular: {
      const double inradius = 0.5 * formulas::ideal_clique_distance(n);
      for (int k = 0; k < n; ++k) {
        SideFrame side;
        side.midpoint = HPoint::from_polar(inradius, kPi * (2 * k + 1) / n);
        side.inward = direction(side.midpoint, f.center);
        f.sides.push_back(side);
      }
      break;
    }
    case PolygonKind::SemiRegular2N: {
      const double h = 0.5 * formulas::truncated_clique_distance(n, spec.t);
      const double s = formulas::semi_regular_paste_side(n, spec.t);
      const Isometry out = Isometry::translation_x(h);
      const HPoint lo = out.apply(HPoint::from_polar(0.5 * s, -0.5 * kPi));
      const HPoint hi = out.apply(HPoint::from_polar(0.5 * s, 0.5 * kPi));
      const HPoint mid = HPoint::from_polar(h, 0.0);
      for (int k = 0; k < n; ++k) {
        const Isometry rot = Isometry::rotation(2.0 * kPi * k / n);
        SideFrame side;
        side.midpoint = rot.apply(mid);
        side.inward = direction(side.midpoint, f.center);
        side.endpoints = std::array<HPoint, 2>{rot.apply(lo), rot.apply(hi)};
        f.sides.push_back(side);
      }
      break;
    }
    case PolygonKind::Equilateral: {
      const double rc = formulas::equilateral_circumradius(n);
      std::array<HPoint, 3> v;
      for (int k = 0; k < 3; ++k) v[k] = HPoint::from_polar(rc, 2.0 * kPi * k / 3.0);
      for (int k = 0; k < 3; ++k) {
        SideFrame side;
        side.midpoint = geodesic_point(v[k], v[(k + 1) % 3], 0.5);
        side.inward = direction(side.midpoint, f.center);
        side.endpoints = std::array<HPoint, 2>{v[k], v[(k + 1) % 3]};
        f.sides.push_back(side);
      }
      break;
    }
    default:
      break;
  }
  return f;
}

GluingView gluing_view(const GluedSurface& s) {
  GluingView view;
  const auto idx = pairing_index(s);
  for (const auto& spec : s.polygons) view.polygons.push_back(polygon_frame(spec));
  view.partner.resize(s.polygons.size());
  view.reversed.resize(s.polygons.size());
  for (std::size_t p = 0; p < s.polygons.size(); ++p) {
    const int sides = s.polygons[p].side_count();
    view.partner[p].assign(sides, std::nullopt);
    view.reversed[p].assign(sides, false);
    for (int k = 0; k < sides; ++k) {
      const int i = idx[p][k];
      if (i < 0) continue;
      const Pairing& pr = s.pairings[i];
      const bool this_is_a = pr.a.polygon == static_cast<int>(p) && pr.a.side == k;
      view.partner[p][k] = this_is_a ? pr.b : pr.a;
      view.reversed[p][k] = pr.reversed;
    }
  }
  return view;
}

}  // namespace hypchroma
