#pragma once

// Certificates that the clique vertices of a glued surface are pairwise at
// the edge length and that no competing path is shorter.

#include <optional>
#include <string>
#include <vector>

#include "hypchroma/surfaces.hpp"

namespace hypchroma {

enum class CertificateStatus { Certified, Refuted, Indeterminate };

std::string to_string(CertificateStatus status);

struct CliqueCertificate {
  CertificateStatus status = CertificateStatus::Indeterminate;
  std::string method;              // "development" or "segment-bound"
  std::vector<int> vertices;       // polygon centers or graph vertices
  double edge_length = 0;
  /// Shortest alternative minus edge length; nullopt when no alternative
  /// was enumerated.
  std::optional<double> margin;
  int depth = 0;                   // max polygons per path
  long long paths_checked = 0;
  double edge_deviation = 0;       // max |developed adjacent distance - edge length|
  std::string note;
};

/// Development method for surfaces of ideal, semi-regular or equilateral
/// polygons with polygon-center cliques: every polygon walk of 3 to
/// `max_polygons` polygons that never re-crosses the side it just crossed is
/// developed, and the straight distance between its end centers bounds the
/// length of any path along that walk. Triangle-complex cliques use the
/// bound that a competing path starts and ends with segments crossing a
/// whole triangle.
CliqueCertificate certify_clique(const GluedSurface& s, int max_polygons = 4);

struct HoledTriangleDistances {
  double side = 0;          // l'
  double to_hole = 0;       // vertex to hole (quadrilateral leg)
  double to_opposite = 0;   // vertex to the opposite side
  double to_far_leg = 0;    // vertex to the leg of the third vertex
};

/// Distances inside a holed triangle measured on the realized quadrilaterals.
HoledTriangleDistances holed_triangle_distances(int n, double t);

}  // namespace hypchroma
