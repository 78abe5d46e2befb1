#pragma once

// SVG pictures in the Poincare disk. Presentation only.

#include <string>

#include "hypchroma/coloring.hpp"
#include "hypchroma/net.hpp"
#include "hypchroma/surfaces.hpp"

namespace hypchroma {

/// Net centers in the Poincare disk, one fill per color class, with the
/// boundary of the region.
std::string net_svg(const Net& net, const Coloring& coloring, int size = 800);

/// Polygon 0 of the surface and its neighbors developed across each side.
std::string surface_svg(const GluedSurface& s, int size = 800);

}  // namespace hypchroma
