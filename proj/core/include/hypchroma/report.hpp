#pragma once

// JSON serialization of every artifact the tool emits. Field names are
// stable; keys keep insertion order so output is byte-reproducible.

#include <nlohmann/json.hpp>

#include "hypchroma/bounds.hpp"
#include "hypchroma/certify.hpp"
#include "hypchroma/collar.hpp"
#include "hypchroma/experiment.hpp"
#include "hypchroma/rotation.hpp"
#include "hypchroma/surfaces.hpp"

namespace hypchroma {

using Json = nlohmann::ordered_json;

/// Fixed-precision rendering of doubles (17 significant digits) so that
/// JSON text is identical across runs; non-finite values become strings.
Json number(double x);

Json to_json(const bounds::BoundsReport& r);
Json to_json(const NetExperiment& e);
Json to_json(const FaceReport& f);
Json to_json(const CliqueCertificate& c);
Json to_json(const collar::CylinderColoring& c);
Json to_json(const ChainDescriptor& c);

/// Surface descriptor: polygons, pairings, boundaries, clique and the
/// derived Euler data.
Json surface_json(const GluedSurface& s);

/// Inverse of surface_json (derived fields are ignored and recomputed).
/// Throws invalid-input on malformed descriptors.
GluedSurface parse_surface(const Json& j);

/// Round trip audit: parse the descriptor, audit it and compare the derived
/// Euler data with the stored one. Throws on any mismatch.
void audit_descriptor(const Json& j);

/// Dump with 2-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace hypchroma
