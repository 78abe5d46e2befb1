#include "hypchroma/report.hpp"

#include <cmath>

#include "hypchroma/errors.hpp"

namespace hypchroma {

namespace {

template <typename T>
Json optional_value(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>)
    return number(*v);
  else
    return *v;
}

std::string cap_name(BoundaryCap cap) { return cap == BoundaryCap::Funnel ? "funnel" : "open"; }

PolygonKind kind_from(const std::string& name) {
  for (PolygonKind k : {PolygonKind::IdealRegular, PolygonKind::SemiRegular2N, PolygonKind::Equilateral,
                        PolygonKind::HoledTriangle, PolygonKind::GenusPatch})
    if (to_string(k) == name) return k;
  fail(ErrorKind::InvalidInput, "unknown polygon kind '" + name + "'");
}

Json side_ref(const SideRef& r) { return Json::array({r.polygon, r.side}); }

SideRef parse_side_ref(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::InvalidInput, "side reference must be [polygon, side]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json euler_json(const EulerData& e) {
  Json j;
  j["chi"] = e.chi;
  j["genus"] = optional_value(e.genus);
  j["boundaries"] = e.boundaries;
  j["cusps"] = e.cusps;
  j["orientable"] = e.orientable;
  j["V"] = e.vertices;
  j["E"] = e.edges;
  j["F"] = e.faces;
  return j;
}

Json half_json(const collar::HalfCollar& h) {
  Json sections = Json::array();
  for (const auto& s : h.sections) {
    Json js;
    js["rho_top"] = number(s.rho_top);
    js["rho_bottom"] = number(s.rho_bottom);
    js["height"] = number(s.height);
    js["diam_bound"] = number(s.diam_bound);
    js["color"] = s.color;
    sections.push_back(std::move(js));
  }
  return sections;
}

}  // namespace

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const bounds::BoundsReport& r) {
  Json j;
  Json input;
  if (r.d) input["d"] = number(*r.d);
  if (r.genus) input["genus"] = *r.genus;
  j["input"] = input;
  j["upper_colors"] = optional_value(r.upper_colors);
  j["lower_clique"] = optional_value(r.lower_clique);
  j["r0"] = optional_value(r.r0);
  j["N"] = optional_value(r.n);
  j["t_d"] = optional_value(r.t_d);
  j["T_N"] = optional_value(r.triangle_count);
  j["min_genus"] = optional_value(r.min_genus);
  j["notes"] = r.notes;

  Json extra;
  extra["upper_colors_consistent"] = optional_value(r.upper_colors_consistent);
  extra["lower_clique_n_reading"] = optional_value(r.lower_clique_n_reading);
  extra["phi"] = optional_value(r.phi);
  extra["phi_consistent"] = optional_value(r.phi_consistent);
  extra["extra_genus"] = optional_value(r.extra_genus);
  extra["upper_route"] = optional_value(r.upper_route);
  extra["degenerate_lower"] = r.degenerate_lower;
  Json fitted;
  fitted["c1"] = number(r.fitted.c1);
  fitted["c2"] = number(r.fitted.c2);
  fitted["c3"] = number(r.fitted.c3);
  fitted["c4"] = number(r.fitted.c4);
  fitted["d_range"] = Json::array({number(r.fitted.d_min), number(r.fitted.d_max)});
  fitted["g_range"] = Json::array({r.fitted.g_min, r.fitted.g_max});
  extra["fitted_constants"] = fitted;
  j["details"] = extra;
  return j;
}

Json to_json(const NetExperiment& e) {
  Json j;
  j["R"] = number(e.params.region_radius);
  j["r0"] = number(e.r0);
  j["d"] = number(e.params.d);
  j["seed"] = e.params.seed;
  j["centers"] = e.net.centers.size();
  j["edges"] = e.graph.edge_count();
  j["max_degree"] = e.graph.max_degree();
  j["degree_bound"] = number(e.degree_bound);
  j["colors_used"] = e.coloring.count;
  j["phi_plus_one"] = e.phi_plus_one;
  j["violations"] = e.validation.violations;
  j["uncovered"] = e.validation.uncovered;
  j["trials"] = e.validation.trials;
  j["darts"] = e.net.darts;
  j["audit_rounds"] = e.net.audit_rounds;
  j["audit_insertions"] = e.net.audit_insertions;
  j["wall_time"] = optional_value(e.wall_time);
  return j;
}

Json to_json(const FaceReport& f) {
  Json j;
  j["V"] = f.vertices;
  j["E"] = f.edges;
  j["F"] = f.faces;
  j["genus"] = f.genus;
  j["triangular"] = f.triangular;
  Json lengths = Json::object();
  for (std::size_t k = 0; k < f.face_lengths.size(); ++k)
    if (f.face_lengths[k]) lengths[std::to_string(k)] = f.face_lengths[k];
  j["face_lengths"] = lengths;
  return j;
}

Json to_json(const CliqueCertificate& c) {
  Json j;
  j["status"] = to_string(c.status);
  j["method"] = c.method;
  j["vertices"] = c.vertices;
  j["edge_length"] = number(c.edge_length);
  j["margin"] = optional_value(c.margin);
  j["depth"] = c.depth;
  j["paths_checked"] = c.paths_checked;
  j["edge_deviation"] = number(c.edge_deviation);
  j["note"] = c.note;
  return j;
}

Json to_json(const collar::CylinderColoring& c) {
  const auto& h = c.upper;
  Json j;
  j["l_gamma"] = number(h.geodesic_length);
  j["eps"] = number(h.thinness);
  j["K_C"] = number(h.boundary_distance);
  j["d"] = number(h.d);
  j["d_prime"] = number(h.d_prime);
  j["r0"] = number(h.r0);
  j["boundary_length"] = number(h.boundary_length);
  j["paper_regime"] = h.paper_regime;
  j["sections"] = half_json(c.upper);
  j["lower_sections"] = half_json(c.lower);
  j["max_degree"] = c.max_degree;
  j["colors_used"] = c.colors_used;
  return j;
}

Json to_json(const ChainDescriptor& c) {
  Json j;
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json jb;
    jb["label"] = b.label;
    jb["vertices"] = b.vertices;
    jb["degree"] = optional_value(b.degree);
    jb["feasible"] = b.feasible;
    jb["reason"] = b.reason;
    jb["clique"] = b.clique;
    jb["contribution"] = b.contribution;
    jb["edge_length"] = optional_value(b.edge_length);
    jb["genus"] = b.genus;
    jb["boundaries"] = b.boundaries;
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = blocks;
  Json joins = Json::array();
  for (const auto& [a, b] : c.joins) joins.push_back(Json::array({a, b}));
  j["joins"] = joins;
  j["lower_bound"] = c.lower_bound;
  j["prefix_bounds"] = c.prefix_bounds;
  j["surface"] = surface_json(c.surface);
  return j;
}

Json surface_json(const GluedSurface& s) {
  Json j;
  j["construction"] = s.construction;
  Json polygons = Json::array();
  for (const auto& p : s.polygons) {
    Json jp;
    jp["kind"] = to_string(p.kind);
    Json params;
    if (p.kind == PolygonKind::GenusPatch) {
      params["genus"] = p.genus;
      params["boundaries"] = p.patch_boundaries;
      params["t"] = number(p.t);
    } else {
      params["n"] = p.n;
      if (p.kind == PolygonKind::SemiRegular2N || p.kind == PolygonKind::HoledTriangle) params["t"] = number(p.t);
    }
    jp["params"] = params;
    Json sides = Json::array();
    for (int k = 0; k < p.side_count(); ++k) sides.push_back(optional_value(p.side_length(k)));
    jp["sides"] = sides;
    if (!p.labels.empty()) jp["labels"] = p.labels;
    polygons.push_back(std::move(jp));
  }
  j["polygons"] = polygons;

  Json pairings = Json::array();
  Json reversed = Json::array();
  for (std::size_t k = 0; k < s.pairings.size(); ++k) {
    pairings.push_back(Json::array({side_ref(s.pairings[k].a), side_ref(s.pairings[k].b)}));
    if (s.pairings[k].reversed) reversed.push_back(k);
  }
  j["pairings"] = pairings;
  j["reversed_pairings"] = reversed;

  Json boundaries = Json::array();
  for (const auto& b : s.boundaries) {
    Json jb;
    jb["length"] = number(b.length);
    jb["cap"] = cap_name(b.cap);
    jb["polygon"] = b.polygon;
    jb["arcs"] = b.arcs;
    boundaries.push_back(std::move(jb));
  }
  j["boundaries"] = boundaries;
  Json bp = Json::array();
  for (const auto& [a, b] : s.boundary_pairings) bp.push_back(Json::array({a, b}));
  j["boundary_pairings"] = bp;

  if (s.clique) {
    Json c;
    c["vertices"] = s.clique->vertices == CliqueData::Vertices::PolygonCenters ? "polygon-centers" : "corner-labels";
    c["members"] = s.clique->members;
    c["size"] = s.clique->size();
    c["n_reading"] = s.clique->n_reading;
    c["edge_length"] = number(s.clique->edge_length);
    j["clique"] = c;
  } else {
    j["clique"] = nullptr;
  }
  j["derived"] = euler_json(euler(s));
  return j;
}

GluedSurface parse_surface(const Json& j) {
  try {
    GluedSurface s;
    s.construction = j.at("construction").get<std::string>();
    for (const auto& jp : j.at("polygons")) {
      const PolygonKind kind = kind_from(jp.at("kind").get<std::string>());
      const Json& params = jp.at("params");
      PolygonSpec p;
      switch (kind) {
        case PolygonKind::IdealRegular:
          p = PolygonSpec::ideal(params.at("n").get<int>());
          break;
        case PolygonKind::SemiRegular2N:
          p = PolygonSpec::semi_regular(params.at("n").get<int>(), params.at("t").get<double>());
          break;
        case PolygonKind::Equilateral:
          p = PolygonSpec::equilateral(params.at("n").get<int>());
          break;
        case PolygonKind::HoledTriangle:
          p = PolygonSpec::holed_triangle(params.at("n").get<int>(), params.at("t").get<double>());
          break;
        case PolygonKind::GenusPatch:
          p = PolygonSpec::genus_patch(params.at("genus").get<int>(), params.at("boundaries").get<int>(),
                                       params.at("t").get<double>());
          break;
      }
      if (jp.contains("labels")) p.labels = jp.at("labels").get<std::vector<int>>();
      if (static_cast<int>(jp.at("sides").size()) != p.side_count())
        fail(ErrorKind::InvalidInput, "side count does not match the polygon kind");
      s.polygons.push_back(std::move(p));
    }
    for (const auto& jp : j.at("pairings")) {
      if (!jp.is_array() || jp.size() != 2) fail(ErrorKind::InvalidInput, "pairing must be [[p,s],[p,s]]");
      s.pairings.push_back({parse_side_ref(jp[0]), parse_side_ref(jp[1]), false});
    }
    for (const auto& k : j.at("reversed_pairings")) s.pairings.at(k.get<std::size_t>()).reversed = true;
    for (const auto& jb : j.at("boundaries")) {
      BoundaryCurve b;
      b.length = jb.at("length").get<double>();
      b.cap = jb.at("cap").get<std::string>() == "funnel" ? BoundaryCap::Funnel : BoundaryCap::Open;
      b.polygon = jb.at("polygon").get<int>();
      b.arcs = jb.at("arcs").get<int>();
      s.boundaries.push_back(b);
    }
    for (const auto& jb : j.at("boundary_pairings")) s.boundary_pairings.emplace_back(jb.at(0).get<int>(), jb.at(1).get<int>());
    const Json& c = j.at("clique");
    if (!c.is_null()) {
      CliqueData cd;
      cd.vertices = c.at("vertices").get<std::string>() == "polygon-centers" ? CliqueData::Vertices::PolygonCenters
                                                                                : CliqueData::Vertices::CornerLabels;
      cd.members = c.at("members").get<std::vector<int>>();
      cd.n_reading = c.at("n_reading").get<int>();
      cd.edge_length = c.at("edge_length").get<double>();
      s.clique = cd;
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed surface descriptor: ") + e.what());
  }
}

void audit_descriptor(const Json& j) {
  const GluedSurface s = parse_surface(j);
  audit(s);
  const Json derived = euler_json(euler(s));
  if (derived != j.at("derived")) fail(ErrorKind::InternalConsistency, "derived Euler data does not round-trip");
  if (surface_json(s) != j) fail(ErrorKind::InternalConsistency, "surface descriptor does not round-trip");
}

}  // namespace hypchroma
