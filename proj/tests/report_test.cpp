#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "hypchroma/errors.hpp"
#include "hypchroma/report.hpp"
#include "hypchroma/verify.hpp"

using namespace hypchroma;

TEST(Report, NumbersAreJsonSafe) {
  EXPECT_EQ(number(std::numeric_limits<double>::infinity()), Json("inf"));
  EXPECT_TRUE(number(std::nan("")).is_string());
  EXPECT_DOUBLE_EQ(number(0.1).get<double>(), 0.1);
}

TEST(Report, DumpEndsWithNewline) {
  const std::string s = dump(Json{{"a", 1}});
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s.back(), '\n');
}

TEST(Report, BoundsFields) {
  const Json j = to_json(bounds::report_for_distance(1.0));
  EXPECT_EQ(j["upper_colors"], 138);
  EXPECT_EQ(j["lower_clique"], 2);
  EXPECT_TRUE(j["details"]["degenerate_lower"].get<bool>());
  const Json g = to_json(bounds::report_for_genus(28, std::nullopt));
  EXPECT_EQ(g["lower_clique"], 12);
  EXPECT_EQ(g["min_genus"], 28);
  EXPECT_EQ(g["T_N"], 44);
}

TEST(Report, SurfaceRoundTrip) {
  for (const GluedSurface& s : {build_ideal_surface(5), build_truncated_surface(4, 0.7), patch_surface(2, 2, 1.0)}) {
    const Json j = surface_json(s);
    audit_descriptor(j);
    EXPECT_EQ(dump(surface_json(parse_surface(j))), dump(j));
  }
}

TEST(Report, SurfaceDerivedData) {
  const Json j = surface_json(build_ideal_surface(3));
  EXPECT_EQ(j["derived"]["chi"], -2);
  EXPECT_EQ(j["clique"]["size"], 4);
  EXPECT_EQ(j["polygons"][0]["sides"][0], "inf");
}

TEST(Report, TamperedDescriptorsAreRejected) {
  Json j = surface_json(build_ideal_surface(4));
  Json wrong = j;
  wrong["derived"]["genus"] = 7;
  EXPECT_THROW(audit_descriptor(wrong), Error);
  Json broken = j;
  broken.erase("polygons");
  EXPECT_THROW(parse_surface(broken), Error);
  Json bad_kind = j;
  bad_kind["polygons"][0]["kind"] = "hexagon";
  EXPECT_THROW(parse_surface(bad_kind), Error);
}

TEST(Report, NetExperimentIsByteReproducible) {
  NetExperimentParams p;
  p.region_radius = 3.5;
  p.trials = 2000;
  p.seed = 12;
  const std::string a = dump(to_json(run_net_experiment(p)));
  p.threads = 3;
  const std::string b = dump(to_json(run_net_experiment(p)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"wall_time\": null"), std::string::npos);
}

TEST(Report, FaceReportAndCollar) {
  const Json f = to_json(face_report(load_rotation_system(std::filesystem::path(HYPCHROMA_TEST_DATA) / "k7.rot")));
  EXPECT_EQ(f["F"], 14);
  EXPECT_EQ(f["genus"], 1);
  const auto h = collar::slice_half_collar(0.1, std::asinh(1.0 / std::sqrt(2.0)), 4.0, 0.4);
  const Json c = to_json(collar::color_cylinder(h, h, 4.0));
  EXPECT_TRUE(c.contains("sections"));
  EXPECT_LE(c["colors_used"].get<int>(), 10);
}

TEST(Verify, AllSuitesPass) {
  VerifyOptions o;
  o.data_dir = HYPCHROMA_TEST_DATA;
  const auto results = run_verify("all", o);
  const Json j = to_json(results);
  EXPECT_TRUE(j["ok"].get<bool>()) << j["failures"].dump(2);
  EXPECT_GT(results.size(), 100u);
  EXPECT_THROW(run_verify("nope", o), Error);
}

TEST(Verify, CorruptK7IsReported) {
  VerifyOptions o;
  o.data_dir = HYPCHROMA_TEST_DATA;
  o.k7 = std::filesystem::path(HYPCHROMA_TEST_DATA) / "k7_perturbed.rot";
  const Json j = to_json(run_verify("rotations", o));
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_NE(j["failures"].dump().find("genus mismatch"), std::string::npos);
}
