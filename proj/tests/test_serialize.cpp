#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "heilbronn/generators.hpp"
#include "heilbronn/serialize.hpp"

using namespace heilbronn;

TEST_CASE("configuration JSON round-trips bit-for-bit") {
  for (const Configuration& config :
       {construct_configuration(9), random_disc(12, 321), circle_equispaced(7, 0.9),
        grid_disc(9)}) {
    const std::string text = to_json(config).dump();
    const Configuration back = configuration_from_json(json::parse(text));
    REQUIRE(back.s() == config.s());
    for (int i = 0; i < config.s(); ++i) {
      CHECK(back.points[static_cast<std::size_t>(i)].x() ==
            config.points[static_cast<std::size_t>(i)].x());
      CHECK(back.points[static_cast<std::size_t>(i)].y() ==
            config.points[static_cast<std::size_t>(i)].y());
    }
    CHECK(back.transform.tx == config.transform.tx);
    CHECK(back.transform.ty == config.transform.ty);
    CHECK(back.transform.lambda == config.transform.lambda);
    CHECK(back.provenance.name() == config.provenance.name());
  }
}

TEST_CASE("evaluation report serialization carries all ratio fields") {
  const EvaluationReport report = min_triangle_area(circle_equispaced(9, 1.0));
  const json j = to_json(report);
  CHECK(j.at("s") == 9);
  CHECK(j.at("bound_ratios").contains("erdos_1_over_s2"));
  CHECK(j.at("bound_ratios").contains("kps_logs_over_s2"));
  CHECK(j.at("bound_ratios").contains("paper_logs_over_s_sqrt_s"));
  CHECK(j.at("min_area").get<double>() == report.min_area);

  const std::string row = to_csv_row(report);
  CHECK(row.rfind("9,circle,", 0) == 0);
}

TEST_CASE("audit record serialization") {
  AuditRecord rec;
  rec.name = "demo";
  rec.tally(true);
  rec.tally(false, "witness");
  const json j = to_json(rec);
  CHECK(j.at("samples") == 2);
  CHECK(j.at("passes") == 1);
  CHECK(j.at("failures") == 1);
  CHECK(j.at("counterexamples").size() == 1);
}

TEST_CASE("atomic write leaves no temp file behind") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "heilbronn_atomic_test.json";
  atomic_write_file(path, "{\"ok\": true}\n");
  CHECK(std::filesystem::exists(path));
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  const json j = read_json_file(path);
  CHECK(j.at("ok") == true);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_json_file("/nonexistent/missing.json"), std::runtime_error);
}

TEST_CASE("malformed JSON is reported") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "heilbronn_bad.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(path), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("configuration CSV lists one point per row") {
  const Configuration config = circle_equispaced(5, 1.0);
  const std::string csv = to_csv(config);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
}
