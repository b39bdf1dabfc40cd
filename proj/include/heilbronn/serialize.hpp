#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "heilbronn/audit.hpp"
#include "heilbronn/configuration.hpp"
#include "heilbronn/errors.hpp"
#include "heilbronn/min_area.hpp"

namespace heilbronn {

using nlohmann::json;

inline json to_json(const Provenance& p) {
  json j{{"name", p.name()}, {"s", p.s}};
  switch (p.kind) {
    case Provenance::Kind::PaperConstruction:
      j["m"] = p.m;
      j["epsilon"] = p.epsilon;
      j["delta"] = p.delta;
      break;
    case Provenance::Kind::RandomDisc:
      j["seed"] = p.seed;
      break;
    case Provenance::Kind::CircleEquispaced:
      j["r"] = p.r;
      break;
    case Provenance::Kind::Optimizer:
      j["seed"] = p.seed;
      j["run_id"] = p.run_id;
      break;
    case Provenance::Kind::GridDisc:
      break;
  }
  return j;
}

inline Provenance provenance_from_json(const json& j) {
  Provenance p;
  const std::string name = j.at("name").get<std::string>();
  p.s = j.at("s").get<int>();
  if (name == "paper") {
    p.kind = Provenance::Kind::PaperConstruction;
    p.m = j.value("m", 0.0);
    p.epsilon = j.value("epsilon", 0.0);
    p.delta = j.value("delta", 0.0);
  } else if (name == "random") {
    p.kind = Provenance::Kind::RandomDisc;
    p.seed = j.value("seed", std::uint64_t{0});
  } else if (name == "grid") {
    p.kind = Provenance::Kind::GridDisc;
  } else if (name == "circle") {
    p.kind = Provenance::Kind::CircleEquispaced;
    p.r = j.value("r", 0.0);
  } else if (name == "optimizer") {
    p.kind = Provenance::Kind::Optimizer;
    p.seed = j.value("seed", std::uint64_t{0});
    p.run_id = j.value("run_id", std::string{});
  } else {
    throw precondition_error("unknown provenance name: " + name);
  }
  return p;
}

inline json to_json(const Configuration& config) {
  json points = json::array();
  for (const auto& p : config.points) points.push_back({p.x(), p.y()});
  json j{{"provenance", to_json(config.provenance)},
         {"s", config.s()},
         {"transform",
          {{"tx", config.transform.tx},
           {"ty", config.transform.ty},
           {"lambda", config.transform.lambda}}},
         {"points", std::move(points)}};
  if (!config.notes.empty()) j["notes"] = config.notes;
  return j;
}

inline Configuration configuration_from_json(const json& j) {
  Configuration config;
  config.provenance = provenance_from_json(j.at("provenance"));
  const auto& t = j.at("transform");
  config.transform = {t.at("tx").get<double>(), t.at("ty").get<double>(),
                      t.at("lambda").get<double>()};
  for (const auto& p : j.at("points"))
    config.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  if (j.contains("notes")) config.notes = j.at("notes").get<std::vector<std::string>>();
  if (config.s() != j.at("s").get<int>())
    throw precondition_error("configuration point count disagrees with s field");
  config.validate();
  return config;
}

inline json to_json(const EvaluationReport& r) {
  return json{{"s", r.s},
              {"min_area", r.min_area},
              {"argmin", {r.argmin[0], r.argmin[1], r.argmin[2]}},
              {"bound_ratios", r.bound_ratios},
              {"provenance", r.provenance},
              {"runtime_ms", r.runtime_ms}};
}

inline json to_json(const AuditRecord& r) {
  return json{{"name", r.name},
              {"samples", r.samples},
              {"passes", r.passes},
              {"failures", r.failures},
              {"counterexamples", r.counterexamples}};
}

namespace detail {

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

// x,y per row; lossy convenience view for plotting.
inline std::string to_csv(const Configuration& config) {
  std::string out = "x,y\n";
  for (const auto& p : config.points)
    out += detail::fmt_double(p.x()) + "," + detail::fmt_double(p.y()) + "\n";
  return out;
}

inline std::string evaluation_csv_header() {
  return "s,provenance,min_area,i,j,k,ratio_erdos,ratio_kps,ratio_paper,runtime_ms";
}

inline std::string to_csv_row(const EvaluationReport& r) {
  auto ratio = [&](const char* key) {
    const auto it = r.bound_ratios.find(key);
    return it == r.bound_ratios.end() ? std::string("nan") : detail::fmt_double(it->second);
  };
  return std::to_string(r.s) + "," + r.provenance + "," + detail::fmt_double(r.min_area) + "," +
         std::to_string(r.argmin[0]) + "," + std::to_string(r.argmin[1]) + "," +
         std::to_string(r.argmin[2]) + "," + ratio("erdos_1_over_s2") + "," +
         ratio("kps_logs_over_s2") + "," + ratio("paper_logs_over_s_sqrt_s") + "," +
         detail::fmt_double(r.runtime_ms);
}

// Write-then-rename so readers never observe a partial file.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("rename failed: " + path.string() + ": " + ec.message());
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace heilbronn
