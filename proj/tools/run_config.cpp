#include "run_config.hpp"

#include <cmath>

#include "dkp/errors.hpp"

namespace dkp::cli {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Transmission: return "transmission";
    case Command::Spectrum: return "spectrum";
    case Command::Verify: return "verify";
  }
  return "?";
}

Command command_from_name(const std::string& s) {
  for (auto c : {Command::Transmission, Command::Spectrum, Command::Verify})
    if (s == command_name(c)) return c;
  throw DomainError("unknown command '" + s + "'");
}

Shape parse_shape(const std::string& s, Command c) {
  bool well = c == Command::Spectrum;
  if (s == "ws" || s == "woods-saxon") return well ? Shape::WoodsSaxonWell : Shape::WoodsSaxonBarrier;
  if (s == "square") return well ? Shape::SquareWell : Shape::SquareBarrier;
  if (s == "cusp") return well ? Shape::CuspWell : Shape::CuspBarrier;
  return shape_from_name(s);
}

void RunConfig::validate() const {
  if (command == Command::Verify) return;
  potential.validate();
  if (command == Command::Transmission) {
    if (potential.is_well()) throw DomainError("transmission needs a barrier shape");
    const auto& g = energy_grid;
    if (!finite(g.min) || !finite(g.max) || !(g.min < g.max))
      throw DomainError("energy grid must satisfy emin < emax");
    if (!(g.min > 1.0)) throw DomainError("energy grid must lie above the continuum edge E = 1");
    if (g.count < 2) throw DomainError("energy grid needs at least 2 points");
    if (compare != Compare::None && potential.shape != Shape::WoodsSaxonBarrier)
      throw DomainError("--compare needs the Woods-Saxon barrier as the first curve");
    if (compare == Compare::Cusp && !(cusp_a > 0 && cusp_V0 >= 0 && finite(cusp_a) && finite(cusp_V0)))
      throw DomainError("cusp comparison parameters must be positive");
  } else {
    if (!potential.is_well()) throw DomainError("spectrum needs a well shape");
    const auto& g = v0_grid;
    if (!finite(g.min) || !finite(g.max) || !finite(g.step) || !(g.min < g.max) || !(g.min >= 0))
      throw DomainError("depth grid must satisfy 0 <= v0min < v0max");
    if (!(g.step > 0) || g.step > g.max - g.min) throw DomainError("depth step must be in (0, v0max - v0min]");
    if (compare != Compare::None) throw DomainError("--compare applies to transmission only");
  }
}

RunConfig from_json(const nlohmann::json& j, RunConfig cfg) {
  if (j.contains("command")) cfg.command = command_from_name(j.at("command").get<std::string>());
  if (j.contains("potential")) {
    const auto& p = j.at("potential");
    if (p.contains("shape")) cfg.potential.shape = parse_shape(p.at("shape").get<std::string>(), cfg.command);
    if (p.contains("a")) cfg.potential.a = p.at("a").get<double>();
    if (p.contains("L")) cfg.potential.L = p.at("L").get<double>();
    if (p.contains("V0")) cfg.potential.V0 = p.at("V0").get<double>();
  }
  if (j.contains("energy_grid")) {
    const auto& g = j.at("energy_grid");
    if (g.contains("min")) cfg.energy_grid.min = g.at("min").get<double>();
    if (g.contains("max")) cfg.energy_grid.max = g.at("max").get<double>();
    if (g.contains("count")) cfg.energy_grid.count = g.at("count").get<int>();
  }
  if (j.contains("v0_grid")) {
    const auto& g = j.at("v0_grid");
    if (g.contains("min")) cfg.v0_grid.min = g.at("min").get<double>();
    if (g.contains("max")) cfg.v0_grid.max = g.at("max").get<double>();
    if (g.contains("step")) cfg.v0_grid.step = g.at("step").get<double>();
  }
  if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
  if (j.contains("format")) {
    auto f = j.at("format").get<std::string>();
    if (f == "csv") cfg.format = Format::Csv;
    else if (f == "json") cfg.format = Format::Json;
    else throw DomainError("format must be csv or json");
  }
  if (j.contains("oracle_check")) cfg.oracle_check = j.at("oracle_check").get<bool>();
  if (j.contains("compare")) {
    auto c = j.at("compare").get<std::string>();
    if (c == "none") cfg.compare = Compare::None;
    else if (c == "square") cfg.compare = Compare::Square;
    else if (c == "cusp") cfg.compare = Compare::Cusp;
    else throw DomainError("compare must be none, square or cusp");
  }
  if (j.contains("cusp_a")) cfg.cusp_a = j.at("cusp_a").get<double>();
  if (j.contains("cusp_V0")) cfg.cusp_V0 = j.at("cusp_V0").get<double>();
  if (j.contains("oracle_only")) cfg.oracle_only = j.at("oracle_only").get<bool>();
  if (j.contains("fixture")) cfg.fixture = j.at("fixture").get<std::string>();
  return cfg;
}

nlohmann::json to_json(const RunConfig& cfg) {
  static const char* compares[] = {"none", "square", "cusp"};
  return {
      {"command", command_name(cfg.command)},
      {"potential",
       {{"shape", shape_name(cfg.potential.shape)},
        {"a", cfg.potential.a},
        {"L", cfg.potential.L},
        {"V0", cfg.potential.V0}}},
      {"energy_grid", {{"min", cfg.energy_grid.min}, {"max", cfg.energy_grid.max}, {"count", cfg.energy_grid.count}}},
      {"v0_grid", {{"min", cfg.v0_grid.min}, {"max", cfg.v0_grid.max}, {"step", cfg.v0_grid.step}}},
      {"output_path", cfg.output_path},
      {"format", cfg.format == Format::Csv ? "csv" : "json"},
      {"oracle_check", cfg.oracle_check},
      {"compare", compares[static_cast<int>(cfg.compare)]},
      {"cusp_a", cfg.cusp_a},
      {"cusp_V0", cfg.cusp_V0},
      {"oracle_only", cfg.oracle_only},
      {"fixture", cfg.fixture},
  };
}

}  // namespace dkp::cli
