#pragma once

// Batch description shared by the command line and --config files.

#include <optional>
#include <string>

#include <json.hpp>

#include "dkp/potentials.hpp"

namespace dkp::cli {

enum class Command { Transmission, Spectrum, Verify };
enum class Format { Csv, Json };
enum class Compare { None, Square, Cusp };

struct EnergyGrid {
  double min = 1.01;
  double max = 4.0;
  int count = 400;
};

struct DepthGrid {
  double min = 0.0;
  double max = 5.0;
  double step = 0.01;
};

struct RunConfig {
  Command command = Command::Transmission;
  PotentialSpec potential;
  EnergyGrid energy_grid;
  DepthGrid v0_grid;
  std::string output_path;  // empty: standard output
  Format format = Format::Csv;
  bool oracle_check = false;

  Compare compare = Compare::None;
  // cusp barrier drawn next to the Woods-Saxon one by --compare cusp
  double cusp_a = 1.2;
  double cusp_V0 = 5.0;

  bool oracle_only = false;
  std::string fixture;

  /// DomainError on ill-ordered grids, count < 2 or a shape that does not
  /// fit the command.
  void validate() const;
};

const char* command_name(Command c);
Command command_from_name(const std::string& s);

/// Accepts the full shape names and the short forms ws, square, cusp; short
/// forms resolve to a barrier or a well by command.
Shape parse_shape(const std::string& s, Command c);

/// Missing keys keep the values already in `base`.
RunConfig from_json(const nlohmann::json& j, RunConfig base = {});
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace dkp::cli
