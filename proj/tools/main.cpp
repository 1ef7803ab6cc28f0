#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dkp/errors.hpp"

using namespace dkp;
using namespace dkp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Woods-Saxon barrier transmission and well spectra for the 1+1 DKP equation"};
  app.require_subcommand(1);

  std::string config_path, shape, format, compare;
  double a = 0, L = 0, V0 = 0, emin = 0, emax = 0, v0min = 0, v0max = 0, v0step = 0, cusp_a = 0, cusp_V0 = 0;
  int n = 0;
  std::string out;
  bool oracle_check = false, oracle_only = false;
  std::string fixture;

  auto common = [&](CLI::App* s) {
    s->add_option("--config", config_path, "JSON RunConfig; flags given here override it");
    s->add_option("-o,--out", out, "output file (default: standard output)");
    s->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto potential = [&](CLI::App* s) {
    s->add_option("--shape", shape, "ws, square, cusp or a full shape name");
    s->add_option("--a", a, "steepness");
    s->add_option("--L", L, "half width");
    s->add_option("--V0", V0, "height or depth");
    s->add_flag("--oracle-check", oracle_check, "cross-check against direct integration");
  };

  auto* tr = app.add_subcommand("transmission", "E,T,R table and resonance list");
  common(tr), potential(tr);
  tr->add_option("--emin", emin);
  tr->add_option("--emax", emax);
  tr->add_option("--n", n, "grid points");
  tr->add_option("--compare", compare, "square or cusp")->check(CLI::IsMember({"none", "square", "cusp"}));
  tr->add_option("--cusp-a", cusp_a, "cusp steepness for --compare cusp (1.2)");
  tr->add_option("--cusp-V0", cusp_V0, "cusp height for --compare cusp (5)");

  auto* sp = app.add_subcommand("spectrum", "V0,E,N,kind trace and turning point");
  common(sp), potential(sp);
  sp->add_option("--v0min", v0min);
  sp->add_option("--v0max", v0max);
  sp->add_option("--v0step", v0step, "initial continuation step");

  auto* ve = app.add_subcommand("verify", "reference fixtures and oracle invariants");
  ve->add_option("--config", config_path);
  ve->add_flag("--oracle-only", oracle_only);
  ve->add_option("--fixture", fixture, "run one fixture by id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kInvalid);
  }

  RunConfig cfg;
  try {
    auto* sub = app.get_subcommands().front();
    cfg.command = command_from_name(sub->get_name());
    cfg.potential.shape = cfg.command == Command::Spectrum ? Shape::WoodsSaxonWell : Shape::WoodsSaxonBarrier;
    cfg.potential = {cfg.potential.shape, 2.0, 2.0, cfg.command == Command::Spectrum ? 0.0 : 5.0};
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw DomainError("cannot read config '" + config_path + "'");
      cfg = from_json(nlohmann::json::parse(in), cfg);
    }
    auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
    if (given("--shape")) cfg.potential.shape = parse_shape(shape, cfg.command);
    if (given("--a")) cfg.potential.a = a;
    if (given("--L")) cfg.potential.L = L;
    if (given("--V0")) cfg.potential.V0 = V0;
    if (given("--emin")) cfg.energy_grid.min = emin;
    if (given("--emax")) cfg.energy_grid.max = emax;
    if (given("--n")) cfg.energy_grid.count = n;
    if (given("--v0min")) cfg.v0_grid.min = v0min;
    if (given("--v0max")) cfg.v0_grid.max = v0max;
    if (given("--v0step")) cfg.v0_grid.step = v0step;
    if (given("--out")) cfg.output_path = out;
    if (given("--format")) cfg.format = format == "json" ? Format::Json : Format::Csv;
    if (given("--oracle-check")) cfg.oracle_check = oracle_check;
    if (given("--compare"))
      cfg.compare = compare == "square" ? Compare::Square : compare == "cusp" ? Compare::Cusp : Compare::None;
    if (given("--cusp-a")) cfg.cusp_a = cusp_a;
    if (given("--cusp-V0")) cfg.cusp_V0 = cusp_V0;
    if (given("--oracle-only")) cfg.oracle_only = oracle_only;
    if (given("--fixture")) cfg.fixture = fixture;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  // keep data on stdout parseable: messages move to stderr when no file is given
  bool data_on_stdout = cfg.command != Command::Verify && cfg.output_path.empty();
  return run(cfg, std::cout, data_on_stdout ? std::cerr : std::cout, std::cerr);
}
