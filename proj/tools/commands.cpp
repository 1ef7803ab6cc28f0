#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dkp/boundstates.hpp"
#include "dkp/errors.hpp"
#include "dkp/oracle.hpp"
#include "dkp/parallel.hpp"
#include "dkp/scattering.hpp"

namespace dkp::cli {

using nlohmann::json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  return buf;
}

namespace {

std::string short_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

TransmissionPoint point(const PotentialSpec& s, double E) {
  switch (s.shape) {
    case Shape::WoodsSaxonBarrier: return transmission(E, s);
    case Shape::SquareBarrier: return square_barrier_transmission(E, s.L, s.V0);
    default: return ode_transmission(E, s);
  }
}

std::vector<double> resonances(const PotentialSpec& s, const EnergyGrid& g) {
  int n = std::max(g.count, 400);
  switch (s.shape) {
    case Shape::WoodsSaxonBarrier: return find_resonances(s, g.min, g.max, n);
    case Shape::SquareBarrier: return find_square_resonances(s.L, s.V0, g.min, g.max, n);
    default: return s.V0 == 0 ? std::vector<double>{} : ode_resonances(s, g.min, g.max, std::max(g.count, 200));
  }
}

struct Curve {
  PotentialSpec spec;
  std::vector<TransmissionPoint> points;
  std::vector<double> resonances;
};

Curve sweep(const PotentialSpec& s, const EnergyGrid& g) {
  Curve c{s, {}, {}};
  c.points = parallel_map<TransmissionPoint>(g.count, [&](std::size_t i) {
    double E = g.min + (g.max - g.min) * static_cast<double>(i) / (g.count - 1);
    auto p = point(s, E);
    if (std::abs(p.T + p.R - 1.0) > 1e-8) {
      std::ostringstream m;
      m << "|T + R - 1| = " << std::abs(p.T + p.R - 1.0) << " at E = " << short_number(E);
      throw UnitarityViolationError(m.str());
    }
    return p;
  });
  c.resonances = resonances(s, g);
  return c;
}

json spec_json(const PotentialSpec& s) {
  return {{"shape", shape_name(s.shape)}, {"a", s.a}, {"L", s.L}, {"V0", s.V0}};
}

// Opens cfg.output_path when set, else writes to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void print_resonances(std::ostream& os, const Curve& c) {
  os << shape_name(c.spec.shape) << " resonances:";
  if (c.resonances.empty()) os << (c.spec.V0 == 0 ? " none (V0 = 0, T = 1 everywhere)" : " none");
  for (double E : c.resonances) os << ' ' << short_number(E);
  os << '\n';
}

}  // namespace

int cmd_transmission(const RunConfig& cfg, std::ostream& data, std::ostream& console) {
  cfg.validate();
  std::vector<Curve> curves{sweep(cfg.potential, cfg.energy_grid)};
  if (cfg.compare == Compare::Square)
    curves.push_back(sweep({Shape::SquareBarrier, 1.0, cfg.potential.L, cfg.potential.V0}, cfg.energy_grid));
  if (cfg.compare == Compare::Cusp)
    curves.push_back(sweep({Shape::CuspBarrier, cfg.cusp_a, 1.0, cfg.cusp_V0}, cfg.energy_grid));

  double worst = 0;
  if (cfg.oracle_check && cfg.potential.shape != Shape::CuspBarrier) {
    const auto& c = curves.front();
    auto d = parallel_map<double>(c.points.size(), [&](std::size_t i) {
      return std::abs(ode_transmission(c.points[i].E, c.spec).T - c.points[i].T);
    });
    worst = *std::max_element(d.begin(), d.end());
  }

  Sink sink(cfg.output_path, data);
  std::ostream& os = *sink;
  if (cfg.format == Format::Csv) {
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (k) os << '\n';
      os << "E,T,R\n";
      for (const auto& p : curves[k].points)
        os << format_number(p.E) << ',' << format_number(p.T) << ',' << format_number(p.R) << '\n';
    }
  } else {
    json j = {{"columns", {"E", "T", "R"}}, {"curves", json::array()}};
    for (const auto& c : curves) {
      json pts = json::array();
      for (const auto& p : c.points) pts.push_back({p.E, p.T, p.R});
      j["curves"].push_back({{"potential", spec_json(c.spec)}, {"points", pts}, {"resonances", c.resonances}});
    }
    os << j.dump(1) << '\n';
  }
  os.flush();

  for (const auto& c : curves) print_resonances(console, c);
  if (curves.size() == 2) {
    for (double E : curves[0].resonances) {
      const auto& other = curves[1].resonances;
      if (other.empty()) break;
      double near = *std::min_element(other.begin(), other.end(), [E](double x, double y) {
        return std::abs(x - E) < std::abs(y - E);
      });
      console << "resonance offset: " << short_number(E) << " -> " << short_number(near) << " ("
              << short_number(near - E) << ")\n";
    }
  }
  if (cfg.oracle_check && cfg.potential.shape != Shape::CuspBarrier) {
    console << "oracle check: max |dT| = " << worst << '\n';
    if (worst > 1e-6) return kNumerical;
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& data, std::ostream& console) {
  cfg.validate();
  const auto& s = cfg.potential;
  const auto& g = cfg.v0_grid;
  SpectrumBranch b;
  BranchModel model;
  if (s.shape == Shape::WoodsSaxonWell) {
    b = trace_spectrum(s.a, s.L, g.min, g.max, g.step).front();
    model = woods_saxon_model(s.a, s.L);
  } else if (s.shape == Shape::SquareWell) {
    b = square_well_spectrum(s.L, g.min, g.max, g.step);
    model = square_well_model(s.L);
  } else {
    model = shooting_model(Shape::CuspWell, s.a, 0.0);
    TraceOptions opt;
    opt.V0_min = g.min, opt.V0_max = g.max, opt.step0 = g.step, opt.antiparticle_points = 20;
    b = trace_branch(model, opt);
    b.a = s.a;
  }

  double residual = std::nan("");
  if (b.turning_point) {
    const auto& tp = *b.turning_point;
    residual = s.shape == Shape::WoodsSaxonWell
                   ? std::abs(eigen_residual(tp.E_cr, {Shape::WoodsSaxonWell, s.a, s.L, tp.V_cr}))
                   : std::abs(model.mismatch(tp.E_cr, tp.V_cr));
  }

  double worst = 0;
  if (cfg.oracle_check && s.shape != Shape::CuspWell) {
    std::vector<BoundState> sample;
    for (const auto& p : b.points)
      if (p.kind == Kind::Particle && (!b.turning_point || p.V0 < b.turning_point->V_cr - 0.01))
        sample.push_back(p);
    std::size_t stride = std::max<std::size_t>(1, sample.size() / 20);
    auto d = parallel_map<double>(sample.size() / stride, [&](std::size_t i) {
      const auto& p = sample[i * stride];
      PotentialSpec w{s.shape, s.a, s.L, p.V0};
      double E = shoot_bound_state(w, {p.E - 1e-4, std::min(p.E + 1e-4, 1.0 - 1e-10)},
                                   IntegratorConfig::for_spec(w, p.E));
      return std::abs(E - p.E);
    });
    if (!d.empty()) worst = *std::max_element(d.begin(), d.end());
  }

  Sink sink(cfg.output_path, data);
  std::ostream& os = *sink;
  if (cfg.format == Format::Csv) {
    os << "V0,E,N,kind\n";
    for (const auto& p : b.points)
      os << format_number(p.V0) << ',' << format_number(p.E) << ',' << format_number(p.N) << ','
         << kind_name(p.kind) << '\n';
  } else {
    json pts = json::array();
    for (const auto& p : b.points) pts.push_back({p.V0, p.E, p.N, kind_name(p.kind)});
    json summary = {{"a", s.a}, {"L", s.L}};
    if (b.turning_point) {
      summary["V_cr"] = b.turning_point->V_cr;
      summary["E_cr"] = b.turning_point->E_cr;
      summary["residual_err"] = residual;
    } else {
      summary["V_cr"] = nullptr;
      summary["E_cr"] = nullptr;
      summary["residual_err"] = nullptr;
    }
    json j = {{"potential", spec_json(s)},
              {"columns", {"V0", "E", "N", "kind"}},
              {"points", pts},
              {"summary", summary}};
    os << j.dump(1) << '\n';
  }
  os.flush();

  if (cfg.oracle_check && s.shape != Shape::CuspWell)
    console << "oracle check: max |dE| = " << worst << '\n';
  if (!b.turning_point) {
    console << "no turning point for V0 in [" << short_number(g.min) << ", " << short_number(g.max) << "]\n";
    return kNoFold;
  }
  char line[160];
  std::snprintf(line, sizeof line, "V_cr=%.8f, E_cr=%.8f, residual=%.3e\n", b.turning_point->V_cr,
                b.turning_point->E_cr, residual);
  console << line;
  if (cfg.oracle_check && worst > 1e-6) return kNumerical;
  return kOk;
}

int run(const RunConfig& cfg, std::ostream& data, std::ostream& console, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Transmission: return cmd_transmission(cfg, data, console);
      case Command::Spectrum: return cmd_spectrum(cfg, data, console);
      case Command::Verify: return cmd_verify(cfg, console);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NoFoldError& e) {
    err << "error: " << e.what() << '\n';
    return kNoFold;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace dkp::cli
