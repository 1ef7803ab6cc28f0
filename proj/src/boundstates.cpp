#include "dkp/boundstates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "dkp/errors.hpp"
#include "dkp/parallel.hpp"

namespace dkp {

using specfun::HypArg;
using specfun::hyp2f1_eval;
using specfun::sqrt_real;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEdge = 1e-12;

// log(1 + e^t) without overflow
double log1pexp(double t) { return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

struct Halves {
  Complex FL, DL, FR, DR;
  double y0 = 0, w0 = 0;
};

Halves halves(const BoundStateParams& p, double a, double L) {
  double e = std::exp(-a * L);
  Halves h;
  h.y0 = 1.0 / (1.0 + e);
  h.w0 = e / (1.0 + e);
  HypArg arg{h.y0, h.w0};
  Complex c = 1.0 + 2.0 * p.sigma;
  auto r = hyp2f1_eval(0.5 - p.gamma - p.lambda + p.sigma, 0.5 - p.gamma + p.lambda + p.sigma, c,
                       arg);
  auto l = hyp2f1_eval(0.5 + p.gamma - p.lambda + p.sigma, 0.5 + p.gamma + p.lambda + p.sigma, c,
                       arg);
  h.FR = r.value, h.DR = r.scaled_derivative;
  h.FL = l.value, h.DL = l.scaled_derivative;
  return h;
}

Halves halves_at(double E, const PotentialSpec& spec) {
  try {
    return halves(bound_params(E, spec), spec.a, spec.L);
  } catch (const DegenerateParameterError&) {
    // 2 gamma exactly integral; the condition is continuous there
    Halves lo = halves(bound_params(E - 1e-7, spec), spec.a, spec.L);
    Halves hi = halves(bound_params(E + 1e-7, spec), spec.a, spec.L);
    Halves m = lo;
    m.FL = 0.5 * (lo.FL + hi.FL), m.DL = 0.5 * (lo.DL + hi.DL);
    m.FR = 0.5 * (lo.FR + hi.FR), m.DR = 0.5 * (lo.DR + hi.DR);
    return m;
  }
}

Complex scaled(const Halves& h, const BoundStateParams& p) {
  return p.sigma * h.w0 + 0.5 * (h.DL / h.FL + h.DR / h.FR);
}

PotentialSpec ws_well(double a, double L, double V0) { return {Shape::WoodsSaxonWell, a, L, V0}; }

double safe_eval(const std::function<double(double)>& f, double x) {
  try {
    double v = f(x);
    return std::isfinite(v) ? v : kNaN;
  } catch (const Error&) {
    return kNaN;
  }
}

bool differ(double a, double b) { return (a < 0) != (b < 0); }

// Polish a sign change and reject it when it is a pole rather than a zero.
std::optional<double> polish(const std::function<double(double)>& f, double lo, double hi,
                             double flo, double fhi) {
  if (lo > hi) std::swap(lo, hi), std::swap(flo, fhi);
  boost::uintmax_t iters = 200;
  auto tol = [](double x, double y) { return std::abs(x - y) <= 1e-15 * std::max(1.0, std::abs(x)); };
  try {
    auto r = boost::math::tools::toms748_solve(
        [&](double x) {
          double v = safe_eval(f, x);
          if (std::isnan(v)) throw NoRootError("mismatch undefined inside bracket");
          return v;
        },
        lo, hi, flo, fhi, tol, iters);
    double x = 0.5 * (r.first + r.second);
    double v = safe_eval(f, x);
    if (std::isnan(v) || std::abs(v) > 1e-6) return std::nullopt;
    return x;
  } catch (const NoRootError&) {
    return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// First genuine zero met walking from x0 towards limit with doubling steps.
std::optional<double> walk(const std::function<double(double)>& f, double x0, double f0, double dx,
                           double limit, int max_steps = 80) {
  double dir = limit > x0 ? 1.0 : -1.0;
  double xp = x0, fp = f0;
  for (int k = 0; k < max_steps; ++k) {
    double x = x0 + dir * dx * std::ldexp(1.0, k);
    if ((x - limit) * dir > 0) x = limit;
    double v = safe_eval(f, x);
    if (!std::isnan(v)) {
      if (!std::isnan(fp) && differ(fp, v)) {
        if (auto r = polish(f, xp, x, fp, v)) return r;
      }
      xp = x, fp = v;
    }
    if (x == limit) break;
  }
  return std::nullopt;
}

// Zero of f closest to x0 inside (lo, hi).
std::optional<double> nearest_root(const std::function<double(double)>& f, double x0, double dx,
                                   double lo, double hi) {
  x0 = std::clamp(x0, lo, hi);
  double f0 = safe_eval(f, x0);
  if (f0 == 0.0) return x0;
  auto up = walk(f, x0, f0, dx, hi);
  auto down = walk(f, x0, f0, dx, lo);
  if (up && down) return std::abs(*up - x0) <= std::abs(*down - x0) ? up : down;
  return up ? up : down;
}

double root_V0(const BranchModel& m, double E, double V0_guess, double dV) {
  auto f = [&](double V0) { return m.mismatch(E, V0); };
  auto r = nearest_root(f, V0_guess, dV, 1e-9, 1e3);
  return r ? *r : kNaN;
}

double root_E(const BranchModel& m, double V0, double E_guess, double dE) {
  auto f = [&](double E) { return m.mismatch(E, V0); };
  auto r = nearest_root(f, E_guess, dE, -1.0 + kEdge, 1.0 - kEdge);
  return r ? *r : kNaN;
}

void fill_norms(const BranchModel& m, std::vector<BoundState>& pts) {
  if (!m.norm) return;
  auto N = parallel_map<double>(pts.size(), [&](std::size_t i) {
    try {
      return m.norm(pts[i].E, pts[i].V0);
    } catch (const Error&) {
      return kNaN;
    }
  });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i].N = N[i];
    if (!std::isnan(N[i])) pts[i].kind = N[i] > 0 ? Kind::Particle : Kind::Antiparticle;
  }
}

double golden_max(const std::function<double(double)>& g, double lo, double hi, double& gmax,
                  double tol) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  auto val = [&](double u) {
    double v = g(u);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = val(x1), f2 = val(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + r * (hi - lo), f2 = val(x2);
    } else {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - r * (hi - lo), f1 = val(x1);
    }
  }
  double u = f1 > f2 ? x1 : x2;
  gmax = std::max(f1, f2);
  return u;
}

}  // namespace

BoundStateParams bound_params(double E, const PotentialSpec& spec) {
  if (spec.shape != Shape::WoodsSaxonWell) throw DomainError("bound states need a Woods-Saxon well");
  spec.validate();
  if (!(std::abs(E) < 1.0)) throw DomainError("bound states need |E| < 1");
  BoundStateParams p;
  p.E = E;
  double a = spec.a, V0 = spec.V0;
  p.sigma = sqrt_real(1.0 - E * E) / a;
  p.gamma = sqrt_real(1.0 - (E + V0) * (E + V0)) / a;
  p.lambda = sqrt_real(a * a - 4.0 * V0 * V0) / (2.0 * a);
  return p;
}

Complex matching_function(double E, const PotentialSpec& spec) {
  auto p = bound_params(E, spec);
  auto h = halves_at(E, spec);
  if (std::abs(h.FL) < 1e-14 || std::abs(h.FR) < 1e-14)
    throw SpuriousPoleError("denominator hypergeometric vanishes");
  return scaled(h, p);
}

Complex eigen_residual(double E, const PotentialSpec& spec) {
  auto p = bound_params(E, spec);
  auto h = halves_at(E, spec);
  if (std::abs(h.FL) < 1e-14 || std::abs(h.FR) < 1e-14)
    throw SpuriousPoleError("denominator hypergeometric vanishes");
  // F'/F = D / (y0 w0 F); the sigma term is 2 sigma / y0
  return 2.0 * p.sigma / h.y0 + (h.DL / h.FL + h.DR / h.FR) / (h.y0 * h.w0);
}

std::vector<double> solve_bound_states(const PotentialSpec& spec, std::optional<double> E_guess) {
  if (spec.shape != Shape::WoodsSaxonWell) throw DomainError("bound states need a Woods-Saxon well");
  spec.validate();
  const double lo = -1.0 + 1e-9, hi = 1.0 - 1e-9;
  std::vector<double> grid;
  const int n = 2000;
  for (int i = 0; i < n; ++i) grid.push_back(-std::cos(specfun::kPi * (i + 0.5) / n));
  for (double k = 3.0; k <= 9.0; k += 0.25) {
    grid.push_back(-1.0 + std::pow(10.0, -k));
    grid.push_back(1.0 - std::pow(10.0, -k));
  }
  if (E_guess && std::abs(*E_guess) < 1.0) {
    double g = *E_guess;
    for (int i = -100; i <= 100; ++i) grid.push_back(g + 1e-5 * i);
    for (double k = 3.0; k <= 9.0; k += 0.125) {
      grid.push_back(g + std::pow(10.0, -k));
      grid.push_back(g - std::pow(10.0, -k));
    }
  }
  std::erase_if(grid, [&](double E) { return E < lo || E > hi; });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  struct Sample {
    double E, re;
    bool ok;
  };
  std::vector<Sample> s;
  s.reserve(grid.size());
  for (double E : grid) {
    try {
      auto h = halves_at(E, spec);
      bool ok = std::abs(h.FL) > 1e-10 && std::abs(h.FR) > 1e-10;
      double re = scaled(h, bound_params(E, spec)).real();
      s.push_back({E, re, ok && std::isfinite(re)});
    } catch (const Error&) {
      s.push_back({E, kNaN, false});
    }
  }
  auto f = [&](double E) { return matching_function(E, spec).real(); };
  std::vector<double> roots;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (!s[i].ok || !s[i + 1].ok || !differ(s[i].re, s[i + 1].re)) continue;
    auto r = polish(f, s[i].E, s[i + 1].E, s[i].re, s[i + 1].re);
    if (!r) continue;
    auto h = halves_at(*r, spec);
    if (std::abs(h.FL) <= 1e-10 || std::abs(h.FR) <= 1e-10) continue;
    Complex res = eigen_residual(*r, spec);
    double scale = std::abs(h.DR / h.FR) / (h.y0 * h.w0);
    if (std::abs(res.imag()) > 1e-6 * (1.0 + scale)) continue;
    if (roots.empty() || *r - roots.back() > 1e-10) roots.push_back(*r);
  }
  return roots;
}

Complex bound_wavefunction(double E, const PotentialSpec& spec, double x) {
  auto p = bound_params(E, spec);
  double t = spec.a * (std::abs(x) - spec.L);
  double lnz = -log1pexp(t), lnw = -log1pexp(-t);
  HypArg arg{std::exp(lnz), std::exp(lnw)};
  auto F = hyp2f1_eval(0.5 - p.gamma - p.lambda + p.sigma, 0.5 - p.gamma + p.lambda + p.sigma,
                       1.0 + 2.0 * p.sigma, arg);
  return std::exp(p.sigma * lnz - p.gamma * lnw) * F.value;
}

NormResult norm_detail(double E, const PotentialSpec& spec) {
  auto p = bound_params(E, spec);
  double kappa = std::sqrt(1.0 - E * E);
  double a = spec.a, L = spec.L;
  Complex b1 = 0.5 - p.gamma - p.lambda + p.sigma, b2 = 0.5 - p.gamma + p.lambda + p.sigma;
  Complex c = 1.0 + 2.0 * p.sigma;
  auto integrand = [&](double x) {
    double t = a * (x - L);
    double lnz = -log1pexp(t), lnw = -log1pexp(-t);
    Complex F = hyp2f1_eval(b1, b2, c, HypArg{std::exp(lnz), std::exp(lnw)}).value;
    double mag2 = std::exp(2.0 * (p.sigma.real() * lnz - p.gamma.real() * lnw)) * std::norm(F);
    return (E - evaluate(spec, x)) * mag2;
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double X = L + 40.0 / kappa;
  std::vector<double> cuts{0.0};
  for (double d : {-4.0, -1.0, 0.0, 1.0, 4.0, 12.0, 40.0}) {
    double c0 = L + d / a;
    if (c0 > cuts.back() && c0 < X) cuts.push_back(c0);
  }
  for (double d : {1.0, 4.0, 12.0}) {
    double c0 = L + 40.0 / a + d / kappa;
    if (c0 > cuts.back() && c0 < X) cuts.push_back(c0);
  }
  cuts.push_back(X);
  NormResult out;
  double total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0;
    total += GK::integrate(integrand, cuts[i], cuts[i + 1], 15, 1e-12, &err);
    out.abs_error += 4.0 * err;
  }
  // even state: N = 2 * 2 * int_0^inf
  out.N = 4.0 * total;
  out.slow_decay = kappa < 1e-3;
  return out;
}

double norm(double E, const PotentialSpec& spec) { return norm_detail(E, spec).N; }

const char* kind_name(Kind k) { return k == Kind::Particle ? "particle" : "antiparticle"; }

BranchModel woods_saxon_model(double a, double L) {
  BranchModel m;
  m.mismatch = [a, L](double E, double V0) {
    return matching_function(E, ws_well(a, L, V0)).real();
  };
  m.norm = [a, L](double E, double V0) { return norm(E, ws_well(a, L, V0)); };
  m.shallow_guess = [a, L](double V0) {
    double area = 2.0 * (V0 / a) * log1pexp(a * L);
    return std::max(-0.5, 1.0 - 0.5 * area * area);
  };
  return m;
}

double square_well_mismatch(double E, double L, double V0) {
  double kappa = std::sqrt(1.0 - E * E);
  double q2 = (E + V0) * (E + V0) - 1.0;
  if (q2 >= 0) {
    double q = std::sqrt(q2);
    return q * std::sin(q * L) - kappa * std::cos(q * L);
  }
  double pk = std::sqrt(-q2);
  return -pk * std::sinh(pk * L) - kappa * std::cosh(pk * L);
}

double square_well_norm(double E, double L, double V0) {
  double kappa = std::sqrt(1.0 - E * E);
  double q2 = (E + V0) * (E + V0) - 1.0;
  double inner, c2;
  if (q2 > 0) {
    double q = std::sqrt(q2);
    inner = L + std::sin(2.0 * q * L) / (2.0 * q);
    c2 = std::cos(q * L) * std::cos(q * L);
  } else if (q2 < 0) {
    double pk = std::sqrt(-q2);
    inner = L + std::sinh(2.0 * pk * L) / (2.0 * pk);
    c2 = std::cosh(pk * L) * std::cosh(pk * L);
  } else {
    inner = 2.0 * L, c2 = 1.0;
  }
  return 2.0 * ((E + V0) * inner + E * c2 / kappa);
}

BranchModel square_well_model(double L) {
  BranchModel m;
  m.mismatch = [L](double E, double V0) { return square_well_mismatch(E, L, V0); };
  m.norm = [L](double E, double V0) { return square_well_norm(E, L, V0); };
  m.shallow_guess = [L](double V0) {
    double area = 2.0 * V0 * L;
    return std::max(-0.5, 1.0 - 0.5 * area * area);
  };
  return m;
}

TurningPoint locate_fold(const BranchModel& model, double E_near, double V0_near) {
  if (!(E_near > -1.0 && E_near < 1.0)) throw DomainError("fold search needs |E| < 1");
  std::map<double, double> cache;  // u -> V0
  auto V0_of = [&](double u) {
    double E = -1.0 + std::pow(10.0, u);
    double guess = V0_near;
    if (!cache.empty()) {
      auto it = cache.lower_bound(u);
      if (it == cache.end()) --it;
      else if (it != cache.begin() && u - std::prev(it)->first < it->first - u) --it;
      guess = it->second;
    }
    double v = root_V0(model, E, guess, 1e-7);
    if (!std::isnan(v)) cache[u] = v;
    return v;
  };
  double u0 = std::log10(1.0 + E_near);
  double hi = std::min(u0 + 0.3, std::log10(2.0 - 1e-9));
  double lo = u0 - 3.0;
  for (int expand = 0; expand < 6; ++expand) {
    double vmax = 0;
    double u = golden_max(V0_of, lo, hi, vmax, 1e-11);
    if (!std::isfinite(vmax)) break;
    double span = hi - lo;
    if (u - lo < 1e-6 * span && lo > -12.0) {
      lo = std::max(-12.0, lo - 3.0);
      continue;
    }
    if (hi - u < 1e-6 * span) break;
    return {vmax, -1.0 + std::pow(10.0, u)};
  }
  throw NoFoldError("V0(E) has no interior maximum near the branch end");
}

std::pair<double, double> fold_pair(const BranchModel& model, const TurningPoint& tp, double V0) {
  if (!(V0 < tp.V_cr)) throw NoRootError("no real pair at or beyond the fold");
  auto f = [&](double E) { return model.mismatch(E, V0); };
  double f0 = safe_eval(f, tp.E_cr);
  double d = std::max(1e-12, 1e-9 * (1.0 + tp.E_cr));
  auto up = walk(f, tp.E_cr, f0, d, 1.0 - kEdge);
  auto down = walk(f, tp.E_cr, f0, d, -1.0 + kEdge);
  if (!up || !down) throw NoRootError("fold pair not bracketed");
  return {*up, *down};
}

SpectrumBranch trace_branch(const BranchModel& model, const TraceOptions& opt) {
  if (!(opt.V0_min >= 0 && opt.V0_min < opt.V0_max) || !(opt.step0 > 0))
    throw DomainError("trace needs 0 <= V0_min < V0_max and step0 > 0");
  SpectrumBranch out;
  std::vector<BoundState> part;

  double V = std::min(opt.V0_start, opt.V0_max);
  double g = std::min(model.shallow_guess(V), 1.0 - 1e-9);
  double E = root_E(model, V, g, std::max(1e-10, 0.5 * (1.0 - g)));
  if (std::isnan(E)) throw NoRootError("no shallow-well bound state to start from");
  part.push_back({V, E, 0.0, Kind::Particle});

  double h = opt.step0, slope = 0.0, last_dE = 1.0;
  bool fold = false;
  while (V < opt.V0_max) {
    double Vn = std::min(V + h, opt.V0_max);
    double pred = std::max(-1.0 + kEdge, E + slope * (Vn - V));
    double En = root_E(model, Vn, pred, std::max(1e-10, 0.5 * std::abs(pred - E)));
    bool ok = !std::isnan(En) && En <= E + 1e-12 && std::abs(En - E) <= 0.05;
    if (ok) {
      slope = (En - E) / (Vn - V);
      last_dE = E - En;
      V = Vn, E = En;
      part.push_back({V, E, 0.0, Kind::Particle});
      h = std::min(h * 1.5, opt.step0);
      continue;
    }
    h *= 0.5;
    if (last_dE < 1e-4 || h < 1e-9) {
      try {
        auto tp = locate_fold(model, E, V);
        if (tp.V_cr >= V - 1e-9) {
          out.turning_point = tp;
          fold = true;
          break;
        }
      } catch (const NoFoldError&) {
      }
    }
    if (h < 1e-12) throw ContinuationStallError("continuation step underflow before branch closure");
  }

  if (fold) {
    auto tp = *out.turning_point;
    if (tp.V_cr > opt.V0_max) {
      out.turning_point.reset();
      fold = false;
    } else {
      // points that slipped onto the lower root near the fold
      std::erase_if(part, [&](const BoundState& b) { return b.E < tp.E_cr; });
    }
  }

  std::vector<BoundState> anti;
  if (fold) {
    auto tp = *out.turning_point;
    double u_cr = std::log10(1.0 + tp.E_cr), u_end = -10.0;
    int n = std::max(2, opt.antiparticle_points);
    double guess = tp.V_cr;
    for (int j = 1; j <= n; ++j) {
      double u = u_cr + (u_end - u_cr) * j / n;
      double Ej = -1.0 + std::pow(10.0, u);
      double Vj = root_V0(model, Ej, guess, 1e-7);
      if (std::isnan(Vj) || Vj > tp.V_cr || Vj < opt.V0_min) break;
      anti.push_back({Vj, Ej, 0.0, Kind::Antiparticle});
      guess = Vj;
    }
    std::reverse(anti.begin(), anti.end());
  }

  std::erase_if(part, [&](const BoundState& b) { return b.V0 < opt.V0_min; });
  out.points = std::move(part);
  out.points.insert(out.points.end(), anti.begin(), anti.end());
  fill_norms(model, out.points);
  return out;
}

double depth_at_energy(const BranchModel& model, double E, double V_top) {
  double hi = V_top, lo = V_top - 1e-3;
  double fhi = model.mismatch(E, hi), flo = model.mismatch(E, lo);
  while ((flo < 0) == (fhi < 0)) {
    lo -= 1e-3;
    if (lo < V_top - 5.0) throw NoRootError("no depth below the top reaches this energy");
    flo = model.mismatch(E, lo);
  }
  for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
    double mid = 0.5 * (lo + hi), fm = model.mismatch(E, mid);
    if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SpectrumBranch> trace_spectrum(double a, double L, double V0_min, double V0_max,
                                           double step0) {
  ws_well(a, L, 1.0).validate();
  TraceOptions opt;
  opt.V0_min = V0_min, opt.V0_max = V0_max, opt.step0 = step0;
  auto b = trace_branch(woods_saxon_model(a, L), opt);
  b.a = a, b.L = L;
  return {b};
}

CriticalPotential find_critical_potential(double a, double L, double V0_hint) {
  ws_well(a, L, 1.0).validate();
  if (!(V0_hint > 0)) throw DomainError("V0_hint must be positive");
  auto model = woods_saxon_model(a, L);
  model.norm = nullptr;
  TraceOptions opt;
  opt.V0_max = 1.5 * V0_hint + 1.0;
  opt.antiparticle_points = 2;
  auto b = trace_branch(model, opt);
  if (!b.turning_point) throw NoFoldError("no fold of the ground level in the window");
  CriticalPotential cp;
  cp.V_cr = b.turning_point->V_cr;
  cp.E_cr = b.turning_point->E_cr;
  try {
    cp.residual_err = std::abs(eigen_residual(cp.E_cr, ws_well(a, L, cp.V_cr)));
  } catch (const SpuriousPoleError&) {
    cp.residual_err = std::numeric_limits<double>::infinity();
  }
  return cp;
}

SpectrumBranch square_well_spectrum(double L, double V0_min, double V0_max, double step0) {
  if (!(L > 0) || !std::isfinite(L)) throw DomainError("square well needs L > 0");
  TraceOptions opt;
  opt.V0_min = V0_min, opt.V0_max = V0_max, opt.step0 = step0;
  auto b = trace_branch(square_well_model(L), opt);
  b.a = 0, b.L = L;
  return b;
}

}  // namespace dkp
