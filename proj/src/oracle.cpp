#include "dkp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

#include "dkp/errors.hpp"
#include "dkp/search.hpp"

namespace dkp {

namespace {

const Complex I(0.0, 1.0);

struct Grid {
  double h = 0;
  int nL = 0, nR = 0;  // nodes -nL..nR, x_j = j h
  double x(int j) const { return j * h; }
};

Grid make_grid(const PotentialSpec& spec, const IntegratorConfig& cfg) {
  Grid g;
  g.h = cfg.step;
  if (spec.is_square()) g.h = spec.L / std::ceil(spec.L / cfg.step);
  g.nL = static_cast<int>(std::ceil(-cfg.x_min / g.h));
  g.nR = static_cast<int>(std::ceil(cfg.x_max / g.h));
  g.nL += g.nL % 2, g.nR += g.nR % 2;  // even interval counts for Simpson
  return g;
}

// Square shapes jump at |x| = L; the node there takes the mean of both sides.
double potential_at(const PotentialSpec& spec, double x) {
  if (spec.is_square() && std::abs(std::abs(x) - spec.L) < 1e-12 * spec.L) {
    return 0.5 * evaluate(spec, x);
  }
  return evaluate(spec, x);
}

double Q(const PotentialSpec& spec, double E, double x) {
  double q = E - potential_at(spec, x);
  return q * q - 1.0;
}

// Numerov plane-wave wavenumber for Q = k^2 > 0.
double numerov_k(double k, double h) {
  double t = h * h * k * k / 12.0;
  return std::acos((1.0 - 5.0 * t) / (1.0 + t)) / h;
}

// Numerov decay rate for Q = -kappa^2.
double numerov_kappa(double kappa, double h) {
  double t = h * h * kappa * kappa / 12.0;
  return std::acosh((1.0 + 5.0 * t) / (1.0 - t)) / h;
}

// V'(0+) by a one-sided second-order difference.
double slope_at_origin(const PotentialSpec& spec) {
  const double d = 1e-5 * std::min(1.0, spec.is_cusp() ? spec.a : 1.0 / spec.a);
  return (-3.0 * evaluate(spec, 0.0) + 4.0 * evaluate(spec, d) - evaluate(spec, 2.0 * d)) / (2.0 * d);
}

// Numerov through the node x = 0, where Q' jumps because V depends on |x|.
// The Taylor sum picks up (h^3/12) times the jump of phi''', i.e. -(h^3/12) [Q'] phi0.
double kink_correction(const PotentialSpec& spec, double E, double h) {
  if (spec.is_square()) return 0.0;
  return h * h * h / 3.0 * (E - evaluate(spec, 0.0)) * slope_at_origin(spec);
}

template <class T>
void numerov_run(std::vector<T>& phi, const std::vector<double>& q, double h, int from, int dir,
                 int i_kink = -1, double kink = 0.0) {
  // phi[from] and phi[from + dir] are set; fill towards the other end.
  // recursion carried in extended precision on the scaled values (1 + c q) phi;
  // double rounding otherwise drifts the Wronskian by ~1e-9 behind thick barriers
  using X = std::conditional_t<std::is_same_v<T, Complex>, std::complex<long double>, long double>;
  const long double c = static_cast<long double>(h) * h / 12.0L;
  int n = static_cast<int>(phi.size());
  auto w = [&](int i) { return 1.0L + c * q[i]; };
  X prev = X(phi[from]) * w(from), cur = X(phi[from + dir]) * w(from + dir);
  for (int i = from + dir; i + dir >= 0 && i + dir < n; i += dir) {
    long double t = (2.0L * (1.0L - 5.0L * c * q[i]) + (i == i_kink ? kink : 0.0L)) / w(i);
    X next = t * cur - prev;
    phi[i + dir] = static_cast<T>(next / w(i + dir));
    prev = cur, cur = next;
  }
}

// One-sided derivative at node 0 from nodes 0, s, 2s (s = +-1), fourth order.
template <class T>
T edge_derivative(const T& p0, const T& p1, const T& p2, double g0, double g1, double g2, double h,
                  int s) {
  T d = (p1 - p0) / h - h * (7.0 * g0 * p0 + 6.0 * g1 * p1 - g2 * p2) / 24.0;
  return s > 0 ? d : -d;
}

template <class T, class F>
void rk4_run(T& y, T& dy, double x0, double x1, int steps, F qf) {
  double h = (x1 - x0) / steps;
  double x = x0;
  // endpoints sampled just inside the step: one-sided limits at jumps on nodes
  const double in = 1e-9 * h;
  for (int i = 0; i < steps; ++i) {
    double qa = qf(x + in), qb = qf(x + 0.5 * h), qc = qf(x + h - in);
    T k1 = dy, l1 = -qa * y;
    T k2 = dy + 0.5 * h * l1, l2 = -qb * (y + 0.5 * h * k1);
    T k3 = dy + 0.5 * h * l2, l3 = -qb * (y + 0.5 * h * k2);
    T k4 = dy + h * l3, l4 = -qc * (y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    dy += h / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
    x += h;
  }
}

TransmissionPoint transmission_once(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  Grid g = make_grid(spec, cfg);
  double k = std::sqrt(E * E - 1.0);
  double xl = g.x(-g.nL), xr = g.x(g.nR);
  Complex A, B;
  if (cfg.method == Method::Numerov) {
    int n = g.nL + g.nR + 1;
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = Q(spec, E, g.x(i - g.nL));
    double kh = numerov_k(k, g.h);
    std::vector<Complex> phi(n);
    phi[n - 1] = std::exp(I * kh * xr);
    phi[n - 2] = std::exp(I * kh * (xr - g.h));
    numerov_run(phi, q, g.h, n - 1, -1, g.nL, kink_correction(spec, E, g.h));
    // phi_j = A e^{i kh x_j} + B e^{-i kh x_j} at the first two nodes
    Complex e0 = std::exp(I * kh * xl), e1 = std::exp(I * kh * (xl + g.h));
    Complex det = e0 / e1 - e1 / e0;
    A = (phi[0] / e1 - phi[1] / e0) / det;
    B = (e0 * phi[1] - e1 * phi[0]) / det;
  } else {
    Complex y = std::exp(I * k * xr), dy = I * k * y;
    rk4_run(y, dy, xr, xl, g.nL + g.nR, [&](double x) { return Q(spec, E, x); });
    A = 0.5 * (y + dy / (I * k)) * std::exp(-I * k * xl);
    B = 0.5 * (y - dy / (I * k)) * std::exp(I * k * xl);
  }
  double T = 1.0 / std::norm(A), R = std::norm(B / A);
  return {E, T, R};
}

struct Profile {
  Grid g;
  std::vector<double> left, right;  // left: nodes -nL..0, right: 0..nR
  ShootingEnds ends;
};

Profile shoot_profile(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  if (!(std::abs(E) < 1.0)) throw DomainError("shooting needs |E| < 1");
  Profile p;
  Grid& g = p.g;
  g = make_grid(spec, cfg);
  double kappa = std::sqrt(1.0 - E * E);
  auto qf = [&](double x) { return Q(spec, E, x); };
  if (cfg.method == Method::Numerov) {
    double kh = numerov_kappa(kappa, g.h);
    auto side = [&](int nodes, int s, std::vector<double>& out) {
      // out[i] at x = s * i * h, i = 0..nodes; started at the far end
      std::vector<double> q(nodes + 1);
      for (int i = 0; i <= nodes; ++i) q[i] = qf(s * i * g.h);
      out.assign(nodes + 1, 0.0);
      out[nodes] = 1.0;
      out[nodes - 1] = std::exp(kh * g.h);
      const double c = g.h * g.h / 12.0;
      for (int i = nodes - 1; i >= 1; --i) {
        out[i - 1] = (2.0 * (1.0 - 5.0 * c * q[i]) * out[i] - (1.0 + c * q[i + 1]) * out[i + 1]) /
                     (1.0 + c * q[i - 1]);
        if (std::abs(out[i - 1]) > 1e200) {
          for (int j = i - 1; j <= nodes; ++j) out[j] *= 1e-200;
        }
      }
      double d = edge_derivative(out[0], out[1], out[2], -q[0], -q[1], -q[2], g.h, s);
      return d;
    };
    p.ends.dphiR = side(g.nR, 1, p.right);
    p.ends.phiR = p.right[0];
    double dl = side(g.nL, -1, p.left);
    std::reverse(p.left.begin(), p.left.end());
    p.ends.dphiL = dl;
    p.ends.phiL = p.left.back();
  } else {
    auto side = [&](int nodes, int s, std::vector<double>& out) {
      out.assign(nodes + 1, 0.0);
      double y = 1.0, dy = -s * kappa;
      out[nodes] = y;
      for (int i = nodes; i >= 1; --i) {
        rk4_run(y, dy, s * i * g.h, s * (i - 1) * g.h, 1, qf);
        out[i - 1] = y;
        if (std::abs(y) > 1e200) {
          for (int j = i - 1; j <= nodes; ++j) out[j] *= 1e-200;
          y *= 1e-200, dy *= 1e-200;
        }
      }
      return dy;
    };
    p.ends.dphiR = side(g.nR, 1, p.right);
    p.ends.phiR = p.right[0];
    p.ends.dphiL = side(g.nL, -1, p.left);
    std::reverse(p.left.begin(), p.left.end());
    p.ends.phiL = p.left.back();
  }
  return p;
}

double simpson(const std::vector<double>& f, double h) {
  int n = static_cast<int>(f.size()) - 1;
  double s = f.front() + f.back();
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

}  // namespace

double max_wavenumber(const PotentialSpec& spec, double E) {
  double k = 0;
  for (double V : {0.0, spec.is_well() ? -spec.V0 : spec.V0}) {
    double q = E - V;
    k = std::max(k, std::sqrt(std::abs(q * q - 1.0)));
  }
  // between the endpoints |q| passes through 0 when E - V changes sign
  return std::max(k, 1.0);
}

IntegratorConfig IntegratorConfig::for_spec(const PotentialSpec& spec, double E) {
  IntegratorConfig c;
  double X = tail_extent(spec) + 2.0;
  c.x_min = -X, c.x_max = X;
  c.step = std::min(0.005, 0.1 / max_wavenumber(spec, E));
  // Numerov drops to second order across the jumps at |x| = L
  if (spec.is_square()) c.method = Method::RK4;
  // resolve the Woods-Saxon edge width 1/a
  if (spec.is_woods_saxon()) c.step = std::min(c.step, 0.05 / spec.a);
  return c;
}

void IntegratorConfig::validate(const PotentialSpec& spec, double E) const {
  spec.validate();
  double t = tail_extent(spec);
  if (!(x_min < -t) || !(x_max > t)) throw DomainError("integration window misses the potential tails");
  if (!(step > 0) || step > std::min(0.01, 0.1 / max_wavenumber(spec, E)) * (1 + 1e-12))
    throw DomainError("integration step too coarse");
}

TransmissionPoint ode_transmission(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  if (!(E > 1.0)) throw DomainError("ode_transmission needs E > 1");
  cfg.validate(spec, E);
  IntegratorConfig c = cfg;
  TransmissionPoint t = transmission_once(E, spec, c);
  for (int i = 0; i < 3 && std::abs(t.T + t.R - 1.0) > 1e-8; ++i) {
    c.step *= 0.5;
    t = transmission_once(E, spec, c);
  }
  if (std::abs(t.T + t.R - 1.0) > 1e-6) throw UnitarityViolationError("|T + R - 1| > 1e-6");
  return t;
}

TransmissionPoint ode_transmission(double E, const PotentialSpec& spec) {
  return ode_transmission(E, spec, IntegratorConfig::for_spec(spec, E));
}

std::vector<double> ode_resonances(const PotentialSpec& spec, double E_min, double E_max, int grid) {
  if (!(E_min > 1.0) || !(E_max > E_min) || grid < 3) throw DomainError("need 1 < E_min < E_max, grid >= 3");
  if (spec.V0 == 0.0) return {};
  IntegratorConfig cfg = IntegratorConfig::for_spec(spec, E_max);
  for (double E : {E_min, 0.5 * (E_min + E_max)})
    cfg.step = std::min(cfg.step, IntegratorConfig::for_spec(spec, E).step);
  auto f = [&](double E) { return std::sqrt(ode_transmission(E, spec, cfg).R); };
  return grid_minima(f, E_min, E_max, grid, 1e-4);
}

ShootingEnds shoot(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  return shoot_profile(E, spec, cfg).ends;
}

double shoot_mismatch(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  auto e = shoot(E, spec, cfg);
  double w = e.dphiL * e.phiR - e.phiL * e.dphiR;
  return w / (std::hypot(e.phiL, e.dphiL) * std::hypot(e.phiR, e.dphiR));
}

double even_mismatch(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  auto e = shoot(E, spec, cfg);
  return e.dphiR / std::hypot(e.phiR, e.dphiR);
}

double shoot_bound_state(const PotentialSpec& spec, std::pair<double, double> br,
                         const IntegratorConfig& cfg) {
  auto [lo, hi] = br;
  if (!(-1.0 < lo && lo < hi && hi < 1.0)) throw DomainError("bracket must satisfy -1 < lo < hi < 1");
  cfg.validate(spec, lo);
  double flo = shoot_mismatch(lo, spec, cfg), fhi = shoot_mismatch(hi, spec, cfg);
  if ((flo < 0) == (fhi < 0)) throw NoRootError("mismatch does not change sign over the bracket");
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi), fm = shoot_mismatch(mid, spec, cfg);
    if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> shoot_even_states(const PotentialSpec& spec, int n) {
  std::vector<double> out;
  double Ep = -1.0 + 1e-9, fp = even_mismatch(Ep, spec, IntegratorConfig::for_spec(spec, Ep));
  for (int i = 1; i <= n; ++i) {
    double E = i == n ? 1.0 - 1e-9 : -std::cos(specfun::kPi * i / (n + 1.0));
    auto cfg = IntegratorConfig::for_spec(spec, E);
    double f = even_mismatch(E, spec, cfg);
    if ((f < 0) != (fp < 0)) {
      double lo = Ep, hi = E, flo = fp;
      while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi), fm = even_mismatch(mid, spec, cfg);
        if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
        else hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    Ep = E, fp = f;
  }
  return out;
}

double ode_norm(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  cfg.validate(spec, E);
  auto p = shoot_profile(E, spec, cfg);
  const Grid& g = p.g;
  double sL = std::abs(p.ends.phiL) > 1e-8 * std::abs(p.ends.dphiL) ? p.ends.phiR / p.ends.phiL
                                                                    : p.ends.dphiR / p.ends.dphiL;
  double phi0 = p.ends.phiR;
  double target = 1.0;
  if (spec.shape == Shape::WoodsSaxonWell) target = std::abs(bound_wavefunction(E, spec, 0.0));
  double scale = target / std::abs(phi0);
  double kappa = std::sqrt(1.0 - E * E);
  std::vector<double> fl(p.left.size()), fr(p.right.size());
  for (size_t i = 0; i < fl.size(); ++i) {
    double x = g.x(static_cast<int>(i) - g.nL);
    double v = p.left[i] * sL * scale;
    fl[i] = 2.0 * (E - potential_at(spec, x)) * v * v;
  }
  for (size_t i = 0; i < fr.size(); ++i) {
    double x = g.x(static_cast<int>(i));
    double v = p.right[i] * scale;
    fr[i] = 2.0 * (E - potential_at(spec, x)) * v * v;
  }
  double tails = 0;
  double eL = p.left.front() * sL * scale, eR = p.right.back() * scale;
  tails += E * (eL * eL + eR * eR) / kappa;
  return simpson(fl, g.h) + simpson(fr, g.h) + tails;
}

std::vector<Complex> wronskian_profile(double E, const PotentialSpec& spec, const IntegratorConfig& cfg) {
  if (!(E > 1.0)) throw DomainError("wronskian_profile needs E > 1");
  cfg.validate(spec, E);
  Grid g = make_grid(spec, cfg);
  double k = std::sqrt(E * E - 1.0);
  double xr = g.x(g.nR);
  int n = g.nL + g.nR + 1;
  std::vector<Complex> out(n);
  if (cfg.method == Method::Numerov) {
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = Q(spec, E, g.x(i - g.nL));
    double kh = numerov_k(k, g.h);
    std::vector<Complex> u(n), v(n);
    u[n - 1] = std::exp(I * kh * xr), u[n - 2] = std::exp(I * kh * (xr - g.h));
    v[n - 1] = std::exp(-I * kh * xr), v[n - 2] = std::exp(-I * kh * (xr - g.h));
    double kc = kink_correction(spec, E, g.h);
    numerov_run(u, q, g.h, n - 1, -1, g.nL, kc);
    numerov_run(v, q, g.h, n - 1, -1, g.nL, kc);
    const double c = g.h * g.h / 12.0;
    for (int i = 0; i + 1 < n; ++i) {
      Complex ui = (1.0 + c * q[i]) * u[i], ui1 = (1.0 + c * q[i + 1]) * u[i + 1];
      Complex vi = (1.0 + c * q[i]) * v[i], vi1 = (1.0 + c * q[i + 1]) * v[i + 1];
      out[i] = (ui * vi1 - ui1 * vi) / g.h;
    }
    out[n - 1] = out[n - 2];
  } else {
    Complex u = std::exp(I * k * xr), du = I * k * u;
    Complex v = std::exp(-I * k * xr), dv = -I * k * v;
    auto qf = [&](double x) { return Q(spec, E, x); };
    out[n - 1] = u * dv - du * v;
    for (int i = n - 1; i >= 1; --i) {
      double x0 = g.x(i - g.nL), x1 = g.x(i - 1 - g.nL);
      rk4_run(u, du, x0, x1, 1, qf);
      rk4_run(v, dv, x0, x1, 1, qf);
      out[i - 1] = u * dv - du * v;
    }
  }
  return out;
}

BranchModel shooting_model(Shape well, double a, double L) {
  PotentialSpec base{well, a, L, 1.0};
  if (!base.is_well()) throw DomainError("shooting_model needs a well shape");
  base.validate();
  BranchModel m;
  m.mismatch = [base](double E, double V0) {
    PotentialSpec s = base;
    s.V0 = V0;
    return even_mismatch(E, s, IntegratorConfig::for_spec(s, E));
  };
  m.norm = [base](double E, double V0) {
    PotentialSpec s = base;
    s.V0 = V0;
    return ode_norm(E, s, IntegratorConfig::for_spec(s, E));
  };
  m.shallow_guess = [base](double V0) {
    double area = 2.0 * V0;
    if (base.is_cusp()) area *= base.a;
    else if (base.is_square()) area *= base.L;
    else area *= std::log1p(std::exp(base.a * base.L)) / base.a;
    return std::max(-0.5, 1.0 - 0.5 * area * area);
  };
  return m;
}

}  // namespace dkp
