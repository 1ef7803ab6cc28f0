#include "dkp/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dkp/errors.hpp"
#include "dkp/search.hpp"

namespace dkp {

using specfun::complex_power;
using specfun::gamma_c;
using specfun::HypArg;
using specfun::hyp2f1_eval;
using specfun::rgamma_c;

namespace {

const Complex I(0.0, 1.0);

// value of one basis solution and d/dx of its logarithm
struct Basis {
  Complex value, dlog;
};

struct LeftParams {
  Complex a, b, c;
};

LeftParams left_params(int s, const ScatteringParams& p) {
  return {double(s) * p.mu - p.nu - p.lambda1, double(s) * p.mu + p.nu - p.lambda1,
          1.0 + 2.0 * double(s) * p.mu};
}

// f(s) = y^{s mu} (1-y)^{-lambda1} F(s mu - nu - l1, s mu + nu - l1; 1 + 2 s mu; y)
// with y = -exp(-a(x+L)). F and y(1-y)F' are passed in.
Basis left_from(int s, const ScatteringParams& p, double a, double e, Complex F, Complex D,
                LogBranch br) {
  double y = -e, w = 1.0 + e;
  Complex smu = double(s) * p.mu;
  Complex v = complex_power(Complex(y, 0.0), smu, br) * complex_power(w, -p.lambda1) * F;
  Complex dl = -a * (smu + p.lambda1 * (y / w) + D / (w * F));
  return {v, dl};
}

Basis left_basis(int s, const ScatteringParams& p, double a, double L, double x, LogBranch br) {
  double e = std::exp(-a * (x + L));
  LeftParams lp = left_params(s, p);
  auto r = hyp2f1_eval(lp.a, lp.b, lp.c, HypArg{-e, 1.0 + e});
  return left_from(s, p, a, e, r.value, r.scaled_derivative, br);
}

struct RightParams {
  Complex a, b, c;
};

RightParams right_params(const ScatteringParams& p) {
  return {0.5 - p.nu - p.mu - p.lambda, 0.5 - p.nu - p.mu + p.lambda, 1.0 - 2.0 * p.nu};
}

// g = z^{-nu} (1-z)^{-mu} F(1/2 - nu - mu - lambda, 1/2 - nu - mu + lambda; 1 - 2nu; z)
// with z = 1/(1 + exp(a(x-L))) and w = 1 - z
Basis right_from(const ScatteringParams& p, double a, double z, double w, Complex F, Complex D) {
  Complex v = complex_power(z, -p.nu) * complex_power(w, -p.mu) * F;
  Complex dl = -a * (-p.nu * w + p.mu * z + D / F);
  return {v, dl};
}

Basis right_basis(const ScatteringParams& p, double a, double L, double x) {
  double t = a * (x - L);
  double z = 1.0 / (1.0 + std::exp(t)), w = 1.0 / (1.0 + std::exp(-t));
  RightParams rp = right_params(p);
  auto r = hyp2f1_eval(rp.a, rp.b, rp.c, HypArg{z, w});
  return right_from(p, a, z, w, r.value, r.scaled_derivative);
}

// the three x = 0 basis values rebuilt from the table
struct AtZero {
  Basis fp, fm, g;
};

AtZero at_zero(const ScatteringParams& p, const HFunctionTable& t, double a, double L,
               LogBranch br) {
  double e = std::exp(-a * L);
  double y = -e, wl = 1.0 + e;
  double z = 1.0 / (1.0 + e), w = 1.0 / (1.0 + 1.0 / e);
  LeftParams lp = left_params(1, p), lm = left_params(-1, p);
  RightParams rp = right_params(p);
  Complex Dp = y * wl * (lp.a * lp.b / lp.c) * t(2);
  Complex Dm = y * wl * (lm.a * lm.b / lm.c) * t(4);
  Complex Dr = z * w * (rp.a * rp.b / rp.c) * t(6);
  return {left_from(1, p, a, e, t(1), Dp, br), left_from(-1, p, a, e, t(3), Dm, br),
          right_from(p, a, z, w, t(5), Dr)};
}

void amplitudes(MatchingCoefficients& m, const ScatteringParams& p, LogBranch br) {
  const Complex mu = p.mu, nu = p.nu, l1 = p.lambda1;
  Complex pp = complex_power(-1.0, mu, br), pm = complex_power(-1.0, -mu, br);
  Complex gp = gamma_c(1.0 + 2.0 * mu), gm = gamma_c(1.0 - 2.0 * mu);
  Complex gn = gamma_c(-2.0 * nu), gpn = gamma_c(2.0 * nu);
  m.A = m.D1 * gp * gn * rgamma_c(mu - nu - l1) * rgamma_c(1.0 + mu - nu + l1) * pp +
        m.D2 * gm * gn * rgamma_c(-mu - nu - l1) * rgamma_c(1.0 - mu - nu + l1) * pm;
  m.B = m.D1 * gp * gpn * rgamma_c(mu + nu - l1) * rgamma_c(1.0 + mu + nu + l1) * pp +
        m.D2 * gm * gpn * rgamma_c(-mu + nu - l1) * rgamma_c(1.0 - mu + nu + l1) * pm;
}

TransmissionPoint transmission_direct(double E, const PotentialSpec& spec, LogBranch br) {
  ScatteringParams p = scattering_params(E, spec);
  if (std::abs(p.mu) * spec.a < 1e-5) throw SingularMatchingError("mu = 0 branch point");
  HFunctionTable t = h_table(p, spec.a, spec.L);
  MatchingCoefficients m = matching_coefficients(p, t, spec.a, spec.L, br);
  double T = std::norm(m.d1 / m.A);
  double R = std::norm(m.B / m.A);
  if (!std::isfinite(T) || !std::isfinite(R)) throw SingularMatchingError("non-finite T or R");
  return {E, T, R};
}

// local minima of f on a uniform grid, refined by golden section; kept when f < accept
}  // namespace

ScatteringParams scattering_params(double E, const PotentialSpec& spec) {
  if (spec.shape != Shape::WoodsSaxonBarrier)
    throw DomainError("scattering: closed form requires a Woods-Saxon barrier");
  spec.validate();
  if (!(E > 1.0)) throw DomainError("scattering: E must exceed 1 (propagating region)");
  const double a = spec.a, V0 = spec.V0;
  ScatteringParams p;
  p.E = E;
  p.k = std::sqrt(E * E - 1.0);
  p.nu = I * p.k / a;
  p.mu = specfun::sqrt_real(1.0 - (E - V0) * (E - V0)) / a;
  p.lambda = specfun::sqrt_real(a * a - 4.0 * V0 * V0) / (2.0 * a);
  p.lambda1 = -0.5 + p.lambda;
  return p;
}

HFunctionTable h_table(const ScatteringParams& p, double a, double L) {
  if (!(a * L > 0)) throw DomainError("h_table: aL must be > 0");
  double e = std::exp(-a * L);
  HypArg left{-e, 1.0 + e};
  HypArg right{1.0 / (1.0 + e), 1.0 / (1.0 + 1.0 / e)};
  const Complex mu = p.mu, nu = p.nu, lam = p.lambda, l1 = p.lambda1;
  struct Entry {
    Complex a, b, c;
    const HypArg* arg;
    bool reg;
  };
  const Entry entries[13] = {
      {-l1 + mu - nu, -l1 + mu + nu, 1.0 + 2.0 * mu, &left, false},
      {1.0 - l1 + mu - nu, 1.0 - l1 + mu + nu, 2.0 * (1.0 + mu), &left, false},
      {-l1 - mu - nu, -l1 - mu + nu, 1.0 - 2.0 * mu, &left, false},
      {1.0 - l1 - mu - nu, 1.0 - l1 - mu + nu, 2.0 * (1.0 - mu), &left, false},
      {0.5 - lam - mu - nu, 0.5 + lam - mu - nu, 1.0 - 2.0 * nu, &right, false},
      {1.5 - lam - mu - nu, 1.5 + lam - mu - nu, 2.0 * (1.0 - nu), &right, false},
      {1.5 - lam - mu - nu, 0.5 + lam - mu - nu, 1.0 - 2.0 * nu, &right, true},
      {l1 - mu - nu, -l1 - mu + nu, 1.0 - 2.0 * mu, &left, true},
      {0.5 - lam - mu - nu, 0.5 + lam - mu - nu, 1.0 - 2.0 * nu, &right, true},
      {-l1 - mu - nu, -l1 - mu + nu, 1.0 - 2.0 * mu, &left, true},
      {1.0 - l1 - mu - nu, -l1 - mu + nu, 1.0 - 2.0 * mu, &left, true},
      {1.0 - l1 - mu - nu, -l1 - mu + nu, 1.0 - 2.0 * mu, &left, false},
      {1.0 - l1 + mu - nu, -l1 + mu + nu, 1.0 + 2.0 * mu, &left, false},
  };
  HFunctionTable t;
  for (int i = 0; i < 13; ++i) {
    const Entry& en = entries[i];
    try {
      t.h[i] = hyp2f1_eval(en.a, en.b, en.c, *en.arg, en.reg).value;
    } catch (const Error& ex) {
      throw HFunctionError(i + 1, ex.what());
    }
  }
  return t;
}

MatchingCoefficients matching_coefficients(const ScatteringParams& p, const HFunctionTable& t,
                                           double a, double L, LogBranch br) {
  AtZero z = at_zero(p, t, a, L, br);
  Complex dp = z.fp.dlog - z.fm.dlog;
  if (std::abs(dp) <= 1e-14 * (std::abs(z.fp.dlog) + std::abs(z.fm.dlog)) ||
      std::abs(z.fp.value) < 1e-300 || std::abs(z.fm.value) < 1e-300)
    throw SingularMatchingError("left log-derivatives coincide at x = 0");
  MatchingCoefficients m;
  m.d1 = 1.0;
  m.D1 = m.d1 * z.g.value * (z.g.dlog - z.fm.dlog) / (dp * z.fp.value);
  m.D2 = m.d1 * z.g.value * (z.fp.dlog - z.g.dlog) / (dp * z.fm.value);
  amplitudes(m, p, br);
  return m;
}

DisplayedCoefficients displayed_closed_form(const ScatteringParams& p, const HFunctionTable& t,
                                            double a, double L) {
  const Complex mu = p.mu, nu = p.nu, lam = p.lambda, l1 = p.lambda1;
  double e = std::exp(-a * L), eaL = std::exp(a * L);
  Complex y(-e, 0.0);
  Complex common = complex_power(1.0 + e, nu + l1) * complex_power(1.0 / (1.0 + eaL), 1.0 - mu);
  Complex num1 = gamma_c(1.0 - 2.0 * mu) * gamma_c(1.0 - 2.0 * nu) * complex_power(y, -mu) *
                 common *
                 (-(-1.0 + 2.0 * lam + 2.0 * mu + 2.0 * nu) * t(7) * t(8) +
                  (-1.0 + 2.0 * lam + 2.0 * mu - 2.0 * nu - 2.0 * eaL * (l1 - mu + nu)) * t(9) *
                      t(10) +
                  2.0 * (1.0 + eaL) * (l1 + mu + nu) * t(9) * t(11));
  Complex den1 = 2.0 * ((l1 + mu + nu) * t(1) * t(12) - (l1 - mu + nu) * t(4) * t(13));
  Complex num2 = complex_power(y, mu) * common *
                 ((-1.0 + 2.0 * lam + 2.0 * mu + 2.0 * nu) * t(1) * t(7) -
                  (1.0 - 2.0 * lam - 2.0 * mu + 2.0 * nu + 2.0 * eaL * (l1 - mu + nu)) * t(1) *
                      t(5) -
                  2.0 * (1.0 + eaL) * (l1 - mu + nu) * t(1) * t(13));
  Complex den2 = 2.0 * ((l1 + mu + nu) * t(1) * t(11) - (l1 - mu + nu) * t(3) * t(13));
  if (std::abs(den1) < 1e-14 || std::abs(den2) < 1e-14)
    throw SingularMatchingError("displayed closed-form denominator vanishes");
  return {num1 / den1, num2 / den2};
}

double continuity_residual(const MatchingCoefficients& m, const ScatteringParams& p,
                           const HFunctionTable& t, double a, double L, LogBranch br) {
  (void)t;
  Basis fp = left_basis(1, p, a, L, 0.0, br), fm = left_basis(-1, p, a, L, 0.0, br);
  Basis g = right_basis(p, a, L, 0.0);
  Complex l1 = m.D1 * fp.value + m.D2 * fm.value;
  Complex r1 = m.d1 * g.value;
  Complex l2 = -(m.D1 * fp.value * fp.dlog + m.D2 * fm.value * fm.dlog);
  Complex r2 = -m.d1 * g.value * g.dlog;
  double res1 = std::abs(l1 - r1) / std::abs(r1);
  double res2 = std::abs(l2 - r2) / std::abs(r2);
  // phi3 = -i(E - V(0)) phi1 with the same V(0) on both sides
  Complex s3 = -I * p.E;
  double res3 = std::abs(s3 * l1 - s3 * r1) / std::abs(s3 * r1);
  return std::max({res1, res2, res3});
}

TransmissionPoint transmission(double E, const PotentialSpec& spec, LogBranch branch) {
  try {
    return transmission_direct(E, spec, branch);
  } catch (const SingularMatchingError&) {
  } catch (const HFunctionError&) {
  } catch (const PoleError&) {
  } catch (const DegenerateParameterError&) {
  }
  const double h = 1e-9;
  TransmissionPoint lo = transmission_direct(E - h, spec, branch);
  TransmissionPoint hi = transmission_direct(E + h, spec, branch);
  return {E, 0.5 * (lo.T + hi.T), 0.5 * (lo.R + hi.R)};
}

std::vector<double> find_resonances(const PotentialSpec& spec, double E_min, double E_max,
                                    int grid) {
  if (!(E_min > 1.0) || !(E_max > E_min) || grid < 2)
    throw DomainError("find_resonances: need 1 < E_min < E_max and grid >= 2");
  if (spec.V0 == 0.0) return {};
  auto f = [&](double E) { return std::sqrt(transmission(E, spec).R); };
  return grid_minima(f, E_min, E_max, grid, 1e-5);
}

TransmissionPoint square_barrier_transmission(double E, double L, double V0) {
  if (!(E > 1.0)) throw DomainError("square barrier: E must exceed 1");
  double k2 = E * E - 1.0;
  double q2 = (E - V0) * (E - V0) - 1.0;
  double t = 2.0 * L * std::sqrt(std::fabs(q2));
  double sinc;
  if (t < 1e-4)
    sinc = q2 >= 0 ? 1.0 - t * t / 6.0 : 1.0 + t * t / 6.0;
  else
    sinc = q2 >= 0 ? std::sin(t) / t : std::sinh(t) / t;
  double S = 4.0 * L * L * sinc * sinc;
  double X = (k2 - q2) * (k2 - q2) / (4.0 * k2) * S;
  return {E, 1.0 / (1.0 + X), X / (1.0 + X)};
}

std::vector<double> find_square_resonances(double L, double V0, double E_min, double E_max,
                                           int grid) {
  if (!(E_min > 1.0) || !(E_max > E_min) || grid < 2)
    throw DomainError("find_square_resonances: need 1 < E_min < E_max and grid >= 2");
  if (V0 == 0.0) return {};
  auto f = [&](double E) { return std::sqrt(square_barrier_transmission(E, L, V0).R); };
  return grid_minima(f, E_min, E_max, grid, 1e-5);
}

SpinorField spinor_eval(Region region, double x, const MatchingCoefficients& c,
                        const ScatteringParams& p, const PotentialSpec& spec, LogBranch br) {
  const double a = spec.a, L = spec.L, E = p.E;
  SpinorField f;
  f.x = x;
  switch (region) {
    case Region::IncidentLeft: {
      Complex amp = c.A * std::exp(I * p.k * (x + L));
      f.phi1 = amp, f.phi2 = -I * p.k * amp, f.phi3 = -I * E * amp;
      break;
    }
    case Region::ReflectedLeft: {
      Complex amp = c.B * std::exp(-I * p.k * (x + L));
      f.phi1 = amp, f.phi2 = I * p.k * amp, f.phi3 = -I * E * amp;
      break;
    }
    case Region::TransmittedRight: {
      Complex amp = c.d1 * std::exp(I * p.k * (x - L));
      f.phi1 = amp, f.phi2 = -I * p.k * amp, f.phi3 = -I * E * amp;
      break;
    }
    case Region::Left: {
      if (x > 0) throw DomainError("spinor_eval: left field needs x <= 0");
      Basis fp = left_basis(1, p, a, L, x, br), fm = left_basis(-1, p, a, L, x, br);
      f.phi1 = c.D1 * fp.value + c.D2 * fm.value;
      f.phi2 = -(c.D1 * fp.value * fp.dlog + c.D2 * fm.value * fm.dlog);
      f.phi3 = -I * (E - evaluate(spec, x)) * f.phi1;
      break;
    }
    case Region::Right: {
      if (x < 0) throw DomainError("spinor_eval: right field needs x >= 0");
      Basis g = right_basis(p, a, L, x);
      f.phi1 = c.d1 * g.value;
      f.phi2 = -c.d1 * g.value * g.dlog;
      f.phi3 = -I * (E - evaluate(spec, x)) * f.phi1;
      break;
    }
  }
  return f;
}

double current_density(const SpinorField& f) { return -2.0 * std::imag(std::conj(f.phi1) * f.phi2); }

}  // namespace dkp
