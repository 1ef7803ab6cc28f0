#pragma once

// Klein-Gordon / DKP scattering off the Woods-Saxon barrier.
//
// The first spinor component solves phi'' + [(E - V)^2 - 1] phi = 0; the other
// two follow as phi2 = -phi1' and phi3 = -i (E - V) phi1. With d1 = 1 the
// transmitted wave is exp(ik(x - L)) as x -> +inf, and the left region carries
// A exp(ik(x + L)) + B exp(-ik(x + L)) as x -> -inf.

#include <array>
#include <vector>

#include "dkp/potentials.hpp"
#include "dkp/specfun.hpp"

namespace dkp {

using specfun::Complex;
using specfun::LogBranch;

struct ScatteringParams {
  double E = 0;
  Complex k, nu, mu, lambda, lambda1;
};

/// DomainError unless E > 1 and the shape is WoodsSaxonBarrier.
ScatteringParams scattering_params(double E, const PotentialSpec& spec);

/// Thirteen hypergeometric values at -exp(-aL) and 1/(1 + exp(-aL)).
/// Entries 7 to 11 are regularized. Access is 1-based.
struct HFunctionTable {
  std::array<Complex, 13> h{};

  const Complex& operator()(int i) const { return h.at(i - 1); }
  Complex& operator()(int i) { return h.at(i - 1); }
};

/// Failures carry the entry index (HFunctionError).
HFunctionTable h_table(const ScatteringParams& p, double a, double L);

struct MatchingCoefficients {
  Complex d1 = 1.0;
  Complex D1, D2, A, B;
};

/// D1, D2 from continuity of phi1 and phi1' at x = 0 (rows built from h1..h6),
/// then A, B from the large-|x| expansion of the left solutions.
/// SingularMatchingError when the two left log-derivatives coincide.
MatchingCoefficients matching_coefficients(const ScatteringParams& p, const HFunctionTable& t,
                                           double a, double L,
                                           LogBranch branch = LogBranch::Principal);

/// D1 and D2 as printed with h7..h13 (displayed closed forms). Kept for
/// comparison only; they do not satisfy the continuity rows.
struct DisplayedCoefficients {
  Complex D1, D2;
};
DisplayedCoefficients displayed_closed_form(const ScatteringParams& p, const HFunctionTable& t,
                                            double a, double L);

/// Largest relative residual of the three component continuity rows at x = 0.
double continuity_residual(const MatchingCoefficients& m, const ScatteringParams& p,
                           const HFunctionTable& t, double a, double L,
                           LogBranch branch = LogBranch::Principal);

struct TransmissionPoint {
  double E = 0;
  double T = 0;
  double R = 0;
};

/// T = |d1/A|^2, R = |B/A|^2. At mu = 0 and other removable parameter
/// coincidences the result is the average of E +- 1e-9.
TransmissionPoint transmission(double E, const PotentialSpec& spec,
                               LogBranch branch = LogBranch::Principal);

/// Reflection zeros of the Woods-Saxon barrier in [E_min, E_max], ascending.
std::vector<double> find_resonances(const PotentialSpec& spec, double E_min, double E_max,
                                    int grid);

/// Klein-Gordon square barrier of height V0 on |x| <= L.
TransmissionPoint square_barrier_transmission(double E, double L, double V0);

std::vector<double> find_square_resonances(double L, double V0, double E_min, double E_max,
                                           int grid);

struct SpinorField {
  double x = 0;
  Complex phi1, phi2, phi3;
};

enum class Region {
  IncidentLeft,      // A exp(ik(x+L)) (1, -ik, -iE)
  ReflectedLeft,     // B exp(-ik(x+L)) (1, ik, -iE)
  TransmittedRight,  // d1 exp(ik(x-L)) (1, -ik, -iE)
  Left,              // exact field D1 f+ + D2 f-, x <= 0
  Right,             // exact field d1 g, x >= 0
};

SpinorField spinor_eval(Region region, double x, const MatchingCoefficients& c,
                        const ScatteringParams& p, const PotentialSpec& spec,
                        LogBranch branch = LogBranch::Principal);

/// j^1 = phibar beta^1 phi = -2 Im(conj(phi1) phi2); 2k|amp|^2 for a plane wave.
double current_density(const SpinorField& f);

}  // namespace dkp
