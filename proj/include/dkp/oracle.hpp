#pragma once

// Direct integration of phi'' + [(E - V)^2 - 1] phi = 0 on a uniform grid.
// Used to check the closed forms and for the cusp shape, which has none here.
//
// Grids always carry a node at x = 0 (the cusp kink and the shooting match
// point) and, for square shapes, at x = +-L. Numerov starts from and decomposes
// into the exact plane waves of its own recursion, so free propagation is
// reproduced to rounding.

#include <utility>
#include <vector>

#include "dkp/boundstates.hpp"
#include "dkp/potentials.hpp"
#include "dkp/scattering.hpp"

namespace dkp {

enum class Method { RK4, Numerov };

struct IntegratorConfig {
  double x_min = -30.0;
  double x_max = 30.0;
  double step = 0.01;
  Method method = Method::Numerov;

  /// Window 2 past tail_extent on both sides, step min(0.005, 0.1/k_max, 0.05/a);
  /// Numerov except for square shapes (RK4 handles the jumps at +-L).
  static IntegratorConfig for_spec(const PotentialSpec& spec, double E);
  /// DomainError when the window misses the potential tails or the step is too coarse.
  void validate(const PotentialSpec& spec, double E) const;
};

/// Largest local wavenumber sqrt|(E - V)^2 - 1| over the potential range.
double max_wavenumber(const PotentialSpec& spec, double E);

/// Backward integration from a pure outgoing wave at x_max. Halves the step up
/// to three times while |T + R - 1| > 1e-8; UnitarityViolationError above 1e-6.
TransmissionPoint ode_transmission(double E, const PotentialSpec& spec, const IntegratorConfig& cfg);
TransmissionPoint ode_transmission(double E, const PotentialSpec& spec);

/// Reflection zeros from ode_transmission on a grid (R < 1e-8 after polishing).
std::vector<double> ode_resonances(const PotentialSpec& spec, double E_min, double E_max, int grid);

/// Inward-integrated decaying solutions at the node x = 0.
struct ShootingEnds {
  double phiL = 0, dphiL = 0;
  double phiR = 0, dphiR = 0;
};
ShootingEnds shoot(double E, const PotentialSpec& spec, const IntegratorConfig& cfg);

/// Normalized Wronskian of the two decaying solutions at 0; zero at every
/// bound state, smooth and O(1) in E.
double shoot_mismatch(double E, const PotentialSpec& spec, const IntegratorConfig& cfg);

/// phi'(0) / |(phi(0), phi'(0))| of the right solution: zeros are the even states.
double even_mismatch(double E, const PotentialSpec& spec, const IntegratorConfig& cfg);

/// Bisection of shoot_mismatch to 1e-10. NoRootError without a sign change.
double shoot_bound_state(const PotentialSpec& spec, std::pair<double, double> E_bracket,
                         const IntegratorConfig& cfg);

/// Even states from sign changes of even_mismatch on a -cos grid of n nodes,
/// bisected to 1e-12. Uses nothing from the closed forms.
std::vector<double> shoot_even_states(const PotentialSpec& spec, int n = 800);

/// Simpson quadrature of 2 (E - V) phi^2 plus the exponential tails. The scale
/// matches |phi(0)| of the closed form for Woods-Saxon wells and phi(0) = 1
/// otherwise.
double ode_norm(double E, const PotentialSpec& spec, const IntegratorConfig& cfg);

/// Wronskian of the two plane-wave-started scattering solutions at every node
/// (discrete Wronskian for Numerov).
std::vector<Complex> wronskian_profile(double E, const PotentialSpec& spec,
                                       const IntegratorConfig& cfg);

/// Even-state branch model of a well shape driven by shooting.
BranchModel shooting_model(Shape well, double a, double L);

}  // namespace dkp
