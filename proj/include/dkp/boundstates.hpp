#pragma once

// Bound states of the Klein-Gordon / DKP first component in symmetric wells.
//
// The closed form covers the Woods-Saxon well. Depth continuation, fold
// location and particle/antiparticle tagging are written against a generic
// BranchModel so the square well (analytic) and the cusp well (shooting, see
// oracle.hpp) reuse the same machinery.

#include <functional>
#include <optional>
#include <vector>

#include "dkp/potentials.hpp"
#include "dkp/specfun.hpp"

namespace dkp {

using specfun::Complex;

struct BoundStateParams {
  double E = 0;
  Complex sigma, gamma, lambda;
};

/// DomainError unless |E| < 1 and the shape is WoodsSaxonWell.
BoundStateParams bound_params(double E, const PotentialSpec& spec);

/// Left-hand side of the even-state eigenvalue condition at the matching
/// point y0 = 1/(1 + exp(-aL)):
///   2(1 + e^{-aL}) sigma + F_R'/F_R + F_L'/F_L,
/// derivatives taken in y. SpuriousPoleError when F_R or F_L vanishes.
Complex eigen_residual(double E, const PotentialSpec& spec);

/// The same condition scaled by y0 (1 - y0) / 2, bounded for large aL.
/// phi'(0)/phi(0) = -a * matching_function for the right solution.
Complex matching_function(double E, const PotentialSpec& spec);

/// Roots of Re(matching_function) in (-1 + 1e-9, 1 - 1e-9), ascending.
/// An E_guess adds dense sampling around it (close root pairs near a fold).
std::vector<double> solve_bound_states(const PotentialSpec& spec,
                                       std::optional<double> E_guess = std::nullopt);

/// phi(x) with a1 = b1 = 1: left closed form for x < 0, right for x >= 0.
Complex bound_wavefunction(double E, const PotentialSpec& spec, double x);

struct NormResult {
  double N = 0;
  double abs_error = 0;
  /// kappa = sqrt(1 - E^2) < 1e-3: the state sits at a continuum edge and the
  /// truncation length L + 40/kappa exceeds 4e4.
  bool slow_decay = false;
};

/// N = 2 int [E - V] |phi|^2 dx over both half-lines, a1 = b1 = 1.
NormResult norm_detail(double E, const PotentialSpec& spec);
double norm(double E, const PotentialSpec& spec);

enum class Kind { Particle, Antiparticle };
const char* kind_name(Kind k);

struct BoundState {
  double V0 = 0;
  double E = 0;
  double N = 0;
  Kind kind = Kind::Particle;
};

struct TurningPoint {
  double V_cr = 0;
  double E_cr = 0;
};

/// One level followed in depth: particle points up to the fold, then the
/// antiparticle points below it. Points are ordered by V0 within each kind.
struct SpectrumBranch {
  double a = 0;
  double L = 0;
  std::vector<BoundState> points;
  std::optional<TurningPoint> turning_point;
};

/// A one-parameter family of bound-state problems.
struct BranchModel {
  /// Real mismatch whose zeros in E are eigenvalues at depth V0; O(1) scale.
  std::function<double(double E, double V0)> mismatch;
  /// Charge norm at an eigenvalue (may be empty; kind then follows the branch).
  std::function<double(double E, double V0)> norm;
  /// Starting estimate for the ground state of a shallow well.
  std::function<double(double V0)> shallow_guess;
};

BranchModel woods_saxon_model(double a, double L);
BranchModel square_well_model(double L);

struct TraceOptions {
  double V0_min = 0.0;
  double V0_max = 5.0;
  double step0 = 0.01;
  /// continuation restarts from this depth
  double V0_start = 0.05;
  /// number of antiparticle points recorded below the fold
  int antiparticle_points = 60;
};

/// Natural continuation of the ground level in V0, fold location and the
/// antiparticle branch beyond it. No turning point when the window ends first.
/// ContinuationStallError when the step underflows 1e-12 with no fold found.
SpectrumBranch trace_branch(const BranchModel& model, const TraceOptions& opt);

/// Maximum of V0(E) near an approximate fold (golden section in log(1 + E)).
/// NoFoldError when V0(E) has no interior maximum.
TurningPoint locate_fold(const BranchModel& model, double E_near, double V0_near);

/// Particle and antiparticle eigenvalues at a depth just below the fold
/// (first = higher E). NoRootError when V0 >= V_cr.
std::pair<double, double> fold_pair(const BranchModel& model, const TurningPoint& tp,
                                    double V0);

/// Depth at which the particle branch passes through E, bisected on the
/// mismatch downward from V_top. NoRootError if nothing within 5 below it.
double depth_at_energy(const BranchModel& model, double E, double V_top);

std::vector<SpectrumBranch> trace_spectrum(double a, double L, double V0_min, double V0_max,
                                           double step0);

struct CriticalPotential {
  double V_cr = 0;
  double E_cr = 0;
  double residual_err = 0;
};

/// Fold of the Woods-Saxon ground level. V0_hint bounds the search window
/// from above (the window is [0.05, 1.5 V0_hint + 1]). NoFoldError if none.
CriticalPotential find_critical_potential(double a, double L, double V0_hint);

/// Even-state condition q sin(qL) - kappa cos(qL) with q^2 = (E + V0)^2 - 1,
/// continued to imaginary q.
double square_well_mismatch(double E, double L, double V0);

/// Closed-form norm of the square-well state normalized to phi(0) = 1.
double square_well_norm(double E, double L, double V0);

SpectrumBranch square_well_spectrum(double L, double V0_min, double V0_max, double step0 = 0.01);

}  // namespace dkp
