#pragma once

#include <vector>

#include "cvtele/charfunc.hpp"
#include "cvtele/states.hpp"

// Brute-force cross-checks for the closed forms. These are O(grid²) or
// O(cutoff²) and are meant for verification runs, not for sweeps.

namespace cvtele {

/// Simpson quadrature on the square [−half_width, half_width]² in (x, p).
/// points_per_axis must be odd; each refinement halves the step.
struct QuadratureSpec {
  double half_width = 8.0;
  int points_per_axis = 401;
  int refinement = 1;
  /// Largest accepted change between the two finest grids.
  double convergence_tol = 1e-7;
  /// Largest accepted |integrand| on the boundary of the square.
  double boundary_tol = 1e-12;
  /// Largest accepted imaginary part of the fidelity integral.
  double imag_tol = 1e-8;
};

struct QuadratureResult {
  double value = 0.0;
  double imag_residual = 0.0;
  /// |finest − next coarser| estimate.
  double refinement_delta = 0.0;
  double boundary_magnitude = 0.0;
  /// Real parts, coarsest grid first.
  std::vector<double> level_estimates;
};

/// (1/π) ∫ d²γ χ_in(γ) χ_out(−γ) with χ_out composed from the
/// characteristic-function module. Throws DomainError when the integrand has
/// not decayed at the boundary and ConvergenceError when refinements disagree
/// or the imaginary residual is too large.
QuadratureResult fidelity_quadrature_detailed(const ResourceSpec& spec, const ChannelParams& ch,
                                              Complex input_alpha, const QuadratureSpec& q = {});

double fidelity_quadrature(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha,
                           const QuadratureSpec& q = {});

/// Applies Λ(α)Λ(β) to the squeezed-vacuum kernel χ(α,β)e^{(|α|²+|β|²)/2} by
/// central differences, where
///   Λ_s = ∂_α ∂_α*,   Λ_a = −∂_α ∂_α* + α∂_α + α*∂_α* − |α|² + 1,
/// and Wirtinger derivatives act on α = x + iy as (∂x ∓ i∂y)/2. The result is
/// damped by e^{−(|α|²+|β|²)/2} and divided by the same stencil evaluated at
/// the origin. Arithmetic is in long double: the nested stencil takes fourth
/// differences, which lose too many digits in double at step 1e-3.
/// For Tmsv no operator is applied. step must lie in [1e-5, 1e-2], and
/// photon subtraction needs λ > 0 (Λ_s annihilates the vacuum kernel).
Complex lambda_operator_fd(ResourceKind kind, TwoModePhasePoint pt, double step,
                           SqueezingParam squeeze);

/// ⟨m|D(γ)|n⟩ through associated Laguerre polynomials, with factorial ratios
/// taken in log space so m, n up to a few hundred stay finite.
Complex displaced_fock_element(int m, int n, Complex gamma);

struct FockOracleSpec {
  int cutoff = kDefaultFockCutoff;
  /// Largest accepted truncated probability mass.
  double max_tail = 1e-9;
};

/// Σ_{m,n} c_m c_n ⟨m'|D(α)|n'⟩⟨m'|D(β)|n'⟩ over the truncated Fock expansion
/// (primes denote the photon-number offset). Throws CutoffError when the
/// truncated mass exceeds max_tail.
Complex chi_resource_fock(const ResourceSpec& spec, TwoModePhasePoint pt,
                          const FockOracleSpec& f = {});

/// Δ(x₁ − x₂)² from Fock moments: 1 + ⟨a†a⟩ + ⟨b†b⟩ − ⟨ab⟩ − ⟨a†b†⟩.
/// Single-mode moments ⟨a²⟩, ⟨b²⟩ and the hopping terms ⟨a†b⟩ vanish for
/// states supported on |n,n⟩.
double epr_variance_fock(const ResourceSpec& spec, const FockOracleSpec& f = {});

}  // namespace cvtele
