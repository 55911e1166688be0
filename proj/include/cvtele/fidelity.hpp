#pragma once

#include <optional>

#include "cvtele/charfunc.hpp"
#include "cvtele/states.hpp"

namespace cvtele {

/// Classical limit for coherent-state teleportation.
inline constexpr double kClassicalBound = 0.5;
/// No-cloning limit.
inline constexpr double kNoCloningBound = 2.0 / 3.0;

/// Coefficient block of the realistic closed forms. S is the Gaussian width
/// of the overlap integrand, P the gain mismatch (1 − gT)/√2; A and B are the
/// exponent coefficients of the squeezed-vacuum kernel; G, H feed the
/// photon-subtracted form and L, M, N the photon-added one.
struct FidelityCoefficients {
  double S = 0.0;
  double P = 0.0;
  double G = 0.0;
  double H = 0.0;
  double A = 0.0;
  double B = 0.0;
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
};

FidelityCoefficients coefficients(const ResourceSpec& spec, const ChannelParams& ch);

struct FidelityReport {
  double closed_form = 0.0;
  std::optional<double> oracle;
  std::optional<double> discrepancy;
  bool beats_classical = false;
  bool beats_no_cloning = false;

  static FidelityReport from_value(double value);
};

/// Realistic fidelity of teleporting |α⟩. Depends on α only through |α|².
/// Throws DomainError on non-finite or out-of-range parameters.
FidelityReport fidelity_closed_form(const ResourceSpec& spec, const ChannelParams& ch,
                                    Complex input_alpha);

/// Bare value of fidelity_closed_form, for inner loops.
double fidelity_value(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha);

/// Ideal-protocol fidelity (g = 1, R = 0, τ = 0, n_th = 0), independent of α.
double fidelity_ideal(const ResourceSpec& spec);

}  // namespace cvtele
