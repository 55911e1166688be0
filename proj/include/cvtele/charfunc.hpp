#pragma once

#include <cmath>
#include <complex>

#include "cvtele/states.hpp"

namespace cvtele {

using Complex = std::complex<double>;

/// Single-mode phase-space argument γ, with quadratures
/// x = (γ + γ*)/√2 and p = (γ − γ*)/(i√2).
struct PhasePoint {
  Complex gamma;

  static PhasePoint from_quadratures(double x, double p) {
    return {Complex(x, p) / std::sqrt(2.0)};
  }
  double x() const { return std::sqrt(2.0) * gamma.real(); }
  double p() const { return std::sqrt(2.0) * gamma.imag(); }
};

struct TwoModePhasePoint {
  Complex alpha;
  Complex beta;
};

/// Imperfections of the protocol: gain g of Bob's displacement, beam-splitter
/// reflectivity R² of the Bell measurement (T² = 1 − R²), reduced damping time
/// τ of Bob's mode and thermal occupation of its environment.
struct ChannelParams {
  double g = 1.0;
  double r_sq = 0.0;
  double tau = 0.0;
  double n_th = 0.0;

  static ChannelParams ideal() { return {}; }

  double transmissivity() const { return std::sqrt(1.0 - r_sq); }

  /// Throws DomainError on g < 0, R² outside [0, 1], τ < 0, n_th < 0 or NaN.
  /// τ = +∞ (fully damped) is accepted.
  void validate() const;
};

/// Γ_{τ,R} = (1 − e^{−τ})(1/2 + n_th) + g²R².
double gamma_thermal(const ChannelParams& ch);

/// χ of the coherent state |α⟩: exp(−|γ|²/2) exp(α*γ − αγ*).
Complex chi_coherent(Complex alpha, PhasePoint p);

/// Gaussian characteristic function of the two-mode squeezed vacuum,
/// templated so the finite-difference oracle can run it in extended precision.
template <typename Scalar>
std::complex<Scalar> tmsv_chi(Scalar lambda, std::complex<Scalar> alpha,
                              std::complex<Scalar> beta) {
  const Scalar one_minus = Scalar(1) - lambda * lambda;
  const Scalar diag = -(Scalar(1) + lambda * lambda) / (Scalar(2) * one_minus);
  const Scalar cross = lambda / one_minus;
  const Scalar exponent = diag * (std::norm(alpha) + std::norm(beta)) +
                          Scalar(2) * cross * (alpha * beta).real();
  return {std::exp(exponent), Scalar(0)};
}

/// Characteristic function of one of the three resources, with the
/// λ-dependent expansion coefficients fixed at construction.
///
/// The photon-subtracted and photon-added functions are the Gaussian times a
/// real quartic Q(a, b) built from u = aα* + bβ and v = aβ* + bα:
///   Q = |u|²|v|² + a(|u|² + |v|²) + 2b Re(uv) + a² + b²,
/// with (a, b) = (A, B) for subtraction and (A − 1, B) for addition, where
/// A = −λ²/(1 − λ²), B = λ/(1 − λ²). Dividing by Q(0) = a² + b² normalizes.
/// Subtraction is evaluated in λ-scaled coefficients so λ → 0 stays finite.
class ResourceCharFunction {
 public:
  explicit ResourceCharFunction(const ResourceSpec& spec);

  Complex operator()(Complex alpha, Complex beta) const;
  Complex operator()(TwoModePhasePoint pt) const { return (*this)(pt.alpha, pt.beta); }

  /// Quadrature-variable form χ(x₁, p₁; x₂, p₂).
  Complex at_quadratures(double x1, double p1, double x2, double p2) const;

  const ResourceSpec& spec() const noexcept { return spec_; }

 private:
  double operator_factor(Complex alpha, Complex beta) const;

  ResourceSpec spec_;
  double diag_ = 0.0;
  double cross_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double scale_ = 1.0;
  double q0_ = 1.0;
};

Complex chi_resource(const ResourceSpec& spec, TwoModePhasePoint pt);

/// Teleported-state characteristic function for a coherent input:
///   χ_out(γ) = χ_in(gTγ) χ_res(gTγ*; e^{−τ/2}γ) exp(−Γ|γ|²/2).
class OutputCharFunction {
 public:
  OutputCharFunction(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha);

  Complex operator()(PhasePoint p) const;

  /// The same function written in quadratures:
  ///   χ_in(gTx, gTp) χ_res(gTx, −gTp; e^{−τ/2}x, e^{−τ/2}p) exp(−Γ(x² + p²)/4).
  Complex at_quadratures(double x, double p) const;

 private:
  ResourceCharFunction resource_;
  Complex input_alpha_;
  double gt_;
  double decay_;
  double thermal_;
};

Complex chi_output(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha,
                   PhasePoint p);

}  // namespace cvtele
