#include "cvtele/fidelity.hpp"

#include <cmath>
#include <limits>

#include "cvtele/errors.hpp"

namespace cvtele {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_finite(const ChannelParams& ch, Complex alpha) {
  if (!std::isfinite(ch.g) || !std::isfinite(ch.r_sq) || !std::isfinite(ch.tau) ||
      !std::isfinite(ch.n_th) || !std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("fidelity parameters must be finite");
  }
  ch.validate();
}

}  // namespace

FidelityCoefficients coefficients(const ResourceSpec& spec, const ChannelParams& ch) {
  const double l = spec.lambda();
  const double one_minus = 1.0 - l * l;
  const double gt = ch.g * ch.transmissivity();
  const double gt2 = gt * gt;
  const double e1 = std::exp(-ch.tau);
  const double e_half = std::exp(-0.5 * ch.tau);

  FidelityCoefficients c;
  c.A = -l * l / one_minus;
  c.B = l / one_minus;
  c.S = 0.25 + gt2 / 4.0 + (1.0 + l * l) * (gt2 + e1) / (4.0 * one_minus) -
        l * gt * e_half / one_minus + gamma_thermal(ch) / 4.0;
  c.P = (1.0 - gt) * kInvSqrt2;
  c.G = (c.A * gt + c.B * e_half) * kInvSqrt2;
  c.H = (c.A * e_half + c.B * gt) * kInvSqrt2;

  const double am1 = c.A - 1.0;
  const double b2 = c.B * c.B;
  c.L = am1 * am1 + b2;
  c.M = (gt2 + e1) * (am1 * am1 * am1 / 2.0 + 1.5 * b2 * am1) +
        gt * e_half * (3.0 * c.B * am1 * am1 + b2 * c.B);
  c.N = (gt * e1 * e_half + gt2 * gt * e_half) * (c.B * am1 / 2.0 * (am1 * am1 + b2)) +
        gt2 * e1 * (am1 * am1 * am1 * am1 / 4.0 + b2 * am1 * am1 + b2 * b2 / 4.0) +
        (gt2 * gt2 + e1 * e1) * b2 * am1 * am1 / 4.0;
  return c;
}

double fidelity_value(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha) {
  require_finite(ch, input_alpha);
  const FidelityCoefficients c = coefficients(spec, ch);
  const double u = std::norm(input_alpha) * c.P * c.P / c.S;
  const double gaussian = std::exp(-u) / (2.0 * c.S);
  const double first = (1.0 - u) / c.S;
  const double second = (2.0 - 4.0 * u + u * u) / (c.S * c.S);

  switch (spec.kind) {
    case ResourceKind::Tmsv:
      return gaussian;
    case ResourceKind::PhotonSubtracted: {
      // Normalization 1/(A² + B²) vanishes like λ⁻². A, B, G, H are all
      // λ times a regular factor, so the ratios are taken on those factors.
      const double l = spec.lambda();
      const double one_minus = 1.0 - l * l;
      const double gt = ch.g * ch.transmissivity();
      const double e_half = std::exp(-0.5 * ch.tau);
      const double a = -l / one_minus;
      const double b = 1.0 / one_minus;
      const double g = (a * gt + b * e_half) * kInvSqrt2;
      const double h = (a * e_half + b * gt) * kInvSqrt2;
      const double q0 = a * a + b * b;
      const double linear = l * (a * g * g + 2.0 * b * g * h + a * h * h) / q0;
      const double quadratic = l * l * g * g * h * h / q0;
      return gaussian * (1.0 + linear * first + quadratic * second);
    }
    case ResourceKind::PhotonAdded:
      return gaussian * (1.0 + c.M / c.L * first + c.N / c.L * second);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

FidelityReport FidelityReport::from_value(double value) {
  FidelityReport r;
  r.closed_form = value;
  r.beats_classical = value > kClassicalBound;
  r.beats_no_cloning = value > kNoCloningBound;
  return r;
}

FidelityReport fidelity_closed_form(const ResourceSpec& spec, const ChannelParams& ch,
                                    Complex input_alpha) {
  return FidelityReport::from_value(fidelity_value(spec, ch, input_alpha));
}

double fidelity_ideal(const ResourceSpec& spec) {
  const double l = spec.lambda();
  const double cube = (1.0 + l) * (1.0 + l) * (1.0 + l);
  switch (spec.kind) {
    case ResourceKind::Tmsv:
      return (1.0 + l) / 2.0;
    case ResourceKind::PhotonSubtracted:
      return cube * (l * l - 2.0 * l + 2.0) / (4.0 * (1.0 + l * l));
    case ResourceKind::PhotonAdded:
      return cube / (4.0 * (1.0 + l * l));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace cvtele
