#include "cvtele/charfunc.hpp"

#include <string>

#include "cvtele/errors.hpp"

namespace cvtele {

void ChannelParams::validate() const {
  if (!std::isfinite(g) || g < 0.0) throw DomainError("gain g must be finite and >= 0");
  if (!std::isfinite(r_sq) || r_sq < 0.0 || r_sq > 1.0) {
    throw DomainError("reflectivity R^2 must lie in [0, 1]");
  }
  if (std::isnan(tau) || tau < 0.0) throw DomainError("reduced time tau must be >= 0");
  if (!std::isfinite(n_th) || n_th < 0.0) {
    throw DomainError("thermal occupation n_th must be finite and >= 0");
  }
}

double gamma_thermal(const ChannelParams& ch) {
  return -std::expm1(-ch.tau) * (0.5 + ch.n_th) + ch.g * ch.g * ch.r_sq;
}

Complex chi_coherent(Complex alpha, PhasePoint p) {
  const Complex gamma = p.gamma;
  const double phase = 2.0 * (std::conj(alpha) * gamma).imag();
  return std::exp(-0.5 * std::norm(gamma)) * Complex(std::cos(phase), std::sin(phase));
}

ResourceCharFunction::ResourceCharFunction(const ResourceSpec& spec) : spec_(spec) {
  const double l = spec.lambda();
  const double one_minus = 1.0 - l * l;
  diag_ = -(1.0 + l * l) / (2.0 * one_minus);
  cross_ = l / one_minus;

  switch (spec.kind) {
    case ResourceKind::Tmsv:
      break;
    case ResourceKind::PhotonSubtracted:
      // (A, B) = λ · (−λ, 1)/(1 − λ²)
      a_ = -l / one_minus;
      b_ = 1.0 / one_minus;
      scale_ = l;
      break;
    case ResourceKind::PhotonAdded:
      // (A − 1, B) = (−1, λ)/(1 − λ²)
      a_ = -1.0 / one_minus;
      b_ = l / one_minus;
      scale_ = 1.0;
      break;
  }
  q0_ = a_ * a_ + b_ * b_;
}

double ResourceCharFunction::operator_factor(Complex alpha, Complex beta) const {
  const Complex u = a_ * std::conj(alpha) + b_ * beta;
  const Complex v = a_ * std::conj(beta) + b_ * alpha;
  const double uu = std::norm(u);
  const double vv = std::norm(v);
  const double quartic = uu * vv;
  const double cubic = a_ * (uu + vv) + 2.0 * b_ * (u * v).real();
  return (scale_ * scale_ * quartic + scale_ * cubic + q0_) / q0_;
}

Complex ResourceCharFunction::operator()(Complex alpha, Complex beta) const {
  const double exponent =
      diag_ * (std::norm(alpha) + std::norm(beta)) + 2.0 * cross_ * (alpha * beta).real();
  const double gaussian = std::exp(exponent);
  if (spec_.kind == ResourceKind::Tmsv) return gaussian;
  return gaussian * operator_factor(alpha, beta);
}

Complex ResourceCharFunction::at_quadratures(double x1, double p1, double x2, double p2) const {
  return (*this)(PhasePoint::from_quadratures(x1, p1).gamma,
                 PhasePoint::from_quadratures(x2, p2).gamma);
}

Complex chi_resource(const ResourceSpec& spec, TwoModePhasePoint pt) {
  return ResourceCharFunction(spec)(pt);
}

OutputCharFunction::OutputCharFunction(const ResourceSpec& spec, const ChannelParams& ch,
                                       Complex input_alpha)
    : resource_(spec),
      input_alpha_(input_alpha),
      gt_(ch.g * ch.transmissivity()),
      decay_(std::exp(-0.5 * ch.tau)),
      thermal_(gamma_thermal(ch)) {
  ch.validate();
}

Complex OutputCharFunction::operator()(PhasePoint p) const {
  const Complex gamma = p.gamma;
  return chi_coherent(input_alpha_, {gt_ * gamma}) *
         resource_(gt_ * std::conj(gamma), decay_ * gamma) *
         std::exp(-0.5 * thermal_ * std::norm(gamma));
}

Complex OutputCharFunction::at_quadratures(double x, double p) const {
  const PhasePoint scaled = PhasePoint::from_quadratures(gt_ * x, gt_ * p);
  return chi_coherent(input_alpha_, scaled) *
         resource_.at_quadratures(gt_ * x, -gt_ * p, decay_ * x, decay_ * p) *
         std::exp(-0.25 * thermal_ * (x * x + p * p));
}

Complex chi_output(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha,
                   PhasePoint p) {
  return OutputCharFunction(spec, ch, input_alpha)(p);
}

}  // namespace cvtele
