#include "cvtele/states.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cvtele/errors.hpp"

namespace cvtele {

SqueezingParam SqueezingParam::from_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > kMaxLambda) {
    throw DomainError("squeezing lambda must lie in [0, 1 - 1e-9], got " +
                      std::to_string(lambda));
  }
  return {lambda, std::atanh(lambda)};
}

SqueezingParam SqueezingParam::from_r(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw DomainError("squeezing r must be finite and non-negative, got " + std::to_string(r));
  }
  double lambda = std::tanh(r);
  if (lambda >= 1.0) lambda = std::nextafter(1.0, 0.0);
  return {lambda, r};
}

SqueezingParam lambda_from_r(double r) { return SqueezingParam::from_r(r); }

std::string_view to_string(ResourceKind kind) noexcept {
  switch (kind) {
    case ResourceKind::Tmsv:
      return "tmsv";
    case ResourceKind::PhotonSubtracted:
      return "psub";
    case ResourceKind::PhotonAdded:
      return "padd";
  }
  return "?";
}

std::optional<ResourceKind> parse_kind(std::string_view name) noexcept {
  for (ResourceKind kind : kAllKinds) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

// Σ_{n ≥ k} (n + 1)² x^n, split into the j², j and constant moments of a
// geometric series shifted by k.
double shifted_square_series(double x, int k) {
  const double one_minus = 1.0 - x;
  const double kp1 = k + 1.0;
  return std::pow(x, k) * (kp1 * kp1 / one_minus + 2.0 * kp1 * x / (one_minus * one_minus) +
                           x * (1.0 + x) / (one_minus * one_minus * one_minus));
}

}  // namespace

double fock_tail(const ResourceSpec& spec, int cutoff) {
  const double x = spec.lambda() * spec.lambda();
  if (spec.kind == ResourceKind::Tmsv) return std::pow(x, cutoff);
  const double one_minus = 1.0 - x;
  return one_minus * one_minus * one_minus / (1.0 + x) * shifted_square_series(x, cutoff);
}

FockAmplitudes fock_amplitudes(const ResourceSpec& spec, int cutoff) {
  if (cutoff < 1) throw DomainError("Fock cutoff must be >= 1");

  const double lambda = spec.lambda();
  const double x = lambda * lambda;
  FockAmplitudes out;
  out.cutoff = cutoff;
  out.offset = spec.kind == ResourceKind::PhotonAdded ? 1 : 0;
  out.coeffs.resize(cutoff);

  if (spec.kind == ResourceKind::Tmsv) {
    const double norm = std::sqrt(1.0 - x);
    double power = 1.0;
    for (int n = 0; n < cutoff; ++n) {
      out.coeffs[n] = norm * power;
      power *= lambda;
    }
  } else {
    // ab and a†b† acting on Σ λⁿ|n,n⟩ both weight the n-th pair by (n + 1).
    const double norm = std::sqrt((1.0 - x) * (1.0 - x) * (1.0 - x) / (1.0 + x));
    double power = 1.0;
    for (int n = 0; n < cutoff; ++n) {
      out.coeffs[n] = norm * power * (n + 1.0);
      power *= lambda;
    }
  }
  out.norm_deficit = fock_tail(spec, cutoff);
  return out;
}

double epr_variance(const ResourceSpec& spec) {
  const double l = spec.lambda();
  const double l2 = l * l;
  switch (spec.kind) {
    case ResourceKind::Tmsv:
      return 1.0 - 2.0 * l / (1.0 + l);
    case ResourceKind::PhotonSubtracted:
      return 1.0 - 4.0 * l * (l2 - l + 1.0) / ((1.0 + l2) * (1.0 + l));
    case ResourceKind::PhotonAdded:
      return 1.0 - 2.0 * (l2 * l - l2 + 3.0 * l - 1.0) / ((1.0 + l2) * (1.0 + l));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace cvtele
