#pragma once

#include <array>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace cvtele {

/// Largest accepted squeezing λ. Every closed form carries (1 − λ²)
/// denominators, so requests beyond this are rejected, never clamped.
inline constexpr double kMaxLambda = 1.0 - 1e-9;

/// Default Fock truncation; λ ≤ 0.9 leaves a norm tail below 1e-9.
inline constexpr int kDefaultFockCutoff = 100;

/// Two-mode squeezing strength λ = tanh r. λ is canonical; r is carried
/// alongside so sweeps never round-trip through artanh.
class SqueezingParam {
 public:
  SqueezingParam() = default;

  /// Throws DomainError unless 0 ≤ λ ≤ kMaxLambda.
  static SqueezingParam from_lambda(double lambda);
  /// λ = tanh r. For very large r the result sits one ulp below 1.
  static SqueezingParam from_r(double r);

  double lambda() const noexcept { return lambda_; }
  double r() const noexcept { return r_; }

 private:
  SqueezingParam(double lambda, double r) : lambda_(lambda), r_(r) {}

  double lambda_ = 0.0;
  double r_ = 0.0;
};

SqueezingParam lambda_from_r(double r);

enum class ResourceKind { Tmsv, PhotonSubtracted, PhotonAdded };

inline constexpr std::array<ResourceKind, 3> kAllKinds = {
    ResourceKind::Tmsv, ResourceKind::PhotonSubtracted, ResourceKind::PhotonAdded};

/// Short names used on the command line and in table headers: tmsv, psub, padd.
std::string_view to_string(ResourceKind kind) noexcept;
std::optional<ResourceKind> parse_kind(std::string_view name) noexcept;

struct ResourceSpec {
  ResourceKind kind = ResourceKind::Tmsv;
  SqueezingParam squeeze;

  double lambda() const noexcept { return squeeze.lambda(); }

  static ResourceSpec make(ResourceKind kind, double lambda) {
    return {kind, SqueezingParam::from_lambda(lambda)};
  }
};

/// Normalized Fock amplitudes of the resource: coeffs[n] multiplies
/// |n + offset, n + offset⟩. offset is 1 for the photon-added state.
struct FockAmplitudes {
  int cutoff = 0;
  int offset = 0;
  Eigen::VectorXd coeffs;

  /// 1 − Σ c_n² evaluated in closed form, free of cancellation.
  double norm_deficit = 0.0;
};

FockAmplitudes fock_amplitudes(const ResourceSpec& spec, int cutoff = kDefaultFockCutoff);

/// Σ_{n ≥ cutoff} c_n², the probability mass dropped by truncation.
double fock_tail(const ResourceSpec& spec, int cutoff);

/// Δ(x₁ − x₂)², equal to Δ(p₁ + p₂)² for all three resources. The vacuum
/// gives 1; 0 is a perfectly EPR-correlated pair.
double epr_variance(const ResourceSpec& spec);

}  // namespace cvtele
