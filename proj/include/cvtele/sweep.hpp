#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cvtele/charfunc.hpp"
#include "cvtele/states.hpp"

namespace cvtele {

enum class SweepVariable { Lambda, Tau, R2, Gain, Alpha };
enum class SweepQuantity { Fidelity, IdealFidelity, EprVariance };

/// Names: lambda, tau, r2, gain, alpha.
std::string_view to_string(SweepVariable v) noexcept;
std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept;

/// Names: fidelity, ideal-fidelity, epr.
std::string_view to_string(SweepQuantity q) noexcept;
std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name) noexcept;

struct SweepRange {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
};

/// One swept variable over a uniform grid; every other parameter is taken
/// from the fixed fields. The swept variable's fixed value is ignored.
struct SweepSpec {
  SweepVariable variable = SweepVariable::Lambda;
  SweepRange range;
  SweepQuantity quantity = SweepQuantity::Fidelity;
  std::vector<ResourceKind> kinds = {kAllKinds.begin(), kAllKinds.end()};

  ChannelParams channel;
  double lambda = 0.5;
  Complex alpha{1.0, 0.0};

  /// Throws DomainError on an empty or reversed range, steps < 2, duplicate
  /// or missing kinds, a range outside the variable's domain, or an ideal /
  /// EPR quantity swept over anything but λ.
  void validate() const;

  /// i-th grid value; the last one is exactly range.hi.
  double grid_value(int i) const;
};

/// Column 0 holds the swept variable, then one column per kind in spec order.
struct SweepTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;

  Eigen::Index rows() const { return values.rows(); }
};

/// Evaluates the requested quantity on every grid point. Rows are computed
/// independently (in parallel when workers are available) and assembled in
/// grid order, so the table is identical across runs and worker counts.
SweepTable run_sweep(const SweepSpec& spec);

/// λ at which the EPR variance crosses the vacuum level 1 from above, by
/// bisection to 1e-10. Only the photon-added resource starts above 1; the
/// others throw NoCrossoverError.
double epr_crossover(ResourceKind kind);

struct GainOptimum {
  double gain = 0.0;
  double fidelity = 0.0;
};

/// Golden-section maximization of the closed-form fidelity over g ∈ [lo, hi]
/// (tolerance 1e-8 in g), other channel parameters held fixed. Returns the
/// stationary point found, or an endpoint if that is better; no unimodality
/// check is made. Bounds must satisfy 0 ≤ lo < hi ≤ 5.
GainOptimum optimize_gain(const ResourceSpec& spec, const ChannelParams& channel,
                          Complex input_alpha, double lo, double hi);

}  // namespace cvtele
