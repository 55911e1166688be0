#include "cvtele/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvtele/errors.hpp"
#include "cvtele/fidelity.hpp"
#include "cvtele/parallel.hpp"

namespace cvtele {

std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::Lambda:
      return "lambda";
    case SweepVariable::Tau:
      return "tau";
    case SweepVariable::R2:
      return "r2";
    case SweepVariable::Gain:
      return "gain";
    case SweepVariable::Alpha:
      return "alpha";
  }
  return "?";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept {
  for (auto v : {SweepVariable::Lambda, SweepVariable::Tau, SweepVariable::R2, SweepVariable::Gain,
                 SweepVariable::Alpha}) {
    if (name == to_string(v)) return v;
  }
  return std::nullopt;
}

std::string_view to_string(SweepQuantity q) noexcept {
  switch (q) {
    case SweepQuantity::Fidelity:
      return "fidelity";
    case SweepQuantity::IdealFidelity:
      return "ideal-fidelity";
    case SweepQuantity::EprVariance:
      return "epr";
  }
  return "?";
}

std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name) noexcept {
  for (auto q : {SweepQuantity::Fidelity, SweepQuantity::IdealFidelity, SweepQuantity::EprVariance}) {
    if (name == to_string(q)) return q;
  }
  return std::nullopt;
}

void SweepSpec::validate() const {
  const auto [lo, hi, steps] = range;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("sweep range needs finite lo < hi");
  }
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (kinds.empty()) throw DomainError("sweep needs at least one resource kind");
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (std::find(kinds.begin() + i + 1, kinds.end(), kinds[i]) != kinds.end()) {
      throw DomainError("duplicate resource kind in sweep");
    }
  }
  if (quantity != SweepQuantity::Fidelity && variable != SweepVariable::Lambda) {
    throw DomainError(std::string(to_string(quantity)) + " depends only on lambda");
  }

  switch (variable) {
    case SweepVariable::Lambda:
      if (lo < 0.0 || hi > kMaxLambda) throw DomainError("lambda sweep must stay in [0, 1 - 1e-9]");
      break;
    case SweepVariable::Tau:
      if (lo < 0.0) throw DomainError("tau sweep must be >= 0");
      break;
    case SweepVariable::R2:
      if (lo < 0.0 || hi > 1.0) throw DomainError("r2 sweep must stay in [0, 1]");
      break;
    case SweepVariable::Gain:
      if (lo < 0.0) throw DomainError("gain sweep must be >= 0");
      break;
    case SweepVariable::Alpha:
      break;
  }
  if (variable != SweepVariable::Lambda) SqueezingParam::from_lambda(lambda);
  ChannelParams probe = channel;
  if (variable == SweepVariable::Tau) probe.tau = lo;
  if (variable == SweepVariable::R2) probe.r_sq = lo;
  if (variable == SweepVariable::Gain) probe.g = lo;
  probe.validate();
}

double SweepSpec::grid_value(int i) const {
  if (i == range.steps - 1) return range.hi;
  return range.lo + (range.hi - range.lo) * i / (range.steps - 1);
}

namespace {

double evaluate_cell(const SweepSpec& spec, ResourceKind kind, double x) {
  ChannelParams ch = spec.channel;
  double lambda = spec.lambda;
  Complex alpha = spec.alpha;
  switch (spec.variable) {
    case SweepVariable::Lambda:
      lambda = x;
      break;
    case SweepVariable::Tau:
      ch.tau = x;
      break;
    case SweepVariable::R2:
      ch.r_sq = x;
      break;
    case SweepVariable::Gain:
      ch.g = x;
      break;
    case SweepVariable::Alpha:
      alpha = x;
      break;
  }
  const ResourceSpec resource = ResourceSpec::make(kind, lambda);
  switch (spec.quantity) {
    case SweepQuantity::Fidelity:
      return fidelity_value(resource, ch, alpha);
    case SweepQuantity::IdealFidelity:
      return fidelity_ideal(resource);
    case SweepQuantity::EprVariance:
      return epr_variance(resource);
  }
  return std::nan("");
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();

  SweepTable table;
  table.header.emplace_back(to_string(spec.variable));
  for (ResourceKind kind : spec.kinds) table.header.emplace_back(to_string(kind));

  const int rows = spec.range.steps;
  const auto cols = static_cast<Eigen::Index>(spec.kinds.size());
  table.values.resize(rows, cols + 1);

  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t row) {
    const auto r = static_cast<Eigen::Index>(row);
    const double x = spec.grid_value(static_cast<int>(row));
    table.values(r, 0) = x;
    for (Eigen::Index c = 0; c < cols; ++c) {
      const ResourceKind kind = spec.kinds[static_cast<std::size_t>(c)];
      double value = 0.0;
      try {
        value = evaluate_cell(spec, kind, x);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " (at " + std::string(to_string(spec.variable)) +
                          "=" + std::to_string(x) + ", kind=" + std::string(to_string(kind)) + ")");
      }
      if (!std::isfinite(value)) {
        throw DomainError("non-finite " + std::string(to_string(spec.quantity)) + " at " +
                          std::string(to_string(spec.variable)) + "=" + std::to_string(x) +
                          ", kind=" + std::string(to_string(kind)));
      }
      table.values(r, c + 1) = value;
    }
  });
  return table;
}

double epr_crossover(ResourceKind kind) {
  auto excess = [kind](double lambda) {
    return epr_variance(ResourceSpec::make(kind, lambda)) - 1.0;
  };
  double lo = 0.0;
  double hi = kMaxLambda;
  double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw NoCrossoverError("EPR variance of " + std::string(to_string(kind)) +
                           " does not cross 1 on (0, 1)");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = excess(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GainOptimum optimize_gain(const ResourceSpec& spec, const ChannelParams& channel,
                          Complex input_alpha, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || lo < 0.0 || hi > 5.0) {
    throw DomainError("gain bounds must satisfy 0 <= lo < hi <= 5");
  }
  auto fidelity_at = [&](double g) {
    ChannelParams ch = channel;
    ch.g = g;
    return fidelity_value(spec, ch, input_alpha);
  };

  constexpr double kTolerance = 1e-8;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fidelity_at(c);
  double fd = fidelity_at(d);
  while (b - a > kTolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fidelity_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fidelity_at(d);
    }
  }

  GainOptimum best{0.5 * (a + b), fidelity_at(0.5 * (a + b))};
  for (double edge : {lo, hi}) {
    const double f = fidelity_at(edge);
    if (f > best.fidelity) best = {edge, f};
  }
  return best;
}

}  // namespace cvtele
