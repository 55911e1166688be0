#include "cvtele/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace cvtele {

std::optional<VerifyGrid> parse_verify_grid(std::string_view name) noexcept {
  if (name == "small") return VerifyGrid::Small;
  if (name == "full") return VerifyGrid::Full;
  return std::nullopt;
}

namespace {

// NaN is sticky so a broken evaluation can never pass.
void record(SuiteResult& suite, double discrepancy) {
  ++suite.points;
  if (std::isnan(discrepancy) || std::isnan(suite.max_discrepancy)) {
    suite.max_discrepancy = std::numeric_limits<double>::quiet_NaN();
  } else {
    suite.max_discrepancy = std::max(suite.max_discrepancy, discrepancy);
  }
}

std::vector<double> range(double lo, double step, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo + step * i);
  return out;
}

SuiteResult ideal_reduction(const FidelityFunction& closed_form) {
  SuiteResult suite{"ideal-reduction", 0, 0.0, 1e-12};
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : range(0.0, 0.1, 10)) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      const double value = closed_form(spec, ChannelParams::ideal(), Complex(1.0, 0.0));
      record(suite, std::abs(value - fidelity_ideal(spec)));
    }
  }
  return suite;
}

SuiteResult fidelity_vs_quadrature(VerifyGrid grid, const FidelityFunction& closed_form) {
  SuiteResult suite{"fidelity-vs-quadrature", 0, 0.0, 1e-6};
  const bool full = grid == VerifyGrid::Full;
  const std::vector<double> lambdas = full ? std::vector{0.1, 0.3, 0.5, 0.7} : std::vector{0.3, 0.7};
  const std::vector<double> reflectivities =
      full ? std::vector{0.0, 0.1, 0.5, 0.8} : std::vector{0.0, 0.5};
  const std::vector<double> taus = full ? std::vector{0.0, 0.5, 1.5} : std::vector{0.0, 1.5};
  const std::vector<double> alphas = full ? std::vector{1.0, 2.0} : std::vector{1.0};

  for (ResourceKind kind : kAllKinds) {
    for (double lambda : lambdas) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      for (double r_sq : reflectivities) {
        for (double tau : taus) {
          for (double alpha : alphas) {
            const ChannelParams ch{1.0, r_sq, tau, 0.0};
            const double oracle = fidelity_quadrature(spec, ch, alpha);
            record(suite, std::abs(closed_form(spec, ch, alpha) - oracle));
          }
        }
      }
    }
  }
  return suite;
}

SuiteResult epr_vs_fock(VerifyGrid grid) {
  SuiteResult suite{"epr-vs-fock", 0, 0.0, 1e-8};
  const auto lambdas = grid == VerifyGrid::Full ? range(0.0, 0.05, 19) : range(0.0, 0.1, 10);
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : lambdas) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      record(suite, std::abs(epr_variance(spec) - epr_variance_fock(spec, {200})));
    }
  }
  return suite;
}

template <typename Oracle>
SuiteResult chi_suite(std::string name, double tolerance, VerifyGrid grid, const Oracle& oracle) {
  SuiteResult suite{std::move(name), 0, 0.0, tolerance};
  const std::size_t count = grid == VerifyGrid::Full ? 50 : 10;
  for (ResourceKind kind : {ResourceKind::PhotonSubtracted, ResourceKind::PhotonAdded}) {
    for (double lambda : {0.2, 0.5, 0.8}) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      const ResourceCharFunction analytic(spec);
      for (const TwoModePhasePoint& pt : sample_phase_points(count, 1.5, 20240917)) {
        record(suite, std::abs(analytic(pt) - oracle(spec, pt)));
      }
    }
  }
  return suite;
}

}  // namespace

std::vector<TwoModePhasePoint> sample_phase_points(std::size_t count, double radius,
                                                   unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk = [&] {
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, theta);
  };
  std::vector<TwoModePhasePoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Complex alpha = disk();
    const Complex beta = disk();
    points.push_back({alpha, beta});
  }
  return points;
}

std::vector<SuiteResult> run_verification(VerifyGrid grid, const FidelityFunction& closed_form) {
  std::vector<SuiteResult> suites;
  suites.push_back(ideal_reduction(closed_form));
  suites.push_back(fidelity_vs_quadrature(grid, closed_form));
  suites.push_back(epr_vs_fock(grid));
  suites.push_back(chi_suite("chi-vs-finite-difference", 1e-6, grid,
                             [](const ResourceSpec& spec, const TwoModePhasePoint& pt) {
                               return lambda_operator_fd(spec.kind, pt, 1e-3, spec.squeeze);
                             }));
  suites.push_back(chi_suite("chi-vs-fock", 1e-7, grid,
                             [](const ResourceSpec& spec, const TwoModePhasePoint& pt) {
                               return chi_resource_fock(spec, pt);
                             }));
  return suites;
}

FidelityReport verify_fidelity(const ResourceSpec& spec, const ChannelParams& ch,
                               Complex input_alpha, const QuadratureSpec& q) {
  FidelityReport report = fidelity_closed_form(spec, ch, input_alpha);
  report.oracle = fidelity_quadrature(spec, ch, input_alpha, q);
  report.discrepancy = std::abs(report.closed_form - *report.oracle);
  return report;
}

}  // namespace cvtele
