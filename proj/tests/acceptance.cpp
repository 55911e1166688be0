// Acceptance suite: one PASS/FAIL line per criterion at its pinned tolerance.
// Exits 0 only if every criterion passes.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cvtele/charfunc.hpp"
#include "cvtele/fidelity.hpp"
#include "cvtele/oracle.hpp"
#include "cvtele/states.hpp"
#include "cvtele/sweep.hpp"
#include "cvtele/verify.hpp"

using namespace cvtele;

namespace {

int failures = 0;

void report(const std::string& id, const std::string& title, bool passed, const std::string& detail) {
  fmt::print("{} {:<3} {:<44} {}\n", passed ? "PASS" : "FAIL", id, title, detail);
  std::fflush(stdout);
  if (!passed) ++failures;
}

std::vector<double> grid(double lo, double hi, int steps) {
  std::vector<double> values;
  for (int i = 0; i < steps; ++i) values.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
  return values;
}

// Tracks the range of every fidelity value produced by the suite (criterion 7).
struct Range {
  double lo = 1.0;
  double hi = 0.0;
  std::size_t count = 0;
  void add(double f) {
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    ++count;
  }
  bool within_unit() const { return lo >= 0.0 && hi <= 1.0; }
} fidelities;

double max_quadrature_imag = 0.0;

double fidelity(const ResourceSpec& spec, const ChannelParams& ch, Complex alpha) {
  const double f = fidelity_value(spec, ch, alpha);
  fidelities.add(f);
  return f;
}

void criterion_ideal_reduction() {
  double worst = 0.0;
  for (ResourceKind kind : kAllKinds) {
    for (int i = 0; i <= 9; ++i) {
      const ResourceSpec spec = ResourceSpec::make(kind, i / 10.0);
      worst = std::max(worst, std::abs(fidelity(spec, ChannelParams::ideal(), 1.0) - fidelity_ideal(spec)));
      if (kind == ResourceKind::Tmsv) worst = std::max(worst, std::abs(fidelity_ideal(spec) - (1 + i / 10.0) / 2));
    }
  }
  worst = std::max(worst, std::abs(fidelity_ideal(ResourceSpec::make(ResourceKind::PhotonSubtracted, 0.5)) - 0.84375));
  worst = std::max(worst, std::abs(fidelity_ideal(ResourceSpec::make(ResourceKind::PhotonAdded, 0.0)) - 0.25));
  report("1", "ideal-limit reduction", worst <= 1e-12, fmt::format("max |diff| = {:.3e} (tol 1e-12)", worst));
}

void criterion_fidelity_oracle() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::size_t points = 0;
  std::string error;
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : {0.1, 0.3, 0.5, 0.7}) {
      for (double r2 : {0.0, 0.1, 0.5, 0.8}) {
        for (double tau : {0.0, 0.5, 1.5}) {
          for (double alpha : {1.0, 2.0}) {
            const ResourceSpec spec = ResourceSpec::make(kind, lambda);
            const ChannelParams ch{1.0, r2, tau, 0.0};
            try {
              const auto q = fidelity_quadrature_detailed(spec, ch, alpha);
              max_quadrature_imag = std::max(max_quadrature_imag, q.imag_residual);
              fidelities.add(q.value);
              worst = std::max(worst, std::abs(fidelity(spec, ch, alpha) - q.value));
            } catch (const std::exception& e) {
              error = e.what();
              worst = INFINITY;
            }
            ++points;
          }
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool passed = worst <= 1e-6 && seconds < 300.0;
  report("2", "fidelity closed form vs quadrature", passed,
         fmt::format("{} points, max |diff| = {:.3e} (tol 1e-6), {:.1f} s (budget 300 s){}", points, worst, seconds,
                     error.empty() ? "" : "; " + error));
}

void criterion_epr_oracle() {
  double worst = 0.0;
  for (ResourceKind kind : kAllKinds) {
    for (int i = 0; i <= 90; ++i) {
      const ResourceSpec spec = ResourceSpec::make(kind, i / 100.0);
      worst = std::max(worst, std::abs(epr_variance(spec) - epr_variance_fock(spec, {200})));
    }
  }
  double spots = 0.0;
  spots = std::max(spots, std::abs(epr_variance(ResourceSpec::make(ResourceKind::Tmsv, 0.5)) - 1.0 / 3.0));
  spots = std::max(spots, std::abs(epr_variance(ResourceSpec::make(ResourceKind::PhotonSubtracted, 0.5)) - 0.2));
  spots = std::max(spots, std::abs(epr_variance(ResourceSpec::make(ResourceKind::PhotonAdded, 0.5)) - 0.6));
  report("3", "EPR variance closed form vs Fock series", worst <= 1e-8 && spots <= 1e-8,
         fmt::format("max |diff| = {:.3e} over lambda <= 0.9, cutoff 200 (tol 1e-8); spot values {:.1e}", worst,
                     spots));
}

void criterion_crossover() {
  const double root = epr_crossover(ResourceKind::PhotonAdded);
  report("4", "photon-added EPR crossover", root >= 0.355 && root <= 0.365,
         fmt::format("lambda* = {:.10f} (window [0.355, 0.365])", root));
}

void criterion_charfunc() {
  const auto points = sample_phase_points(50, 1.5, 20240917);
  double fd = 0.0;
  double fock = 0.0;
  for (ResourceKind kind : {ResourceKind::PhotonSubtracted, ResourceKind::PhotonAdded}) {
    for (double lambda : {0.2, 0.5, 0.8}) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      const ResourceCharFunction chi(spec);
      for (const auto& pt : points) {
        const Complex analytic = chi(pt);
        fd = std::max(fd, std::abs(analytic - lambda_operator_fd(kind, pt, 1e-3, spec.squeeze)));
        fock = std::max(fock, std::abs(analytic - chi_resource_fock(spec, pt)));
      }
    }
  }
  report("5", "characteristic-function cross-validation", fd <= 1e-6 && fock <= 1e-7,
         fmt::format("finite difference {:.3e} (tol 1e-6), Fock {:.3e} (tol 1e-7); 50 points x 3 lambda x 2 kinds",
                     fd, fock));
}

void criterion_tau_monotone() {
  const auto taus = grid(0.0, 3.0, 61);
  std::size_t curves = 0;
  std::size_t rising = 0;
  double worst_rise = 0.0;
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : {0.2, 0.5, 0.8}) {
      for (double alpha : {1.0, 2.0, 3.0}) {
        double previous = INFINITY;
        double rise = 0.0;
        for (double tau : taus) {
          const double f = fidelity(ResourceSpec::make(kind, lambda), {1.0, 0.5, tau, 0.0}, alpha);
          rise = std::max(rise, f - previous);
          previous = f;
        }
        ++curves;
        if (rise > 0.0) ++rising;
        worst_rise = std::max(worst_rise, rise);
      }
    }
  }
  report("6a", "fidelity non-increasing in tau", rising == 0,
         fmt::format("{} of {} curves rise (largest step increase {:.3e}); g=1, R2=0.5, lambda in {{0.2,0.5,0.8}}",
                     rising, curves, worst_rise));
}

void criterion_low_squeezing_optimum() {
  const ResourceSpec probe = ResourceSpec::make(ResourceKind::Tmsv, 0.0);
  double best_lambda = 0.0;
  double best = -1.0;
  for (double lambda : grid(0.0, 0.999, 1000)) {
    const double f = fidelity(ResourceSpec{probe.kind, SqueezingParam::from_lambda(lambda)}, {1.0, 0.8, 0.0, 0.0}, 1.0);
    if (f > best) {
      best = f;
      best_lambda = lambda;
    }
  }
  report("6b", "R2=0.8: tmsv fidelity argmax below 0.1", best_lambda < 0.1,
         fmt::format("argmax lambda = {:.3f}, F = {:.6f} (g=1, tau=0, alpha=1)", best_lambda, best));
}

void criterion_ordering() {
  std::size_t violations = 0;
  const auto lambdas = grid(0.001, 0.4, 400);
  for (double lambda : lambdas) {
    const double s = fidelity_ideal(ResourceSpec::make(ResourceKind::PhotonSubtracted, lambda));
    const double t = fidelity_ideal(ResourceSpec::make(ResourceKind::Tmsv, lambda));
    const double a = fidelity_ideal(ResourceSpec::make(ResourceKind::PhotonAdded, lambda));
    fidelities.add(s);
    fidelities.add(t);
    fidelities.add(a);
    if (!(s > t && t > a)) ++violations;
  }
  report("6c", "F_psub > F_tmsv > F_padd on (0, 0.4]", violations == 0,
         fmt::format("{} violations on {} lambda points", violations, lambdas.size()));
}

void criterion_flags() {
  std::size_t wrong = 0;
  std::size_t checked = 0;
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : grid(0.0, 0.95, 20)) {
      for (double r2 : {0.0, 0.5}) {
        const auto report = fidelity_closed_form(ResourceSpec::make(kind, lambda), {1.0, r2, 0.0, 0.0}, 1.0);
        wrong += report.beats_classical != (report.closed_form > kClassicalBound);
        wrong += report.beats_no_cloning != (report.closed_form > kNoCloningBound);
        ++checked;
      }
    }
  }
  for (double f : {0.5, std::nextafter(0.5, 1.0), 2.0 / 3.0, std::nextafter(2.0 / 3.0, 1.0)}) {
    const auto report = FidelityReport::from_value(f);
    wrong += report.beats_classical != (f > 0.5);
    wrong += report.beats_no_cloning != (f > 2.0 / 3.0);
    ++checked;
  }
  report("6d", "benchmark flags against 1/2 and 2/3", wrong == 0,
         fmt::format("{} inconsistent flags over {} reports", wrong, checked));
}

void criterion_normalization() {
  double origin = 0.0;
  double hermitian = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  const ChannelParams channels[] = {ChannelParams::ideal(), {1.0, 0.5, 1.0, 0.0}, {0.7, 0.2, 0.3, 1.5},
                                    {1.6, 0.9, 3.0, 0.4}};
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : {0.0, 0.3, 0.6, 0.9}) {
      const ResourceSpec spec = ResourceSpec::make(kind, lambda);
      const ResourceCharFunction chi(spec);
      origin = std::max(origin, std::abs(chi(0.0, 0.0) - 1.0));
      for (int i = 0; i < 100; ++i) {
        const Complex a(u(rng), u(rng));
        const Complex b(u(rng), u(rng));
        hermitian = std::max(hermitian, std::abs(chi(-a, -b) - std::conj(chi(a, b))));
        const PhasePoint p{a};
        hermitian = std::max(hermitian, std::abs(chi_coherent(b, {-a}) - std::conj(chi_coherent(b, p))));
      }
      for (const auto& ch : channels) {
        const OutputCharFunction out(spec, ch, Complex(1.0, 0.5));
        origin = std::max(origin, std::abs(out({0.0}) - 1.0));
        for (int i = 0; i < 100; ++i) {
          const Complex g(u(rng), u(rng));
          hermitian = std::max(hermitian, std::abs(out({-g}) - std::conj(out({g}))));
        }
      }
    }
  }
  const bool passed = origin <= 1e-12 && hermitian <= 1e-10 && max_quadrature_imag < 1e-8 && fidelities.within_unit();
  report("7", "normalization and symmetry", passed,
         fmt::format("chi(0) {:.1e} (1e-12), Hermitian {:.1e} (1e-10), quadrature imag {:.1e} (1e-8), "
                     "F in [{:.4f}, {:.4f}] over {} values",
                     origin, hermitian, max_quadrature_imag, fidelities.lo, fidelities.hi, fidelities.count));
}

void criterion_optimizer() {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_gap = INFINITY;
  for (int trial = 0; trial < 10; ++trial) {
    const ResourceSpec spec = ResourceSpec::make(kAllKinds[trial % 3], 0.05 + 0.85 * u(rng));
    const ChannelParams ch{1.0, 0.9 * u(rng), 2.0 * u(rng), 0.5 * u(rng)};
    const Complex alpha = std::polar(0.5 + 2.0 * u(rng), 6.0 * u(rng));
    const GainOptimum best = optimize_gain(spec, ch, alpha, 0.0, 3.0);
    double scan = -1.0;
    for (int i = 0; i <= 3000; ++i) {
      ChannelParams probe = ch;
      probe.g = 3.0 * i / 3000.0;
      scan = std::max(scan, fidelity(spec, probe, alpha));
    }
    worst_gap = std::min(worst_gap, best.fidelity - scan);
  }
  report("8a", "optimize_gain vs 3001-point scan", worst_gap >= -1e-6,
         fmt::format("worst (optimum - scan) = {:.3e} over 10 random settings (tol -1e-6)", worst_gap));

  double worst_mismatch = 0.0;
  std::string example;
  for (ResourceKind kind : kAllKinds) {
    for (double lambda : {0.2, 0.5, 0.8}) {
      for (double alpha : {1.0, 2.0}) {
        const ResourceSpec spec = ResourceSpec::make(kind, lambda);
        const GainOptimum best = optimize_gain(spec, ChannelParams::ideal(), alpha, 0.0, 3.0);
        const double mismatch = std::abs(best.gain - 1.0);  // T = 1 at R2 = 0
        if (mismatch > worst_mismatch) {
          worst_mismatch = mismatch;
          example = fmt::format("{} lambda={} alpha={}: g*={:.6f}, F*={:.6f} vs F(g=1)={:.6f}", to_string(kind),
                                lambda, alpha, best.gain, best.fidelity,
                                fidelity_value(spec, ChannelParams::ideal(), alpha));
        }
      }
    }
  }
  report("8b", "R2=0, tau=0: optimum at gT = 1", worst_mismatch <= 1e-6,
         fmt::format("max |g*T - 1| = {:.3e} (tol 1e-6); worst {}", worst_mismatch, example));
}

}  // namespace

int main() {
  criterion_ideal_reduction();
  criterion_fidelity_oracle();
  criterion_epr_oracle();
  criterion_crossover();
  criterion_charfunc();
  criterion_tau_monotone();
  criterion_low_squeezing_optimum();
  criterion_ordering();
  criterion_flags();
  criterion_normalization();
  criterion_optimizer();
  fmt::print("{} criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
