#include "cvtele/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cvtele/errors.hpp"
#include "cvtele/parallel.hpp"

namespace cvtele {

namespace {

double simpson_weight(int j, int n) {
  if (j == 0 || j == n - 1) return 1.0;
  return j % 2 == 1 ? 4.0 : 2.0;
}

}  // namespace

QuadratureResult fidelity_quadrature_detailed(const ResourceSpec& spec, const ChannelParams& ch,
                                              Complex input_alpha, const QuadratureSpec& q) {
  if (!(q.half_width > 0.0) || !std::isfinite(q.half_width)) {
    throw DomainError("quadrature half_width must be positive");
  }
  if (q.points_per_axis < 16 || q.points_per_axis % 2 == 0) {
    throw DomainError("quadrature points_per_axis must be odd and >= 16");
  }
  if (q.refinement < 1) throw DomainError("quadrature refinement must be >= 1");

  const OutputCharFunction output(spec, ch, input_alpha);
  const int levels = q.refinement + 1;
  const int finest = (q.points_per_axis - 1) * (1 << q.refinement) + 1;
  const double step = 2.0 * q.half_width / (finest - 1);

  // Row-wise partial sums per level, reduced in row order afterwards so the
  // result does not depend on the worker count.
  std::vector<std::vector<Complex>> row_sums(finest, std::vector<Complex>(levels));
  std::vector<double> row_boundary(finest, 0.0);

  parallel_for(static_cast<std::size_t>(finest), [&](std::size_t row) {
    const int i = static_cast<int>(row);
    const double x = -q.half_width + i * step;
    const bool edge_row = i == 0 || i == finest - 1;
    auto& sums = row_sums[row];
    for (int k = 0; k < finest; ++k) {
      const double p = -q.half_width + k * step;
      const PhasePoint point = PhasePoint::from_quadratures(x, p);
      const Complex value =
          chi_coherent(input_alpha, point) * output(PhasePoint{-point.gamma});
      if (edge_row || k == 0 || k == finest - 1) {
        row_boundary[row] = std::max(row_boundary[row], std::abs(value));
      }
      for (int level = 0; level < levels; ++level) {
        const int stride = 1 << (q.refinement - level);
        if (i % stride != 0 || k % stride != 0) continue;
        const int n = (finest - 1) / stride + 1;
        sums[level] += simpson_weight(i / stride, n) * simpson_weight(k / stride, n) * value;
      }
    }
  });

  QuadratureResult result;
  std::vector<Complex> totals(levels);
  for (int row = 0; row < finest; ++row) {
    for (int level = 0; level < levels; ++level) totals[level] += row_sums[row][level];
    result.boundary_magnitude = std::max(result.boundary_magnitude, row_boundary[row]);
  }
  for (int level = 0; level < levels; ++level) {
    const int stride = 1 << (q.refinement - level);
    const double h = step * stride;
    // d²γ = dx dp / 2
    totals[level] *= (h / 3.0) * (h / 3.0) / (2.0 * std::numbers::pi);
    result.level_estimates.push_back(totals[level].real());
  }

  const Complex fine = totals.back();
  result.value = fine.real();
  result.imag_residual = std::abs(fine.imag());
  result.refinement_delta = std::abs(fine - totals[levels - 2]);

  if (!(result.boundary_magnitude <= q.boundary_tol)) {
    throw DomainError("quadrature integrand is " + std::to_string(result.boundary_magnitude) +
                      " at the boundary; increase half_width");
  }
  if (!(result.imag_residual <= q.imag_tol)) {
    throw ConvergenceError("quadrature imaginary residual " +
                               std::to_string(result.imag_residual) + " exceeds tolerance",
                           totals[levels - 2].real(), result.value);
  }
  if (!(result.refinement_delta <= q.convergence_tol)) {
    throw ConvergenceError("quadrature did not converge under refinement",
                           totals[levels - 2].real(), result.value);
  }
  return result;
}

double fidelity_quadrature(const ResourceSpec& spec, const ChannelParams& ch, Complex input_alpha,
                           const QuadratureSpec& q) {
  return fidelity_quadrature_detailed(spec, ch, input_alpha, q).value;
}

namespace {

using Real = long double;
using Coords = std::array<Real, 4>;  // x₁, y₁, x₂, y₂

// One-mode operator by central differences on mode `mode` of f at `at`.
template <typename F>
Real apply_mode_operator(ResourceKind kind, int mode, const Coords& at, Real h, const F& f) {
  auto shifted = [&](Real dx, Real dy) {
    Coords c = at;
    c[2 * mode] += dx;
    c[2 * mode + 1] += dy;
    return f(c);
  };
  const Real center = f(at);
  const Real xp = shifted(h, 0), xm = shifted(-h, 0);
  const Real yp = shifted(0, h), ym = shifted(0, -h);
  // ∂_α ∂_α* = ¼ (∂x² + ∂y²)
  const Real quarter_laplacian = (xp + xm + yp + ym - 4 * center) / (4 * h * h);
  if (kind == ResourceKind::PhotonSubtracted) return quarter_laplacian;

  // α∂_α + α*∂_α* = x∂x + y∂y
  const Real x = at[2 * mode];
  const Real y = at[2 * mode + 1];
  const Real radial = x * (xp - xm) / (2 * h) + y * (yp - ym) / (2 * h);
  return -quarter_laplacian + radial - (x * x + y * y) * center + center;
}

// The kernel χ(α,β)e^{(|α|²+|β|²)/2} is exp φ with the quadratic form
// φ = a(|α|² + |β|²) + 2b Re(αβ). Stencil values are taken relative to the
// evaluation point p, f(c) = f(p)(1 + expm1(φ(c) − φ(p))), with the shift
// φ(c) − φ(p) formed from the small offsets c − p. The fourth differences
// then cancel O(h) quantities instead of O(1) ones.
struct Kernel {
  Real a;
  Real b;
  Coords origin;

  Real exponent(const Coords& c) const {
    const std::complex<Real> alpha(c[0], c[1]);
    const std::complex<Real> beta(c[2], c[3]);
    return a * (std::norm(alpha) + std::norm(beta)) + 2 * b * (alpha * beta).real();
  }

  Real shifted(const Coords& c) const {
    const std::complex<Real> alpha(origin[0], origin[1]);
    const std::complex<Real> beta(origin[2], origin[3]);
    const std::complex<Real> da(c[0] - origin[0], c[1] - origin[1]);
    const std::complex<Real> db(c[2] - origin[2], c[3] - origin[3]);
    const Real norms = 2 * (std::conj(alpha) * da).real() + std::norm(da) +
                       2 * (std::conj(beta) * db).real() + std::norm(db);
    const Real cross = (alpha * db + da * beta + da * db).real();
    return std::expm1(a * norms + 2 * b * cross);
  }
};

// Λ(α)Λ(β) applied to exp φ at kernel.origin.
Real two_mode_operator(ResourceKind kind, const Kernel& kernel, Real h) {
  auto nested = [&](const auto& f) {
    auto inner = [&](const Coords& c) { return apply_mode_operator(kind, 1, c, h, f); };
    return apply_mode_operator(kind, 0, kernel.origin, h, inner);
  };
  const Real relative = nested([&](const Coords& c) { return kernel.shifted(c); });
  const Real constant = nested([](const Coords&) { return Real(1); });
  return std::exp(kernel.exponent(kernel.origin)) * (relative + constant);
}

}  // namespace

Complex lambda_operator_fd(ResourceKind kind, TwoModePhasePoint pt, double step,
                           SqueezingParam squeeze) {
  if (!(step >= 1e-5 && step <= 1e-2)) {
    throw DomainError("finite-difference step must lie in [1e-5, 1e-2]");
  }
  const Real lambda = squeeze.lambda();
  if (kind == ResourceKind::Tmsv) {
    const auto value = tmsv_chi<Real>(lambda, {pt.alpha.real(), pt.alpha.imag()},
                                      {pt.beta.real(), pt.beta.imag()});
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
  }

  if (kind == ResourceKind::PhotonSubtracted && lambda == 0) {
    // Λ_s annihilates the vacuum kernel; the normalized state exists only as
    // the λ → 0 limit, which a stencil on the kernel cannot reach.
    throw DomainError("finite-difference photon subtraction needs lambda > 0");
  }
  const Real h = step;
  const Coords at = {pt.alpha.real(), pt.alpha.imag(), pt.beta.real(), pt.beta.imag()};
  const Real one_minus = 1 - lambda * lambda;
  const Real a = -(1 + lambda * lambda) / (2 * one_minus) + Real(0.5);
  const Real b = lambda / one_minus;
  const Real raw = two_mode_operator(kind, Kernel{a, b, at}, h);
  const Real at_origin = two_mode_operator(kind, Kernel{a, b, Coords{}}, h);
  const Real damping = std::exp(-(at[0] * at[0] + at[1] * at[1] + at[2] * at[2] + at[3] * at[3]) / 2);
  return static_cast<double>(raw * damping / at_origin);
}

Complex displaced_fock_element(int m, int n, Complex gamma) {
  if (m < 0 || n < 0) throw DomainError("Fock indices must be non-negative");
  if (m < n) return std::conj(displaced_fock_element(n, m, -gamma));

  const double x = std::norm(gamma);
  const int k = m - n;
  if (x == 0.0) return m == n ? 1.0 : 0.0;

  const double log_magnitude =
      0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) + 0.5 * k * std::log(x) - 0.5 * x;
  const double laguerre = std::assoc_laguerre(static_cast<unsigned>(n), static_cast<unsigned>(k), x);
  return std::polar(std::exp(log_magnitude) * laguerre, k * std::arg(gamma));
}

namespace {

FockAmplitudes checked_amplitudes(const ResourceSpec& spec, const FockOracleSpec& f) {
  FockAmplitudes amps = fock_amplitudes(spec, f.cutoff);
  if (amps.norm_deficit > f.max_tail) {
    throw CutoffError("Fock cutoff " + std::to_string(f.cutoff) + " leaves tail " +
                          std::to_string(amps.norm_deficit) + " for lambda " +
                          std::to_string(spec.lambda()),
                      amps.norm_deficit);
  }
  return amps;
}

Eigen::MatrixXcd displacement_matrix(int size, int offset, Complex gamma) {
  Eigen::MatrixXcd d(size, size);
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) d(m, n) = displaced_fock_element(m + offset, n + offset, gamma);
  }
  return d;
}

}  // namespace

Complex chi_resource_fock(const ResourceSpec& spec, TwoModePhasePoint pt, const FockOracleSpec& f) {
  const FockAmplitudes amps = checked_amplitudes(spec, f);
  const Eigen::MatrixXcd da = displacement_matrix(amps.cutoff, amps.offset, pt.alpha);
  const Eigen::MatrixXcd db = displacement_matrix(amps.cutoff, amps.offset, pt.beta);
  const Eigen::VectorXcd c = amps.coeffs.cast<Complex>();
  return c.dot(da.cwiseProduct(db) * c);
}

double epr_variance_fock(const ResourceSpec& spec, const FockOracleSpec& f) {
  const FockAmplitudes amps = checked_amplitudes(spec, f);
  const Eigen::VectorXd& c = amps.coeffs;
  const int size = amps.cutoff;
  const Eigen::ArrayXd photons = Eigen::ArrayXd::LinSpaced(size, amps.offset, amps.offset + size - 1);

  const double norm = c.squaredNorm();
  // ⟨a†a⟩ = ⟨b†b⟩
  const double occupation = (c.array().square() * photons).sum() / norm;
  // ⟨ab⟩ = ⟨a†b†⟩: ab|k,k⟩ = k|k−1,k−1⟩
  const double pair =
      (c.head(size - 1).array() * c.tail(size - 1).array() * (photons.tail(size - 1))).sum() /
      norm;
  return 1.0 + 2.0 * occupation - 2.0 * pair;
}

}  // namespace cvtele
