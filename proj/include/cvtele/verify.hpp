#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvtele/fidelity.hpp"
#include "cvtele/oracle.hpp"

namespace cvtele {

enum class VerifyGrid { Small, Full };

std::optional<VerifyGrid> parse_verify_grid(std::string_view name) noexcept;

struct SuiteResult {
  std::string name;
  std::size_t points = 0;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_discrepancy <= tolerance; }
};

/// Closed-form fidelity under test; swappable for fault injection.
using FidelityFunction =
    std::function<double(const ResourceSpec&, const ChannelParams&, Complex)>;

/// Runs every closed-form-versus-oracle suite:
///   ideal-reduction          closed form at the ideal channel vs ideal formulas
///   fidelity-vs-quadrature   closed form vs 2-D quadrature of the overlap
///   epr-vs-fock              EPR variances vs Fock moments
///   chi-vs-finite-difference Λ expansions vs finite-difference operators
///   chi-vs-fock              Λ expansions vs displaced-Fock series
/// The small grid is a subset of the full one.
std::vector<SuiteResult> run_verification(VerifyGrid grid,
                                          const FidelityFunction& closed_form = fidelity_value);

/// Closed form with the quadrature value and discrepancy attached.
FidelityReport verify_fidelity(const ResourceSpec& spec, const ChannelParams& ch,
                               Complex input_alpha, const QuadratureSpec& q = {});

/// Deterministic sample of two-mode points with |α|, |β| ≤ radius.
std::vector<TwoModePhasePoint> sample_phase_points(std::size_t count, double radius,
                                                   unsigned long long seed);

}  // namespace cvtele
