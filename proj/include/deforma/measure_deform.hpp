#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "deforma/lie_dual.hpp"
#include "deforma/summability.hpp"

namespace deforma::measure {

using deforma::lie::IrrepData;
using deforma::lie::LieGroupSpec;

enum class Kind { Heat, Poly, Custom };

/// Central measure on a compact group, held Fourier-side: one scalar
/// coefficient per enumerated irrep (mu-hat(pi) = c_pi * I).
struct CentralMeasure {
    LieGroupSpec group;
    std::vector<IrrepData> dual;           // enumerate_dual(group, cutoff)
    std::vector<std::complex<double>> coefficients;  // aligned with dual
    long long cutoff = 0;
    Kind kind = Kind::Custom;
    double param = 0.0;  // t for Heat, alpha for Poly
};

class MeasureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Heat-semigroup coefficients c_pi = exp(-t * kappa_pi); t > 0.
CentralMeasure heat_coefficients(const LieGroupSpec& g, double t, long long cutoff);

/// Polynomially decaying coefficients c_pi = (1 + kappa_pi)^(-alpha/2); alpha > 0.
CentralMeasure poly_coefficients(const LieGroupSpec& g, double alpha, long long cutoff);

/// True iff every coefficient is nonzero (the deformation multiplier is
/// injective, so the deformed norm is well defined).
bool is_valid_deformation(const CentralMeasure& mu, double tol = 0.0);

struct QuadratureParams {
    double tolerance = 1e-10;
    int max_refinements = 15;
};

/// Residual of the subordination identity
///   (1+kappa)^(-alpha/2) = 1/Gamma(alpha/2) * int_0^inf t^(alpha/2-1) e^-t e^(-t kappa) dt
/// by adaptive quadrature. Throws if the quadrature cannot reach the
/// requested tolerance; the message carries the achieved error estimate.
double subordination_check(double alpha, double kappa, const QuadratureParams& q = {});

/// Partial sums S(N) = sum over one_norm <= N of d^2 |c|^2, at the given
/// ascending cutoffs (each <= measure cutoff). Compensated summation.
std::vector<std::pair<std::int64_t, double>> l2_partial_sums(
    const CentralMeasure& mu, const std::vector<std::int64_t>& cutoffs);

/// Euler-Maclaurin tail estimate for sum_{m > M} m^(-p), p > 1.
double p_series_tail(double p, double M);

/// Converged value of the full l2 sum for an SU(2) polynomial measure,
/// i.e. sum_b (1+b)^(2-2alpha), via tail-corrected partial summation.
double su2_poly_l2_limit(double alpha, long long cutoff);

/// Summability of sum d_pi^2 / (1 + one_norm)^/(2 alpha) over the dual,
/// checked at dyadic cutoffs via the increment-ratio rule. threshold is
/// d(G)/2; exactly at the threshold the rule reports Inconclusive.
SummabilityVerdict dual_summability_verdict(const LieGroupSpec& g, double alpha,
                                            std::int64_t max_cutoff);

}  // namespace deforma::measure
