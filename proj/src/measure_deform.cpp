#include "deforma/measure_deform.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "deforma/numerics.hpp"

namespace deforma::measure {

namespace {

CentralMeasure make_measure(const LieGroupSpec& g, long long cutoff, Kind kind, double param) {
    CentralMeasure mu;
    mu.group = g;
    mu.dual = lie::enumerate_dual(g, cutoff);
    mu.cutoff = cutoff;
    mu.kind = kind;
    mu.param = param;
    mu.coefficients.resize(mu.dual.size());
    return mu;
}

}  // namespace

CentralMeasure heat_coefficients(const LieGroupSpec& g, double t, long long cutoff) {
    if (!(t > 0.0)) throw MeasureError("heat parameter t must be > 0");
    CentralMeasure mu = make_measure(g, cutoff, Kind::Heat, t);
    for (std::size_t i = 0; i < mu.dual.size(); ++i) {
        double kappa = boost::rational_cast<double>(mu.dual[i].casimir);
        mu.coefficients[i] = std::exp(-t * kappa);
    }
    return mu;
}

CentralMeasure poly_coefficients(const LieGroupSpec& g, double alpha, long long cutoff) {
    if (!(alpha > 0.0)) throw MeasureError("alpha must be > 0");
    CentralMeasure mu = make_measure(g, cutoff, Kind::Poly, alpha);
    for (std::size_t i = 0; i < mu.dual.size(); ++i) {
        double kappa = boost::rational_cast<double>(mu.dual[i].casimir);
        mu.coefficients[i] = std::pow(1.0 + kappa, -alpha / 2.0);
    }
    return mu;
}

bool is_valid_deformation(const CentralMeasure& mu, double tol) {
    for (const auto& c : mu.coefficients)
        if (!(std::abs(c) > tol)) return false;
    return true;
}

double subordination_check(double alpha, double kappa, const QuadratureParams& q) {
    if (!(alpha > 0.0)) throw MeasureError("alpha must be > 0");
    if (!(q.tolerance > 0.0)) throw MeasureError("quadrature tolerance must be > 0");
    const double s = alpha / 2.0;
    const double c = 1.0 + kappa;

    const double term_tol = std::min(q.tolerance, 1e-12);

    // int_0^1 t^(s-1) e^(-ct) dt, singularity at 0 handled by tanh-sinh
    boost::math::quadrature::tanh_sinh<double> finite(q.max_refinements);
    double err1 = 0.0, lvl1 = 0.0;
    double part1 = finite.integrate(
        [&](double t) { return std::pow(t, s - 1.0) * std::exp(-c * t); }, 0.0, 1.0,
        term_tol, &err1, &lvl1);

    // int_1^inf, exponential decay
    boost::math::quadrature::exp_sinh<double> halfline(q.max_refinements);
    double err2 = 0.0, lvl2 = 0.0;
    double part2 = halfline.integrate(
        [&](double u) { return std::pow(1.0 + u, s - 1.0) * std::exp(-c * (1.0 + u)); }, 0.0,
        std::numeric_limits<double>::infinity(), term_tol, &err2, &lvl2);

    double integral = (part1 + part2) / std::tgamma(s);
    double est_err = (err1 * std::abs(part1) + err2 * std::abs(part2)) / std::tgamma(s);
    if (!(std::isfinite(integral)) || est_err > q.tolerance) {
        std::ostringstream os;
        os << "quadrature did not converge: error estimate " << est_err << " > tolerance "
           << q.tolerance;
        throw MeasureError(os.str());
    }
    return std::abs(std::pow(c, -s) - integral);
}

std::vector<std::pair<std::int64_t, double>> l2_partial_sums(
    const CentralMeasure& mu, const std::vector<std::int64_t>& cutoffs) {
    for (std::size_t i = 0; i + 1 < cutoffs.size(); ++i)
        if (cutoffs[i] > cutoffs[i + 1]) throw MeasureError("cutoffs must be ascending");
    if (!cutoffs.empty() && cutoffs.back() > mu.cutoff)
        throw MeasureError("cutoff exceeds enumerated range of the measure");

    std::vector<std::pair<std::int64_t, double>> out;
    out.reserve(cutoffs.size());
    KahanSum acc;
    std::size_t idx = 0;  // dual is sorted by one_norm
    for (std::int64_t N : cutoffs) {
        while (idx < mu.dual.size() && mu.dual[idx].one_norm <= N) {
            double d = double(mu.dual[idx].dim);
            acc.add(d * d * std::norm(mu.coefficients[idx]));
            ++idx;
        }
        out.emplace_back(N, acc.value());
    }
    return out;
}

double p_series_tail(double p, double M) {
    // sum_{m > M} m^-p = M^(1-p)/(p-1) - M^-p/2 + p M^-(p+1)/12 + O(M^-(p+3))
    return std::pow(M, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(M, -p) +
           p / 12.0 * std::pow(M, -p - 1.0);
}

double su2_poly_l2_limit(double alpha, long long cutoff) {
    // terms (1+b)^2 * ((1+b(b+2))^(-alpha/2))^2 = (1+b)^(2-2alpha)
    const double p = 2.0 * alpha - 2.0;
    if (!(p > 1.0)) throw MeasureError("l2 limit requires alpha > 3/2");
    KahanSum acc;
    for (long long b = 0; b <= cutoff; ++b) acc.add(std::pow(double(b + 1), -p));
    return acc.value() + p_series_tail(p, double(cutoff + 1));
}

SummabilityVerdict dual_summability_verdict(const LieGroupSpec& g, double alpha,
                                            std::int64_t max_cutoff) {
    if (max_cutoff < 16) throw MeasureError("max_cutoff must be >= 16");
    auto weights = lie::shell_weights(g, max_cutoff);
    auto levels = dyadic_cutoffs(max_cutoff);

    SummabilityVerdict v;
    v.alpha = alpha;
    v.threshold = g.real_dimension() / 2.0;
    KahanSum acc;
    std::int64_t n = 0;
    for (std::int64_t N : levels) {
        for (; n <= N; ++n) acc.add(weights[n] * std::pow(1.0 + double(n), -2.0 * alpha));
        v.partial_sums.emplace_back(N, acc.value());
    }
    v.verdict = classify_increment_ratio(v.partial_sums);
    return v;
}

}  // namespace deforma::measure
