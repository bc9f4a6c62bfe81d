#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deforma {

enum class Verdict { Converges, Diverges, Inconclusive };

std::string to_string(Verdict v);

/// Outcome of an empirical convergence/divergence test on a series of
/// nonnegative terms, together with the partial sums that produced it.
struct SummabilityVerdict {
    double alpha = 0.0;       // deformation parameter (alpha or t)
    double threshold = 0.0;   // analytic threshold for the parameter
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::int64_t, double>> partial_sums;  // (cutoff, S)
};

/// Dichotomy rule on checkpointed partial sums with geometric spacing.
/// Looks at the ratio of successive increments S(N_{k+1}) - S(N_k): a
/// power-law tail n^{-p} gives ratio 2^{1-p}, so ratios bounded away from 1
/// decide the series, while a ratio pinned at 1 (the boundary exponent,
/// where the sum grows like log N) stays Inconclusive.
///   ratio <= 1 - deadzone  -> Converges
///   ratio >= 1 + deadzone  -> Diverges
/// Dead tails (increments below 1e-14 * S) converge immediately.
Verdict classify_increment_ratio(const std::vector<std::pair<std::int64_t, double>>& sums,
                                 double deadzone = 0.10);

/// Dichotomy rule for geometrically growing/decaying terms a_n: classifies
/// the terminal term ratio a_{n+1}/a_n against 1 with a dead zone. Used for
/// exponential-growth groups where checkpoint increments are useless at
/// reachable depths.
Verdict classify_term_ratio(const std::vector<double>& terms, double deadzone = 0.04);

/// Checkpoint schedule {16, 32, ..., <= max_cutoff} plus max_cutoff itself.
std::vector<std::int64_t> dyadic_cutoffs(std::int64_t max_cutoff, std::int64_t first = 16);

}  // namespace deforma
