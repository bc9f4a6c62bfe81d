#include "deforma/summability.hpp"

#include <algorithm>
#include <cmath>

namespace deforma {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Converges: return "Converges";
        case Verdict::Diverges: return "Diverges";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict classify_increment_ratio(const std::vector<std::pair<std::int64_t, double>>& sums,
                                 double deadzone) {
    if (sums.size() < 3) return Verdict::Inconclusive;
    std::vector<double> inc;
    for (std::size_t k = 1; k < sums.size(); ++k)
        inc.push_back(sums[k].second - sums[k - 1].second);

    double total = sums.back().second;
    if (total <= 0.0) return Verdict::Converges;
    // numerically exhausted tail
    if (inc.back() <= 1e-14 * total) return Verdict::Converges;

    // geometric mean of the last (up to) three increment ratios
    std::size_t last = inc.size() - 1;
    std::size_t first = last >= 3 ? last - 3 : 0;
    double logsum = 0.0;
    int cnt = 0;
    for (std::size_t k = first; k < last; ++k) {
        if (inc[k] <= 0.0 || inc[k + 1] <= 0.0) continue;
        logsum += std::log(inc[k + 1] / inc[k]);
        ++cnt;
    }
    if (cnt == 0) return Verdict::Converges;  // increments vanished
    double ratio = std::exp(logsum / cnt);
    if (ratio <= 1.0 - deadzone) return Verdict::Converges;
    if (ratio >= 1.0 + deadzone) return Verdict::Diverges;
    return Verdict::Inconclusive;
}

Verdict classify_term_ratio(const std::vector<double>& terms, double deadzone) {
    std::vector<double> pos;
    for (double t : terms)
        if (t > 0.0) pos.push_back(t);
    if (pos.size() < 2) return Verdict::Converges;  // finitely many terms
    if (pos.size() < terms.size() && pos.size() * 2 < terms.size())
        return Verdict::Converges;  // saturated (finite group)

    std::size_t k = std::min<std::size_t>(5, pos.size() - 1);
    double ratio = std::pow(pos.back() / pos[pos.size() - 1 - k], 1.0 / double(k));
    if (ratio <= 1.0 - deadzone) return Verdict::Converges;
    if (ratio >= 1.0 + deadzone) return Verdict::Diverges;
    return Verdict::Inconclusive;
}

std::vector<std::int64_t> dyadic_cutoffs(std::int64_t max_cutoff, std::int64_t first) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = first; n <= max_cutoff; n *= 2) out.push_back(n);
    if (out.empty() || out.back() != max_cutoff) out.push_back(max_cutoff);
    return out;
}

}  // namespace deforma
