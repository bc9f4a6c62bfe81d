#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace deforma {

using cplx = std::complex<double>;

/// Neumaier-compensated accumulator. Reduction results stay independent of
/// summand ordering to ~1e-16 relative, which the partial-sum contracts need.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& xs) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

/// Thread cap: min(hardware, DEFORMA_THREADS when set).
inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DEFORMA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Index-parallel loop. Each task writes only to its own slot, so results
/// are deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// Stream of doubles/complexes from an explicit seed; all randomized
/// operations in the library draw from this so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }
    double gaussian() {
        std::normal_distribution<double> d(0.0, 1.0);
        return d(eng_);
    }
    cplx gaussian_cplx() { return {gaussian(), gaussian()}; }
    cplx unit_phase() {
        double th = uniform(0.0, 2.0 * M_PI);
        return {std::cos(th), std::sin(th)};
    }
    std::uint64_t integer(std::uint64_t n) {  // uniform in [0, n)
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(eng_);
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Stable per-task sub-seed so independent components never share streams.
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return base ^ h;
}

}  // namespace deforma
