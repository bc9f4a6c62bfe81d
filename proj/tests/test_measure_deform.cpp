#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deforma/measure_deform.hpp"
#include "deforma/numerics.hpp"

using namespace deforma;
using namespace deforma::measure;
using lie::LieGroupSpec;

TEST_CASE("heat coefficients") {
    auto mu = heat_coefficients(LieGroupSpec::su2(), 1.0, 8);
    CHECK(mu.coefficients[0].real() == doctest::Approx(1.0).epsilon(1e-15));  // trivial rep
    CHECK(mu.coefficients[1].real() == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));

    auto nu = heat_coefficients(LieGroupSpec::torus(1), 0.5, 4);
    // dual sorted by (one_norm, label): index of m=2 is the last-but-one shell
    for (std::size_t i = 0; i < nu.dual.size(); ++i)
        if (nu.dual[i].label.central[0] == 2)
            CHECK(nu.coefficients[i].real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(heat_coefficients(LieGroupSpec::su2(), 0.0, 4), MeasureError);
    CHECK_THROWS_AS(heat_coefficients(LieGroupSpec::su2(), -1.0, 4), MeasureError);
}

TEST_CASE("poly coefficients") {
    auto mu = poly_coefficients(LieGroupSpec::su2(), 1.0, 8);
    CHECK(mu.coefficients[0].real() == doctest::Approx(1.0));
    CHECK(mu.coefficients[1].real() == doctest::Approx(0.5).epsilon(1e-15));  // (1+3)^(-1/2)

    auto nu = poly_coefficients(LieGroupSpec::torus(1), 2.0, 4);
    for (std::size_t i = 0; i < nu.dual.size(); ++i)
        if (std::llabs(nu.dual[i].label.central[0]) == 1)
            CHECK(nu.coefficients[i].real() == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(poly_coefficients(LieGroupSpec::su2(), 0.0, 4), MeasureError);
}

TEST_CASE("validity of deformations") {
    CHECK(is_valid_deformation(heat_coefficients(LieGroupSpec::su2(), 2.5, 16)));
    CHECK(is_valid_deformation(poly_coefficients(LieGroupSpec::su3(), 0.7, 6)));
    auto mu = poly_coefficients(LieGroupSpec::torus(1), 1.0, 4);
    mu.kind = Kind::Custom;
    mu.coefficients[2] = 0.0;
    CHECK(!is_valid_deformation(mu));
}

TEST_CASE("subordination identity, gamma-corrected") {
    CHECK(subordination_check(2.0, 0.0) <= 1e-8);   // plain Gamma(1) identity
    CHECK(subordination_check(1.0, 3.0) <= 1e-8);   // against (1+3)^(-1/2) = 0.5
    CHECK(subordination_check(3.0, 1.0) <= 1e-8);   // against 2^(-3/2)

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        double alpha = rng.uniform(0.5, 5.0);
        double kappa = rng.uniform(0.0, 50.0);
        CHECK(subordination_check(alpha, kappa) <= 1e-8);
    }
    CHECK_THROWS_AS(subordination_check(-1.0, 1.0), MeasureError);
}

TEST_CASE("l2 partial sums: haar measure") {
    auto mu = poly_coefficients(LieGroupSpec::su2(), 1.0, 32);
    mu.kind = Kind::Custom;
    for (std::size_t i = 0; i < mu.coefficients.size(); ++i)
        mu.coefficients[i] = (mu.dual[i].one_norm == 0) ? 1.0 : 0.0;
    auto sums = l2_partial_sums(mu, {1, 4, 16, 32});
    for (auto& [N, S] : sums) CHECK(S == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("l2 partial sums: su2 poly(2) reaches pi^2/6") {
    // terms collapse to (1+b)^(-2); tail-corrected limit vs the zeta value
    double limit = su2_poly_l2_limit(2.0, 100000);
    CHECK(std::abs(limit - M_PI * M_PI / 6.0) / (M_PI * M_PI / 6.0) <= 1e-9);

    auto mu = poly_coefficients(LieGroupSpec::su2(), 2.0, 4096);
    auto sums = l2_partial_sums(mu, {1024, 2048, 4096});
    // partial sums approach from below with a ~1/N deficit
    CHECK(sums.back().second < M_PI * M_PI / 6.0);
    CHECK(std::abs(sums.back().second + 1.0 / 4098.0 - M_PI * M_PI / 6.0) < 1e-6);
}

TEST_CASE("l2 partial sums: torus(1) poly(2) limit") {
    // Independently computed two ways (direct summation of 1e7 terms and the
    // pi*coth(pi) closed form): 1 + 2*sum_{m>=1} (1+m^2)^-2 = 1.613673950845818
    auto mu = poly_coefficients(LieGroupSpec::torus(1), 2.0, 20000);
    auto sums = l2_partial_sums(mu, {20000});
    const double limit = 1.613673950845818;
    CHECK(std::abs(sums.back().second - limit) < 1e-9);

    // in-test brute-force oracle over the enumerated range
    KahanSum acc;
    for (long long m = 20000; m >= 1; --m) acc.add(2.0 * std::pow(1.0 + double(m) * m, -2.0));
    acc.add(1.0);
    CHECK(sums.back().second == doctest::Approx(acc.value()).epsilon(1e-13));
}

TEST_CASE("l2 partial sums errors and monotonicity") {
    auto mu = poly_coefficients(LieGroupSpec::su2(), 1.2, 64);
    CHECK_THROWS_AS(l2_partial_sums(mu, {128}), MeasureError);
    auto sums = l2_partial_sums(mu, {1, 2, 4, 8, 16, 32, 64});
    for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i].second >= sums[i - 1].second);
}

TEST_CASE("hurwitz-style closed form agreement for su2 poly") {
    for (double alpha : {1.8, 2.0, 2.5, 3.0}) {
        double limit = su2_poly_l2_limit(alpha, 100000);
        double zeta = std::riemann_zeta(2.0 * alpha - 2.0);
        CHECK(std::abs(limit - zeta) / zeta <= 1e-6);
    }
}

TEST_CASE("dual summability verdicts across the threshold") {
    auto v1 = dual_summability_verdict(LieGroupSpec::torus(1), 1.0, 1 << 14);
    CHECK(v1.verdict == Verdict::Converges);
    CHECK(v1.threshold == doctest::Approx(0.5));

    auto v2 = dual_summability_verdict(LieGroupSpec::su2(), 1.4, 1 << 14);
    CHECK(v2.verdict == Verdict::Diverges);
    CHECK(v2.threshold == doctest::Approx(1.5));

    auto v3 = dual_summability_verdict(LieGroupSpec::su2(), 1.6, 1 << 14);
    CHECK(v3.verdict == Verdict::Converges);

    // threshold dichotomy at d/2 +- 0.2 for each supported family
    for (auto g : {LieGroupSpec::torus(1), LieGroupSpec::torus(2), LieGroupSpec::torus(3),
                   LieGroupSpec::su2(), LieGroupSpec::so3(), LieGroupSpec::su3()}) {
        double half = g.real_dimension() / 2.0;
        CHECK(dual_summability_verdict(g, half - 0.2, 1 << 12).verdict == Verdict::Diverges);
        CHECK(dual_summability_verdict(g, half + 0.2, 1 << 12).verdict == Verdict::Converges);
    }

    // exactly on the boundary the rule declines to decide
    CHECK(dual_summability_verdict(LieGroupSpec::su2(), 1.5, 1 << 14).verdict ==
          Verdict::Inconclusive);
    CHECK(dual_summability_verdict(LieGroupSpec::torus(2), 1.0, 1 << 14).verdict ==
          Verdict::Inconclusive);

    CHECK_THROWS_AS(dual_summability_verdict(LieGroupSpec::su2(), 1.0, 8), MeasureError);
}

TEST_CASE("partial sums independent of reduction order") {
    auto mu = poly_coefficients(LieGroupSpec::su3(), 2.1, 40);
    auto fwd = l2_partial_sums(mu, {40});
    // reversed-order compensated total
    KahanSum acc;
    for (std::size_t i = mu.dual.size(); i-- > 0;) {
        double d = double(mu.dual[i].dim);
        acc.add(d * d * std::norm(mu.coefficients[i]));
    }
    CHECK(std::abs(fwd.back().second - acc.value()) <= 1e-12 * std::max(1.0, acc.value()));
}
