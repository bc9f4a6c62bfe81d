#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "deforma/lie_dual.hpp"
#include "deforma/numerics.hpp"

using namespace deforma::lie;
using deforma::Rng;

namespace {

// Independent recount: iterate the full coordinate box and filter by l1 norm.
long long box_count_torus(int rank, long long N) {
    long long count = 0;
    std::vector<long long> m(rank, -N);
    for (;;) {
        long long s = 0;
        for (long long v : m) s += std::llabs(v);
        if (s <= N) ++count;
        int i = 0;
        while (i < rank && ++m[i] > N) m[i++] = -N;
        if (i == rank) break;
    }
    return count;
}

// Weyl dimension of su3 from the positive-root product formula, as an
// independent route to the closed form.
long long su3_dim_roots(long long p, long long q) {
    // positive roots in the (alpha1, alpha2) basis: a1, a2, a1+a2
    // <lambda+rho, alpha^vee> with lambda = p w1 + q w2, rho = w1 + w2
    double n1 = double(p + 1), n2 = double(q + 1), n3 = double(p + q + 2);
    double d1 = 1, d2 = 1, d3 = 2;
    return std::llround(n1 / d1 * n2 / d2 * n3 / d3);
}

// Casimir of su3 via the weight-space Gram matrix: <lambda, lambda + 2 rho>
// in the fundamental-weight basis, scaled by the fixed factor 3/2 that
// matches the module's normalization.
long long su3_casimir_gram(long long p, long long q) {
    double G[2][2] = {{2.0 / 3, 1.0 / 3}, {1.0 / 3, 2.0 / 3}};
    double lam[2] = {double(p), double(q)};
    double mu[2] = {double(p + 2), double(q + 2)};
    double s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += lam[i] * G[i][j] * mu[j];
    return std::llround(1.5 * s);
}

}  // namespace

TEST_CASE("circle dual: characters with |m| <= cutoff") {
    auto dual = enumerate_dual(LieGroupSpec::torus(1), 2);
    REQUIRE(dual.size() == 5);
    std::set<long long> labels;
    for (const auto& d : dual) {
        CHECK(d.dim == 1);
        CHECK(d.casimir == Rational(d.label.central[0] * d.label.central[0]));
        labels.insert(d.label.central[0]);
    }
    CHECK(labels == std::set<long long>{-2, -1, 0, 1, 2});
}

TEST_CASE("su2 dual and dimensions") {
    auto dual = enumerate_dual(LieGroupSpec::su2(), 3);
    REQUIRE(dual.size() == 4);
    for (long long b = 0; b <= 3; ++b) {
        CHECK(dual[b].label.dominant[0] == b);
        CHECK(dual[b].dim == b + 1);
        CHECK(dual[b].casimir == Rational(b * (b + 2)));
    }
}

TEST_CASE("su3 dual at cutoff 1") {
    auto dual = enumerate_dual(LieGroupSpec::su3(), 1);
    REQUIRE(dual.size() == 3);
    std::multiset<long long> dims;
    for (const auto& d : dual) dims.insert(d.dim);
    CHECK(dims == std::multiset<long long>{1, 3, 3});
}

TEST_CASE("weyl dimension closed forms vs root-product oracle") {
    auto su3 = LieGroupSpec::su3();
    CHECK(weyl_dimension(LieGroupSpec::su2(), IrrepLabel{{}, {0}}) == 1);
    CHECK(weyl_dimension(su3, IrrepLabel{{}, {1, 1}}) == 8);
    auto prod = LieGroupSpec::product({LieGroupSpec::su2(), LieGroupSpec::torus(1)});
    CHECK(weyl_dimension(prod, IrrepLabel{{5}, {1}}) == 2);

    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        long long p = rng.integer(40), q = rng.integer(40);
        CHECK(weyl_dimension(su3, IrrepLabel{{}, {p, q}}) == su3_dim_roots(p, q));
    }
}

TEST_CASE("casimir closed forms vs oracles") {
    CHECK(casimir_eigenvalue(LieGroupSpec::torus(2), IrrepLabel{{3, -4}, {}}) == Rational(25));
    CHECK(casimir_eigenvalue(LieGroupSpec::su2(), IrrepLabel{{}, {1}}) == Rational(3));
    CHECK(casimir_eigenvalue(LieGroupSpec::su3(), IrrepLabel{{}, {1, 0}}) == Rational(4));

    Rng rng(13);
    auto su3 = LieGroupSpec::su3();
    for (int i = 0; i < 1000; ++i) {
        long long p = rng.integer(50), q = rng.integer(50);
        CHECK(casimir_eigenvalue(su3, IrrepLabel{{}, {p, q}}) ==
              Rational(su3_casimir_gram(p, q)));
    }
    // su2 via the rank-one gram: kappa = b(b+2) = <b, b+2>
    for (long long b = 0; b < 1000; ++b)
        CHECK(casimir_eigenvalue(LieGroupSpec::su2(), IrrepLabel{{}, {b}}) ==
              Rational(b * b + 2 * b));
    // so3 label b sits over su2 label 2b
    for (long long b = 0; b < 1000; ++b)
        CHECK(casimir_eigenvalue(LieGroupSpec::so3(), IrrepLabel{{}, {b}}) ==
              casimir_eigenvalue(LieGroupSpec::su2(), IrrepLabel{{}, {2 * b}}));
}

TEST_CASE("enumeration completeness vs box recount") {
    for (int rank = 1; rank <= 3; ++rank)
        for (long long N : {0LL, 1LL, 2LL, 5LL, 9LL})
            CHECK(std::ssize(enumerate_dual(LieGroupSpec::torus(rank), N)) ==
                  box_count_torus(rank, N));

    // product SU2 x T^1: direct double loop
    auto prod = LieGroupSpec::product({LieGroupSpec::su2(), LieGroupSpec::torus(1)});
    for (long long N : {0LL, 3LL, 7LL}) {
        long long expect = 0;
        for (long long b = 0; b <= N; ++b)
            for (long long m = -N; m <= N; ++m)
                if (b + std::llabs(m) <= N) ++expect;
        CHECK(std::ssize(enumerate_dual(prod, N)) == expect);
    }

    // no duplicates
    auto dual = enumerate_dual(LieGroupSpec::su3(), 12);
    std::set<std::string> seen;
    for (const auto& d : dual) seen.insert(d.label.to_string());
    CHECK(seen.size() == dual.size());
}

TEST_CASE("equivalence constants") {
    // Torus(1): kappa = m^2 = one_norm^2 exactly
    auto [a1, a2] = equivalence_constants(LieGroupSpec::torus(1), 10);
    CHECK(a1 == Rational(1));
    CHECK(a2 == Rational(1));

    // Torus(2): extremes 1/2 (diagonal) and 1 (axis)
    auto [b1, b2] = equivalence_constants(LieGroupSpec::torus(2), 100);
    CHECK(b1 == Rational(1, 2));
    CHECK(b2 == Rational(1));

    // SU2: kappa/b^2 = 1 + 2/b on 1..100, so the empirical extremes are
    // 51/50 (at b = 100, decreasing to the asymptotic 1) and 3 (at b = 1).
    auto [c1, c2] = equivalence_constants(LieGroupSpec::su2(), 100);
    CHECK(c1 == Rational(51, 50));
    CHECK(c2 == Rational(3));

    // guarantee on the enumerated range
    for (const auto& d : enumerate_dual(LieGroupSpec::su2(), 100)) {
        if (d.one_norm == 0) continue;
        Rational n2(d.one_norm * d.one_norm);
        CHECK(c1 * n2 <= d.casimir);
        CHECK(d.casimir <= c2 * n2);
    }

    CHECK_THROWS_AS(equivalence_constants(LieGroupSpec::su2(), 0), LieDualError);
}

TEST_CASE("equivalence constants stabilize") {
    for (auto g : {LieGroupSpec::su2(), LieGroupSpec::su3(), LieGroupSpec::torus(1),
                   LieGroupSpec::torus(2)}) {
        auto [c1a, c2a] = equivalence_constants(g, 50);
        auto [c1b, c2b] = equivalence_constants(g, 100);
        double r1 = std::abs(boost::rational_cast<double>(c1b) / boost::rational_cast<double>(c1a) - 1.0);
        double r2 = std::abs(boost::rational_cast<double>(c2b) / boost::rational_cast<double>(c2a) - 1.0);
        CHECK(r1 < 0.05);
        CHECK(r2 < 0.05);
    }
}

TEST_CASE("product consistency: casimir adds, dim multiplies") {
    Rng rng(17);
    auto g = LieGroupSpec::product({LieGroupSpec::su2(), LieGroupSpec::su3(), LieGroupSpec::torus(2)});
    for (int i = 0; i < 200; ++i) {
        long long b = rng.integer(20), p = rng.integer(20), q = rng.integer(20);
        long long m1 = (long long)rng.integer(41) - 20, m2 = (long long)rng.integer(41) - 20;
        IrrepLabel l{{m1, m2}, {b, p, q}};
        CHECK(weyl_dimension(g, l) ==
              weyl_dimension(LieGroupSpec::su2(), IrrepLabel{{}, {b}}) *
                  weyl_dimension(LieGroupSpec::su3(), IrrepLabel{{}, {p, q}}));
        CHECK(casimir_eigenvalue(g, l) ==
              casimir_eigenvalue(LieGroupSpec::su2(), IrrepLabel{{}, {b}}) +
                  casimir_eigenvalue(LieGroupSpec::su3(), IrrepLabel{{}, {p, q}}) +
                  casimir_eigenvalue(LieGroupSpec::torus(2), IrrepLabel{{m1, m2}, {}}));
    }
}

TEST_CASE("shell weights match enumeration aggregation") {
    for (auto g : {LieGroupSpec::su2(), LieGroupSpec::su3(), LieGroupSpec::so3(),
                   LieGroupSpec::torus(2),
                   LieGroupSpec::product({LieGroupSpec::su2(), LieGroupSpec::torus(1)})}) {
        const long long N = 25;
        auto w = shell_weights(g, N);
        auto c = shell_counts(g, N);
        std::vector<double> w2(N + 1, 0.0), c2(N + 1, 0.0);
        for (const auto& d : enumerate_dual(g, N)) {
            w2[d.one_norm] += double(d.dim) * double(d.dim);
            c2[d.one_norm] += 1.0;
        }
        for (long long n = 0; n <= N; ++n) {
            CHECK(w[n] == doctest::Approx(w2[n]).epsilon(1e-12));
            CHECK(c[n] == doctest::Approx(c2[n]).epsilon(1e-12));
        }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(weyl_dimension(LieGroupSpec::su3(), IrrepLabel{{}, {1}}), LieDualError);
    CHECK_THROWS_AS(casimir_eigenvalue(LieGroupSpec::su2(), IrrepLabel{{}, {-1}}), LieDualError);
    CHECK_THROWS_AS(enumerate_dual(LieGroupSpec::su2(), -1), LieDualError);
}

TEST_CASE("csv export shape") {
    auto csv = dual_table_csv(enumerate_dual(LieGroupSpec::su2(), 2));
    CHECK(csv.find("label,dim,casimir,one_norm") == 0);
    CHECK(csv.find("\"(1)\",2,3,1") != std::string::npos);
}
