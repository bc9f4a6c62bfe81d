#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "deforma/summability.hpp"

namespace deforma::growth {

enum class FamilyKind { FreeAbelian, FreeGroup, Dihedral, RightAngledCoxeter, Cyclic };

/// Finitely generated group with its canonical symmetric generating set:
/// +-e_i for Z^n, a_i^{+-1} for free groups, the two reflections for
/// dihedral groups, +-1 for Z/n, and the vertex involutions for a
/// right-angled Coxeter group (vertices commute along edges).
struct FGGroupSpec {
    FamilyKind family = FamilyKind::FreeGroup;
    int rank = 1;             // n (FreeAbelian) or k (FreeGroup)
    long long order = 0;      // Dihedral: m (0 = infinite); Cyclic: n
    std::vector<std::vector<bool>> commutes;  // RACG adjacency (symmetric)

    static FGGroupSpec free_abelian(int n);
    static FGGroupSpec free_group(int k);
    static FGGroupSpec dihedral(long long m);  // m = 0 for the infinite one
    static FGGroupSpec cyclic(long long n);
    static FGGroupSpec racg(int vertices, const std::vector<std::pair<int, int>>& edges);

    int alphabet_size() const;   // |S|
    bool finite() const;
    std::string name() const;
};

class GrowthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sphere and ball counts c_0..c_N, b_0..b_N. Values are exact as long as
/// they stay below 2^53 (doubles carry them so deep free-group tables used
/// by the summability checks do not overflow).
struct BallTable {
    std::vector<double> spheres;
    std::vector<double> balls;
    int depth() const { return static_cast<int>(spheres.size()) - 1; }
};

constexpr std::size_t kDefaultBallCap = 10'000'000;

/// Exact sphere/ball counts. Closed forms for the free, free-abelian,
/// dihedral and cyclic families (no depth limit); shortlex BFS for
/// right-angled Coxeter groups, subject to the enumeration cap.
BallTable ball_sizes(const FGGroupSpec& g, int N, std::size_t cap = kDefaultBallCap);

/// Independent recount by breadth-first enumeration of normal forms, for
/// any family. Throws when the ball would exceed the cap.
BallTable ball_sizes_bfs(const FGGroupSpec& g, int N, std::size_t cap = kDefaultBallCap);

/// Least-squares slope of log b_n against log n over the upper half of the
/// table; converges to the (integer) polynomial growth order.
double poly_order_fit(const BallTable& table);

/// Terminal growth-rate estimate b_N / b_{N-1}. For exponentially growing
/// groups this converges to lambda geometrically; for polynomial growth it
/// tends to 1.
double exp_rate(const BallTable& table);

/// Monotone (running-minimum) profile of the subadditive roots b_n^{1/n};
/// an upper envelope decreasing to lambda.
std::vector<double> fekete_profile(const BallTable& table);

struct DeformationFunction {
    enum class Kind { Exponential, Polynomial } kind = Kind::Exponential;
    double param = 1.0;   // t > 0 or alpha > 0
    double big_m = 1.0;   // polynomial prefactor M >= 1
    static DeformationFunction exponential(double t);
    static DeformationFunction polynomial(double alpha, double big_m = 1.0);
    std::string name() const;
};

/// w(g) as a function of word length: e^(-t len) or 1/(M (1+len)^alpha).
double eval_deformation(const DeformationFunction& w, long long length);

/// Radial l2 partial sums sum_{|g| <= n} w(g)^2 = sum_m c_m w(m)^2 for
/// every n = 0..N.
std::vector<std::pair<std::int64_t, double>> l2_tail_sum(const FGGroupSpec& g,
                                                         const DeformationFunction& w, int N,
                                                         std::size_t cap = kDefaultBallCap);

/// Square-summability verdict for w on G. Polynomial-growth groups are
/// classified by the dyadic increment-ratio rule with threshold k0/2;
/// exponential-growth groups by the terminal term ratio with threshold
/// (log lambda)/2. Boundaries land in the dead zone and stay Inconclusive.
SummabilityVerdict growth_summability_verdict(const FGGroupSpec& g,
                                              const DeformationFunction& w, int N,
                                              std::size_t cap = kDefaultBallCap);

/// Abel-summation identity residual:
/// | sum_{n<=N} c_n (1+n)^-2a  -  [ b_N (1+N)^-2a
///     + sum_{n<N} b_n ((n+1)^-2a - (n+2)^-2a) ] |
double summation_by_parts_check(const BallTable& table, double alpha, int N);

/// Canonical (geodesic normal form) word arithmetic over the generating
/// alphabet; words are byte strings of generator indices.
class NormalForm {
public:
    explicit NormalForm(FGGroupSpec g);
    const FGGroupSpec& spec() const { return spec_; }
    int alphabet_size() const;
    int inverse(int gen) const;
    /// canonical form of w * s_gen (length changes by exactly +-1)
    std::string append(const std::string& w, int gen) const;
    std::string multiply(const std::string& a, const std::string& b) const;
    bool is_canonical(const std::string& w) const;

private:
    FGGroupSpec spec_;
};

/// Ball of canonical words of radius R, indexed (identity first, then by
/// length and lexicographic order).
struct BallModel {
    FGGroupSpec spec;
    int radius = 0;
    std::vector<std::string> words;
    std::unordered_map<std::string, int> index;
};

BallModel enumerate_ball(const FGGroupSpec& g, int radius, std::size_t cap = kDefaultBallCap);

}  // namespace deforma::growth
