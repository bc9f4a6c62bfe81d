#include "deforma/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "deforma/numerics.hpp"

namespace deforma::growth {

FGGroupSpec FGGroupSpec::free_abelian(int n) {
    if (n < 1) throw GrowthError("free abelian rank must be >= 1");
    FGGroupSpec g;
    g.family = FamilyKind::FreeAbelian;
    g.rank = n;
    return g;
}

FGGroupSpec FGGroupSpec::free_group(int k) {
    if (k < 1) throw GrowthError("free rank must be >= 1");
    FGGroupSpec g;
    g.family = FamilyKind::FreeGroup;
    g.rank = k;
    return g;
}

FGGroupSpec FGGroupSpec::dihedral(long long m) {
    if (m < 0 || m == 1) throw GrowthError("dihedral parameter must be 0 (infinite) or >= 2");
    FGGroupSpec g;
    g.family = FamilyKind::Dihedral;
    g.order = m;
    return g;
}

FGGroupSpec FGGroupSpec::cyclic(long long n) {
    if (n < 1) throw GrowthError("cyclic order must be >= 1");
    FGGroupSpec g;
    g.family = FamilyKind::Cyclic;
    g.order = n;
    return g;
}

FGGroupSpec FGGroupSpec::racg(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices < 1) throw GrowthError("Coxeter graph needs at least one vertex");
    FGGroupSpec g;
    g.family = FamilyKind::RightAngledCoxeter;
    g.rank = vertices;
    g.commutes.assign(vertices, std::vector<bool>(vertices, false));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw GrowthError("Coxeter graph edge out of range");
        if (u == v) throw GrowthError("Coxeter graph must be loop-free");
        g.commutes[u][v] = g.commutes[v][u] = true;
    }
    return g;
}

int FGGroupSpec::alphabet_size() const {
    switch (family) {
        case FamilyKind::FreeAbelian: return 2 * rank;
        case FamilyKind::FreeGroup: return 2 * rank;
        case FamilyKind::Dihedral: return 2;
        case FamilyKind::Cyclic: return order == 1 ? 0 : (order == 2 ? 1 : 2);
        case FamilyKind::RightAngledCoxeter: return rank;
    }
    throw GrowthError("unsupported family");
}

bool FGGroupSpec::finite() const {
    switch (family) {
        case FamilyKind::Cyclic: return true;
        case FamilyKind::Dihedral: return order > 0;
        case FamilyKind::RightAngledCoxeter: {
            for (int u = 0; u < rank; ++u)
                for (int v = 0; v < rank; ++v)
                    if (u != v && !commutes[u][v]) return false;
            return true;  // complete graph: (Z/2)^rank
        }
        default: return false;
    }
}

std::string FGGroupSpec::name() const {
    switch (family) {
        case FamilyKind::FreeAbelian: return "abelian:" + std::to_string(rank);
        case FamilyKind::FreeGroup: return "free:" + std::to_string(rank);
        case FamilyKind::Dihedral:
            return order == 0 ? "dihedral:inf" : "dihedral:" + std::to_string(order);
        case FamilyKind::Cyclic: return "cyclic:" + std::to_string(order);
        case FamilyKind::RightAngledCoxeter: return "racg:" + std::to_string(rank);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// normal forms

NormalForm::NormalForm(FGGroupSpec g) : spec_(std::move(g)) {}

int NormalForm::alphabet_size() const { return spec_.alphabet_size(); }

int NormalForm::inverse(int gen) const {
    switch (spec_.family) {
        case FamilyKind::FreeAbelian:
        case FamilyKind::FreeGroup: return gen ^ 1;
        case FamilyKind::Cyclic: return spec_.order == 2 ? gen : gen ^ 1;
        case FamilyKind::Dihedral:
        case FamilyKind::RightAngledCoxeter: return gen;  // involutions
    }
    throw GrowthError("unsupported family");
}

namespace {

// letters of a canonical abelian word -> exponent vector
std::vector<long long> abelian_decode(const std::string& w, int rank) {
    std::vector<long long> v(rank, 0);
    for (unsigned char c : w) v[c / 2] += (c % 2 == 0) ? 1 : -1;
    return v;
}

std::string abelian_encode(const std::vector<long long>& v) {
    std::string w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        char plus = static_cast<char>(2 * i), minus = static_cast<char>(2 * i + 1);
        for (long long r = 0; r < std::llabs(v[i]); ++r) w.push_back(v[i] > 0 ? plus : minus);
    }
    return w;
}

long long cyclic_decode(const std::string& w, long long n) {
    if (w.empty()) return 0;
    long long z = (w[0] == 0) ? static_cast<long long>(w.size())
                              : n - static_cast<long long>(w.size());
    return ((z % n) + n) % n;
}

std::string cyclic_encode(long long z, long long n) {
    z = ((z % n) + n) % n;
    std::string w;
    if (z == 0) return w;
    if (2 * z <= n)
        w.assign(static_cast<std::size_t>(z), char(0));
    else
        w.assign(static_cast<std::size_t>(n - z), char(1));
    return w;
}

}  // namespace

std::string NormalForm::append(const std::string& w, int gen) const {
    if (gen < 0 || gen >= alphabet_size()) throw GrowthError("generator index out of range");
    switch (spec_.family) {
        case FamilyKind::FreeGroup: {
            if (!w.empty() && w.back() == char(gen ^ 1)) return w.substr(0, w.size() - 1);
            return w + char(gen);
        }
        case FamilyKind::FreeAbelian: {
            auto v = abelian_decode(w, spec_.rank);
            v[gen / 2] += (gen % 2 == 0) ? 1 : -1;
            return abelian_encode(v);
        }
        case FamilyKind::Cyclic: {
            long long z = cyclic_decode(w, spec_.order);
            z += (spec_.order == 2 || gen == 0) ? 1 : -1;
            return cyclic_encode(z, spec_.order);
        }
        case FamilyKind::Dihedral: {
            if (!w.empty() && w.back() == char(gen)) return w.substr(0, w.size() - 1);
            std::string out = w + char(gen);
            long long m = spec_.order;
            if (m == 0) return out;  // infinite: alternating words are reduced
            long long len = static_cast<long long>(out.size());
            if (len < m) return out;
            if (len == m) {
                // the longest element has two alternating spellings; keep the
                // one starting with s (= letter 0)
                if (out[0] == 1)
                    for (std::size_t i = 0; i < out.size(); ++i) out[i] = char((i % 2 == 0) ? 0 : 1);
                return out;
            }
            // len == m+1 from the canonical longest element: relation
            // (st)^m = 1 folds it to the alternating word of length m-1
            // starting with t
            std::string shorter;
            for (long long i = 0; i < m - 1; ++i) shorter.push_back(char((i % 2 == 0) ? 1 : 0));
            return shorter;
        }
        case FamilyKind::RightAngledCoxeter: {
            // cancellation: gen may slide left past commuting letters
            for (std::size_t i = w.size(); i-- > 0;) {
                if (w[i] == char(gen)) {
                    std::string out = w;
                    out.erase(out.begin() + i);
                    return out;
                }
                if (!spec_.commutes[static_cast<unsigned char>(w[i])][gen]) break;
            }
            // insertion at the lexicographically minimal admissible slot
            std::size_t j = w.size();
            while (j > 0 && spec_.commutes[static_cast<unsigned char>(w[j - 1])][gen] &&
                   static_cast<unsigned char>(w[j - 1]) > gen)
                --j;
            std::string out = w;
            out.insert(out.begin() + j, char(gen));
            return out;
        }
    }
    throw GrowthError("unsupported family");
}

std::string NormalForm::multiply(const std::string& a, const std::string& b) const {
    std::string out = a;
    for (char c : b) out = append(out, static_cast<unsigned char>(c));
    return out;
}

bool NormalForm::is_canonical(const std::string& w) const {
    std::string rebuilt;
    for (char c : w) {
        rebuilt = append(rebuilt, static_cast<unsigned char>(c));
        if (rebuilt.size() > w.size()) return false;
    }
    return rebuilt == w;
}

// ---------------------------------------------------------------------------
// ball enumeration

namespace {

struct BfsLevels {
    std::vector<double> spheres;
    std::vector<std::vector<std::string>> levels;  // kept only when requested
};

BfsLevels bfs_spheres(const FGGroupSpec& g, int N, std::size_t cap, bool keep_words) {
    NormalForm nf(g);
    BfsLevels out;
    out.spheres.assign(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<std::string> level{std::string()};
    out.spheres[0] = 1.0;
    if (keep_words) out.levels.push_back(level);
    std::size_t total = 1;
    for (int n = 1; n <= N; ++n) {
        std::vector<std::string> next;
        next.reserve(level.size() * std::max(1, nf.alphabet_size()));
        for (const auto& w : level)
            for (int gen = 0; gen < nf.alphabet_size(); ++gen) {
                std::string u = nf.append(w, gen);
                if (u.size() == w.size() + 1) next.push_back(std::move(u));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        total += next.size();
        if (total > cap) {
            std::ostringstream os;
            os << "ball enumeration for " << g.name() << " exceeds the cap of " << cap
               << " elements at radius " << n;
            throw GrowthError(os.str());
        }
        out.spheres[n] = double(next.size());
        level = std::move(next);
        if (keep_words) out.levels.push_back(level);
        if (level.empty()) break;  // group exhausted
    }
    return out;
}

double cross_polytope_shell(int k, long long n) {
    if (n == 0) return 1.0;
    auto binom = [](long long a, long long b) -> double {
        if (b < 0 || b > a) return 0.0;
        double r = 1.0;
        for (long long i = 1; i <= b; ++i) r = r * double(a - b + i) / double(i);
        return r;
    };
    double total = 0.0;
    for (long long j = 1; j <= std::min<long long>(k, n); ++j)
        total += std::pow(2.0, double(j)) * binom(k, j) * binom(n - 1, j - 1);
    return total;
}

BallTable from_spheres(std::vector<double> spheres) {
    BallTable t;
    t.balls.resize(spheres.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        acc += spheres[i];
        t.balls[i] = acc;
    }
    t.spheres = std::move(spheres);
    return t;
}

}  // namespace

BallTable ball_sizes(const FGGroupSpec& g, int N, std::size_t cap) {
    if (N < 0) throw GrowthError("depth must be >= 0");
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    c[0] = 1.0;
    switch (g.family) {
        case FamilyKind::FreeAbelian:
            for (int n = 1; n <= N; ++n) c[n] = cross_polytope_shell(g.rank, n);
            return from_spheres(std::move(c));
        case FamilyKind::FreeGroup: {
            double k2 = double(2 * g.rank);
            for (int n = 1; n <= N; ++n) c[n] = k2 * std::pow(k2 - 1.0, double(n - 1));
            return from_spheres(std::move(c));
        }
        case FamilyKind::Dihedral:
            for (int n = 1; n <= N; ++n) {
                if (g.order == 0 || n < g.order)
                    c[n] = 2.0;
                else if (n == g.order)
                    c[n] = 1.0;  // the longest element
            }
            return from_spheres(std::move(c));
        case FamilyKind::Cyclic:
            for (int n = 1; n <= N; ++n) {
                if (2 * n < g.order)
                    c[n] = 2.0;
                else if (2 * n == g.order)
                    c[n] = 1.0;
            }
            return from_spheres(std::move(c));
        case FamilyKind::RightAngledCoxeter:
            return from_spheres(bfs_spheres(g, N, cap, false).spheres);
    }
    throw GrowthError("unsupported family");
}

BallTable ball_sizes_bfs(const FGGroupSpec& g, int N, std::size_t cap) {
    if (N < 0) throw GrowthError("depth must be >= 0");
    return from_spheres(bfs_spheres(g, N, cap, false).spheres);
}

BallModel enumerate_ball(const FGGroupSpec& g, int radius, std::size_t cap) {
    auto lv = bfs_spheres(g, radius, cap, true);
    BallModel ball;
    ball.spec = g;
    ball.radius = radius;
    for (auto& level : lv.levels)
        for (auto& w : level) ball.words.push_back(std::move(w));
    for (std::size_t i = 0; i < ball.words.size(); ++i)
        ball.index.emplace(ball.words[i], static_cast<int>(i));
    return ball;
}

// ---------------------------------------------------------------------------
// growth statistics

double poly_order_fit(const BallTable& table) {
    int N = table.depth();
    if (N + 1 < 8) throw GrowthError("too few points for a growth-order fit (need >= 8)");
    int lo = std::max(1, N / 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int n = lo; n <= N; ++n) {
        double x = std::log(double(n)), y = std::log(table.balls[n]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

double exp_rate(const BallTable& table) {
    int N = table.depth();
    if (N + 1 < 8) throw GrowthError("too few points for a growth-rate estimate (need >= 8)");
    return table.balls[N] / table.balls[N - 1];
}

std::vector<double> fekete_profile(const BallTable& table) {
    std::vector<double> prof;
    double running = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= table.depth(); ++n) {
        running = std::min(running, std::pow(table.balls[n], 1.0 / double(n)));
        prof.push_back(running);
    }
    return prof;
}

// ---------------------------------------------------------------------------
// deformation functions

DeformationFunction DeformationFunction::exponential(double t) {
    if (!(t > 0.0)) throw GrowthError("exponential deformation needs t > 0");
    return {Kind::Exponential, t, 1.0};
}

DeformationFunction DeformationFunction::polynomial(double alpha, double big_m) {
    if (!(alpha > 0.0)) throw GrowthError("polynomial deformation needs alpha > 0");
    if (!(big_m >= 1.0)) throw GrowthError("polynomial deformation needs M >= 1");
    return {Kind::Polynomial, alpha, big_m};
}

std::string DeformationFunction::name() const {
    std::ostringstream os;
    os << (kind == Kind::Exponential ? "exp:" : "poly:") << param;
    if (kind == Kind::Polynomial && big_m != 1.0) os << ":" << big_m;
    return os.str();
}

double eval_deformation(const DeformationFunction& w, long long length) {
    if (w.kind == DeformationFunction::Kind::Exponential)
        return std::exp(-w.param * double(length));
    return 1.0 / (w.big_m * std::pow(1.0 + double(length), w.param));
}

std::vector<std::pair<std::int64_t, double>> l2_tail_sum(const FGGroupSpec& g,
                                                         const DeformationFunction& w, int N,
                                                         std::size_t cap) {
    auto table = ball_sizes(g, N, cap);
    std::vector<std::pair<std::int64_t, double>> out;
    out.reserve(N + 1);
    KahanSum acc;
    for (int n = 0; n <= N; ++n) {
        double wn = eval_deformation(w, n);
        acc.add(table.spheres[n] * wn * wn);
        out.emplace_back(n, acc.value());
    }
    return out;
}

SummabilityVerdict growth_summability_verdict(const FGGroupSpec& g,
                                              const DeformationFunction& w, int N,
                                              std::size_t cap) {
    if (N < 16) throw GrowthError("verdict needs depth >= 16");
    auto table = ball_sizes(g, N, cap);
    std::vector<double> terms(N + 1);
    for (int n = 0; n <= N; ++n) {
        double wn = eval_deformation(w, n);
        terms[n] = table.spheres[n] * wn * wn;
    }

    SummabilityVerdict v;
    v.alpha = w.param;
    auto levels = dyadic_cutoffs(N);
    KahanSum acc;
    std::int64_t next = 0;
    for (std::int64_t L : levels) {
        for (; next <= L; ++next) acc.add(terms[next]);
        v.partial_sums.emplace_back(L, acc.value());
    }

    // saturated (finite group): finitely many nonzero terms
    if (table.spheres[N] == 0.0) {
        v.threshold = 0.0;
        v.verdict = Verdict::Converges;
        return v;
    }

    // growth type from the terminal sphere ratios
    int j = std::min(5, N - 1);
    double rho = std::pow(table.spheres[N] / table.spheres[N - j], 1.0 / double(j));
    if (rho >= 1.1) {
        double lambda = exp_rate(table);
        v.threshold = (w.kind == DeformationFunction::Kind::Exponential)
                          ? 0.5 * std::log(lambda)
                          : std::numeric_limits<double>::infinity();
        v.verdict = classify_term_ratio(terms);
    } else {
        double k0 = std::llround(poly_order_fit(table));
        v.threshold =
            (w.kind == DeformationFunction::Kind::Polynomial) ? k0 / 2.0 : 0.0;
        v.verdict = classify_increment_ratio(v.partial_sums);
    }
    return v;
}

double summation_by_parts_check(const BallTable& table, double alpha, int N) {
    if (N > table.depth()) throw GrowthError("N exceeds the table depth");
    KahanSum lhs;
    for (int n = 0; n <= N; ++n) lhs.add(table.spheres[n] * std::pow(1.0 + n, -2.0 * alpha));
    KahanSum rhs;
    rhs.add(table.balls[N] * std::pow(1.0 + N, -2.0 * alpha));
    for (int n = 0; n < N; ++n)
        rhs.add(table.balls[n] *
                (std::pow(double(n + 1), -2.0 * alpha) - std::pow(double(n + 2), -2.0 * alpha)));
    return std::abs(lhs.value() - rhs.value());
}

}  // namespace deforma::growth
