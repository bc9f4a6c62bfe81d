#include "deforma/lie_dual.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace deforma::lie {

LieGroupSpec LieGroupSpec::torus(int n) {
    if (n < 1) throw LieDualError("torus rank must be >= 1");
    LieGroupSpec g;
    g.family = Family::Torus;
    g.torus_rank = n;
    return g;
}
LieGroupSpec LieGroupSpec::su2() { return LieGroupSpec{Family::SU2}; }
LieGroupSpec LieGroupSpec::su3() { return LieGroupSpec{Family::SU3}; }
LieGroupSpec LieGroupSpec::so3() { return LieGroupSpec{Family::SO3}; }
LieGroupSpec LieGroupSpec::product(std::vector<LieGroupSpec> fs) {
    if (fs.empty()) throw LieDualError("product needs at least one factor");
    LieGroupSpec g;
    g.family = Family::Product;
    g.factors = std::move(fs);
    return g;
}

int LieGroupSpec::real_dimension() const {
    switch (family) {
        case Family::Torus: return torus_rank;
        case Family::SU2: return 3;
        case Family::SU3: return 8;
        case Family::SO3: return 3;
        case Family::Product: {
            int d = 0;
            for (const auto& f : factors) d += f.real_dimension();
            return d;
        }
    }
    throw LieDualError("unsupported group");
}

int LieGroupSpec::central_rank() const {
    switch (family) {
        case Family::Torus: return torus_rank;
        case Family::SU2:
        case Family::SU3:
        case Family::SO3: return 0;
        case Family::Product: {
            int r = 0;
            for (const auto& f : factors) r += f.central_rank();
            return r;
        }
    }
    throw LieDualError("unsupported group");
}

int LieGroupSpec::dominant_rank() const {
    switch (family) {
        case Family::Torus: return 0;
        case Family::SU2: return 1;
        case Family::SU3: return 2;
        case Family::SO3: return 1;
        case Family::Product: {
            int r = 0;
            for (const auto& f : factors) r += f.dominant_rank();
            return r;
        }
    }
    throw LieDualError("unsupported group");
}

std::string LieGroupSpec::name() const {
    switch (family) {
        case Family::Torus: return "torus:" + std::to_string(torus_rank);
        case Family::SU2: return "su2";
        case Family::SU3: return "su3";
        case Family::SO3: return "so3";
        case Family::Product: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += "x";
                s += factors[i].name();
            }
            return s;
        }
    }
    return "?";
}

std::string IrrepLabel::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (long long a : central) {
        if (!first) os << ",";
        os << a;
        first = false;
    }
    for (long long b : dominant) {
        if (!first) os << ",";
        os << b;
        first = false;
    }
    os << ")";
    return os.str();
}

void validate_label(const LieGroupSpec& g, const IrrepLabel& label) {
    if (static_cast<int>(label.central.size()) != g.central_rank() ||
        static_cast<int>(label.dominant.size()) != g.dominant_rank())
        throw LieDualError("label shape does not match group " + g.name());
    for (long long b : label.dominant)
        if (b < 0) throw LieDualError("dominant coordinates must be >= 0");
}

long long one_norm(const IrrepLabel& label) {
    long long n = 0;
    for (long long a : label.central) n += std::llabs(a);
    for (long long b : label.dominant) n += b;
    return n;
}

namespace {

// Slices a product label into per-factor labels.
struct LabelCursor {
    const IrrepLabel& label;
    std::size_t c = 0, d = 0;
    IrrepLabel take(const LieGroupSpec& f) {
        IrrepLabel part;
        part.central.assign(label.central.begin() + c, label.central.begin() + c + f.central_rank());
        part.dominant.assign(label.dominant.begin() + d, label.dominant.begin() + d + f.dominant_rank());
        c += f.central_rank();
        d += f.dominant_rank();
        return part;
    }
};

}  // namespace

long long weyl_dimension(const LieGroupSpec& g, const IrrepLabel& label) {
    validate_label(g, label);
    switch (g.family) {
        case Family::Torus: return 1;
        case Family::SU2: return label.dominant[0] + 1;
        case Family::SO3: return 2 * label.dominant[0] + 1;
        case Family::SU3: {
            long long p = label.dominant[0], q = label.dominant[1];
            return (p + 1) * (q + 1) * (p + q + 2) / 2;
        }
        case Family::Product: {
            LabelCursor cur{label};
            long long d = 1;
            for (const auto& f : g.factors) d *= weyl_dimension(f, cur.take(f));
            return d;
        }
    }
    throw LieDualError("unsupported group");
}

Rational casimir_eigenvalue(const LieGroupSpec& g, const IrrepLabel& label) {
    validate_label(g, label);
    switch (g.family) {
        case Family::Torus: {
            long long s = 0;
            for (long long m : label.central) s += m * m;
            return Rational(s);
        }
        case Family::SU2: {
            long long b = label.dominant[0];
            return Rational(b * (b + 2));
        }
        case Family::SO3: {
            long long b2 = 2 * label.dominant[0];  // covering SU2 label
            return Rational(b2 * (b2 + 2));
        }
        case Family::SU3: {
            long long p = label.dominant[0], q = label.dominant[1];
            return Rational(p * p + q * q + p * q + 3 * p + 3 * q);
        }
        case Family::Product: {
            LabelCursor cur{label};
            Rational s{0};
            for (const auto& f : g.factors) s += casimir_eigenvalue(f, cur.take(f));
            return s;
        }
    }
    throw LieDualError("unsupported group");
}

namespace {

void enumerate_labels(const LieGroupSpec& g, long long budget,
                      std::vector<IrrepLabel>& out) {
    switch (g.family) {
        case Family::Torus: {
            // integer points of the l1 ball, coordinate by coordinate
            IrrepLabel cur;
            cur.central.assign(g.torus_rank, 0);
            std::function<void(int, long long)> rec = [&](int i, long long left) {
                if (i == g.torus_rank) {
                    out.push_back(cur);
                    return;
                }
                for (long long m = -left; m <= left; ++m) {
                    cur.central[i] = m;
                    rec(i + 1, left - std::llabs(m));
                }
            };
            rec(0, budget);
            return;
        }
        case Family::SU2:
        case Family::SO3: {
            for (long long b = 0; b <= budget; ++b)
                out.push_back(IrrepLabel{{}, {b}});
            return;
        }
        case Family::SU3: {
            for (long long n = 0; n <= budget; ++n)
                for (long long p = 0; p <= n; ++p)
                    out.push_back(IrrepLabel{{}, {p, n - p}});
            return;
        }
        case Family::Product: {
            std::vector<std::vector<IrrepLabel>> parts;  // per prefix budget use
            std::function<void(std::size_t, long long, IrrepLabel)> rec =
                [&](std::size_t fi, long long left, IrrepLabel acc) {
                    if (fi == g.factors.size()) {
                        out.push_back(std::move(acc));
                        return;
                    }
                    std::vector<IrrepLabel> sub;
                    enumerate_labels(g.factors[fi], left, sub);
                    for (auto& part : sub) {
                        IrrepLabel next = acc;
                        next.central.insert(next.central.end(), part.central.begin(), part.central.end());
                        next.dominant.insert(next.dominant.end(), part.dominant.begin(), part.dominant.end());
                        rec(fi + 1, left - one_norm(part), std::move(next));
                    }
                };
            rec(0, budget, IrrepLabel{});
            return;
        }
    }
    throw LieDualError("unsupported group");
}

}  // namespace

std::vector<IrrepData> enumerate_dual(const LieGroupSpec& g, long long cutoff) {
    if (cutoff < 0) throw LieDualError("cutoff must be >= 0");
    std::vector<IrrepLabel> labels;
    enumerate_labels(g, cutoff, labels);
    std::vector<IrrepData> dual;
    dual.reserve(labels.size());
    for (auto& l : labels) {
        IrrepData d;
        d.dim = weyl_dimension(g, l);
        d.casimir = casimir_eigenvalue(g, l);
        d.one_norm = one_norm(l);
        d.label = std::move(l);
        dual.push_back(std::move(d));
    }
    std::sort(dual.begin(), dual.end(), [](const IrrepData& a, const IrrepData& b) {
        if (a.one_norm != b.one_norm) return a.one_norm < b.one_norm;
        if (a.label.central != b.label.central) return a.label.central < b.label.central;
        return a.label.dominant < b.label.dominant;
    });
    return dual;
}

std::pair<Rational, Rational> equivalence_constants(const LieGroupSpec& g, long long cutoff) {
    if (cutoff < 1) throw LieDualError("equivalence constants need cutoff >= 1 (nontrivial range)");
    auto dual = enumerate_dual(g, cutoff);
    bool seen = false;
    Rational c1, c2;
    for (const auto& d : dual) {
        if (d.one_norm == 0) continue;
        Rational ratio = d.casimir / Rational(d.one_norm * d.one_norm);
        if (!seen) {
            c1 = c2 = ratio;
            seen = true;
        } else {
            c1 = std::min(c1, ratio);
            c2 = std::max(c2, ratio);
        }
    }
    if (!seen) throw LieDualError("no nontrivial irreps below cutoff");
    return {c1, c2};
}

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of points of Z^k with l1 norm exactly n.
double torus_shell_count(int k, long long n) {
    if (n == 0) return 1.0;
    double total = 0.0;
    for (long long j = 1; j <= std::min<long long>(k, n); ++j)
        total += std::pow(2.0, double(j)) * double(binom(k, j)) * double(binom(n - 1, j - 1));
    return total;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<double> shells(const LieGroupSpec& g, long long N, bool squared) {
    std::vector<double> w(static_cast<std::size_t>(N) + 1, 0.0);
    switch (g.family) {
        case Family::Torus:
            for (long long n = 0; n <= N; ++n)
                w[n] = torus_shell_count(g.torus_rank, n);
            return w;
        case Family::SU2:
            for (long long n = 0; n <= N; ++n) {
                double d = double(n + 1);
                w[n] = squared ? d * d : 1.0;
            }
            return w;
        case Family::SO3:
            for (long long n = 0; n <= N; ++n) {
                double d = double(2 * n + 1);
                w[n] = squared ? d * d : 1.0;
            }
            return w;
        case Family::SU3:
            for (long long n = 0; n <= N; ++n) {
                double acc = 0.0;
                for (long long p = 0; p <= n; ++p) {
                    long long q = n - p;
                    double d = double((p + 1) * (q + 1) * (p + q + 2)) / 2.0;
                    acc += squared ? d * d : 1.0;
                }
                w[n] = acc;
            }
            return w;
        case Family::Product: {
            std::vector<double> acc = shells(g.factors[0], N, squared);
            for (std::size_t i = 1; i < g.factors.size(); ++i)
                acc = convolve(acc, shells(g.factors[i], N, squared));
            return acc;
        }
    }
    throw LieDualError("unsupported group");
}

}  // namespace

std::vector<double> shell_weights(const LieGroupSpec& g, long long max_norm) {
    return shells(g, max_norm, true);
}

std::vector<double> shell_counts(const LieGroupSpec& g, long long max_norm) {
    return shells(g, max_norm, false);
}

std::string dual_table_csv(const std::vector<IrrepData>& dual) {
    std::ostringstream os;
    os << "label,dim,casimir,one_norm\n";
    for (const auto& d : dual) {
        os << '"' << d.label.to_string() << '"' << ',' << d.dim << ','
           << boost::rational_cast<double>(d.casimir) << ',' << d.one_norm << '\n';
    }
    return os.str();
}

}  // namespace deforma::lie
