#include "deforma/finite_group.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace deforma::finite {

FiniteGroupModel::FiniteGroupModel(std::string name, std::vector<std::vector<int>> mult,
                                   std::vector<Irrep> irreps)
    : name_(std::move(name)), mult_(std::move(mult)), irreps_(std::move(irreps)) {
    order_ = static_cast<int>(mult_.size());
    validate();
}

void FiniteGroupModel::validate() {
    const int n = order_;
    if (n <= 0) throw FiniteGroupError(name_ + ": empty multiplication table");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != n)
            throw FiniteGroupError(name_ + ": multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw FiniteGroupError(name_ + ": table entry out of range");
    }
    // identity at index 0
    for (int g = 0; g < n; ++g)
        if (mult_[0][g] != g || mult_[g][0] != g)
            throw FiniteGroupError(name_ + ": index 0 is not a two-sided identity");
    // inverses
    inverse_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mult_[g][h] == 0 && mult_[h][g] == 0) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] < 0) throw FiniteGroupError(name_ + ": missing inverse");
    }
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
                    throw FiniteGroupError(name_ + ": multiplication table is not associative");

    long long dsum = 0;
    for (const auto& pi : irreps_) {
        if (pi.dim < 1 || static_cast<int>(pi.matrices.size()) != n)
            throw FiniteGroupError(name_ + ": malformed irrep data");
        dsum += static_cast<long long>(pi.dim) * pi.dim;
    }
    if (dsum != n)
        throw FiniteGroupError(name_ + ": sum of squared dimensions != group order");

    const double tol = 1e-12;
    double worst = 0.0;
    for (const auto& pi : irreps_) {
        const int d = pi.dim;
        for (int g = 0; g < n; ++g) {
            if (pi.matrices[g].rows() != d || pi.matrices[g].cols() != d)
                throw FiniteGroupError(name_ + ": irrep matrix has wrong shape");
            double u = (pi.matrices[g].adjoint() * pi.matrices[g] - Matrix::Identity(d, d))
                           .cwiseAbs()
                           .maxCoeff();
            worst = std::max(worst, u);
        }
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                double r = (pi.matrices[g] * pi.matrices[h] - pi.matrices[mult_[g][h]])
                               .cwiseAbs()
                               .maxCoeff();
                worst = std::max(worst, r);
            }
    }
    if (worst > tol)
        throw FiniteGroupError(name_ + ": irreps fail unitarity/homomorphism checks");

    // Schur orthogonality of matrix coefficients
    for (std::size_t p = 0; p < irreps_.size(); ++p)
        for (std::size_t q = p; q < irreps_.size(); ++q) {
            const auto& pi = irreps_[p];
            const auto& sg = irreps_[q];
            for (int i = 0; i < pi.dim; ++i)
                for (int j = 0; j < pi.dim; ++j)
                    for (int k = 0; k < sg.dim; ++k)
                        for (int l = 0; l < sg.dim; ++l) {
                            cplx acc = 0.0;
                            for (int g = 0; g < n; ++g)
                                acc += pi.matrices[g](i, j) * std::conj(sg.matrices[g](k, l));
                            acc /= double(n);
                            cplx expect = 0.0;
                            if (p == q && i == k && j == l) expect = 1.0 / double(pi.dim);
                            worst = std::max(worst, std::abs(acc - expect));
                        }
        }
    if (worst > tol)
        throw FiniteGroupError(name_ + ": irreps fail Schur orthogonality at 1e-12");
    residual_ = worst;
}

// --- Fourier calculus --------------------------------------------------------

FourierCoefficients fourier_transform(const FiniteGroupModel& G, const Vector& f) {
    if (f.size() != G.order()) throw FiniteGroupError("function length != group order");
    FourierCoefficients out;
    out.hat.reserve(G.irreps().size());
    for (const auto& pi : G.irreps()) {
        Matrix acc = Matrix::Zero(pi.dim, pi.dim);
        for (int g = 0; g < G.order(); ++g)
            acc += f(g) * pi.matrices[G.inv(g)].transpose();
        out.hat.push_back(acc / double(G.order()));
    }
    return out;
}

Vector inverse_fourier(const FiniteGroupModel& G, const FourierCoefficients& coeffs) {
    Vector f = Vector::Zero(G.order());
    for (std::size_t p = 0; p < G.irreps().size(); ++p) {
        const auto& pi = G.irreps()[p];
        for (int x = 0; x < G.order(); ++x)
            f(x) += double(pi.dim) * (coeffs.hat[p] * pi.matrices[x].transpose()).trace();
    }
    return f;
}

Vector convolve(const FiniteGroupModel& G, const Vector& f, const Vector& g) {
    if (f.size() != G.order() || g.size() != G.order())
        throw FiniteGroupError("convolution shape mismatch");
    Vector out = Vector::Zero(G.order());
    for (int x = 0; x < G.order(); ++x) {
        cplx acc = 0.0;
        for (int y = 0; y < G.order(); ++y) acc += f(y) * g(G.mul(G.inv(y), x));
        out(x) = acc / double(G.order());
    }
    return out;
}

Vector delta_tilde(const FiniteGroupModel& G, int element) {
    Vector f = Vector::Zero(G.order());
    f(element) = double(G.order());
    return f;
}

Vector check_involution(const FiniteGroupModel& G, const Vector& f) {
    Vector out(G.order());
    for (int g = 0; g < G.order(); ++g) out(g) = f(G.inv(g));
    return out;
}

double norm_l1(const FiniteGroupModel& G, const Vector& f) {
    return f.cwiseAbs().sum() / double(G.order());
}

double norm_l2(const FiniteGroupModel& G, const Vector& f) {
    return std::sqrt(f.squaredNorm() / double(G.order()));
}

double norm_linf(const Vector& f) { return f.cwiseAbs().maxCoeff(); }

cplx pairing(const FiniteGroupModel& G, const Vector& f, const Vector& g) {
    cplx acc = 0.0;
    for (int x = 0; x < G.order(); ++x) acc += f(x) * g(x);
    return acc / double(G.order());
}

// --- interchange format ------------------------------------------------------

std::string group_table_text(const FiniteGroupModel& g) {
    std::ostringstream os;
    os << g.order() << "\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (b) os << ' ';
            os << g.mul(a, b);
        }
        os << "\n";
    }
    return os.str();
}

std::string group_irreps_text(const FiniteGroupModel& g) {
    std::ostringstream os;
    os.precision(17);
    os << g.irreps().size() << "\n";
    for (const auto& pi : g.irreps()) {
        os << pi.dim << "\n";
        for (int x = 0; x < g.order(); ++x) {
            for (int i = 0; i < pi.dim; ++i)
                for (int j = 0; j < pi.dim; ++j) {
                    if (i || j) os << ' ';
                    os << pi.matrices[x](i, j).real() << ' ' << pi.matrices[x](i, j).imag();
                }
            os << "\n";
        }
    }
    return os.str();
}

FiniteGroupModel parse_group_text(const std::string& name, const std::string& table_text,
                                  const std::string& irreps_text) {
    std::istringstream ts(table_text);
    int n = 0;
    if (!(ts >> n) || n <= 0) throw FiniteGroupError("bad table header");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(ts >> mult[a][b])) throw FiniteGroupError("truncated multiplication table");

    std::istringstream is(irreps_text);
    int count = 0;
    if (!(is >> count) || count <= 0) throw FiniteGroupError("bad irreps header");
    std::vector<Irrep> irreps(count);
    for (auto& pi : irreps) {
        if (!(is >> pi.dim) || pi.dim <= 0) throw FiniteGroupError("bad irrep dimension");
        pi.matrices.assign(n, Matrix::Zero(pi.dim, pi.dim));
        for (int x = 0; x < n; ++x)
            for (int i = 0; i < pi.dim; ++i)
                for (int j = 0; j < pi.dim; ++j) {
                    double re, im;
                    if (!(is >> re >> im)) throw FiniteGroupError("truncated irrep data");
                    pi.matrices[x](i, j) = cplx(re, im);
                }
    }
    return FiniteGroupModel(name, std::move(mult), std::move(irreps));
}

FiniteGroupModel load_group_files(const std::string& table_path, const std::string& irreps_path) {
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        if (!in) throw FiniteGroupError("cannot open " + p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    return parse_group_text(table_path, slurp(table_path), slurp(irreps_path));
}

}  // namespace deforma::finite
