#include "deforma/gamma2.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <vector>

namespace deforma::finite {

namespace {

using Eigen::VectorXd;
using cplx = std::complex<double>;

// Real coordinates of a Hermitian pair (X, Y) plus the scalar t.
// kind 0: X_ii ; kind 1: Re X_ij / Im X_ij (i < j) ; block 0 = X, 1 = Y.
struct Coord {
    int block;  // 0 X, 1 Y
    int i, j;
    int part;   // 0 diag, 1 real, 2 imag
};

struct Workspace {
    int n, m;
    std::vector<Coord> coords;  // all X then all Y coordinates; t is last row/col
    int dim() const { return static_cast<int>(coords.size()) + 1; }
};

Workspace make_workspace(int n, int m) {
    Workspace ws;
    ws.n = n;
    ws.m = m;
    for (int blk : {0, 1}) {
        int sz = blk == 0 ? n : m;
        for (int i = 0; i < sz; ++i) ws.coords.push_back({blk, i, i, 0});
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j) {
                ws.coords.push_back({blk, i, j, 1});
                ws.coords.push_back({blk, i, j, 2});
            }
    }
    return ws;
}

void apply_coord(Matrix& H, const Coord& c, double v, int offset) {
    if (c.part == 0)
        H(offset + c.i, offset + c.i) += v;
    else if (c.part == 1) {
        H(offset + c.i, offset + c.j) += v;
        H(offset + c.j, offset + c.i) += v;
    } else {
        H(offset + c.i, offset + c.j) += cplx(0, v);
        H(offset + c.j, offset + c.i) += cplx(0, -v);
    }
}

// tr(P E_a Q E_b) for elementary Hermitian-basis matrices E. Expanding
// E = sum_s alpha_s e_{p_s} e_{q_s}^T gives terms alpha_s beta_t Q(q_s, p_t) P(q_t, p_s).
double elem_quad(const Matrix& P, const Matrix& Q, const Coord& a, const Coord& b) {
    cplx terms_a[2];
    int pa[2], qa[2];
    int na = 0;
    auto expand = [](const Coord& c, cplx* al, int* p, int* q) {
        if (c.part == 0) {
            al[0] = 1.0;
            p[0] = c.i;
            q[0] = c.i;
            return 1;
        }
        if (c.part == 1) {
            al[0] = 1.0;
            p[0] = c.i;
            q[0] = c.j;
            al[1] = 1.0;
            p[1] = c.j;
            q[1] = c.i;
            return 2;
        }
        al[0] = cplx(0, 1);
        p[0] = c.i;
        q[0] = c.j;
        al[1] = cplx(0, -1);
        p[1] = c.j;
        q[1] = c.i;
        return 2;
    };
    cplx terms_b[2];
    int pb[2], qb[2];
    na = expand(a, terms_a, pa, qa);
    int nb = expand(b, terms_b, pb, qb);
    cplx acc = 0.0;
    for (int s = 0; s < na; ++s)
        for (int t = 0; t < nb; ++t)
            acc += terms_a[s] * terms_b[t] * Q(qa[s], pb[t]) * P(qb[t], pa[s]);
    return acc.real();
}

double coord_gradient(const Matrix& Sblk, const Coord& c) {
    if (c.part == 0) return -Sblk(c.i, c.i).real();
    if (c.part == 1) return -2.0 * Sblk(c.i, c.j).real();
    return -2.0 * Sblk(c.i, c.j).imag();
}

struct State {
    Matrix X, Y;
    double t;
};

Matrix assemble(const State& st, const Matrix& K) {
    int n = st.X.rows(), m = st.Y.rows();
    Matrix M(n + m, n + m);
    M.topLeftCorner(n, n) = st.X;
    M.topRightCorner(n, m) = K;
    M.bottomLeftCorner(m, n) = K.adjoint();
    M.bottomRightCorner(m, m) = st.Y;
    return M;
}

bool feasible(const State& st, const Matrix& K) {
    int n = st.X.rows(), m = st.Y.rows();
    for (int i = 0; i < n; ++i)
        if (!(st.t - st.X(i, i).real() > 0)) return false;
    for (int j = 0; j < m; ++j)
        if (!(st.t - st.Y(j, j).real() > 0)) return false;
    Eigen::LLT<Matrix> llt(assemble(st, K));
    return llt.info() == Eigen::Success;
}

double barrier_value(const State& st, const Matrix& K, double eta) {
    int n = st.X.rows(), m = st.Y.rows();
    Eigen::LLT<Matrix> llt(assemble(st, K));
    if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
    double logdet = 0.0;
    for (int i = 0; i < n + m; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i).real());
    double val = eta * st.t - logdet;
    for (int i = 0; i < n; ++i) val -= std::log(st.t - st.X(i, i).real());
    for (int j = 0; j < m; ++j) val -= std::log(st.t - st.Y(j, j).real());
    return val;
}

// dual certificate from the inverse of the current slack matrix
double dual_certificate(const Matrix& S, const Matrix& K, int n, int m) {
    Matrix Z = S;
    // keep only the diagonals of the corner blocks
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) Z(i, j) = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) Z(n + i, n + j) = 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(Z, Eigen::EigenvaluesOnly);
    double shift = std::max(0.0, -eig.eigenvalues().minCoeff()) + 1e-15;
    double trace_sum = Z.trace().real() + shift * double(n + m);
    if (!(trace_sum > 0)) return 0.0;
    double pairing = (K.adjoint() * S.topRightCorner(n, m)).trace().real();
    return 2.0 * std::abs(pairing) / trace_sum;
}

}  // namespace

Gamma2Result gamma2_norm_certified(const Matrix& K_in, double tol, int iter_cap) {
    const int n = static_cast<int>(K_in.rows());
    const int m = static_cast<int>(K_in.cols());
    if (n == 0 || m == 0) return {0.0, 0.0, 0.0, 0};
    double scale = K_in.cwiseAbs().maxCoeff();
    if (scale <= 0.0) return {0.0, 0.0, 0.0, 0};
    Matrix K = K_in / scale;

    Workspace ws = make_workspace(n, m);
    const int D = ws.dim();
    const int nx = n * n;  // X coordinates precede Y coordinates

    State st;
    st.X = Matrix::Identity(n, n);
    st.Y = Matrix::Identity(m, m);
    double opnorm = K.jacobiSvd().singularValues()(0);
    st.X *= opnorm * 1.05 + 0.1;
    st.Y *= opnorm * 1.05 + 0.1;
    st.t = opnorm * 1.05 + 0.2;

    Gamma2Result best;
    best.value = std::numeric_limits<double>::infinity();
    best.dual_bound = 0.0;

    double eta = 1.0;
    int newton_total = 0;
    const double eta_grow = 25.0;
    const double gap_target = tol / scale;

    Eigen::MatrixXd H(D, D);
    VectorXd grad(D);

    for (int stage = 0; stage < 64; ++stage) {
        for (int step = 0;; ++step) {
            if (newton_total >= iter_cap) {
                double gap = (best.value - best.dual_bound) * scale;
                std::ostringstream os;
                os << "gamma2 solver hit the iteration cap (" << iter_cap
                   << " Newton steps); achieved gap " << gap;
                throw Gamma2Error(os.str(), gap);
            }
            ++newton_total;

            Matrix M = assemble(st, K);
            Eigen::LLT<Matrix> llt(M);
            Matrix S = llt.solve(Matrix::Identity(n + m, n + m));
            Matrix S1 = S.topLeftCorner(n, n);
            Matrix S2 = S.bottomRightCorner(m, m);
            Matrix S12 = S.topRightCorner(n, m);
            Matrix S21 = S.bottomLeftCorner(m, n);

            VectorXd a(n), b(m);
            for (int i = 0; i < n; ++i) a(i) = 1.0 / (st.t - st.X(i, i).real());
            for (int j = 0; j < m; ++j) b(j) = 1.0 / (st.t - st.Y(j, j).real());

            // gradient
            for (int c = 0; c < D - 1; ++c) {
                const Coord& cc = ws.coords[c];
                grad(c) = coord_gradient(cc.block == 0 ? S1 : S2, cc);
                if (cc.part == 0) grad(c) += (cc.block == 0 ? a(cc.i) : b(cc.i));
            }
            grad(D - 1) = eta - a.sum() - b.sum();

            // Hessian of -log det M, plus scalar-barrier terms
            for (int p = 0; p < D - 1; ++p) {
                const Coord& cp = ws.coords[p];
                for (int q = p; q < D - 1; ++q) {
                    const Coord& cq = ws.coords[q];
                    double v;
                    if (cp.block == 0 && cq.block == 0)
                        v = elem_quad(S1, S1, cp, cq);
                    else if (cp.block == 1 && cq.block == 1)
                        v = elem_quad(S2, S2, cp, cq);
                    else if (cp.block == 0)
                        v = elem_quad(S21, S12, cq, cp);  // tr(S12 Ey S21 Ex)
                    else
                        v = elem_quad(S21, S12, cp, cq);
                    H(p, q) = v;
                    H(q, p) = v;
                }
            }
            for (int p = 0; p < D - 1; ++p) {
                const Coord& cp = ws.coords[p];
                if (cp.part != 0) {
                    H(p, D - 1) = H(D - 1, p) = 0.0;
                    continue;
                }
                double s = cp.block == 0 ? a(cp.i) : b(cp.i);
                H(p, p) += s * s;
                H(p, D - 1) = H(D - 1, p) = -s * s;
            }
            H(D - 1, D - 1) = a.array().square().sum() + b.array().square().sum();

            VectorXd dz = Eigen::LDLT<Eigen::MatrixXd>(H).solve(-grad);
            double lambda2 = -grad.dot(dz);
            if (!(lambda2 > -1e-12) || !dz.allFinite()) break;  // numerical floor
            double lambda = std::sqrt(std::max(0.0, lambda2));

            double alpha = lambda > 0.25 ? 1.0 / (1.0 + lambda) : 1.0;
            State next = st;
            auto apply_step = [&](double step_len) {
                next = st;
                Matrix dX = Matrix::Zero(n, n), dY = Matrix::Zero(m, m);
                for (int c = 0; c < D - 1; ++c) {
                    const Coord& cc = ws.coords[c];
                    double v = dz(c) * step_len;
                    apply_coord(cc.block == 0 ? dX : dY, cc, v, 0);
                }
                next.X += dX;
                next.Y += dY;
                next.t += dz(D - 1) * step_len;
            };
            double phi0 = barrier_value(st, K, eta);
            int backtracks = 0;
            for (;; ++backtracks) {
                apply_step(alpha);
                if (feasible(next, K) && barrier_value(next, K, eta) < phi0 + 1e-12) break;
                alpha *= 0.5;
                if (backtracks > 60) break;
            }
            if (backtracks > 60) break;
            st = next;
            if (lambda < 0.2) break;  // centered enough for this stage
            if (step > 50) break;
        }

        // certificate at the (near-)central point
        Matrix M = assemble(st, K);
        Matrix S = Eigen::LLT<Matrix>(M).solve(Matrix::Identity(n + m, n + m));
        double dual = dual_certificate(S, K, n, m);
        if (st.t < best.value) best.value = st.t;
        if (dual > best.dual_bound) best.dual_bound = dual;
        best.newton_steps = newton_total;
        if (best.value - best.dual_bound <= gap_target) break;
        eta *= eta_grow;
    }

    best.value *= scale;
    best.dual_bound *= scale;
    best.gap = best.value - best.dual_bound;
    if (best.gap > tol) {
        std::ostringstream os;
        os << "gamma2 solver stalled with duality gap " << best.gap << " > tol " << tol;
        throw Gamma2Error(os.str(), best.gap);
    }
    return best;
}

double gamma2_norm(const Matrix& K, double tol) { return gamma2_norm_certified(K, tol).value; }

}  // namespace deforma::finite
