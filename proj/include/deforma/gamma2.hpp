#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace deforma::finite {

using Matrix = Eigen::MatrixXcd;

/// Certified value of the factorization norm: value is the primal objective
/// (an upper bound on gamma_2), dual_bound a feasible dual objective (a
/// lower bound), so value - dual_bound >= 0 brackets the truth.
struct Gamma2Result {
    double value = 0.0;
    double dual_bound = 0.0;
    double gap = 0.0;
    int newton_steps = 0;
};

class Gamma2Error : public std::runtime_error {
public:
    Gamma2Error(const std::string& msg, double achieved_gap)
        : std::runtime_error(msg), achieved_gap(achieved_gap) {}
    double achieved_gap;
};

/// gamma_2(K) = min over factorizations K = PQ of (max row norm of P) *
/// (max column norm of Q), the Schur-multiplier / factorization norm.
/// Solved as the semidefinite program
///     minimize t  s.t.  [[X, K], [K*, Y]] >= 0, diag(X) <= t, diag(Y) <= t
/// by a log-det barrier path-following method with an explicit dual
/// certificate per stage; stops once the certified duality gap is <= tol.
/// Deterministic. Throws Gamma2Error when the Newton-iteration cap is hit,
/// carrying the gap achieved so far.
Gamma2Result gamma2_norm_certified(const Matrix& K, double tol = 1e-7, int iter_cap = 500);

double gamma2_norm(const Matrix& K, double tol = 1e-7);

}  // namespace deforma::finite
