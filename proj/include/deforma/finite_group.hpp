#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace deforma::finite {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using cplx = std::complex<double>;

class FiniteGroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Irrep {
    int dim = 1;
    std::vector<Matrix> matrices;  // one unitary per group element
};

/// Finite group given by its multiplication table together with a complete
/// set of unitary irreducibles. Construction validates the group law,
/// unitarity, the homomorphism property, sum d^2 = |G| and Schur
/// orthogonality (to 1e-12) and refuses models that fail.
class FiniteGroupModel {
public:
    FiniteGroupModel(std::string name, std::vector<std::vector<int>> mult,
                     std::vector<Irrep> irreps);

    int order() const { return order_; }
    int mul(int g, int h) const { return mult_[g][h]; }
    int inv(int g) const { return inverse_[g]; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    const std::string& name() const { return name_; }
    double validation_residual() const { return residual_; }

private:
    void validate();

    std::string name_;
    int order_ = 0;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inverse_;
    std::vector<Irrep> irreps_;
    double residual_ = 0.0;
};

// Built-in models. Dihedral order is 2n.
FiniteGroupModel cyclic_group(int n);        // n <= 64
FiniteGroupModel dihedral_group(int n);      // n <= 16
FiniteGroupModel symmetric_group_3();
FiniteGroupModel symmetric_group_4();
FiniteGroupModel quaternion_group();
/// "z:12", "d:4", "s3", "s4", "q8"
FiniteGroupModel builtin_group(const std::string& key);

// --- plain-text interchange -------------------------------------------------
// Table file: first line |G|, then |G| rows of |G| indices.
// Irreps file: first line the irrep count; per irrep one line with the
// dimension followed by |G| lines of d*d "re im" pairs, row-major.
std::string group_table_text(const FiniteGroupModel& g);
std::string group_irreps_text(const FiniteGroupModel& g);
FiniteGroupModel parse_group_text(const std::string& name, const std::string& table_text,
                                  const std::string& irreps_text);
FiniteGroupModel load_group_files(const std::string& table_path, const std::string& irreps_path);

// --- Fourier calculus (Haar = normalized counting measure) ------------------

struct FourierCoefficients {
    std::vector<Matrix> hat;  // aligned with the model's irrep list
};

/// mu-hat(pi) = (1/|G|) sum_g f(g) pi(g^{-1})^t
FourierCoefficients fourier_transform(const FiniteGroupModel& G, const Vector& f);
/// f(x) = sum_pi d_pi Tr(f-hat(pi) pi^t(x))
Vector inverse_fourier(const FiniteGroupModel& G, const FourierCoefficients& coeffs);

/// (f * g)(x) = (1/|G|) sum_y f(y) g(y^{-1} x)
Vector convolve(const FiniteGroupModel& G, const Vector& f, const Vector& g);

/// |G| * indicator of the identity: the unit of the convolution algebra.
Vector delta_tilde(const FiniteGroupModel& G, int element = 0);
/// f-check(x) = f(x^{-1})
Vector check_involution(const FiniteGroupModel& G, const Vector& f);

double norm_l1(const FiniteGroupModel& G, const Vector& f);
double norm_l2(const FiniteGroupModel& G, const Vector& f);
double norm_linf(const Vector& f);
/// bilinear pairing <f, g> = (1/|G|) sum f g (no conjugation)
cplx pairing(const FiniteGroupModel& G, const Vector& f, const Vector& g);

}  // namespace deforma::finite
