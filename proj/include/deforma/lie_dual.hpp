#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deforma::lie {

using Rational = boost::rational<long long>;

enum class Family { Torus, SU2, SU3, SO3, Product };

/// A supported compact connected Lie group. Torus(n) carries the central
/// (integer) weight coordinates; SU2/SU3/SO3 carry dominant coordinates;
/// products concatenate the coordinates of their factors in order.
struct LieGroupSpec {
    Family family = Family::SU2;
    int torus_rank = 0;                   // Torus only
    std::vector<LieGroupSpec> factors;    // Product only

    static LieGroupSpec torus(int n);
    static LieGroupSpec su2();
    static LieGroupSpec su3();
    static LieGroupSpec so3();
    static LieGroupSpec product(std::vector<LieGroupSpec> fs);

    int real_dimension() const;
    int central_rank() const;    // number of integer (torus) coordinates
    int dominant_rank() const;   // number of nonnegative coordinates
    std::string name() const;
};

/// Highest-weight label: integer part for torus directions, nonnegative
/// part for the semisimple directions.
struct IrrepLabel {
    std::vector<long long> central;
    std::vector<long long> dominant;

    bool operator==(const IrrepLabel&) const = default;
    std::string to_string() const;
};

struct IrrepData {
    IrrepLabel label;
    long long dim = 1;
    Rational casimir{0};
    long long one_norm = 0;
};

/// Thrown for unsupported families or labels whose shape does not match
/// the group's rank data.
class LieDualError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void validate_label(const LieGroupSpec& g, const IrrepLabel& label);

long long weyl_dimension(const LieGroupSpec& g, const IrrepLabel& label);
Rational casimir_eigenvalue(const LieGroupSpec& g, const IrrepLabel& label);
long long one_norm(const IrrepLabel& label);

/// All irreps with one-norm <= cutoff, with dim/casimir/one-norm filled in.
/// Ordered by (one_norm, label lexicographic); no duplicates.
std::vector<IrrepData> enumerate_dual(const LieGroupSpec& g, long long cutoff);

/// Empirical extremes of casimir / one_norm^2 over the nontrivial part of
/// the enumerated dual; c1 * n^2 <= kappa <= c2 * n^2 holds on that range.
std::pair<Rational, Rational> equivalence_constants(const LieGroupSpec& g, long long cutoff);

/// Per-shell aggregate W(n) = sum of d^2 over irreps with one-norm == n,
/// n = 0..max_norm, computed without materializing labels. Used for large
/// cutoffs where enumeration is infeasible; matches enumerate_dual exactly.
std::vector<double> shell_weights(const LieGroupSpec& g, long long max_norm);

/// Shell counts |{pi : one_norm == n}| by the same closed forms.
std::vector<double> shell_counts(const LieGroupSpec& g, long long max_norm);

std::string dual_table_csv(const std::vector<IrrepData>& dual);

}  // namespace deforma::lie
