#ifndef NDR_VFIELD_HPP
#define NDR_VFIELD_HPP

#include "ndr/algebra.hpp"
#include "ndr/polynomial.hpp"

#include <string>
#include <vector>

namespace ndr {

/// Vector field on R^dim with polynomial components over exact rationals.
struct VField {
    int dim = 0;
    std::vector<Poly> comp;
    std::string name;

    VField() = default;
    VField(int d, std::string n = {}) : dim(d), comp(d), name(std::move(n)) {}

    int degree() const
    {
        int deg = -1;
        for (const auto& p : comp) deg = std::max(deg, p.degree());
        return deg;
    }
    bool is_zero() const
    {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }
    bool is_linear() const
    {
        for (const auto& p : comp) {
            for (const auto& [m, c] : p.terms())
                if (m.degree() != 1) return false;
        }
        return true;
    }
    bool same_components(const VField& o) const { return dim == o.dim && comp == o.comp; }

    /// "(p0)*d0 + (p1)*d1 + ..." over nonzero components; canonical.
    std::string to_string() const;
};

VField operator+(const VField& a, const VField& b);
VField operator-(const VField& a, const VField& b);
VField operator*(const Rational& s, const VField& a);

/// Lie bracket [Y1,Y2]_j = sum_i (F1_i dF2_j/do_i - F2_i dF1_j/do_i).
VField bracket(const VField& a, const VField& b);

/// Builds the coordinate vector field of an algebra-valued polynomial map
/// given as a word expression: sums of products of basis constants e<k> and
/// the variable o, with optional rational coefficients and parentheses.
/// Juxtaposition multiplies left-associatively, e.g. "o e1 o" = (o*e1)*o.
VField lift_field(const std::string& word, Alg alg);

/// Thrown by lift_field on malformed input.
class word_parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The generators of the Riccati vector-field family on an algebra:
/// X^-_i, X^+_i (i = 0..n-1), X^(0), X^{0_L}_j, X^{0_R}_j (j = 1..n-1).
std::vector<VField> riccati_generators(Alg alg);

/// {X^{0_L}_j, X^{0_R}_j : j = 1..n-1}, the norm-preserving linear family.
std::vector<VField> rotation_generators(Alg alg);

/// {X^-_i, X^+_i : i = 0..n-1}.
std::vector<VField> plus_minus_generators(Alg alg);

enum class QuadSide { Left, Right };

/// Same families as riccati_generators but with the quadratic fields
/// replaced by e_k o^2 (Left) or o^2 e_k (Right).  Only H and O are
/// accepted; these sets do not close under brackets.
std::vector<VField> alt_quadratic_generators(Alg alg, QuadSide side);

/// {X^+_0, X^-_0..X^-_3} on H, the generator set of the log-derivative
/// Riccati equation of the stationary quaternionic wave problem.
std::vector<VField> schrodinger_generators();

using RatMatrix = std::vector<std::vector<Rational>>;

/// Matrix -A for a linear homogeneous field X with components X_j = sum_i
/// A_{ji} o_i; the map X -> -A is a Lie algebra isomorphism onto matrices.
/// Throws std::invalid_argument if X is not linear homogeneous.
RatMatrix linear_matrix(const VField& x);

bool is_antisymmetric(const RatMatrix& m);
Rational trace(const RatMatrix& m);

} // namespace ndr

#endif
