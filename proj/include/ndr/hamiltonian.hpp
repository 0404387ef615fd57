#ifndef NDR_HAMILTONIAN_HPP
#define NDR_HAMILTONIAN_HPP

#include "ndr/vfield.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ndr {

/// Scalar function on the radial chart (o0, rho), rho > 0: a Laurent
/// polynomial sum c * o0^a rho^b with integer b of either sign.  This is
/// exactly the expression family the radial Hamiltonians live in; no
/// general computer algebra.
class ChartFn {
public:
    ChartFn() = default;
    static ChartFn constant(Rational c);
    static ChartFn term(Rational c, int o0_exp, int rho_exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    ChartFn& operator+=(const ChartFn& o);
    ChartFn& operator-=(const ChartFn& o);
    friend ChartFn operator+(ChartFn a, const ChartFn& b) { return a += b; }
    friend ChartFn operator-(ChartFn a, const ChartFn& b) { return a -= b; }
    friend ChartFn operator-(const ChartFn& a);
    friend ChartFn operator*(const ChartFn& a, const ChartFn& b);

    ChartFn d_o0() const;
    ChartFn d_rho() const;

    /// Antiderivative in o0 (exponents are >= 0 there, always exact).
    ChartFn integrate_o0() const;
    /// Antiderivative in rho; fails (nullopt) on a rho^-1 term, which would
    /// leave the Laurent family.
    std::optional<ChartFn> integrate_rho() const;

    bool depends_on_o0() const;

    double eval(double o0, double rho) const;
    Rational eval_exact(const Rational& o0, const Rational& rho) const;

    bool operator==(const ChartFn& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    void add(int a, int b, const Rational& c);
    std::map<std::pair<int, int>, Rational> terms_; // (o0 exp, rho exp) -> coeff
};

/// Vector field u d/do0 + v d/drho with no angular components.
struct RadialField {
    ChartFn u, v;
    std::string name;
};

/// The radial forms of the three fields of a real-coefficient Riccati
/// equation on O (or H): X^- = d/do0, X^(0) = o0 d/do0 + rho d/drho,
/// X^+ = (o0^2 - rho^2) d/do0 + 2 o0 rho d/drho.
std::array<RadialField, 3> real_coefficient_fields();

/// A symplectic form  w(o0,rho) do0 ^ drho  +  angular blocks.  The three
/// radial fields never see the angular blocks (they contract to zero), so
/// those are carried as descriptors only; each block weight depends only on
/// the block's own first coordinate, which makes the block closed.
struct SymplecticForm {
    std::string name;
    ChartFn radial_weight;
    struct AngularBlock {
        std::string c1, c2;
        std::string weight; // "1" or a function of c1
    };
    std::vector<AngularBlock> angular;

    static SymplecticForm omega_O(); // do0^drho / rho^2 + da^db + dg^dpsi + dth^dphi
    static SymplecticForm omega_H(); // dq0^drho / rho^2 + sin(th) dth^dphi
};

/// Solves i_X omega = df on the radial block.  Returns the Hamiltonian up
/// to an additive constant, or nullopt when none exists in the family
/// (i_X omega not closed, or a logarithmic antiderivative would be needed).
std::optional<ChartFn> hamiltonian_of(const RadialField& x, const SymplecticForm& omega);

/// Poisson bracket of radial-chart functions induced by the form:
/// {f,g} = (f_o0 g_rho - f_rho g_o0) / w.
ChartFn poisson(const ChartFn& f, const ChartFn& g, const SymplecticForm& omega);

struct LieDerivativeResult {
    ChartFn residual_coefficient; // L_X omega = (that) do0 ^ drho, symbolically
    double max_residual = 0.0;    // worst |coefficient| over the samples
    int samples_used = 0;
    int skipped = 0; // samples on the excluded locus rho = 0
};

/// L_X omega via Cartan's formula d(i_X omega); omega is closed and X has
/// no angular components, so only the radial block contributes.
LieDerivativeResult lie_derivative_check(const RadialField& x, const SymplecticForm& omega,
                                         int samples, std::uint64_t seed);

/// Null space of the invariance system L_X omega = 0 over constant-
/// coefficient 2-forms sum_{i<j} c_ij dx_i ^ dx_j on R^n, for affine
/// fields X (translations act trivially on constant forms).  Each returned
/// vector lists c_ij in lexicographic (i,j) order.
std::vector<std::vector<Rational>> invariant_constant_two_forms(int n,
                                                                const std::vector<VField>& fields);

} // namespace ndr

#endif
