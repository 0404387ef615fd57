#ifndef NDR_SCHRODINGER_HPP
#define NDR_SCHRODINGER_HPP

#include "ndr/riccati.hpp"

#include <iosfwd>
#include <vector>

namespace ndr {

/// Stationary 1+1-dimensional quaternionic wave problem at E = 0.
/// V is real-valued (algebra R), W complex-valued (algebra C, the e0-e1
/// subalgebra); both over the grid coordinate x.
struct SchrodingerSpec {
    double hbar = 1.0;
    double m = 1.0;
    CoeffFn V = CoeffFn::zero(Alg::R);
    CoeffFn W = CoeffFn::zero(Alg::C);
    double E = 0.0; // only 0 is supported; kept for forward compatibility
    double x0 = 0.0;
    double x1 = 1.0;
};

/// Log-derivative reduction: du/dx = -u^2 + b(x) with
/// b(x) = (2m/hbar^2) (e3 W(x) + V(x)),
/// encoded as b^- = b, b^{0_L} = b^{0_R} = 0, b^+ = -1 over H.
/// Throws std::invalid_argument when E != 0.
RiccatiSpec riccati_from_potentials(const SchrodingerSpec& spec);

struct WaveSolution {
    std::vector<double> x;
    std::vector<Element<double>> u;   // log-derivative
    std::vector<Element<double>> psi; // reconstructed wave function
    std::vector<double> residual;     // pointwise stationary-equation residual
    bool truncated = false;           // u blow-up (node of psi)

    /// Largest residual over interior grid points (boundaries excluded,
    /// where one-sided differences would degrade the order).
    double max_interior_residual() const;
    void write_csv(std::ostream& os) const; // x, u_0..u_3, psi_0..psi_3, residual
};

/// Integrates du/dx = -u^2 + b(x) and d psi/dx = u psi jointly with RK4,
/// then validates the pair against the stationary equation
///   e1 [ (hbar^2/2m) psi'' - V psi ] + e2 (W psi) = 0
/// with second-order central differences for psi''.
WaveSolution solve_and_reconstruct(const SchrodingerSpec& spec, const Element<double>& u0,
                                   const Element<double>& psi0, double step);

/// Dimension of the bracket closure of {X^+_0, X^-_0..X^-_3} on H.
int minimal_algebra_dimension();

} // namespace ndr

#endif
