#include "ndr/schrodinger.hpp"

#include "ndr/closure.hpp"

#include <cmath>
#include <ostream>

namespace ndr {

RiccatiSpec riccati_from_potentials(const SchrodingerSpec& spec)
{
    if (spec.E != 0.0)
        throw std::invalid_argument("only the E = 0 stationary problem reduces to a Riccati equation");
    if (spec.W.alg != Alg::R && spec.W.alg != Alg::C)
        throw std::invalid_argument("W must take values in the e0-e1 subalgebra");
    if (!(spec.hbar > 0.0) || !(spec.m > 0.0))
        throw std::invalid_argument("hbar and m must be positive");

    // 2m/hbar^2 enters exactly only when hbar, m are exactly representable;
    // the default hbar = m = 1 keeps the family exact.
    const Rational scale = Rational(2) * Rational(spec.m) / (Rational(spec.hbar) * Rational(spec.hbar));
    const Element<Rational> k_scaled(Alg::H, {0, 0, 0, scale});
    const Element<Rational> one_scaled(Alg::H, {scale, 0, 0, 0});

    CoeffFn b = left_mul(k_scaled, embed(spec.W, Alg::H));
    const CoeffFn v_part = left_mul(one_scaled, embed(spec.V, Alg::H));
    for (const auto& t : v_part.terms) b.terms.push_back(t);

    RiccatiSpec r = RiccatiSpec::zero(Alg::H);
    r.b_minus = b;
    r.b_plus = CoeffFn::constant(Element<Rational>(Alg::H, {-1, 0, 0, 0}));
    return r;
}

double WaveSolution::max_interior_residual() const
{
    double m = 0.0;
    for (size_t i = 1; i + 1 < residual.size(); ++i) m = std::max(m, residual[i]);
    return m;
}

void WaveSolution::write_csv(std::ostream& os) const
{
    os << "x,u_0,u_1,u_2,u_3,psi_0,psi_1,psi_2,psi_3,residual\n";
    os.precision(17);
    for (size_t k = 0; k < x.size(); ++k) {
        os << x[k];
        for (int i = 0; i < 4; ++i) os << "," << u[k].c[i];
        for (int i = 0; i < 4; ++i) os << "," << psi[k].c[i];
        os << "," << residual[k] << "\n";
    }
}

WaveSolution solve_and_reconstruct(const SchrodingerSpec& spec, const Element<double>& u0,
                                   const Element<double>& psi0, double step)
{
    if (psi0.is_zero())
        throw std::invalid_argument("psi0 must be nonzero");
    if (!(step > 0.0) || !(spec.x1 > spec.x0))
        throw std::invalid_argument("need step > 0 and x1 > x0");

    const RiccatiSpec ric = riccati_from_potentials(spec);

    struct State {
        Element<double> u, psi;
    };
    auto f = [&](double x, const State& s) {
        return State{rhs(ric, x, s.u), mul(s.u, s.psi)};
    };
    auto axpy = [](const State& s, double h, const State& d) {
        return State{s.u + h * d.u, s.psi + h * d.psi};
    };

    WaveSolution sol;
    State s{u0, psi0};
    const auto n_steps = static_cast<long>(std::llround((spec.x1 - spec.x0) / step));
    sol.x.push_back(spec.x0);
    sol.u.push_back(s.u);
    sol.psi.push_back(s.psi);
    for (long k = 0; k < n_steps; ++k) {
        const double x = spec.x0 + k * step;
        const State k1 = f(x, s);
        const State k2 = f(x + step / 2, axpy(s, step / 2, k1));
        const State k3 = f(x + step / 2, axpy(s, step / 2, k2));
        const State k4 = f(x + step, axpy(s, step, k3));
        s = State{s.u + (step / 6) * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
                  s.psi + (step / 6) * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi)};
        bool ok = true;
        for (double v : s.u.c) ok = ok && std::isfinite(v);
        for (double v : s.psi.c) ok = ok && std::isfinite(v);
        if (!ok || norm(s.u) > kDefaultBlowupBound) {
            sol.truncated = true;
            break;
        }
        sol.x.push_back(spec.x0 + (k + 1) * step);
        sol.u.push_back(s.u);
        sol.psi.push_back(s.psi);
    }

    // residual of the stationary equation, central differences inside,
    // one-sided (first-order) at the ends
    const size_t n = sol.x.size();
    sol.residual.assign(n, 0.0);
    const Element<double> e1 = Element<double>::basis(Alg::H, 1);
    const Element<double> e2 = Element<double>::basis(Alg::H, 2);
    const double c2 = spec.hbar * spec.hbar / (2.0 * spec.m);
    for (size_t k = 0; k < n; ++k) {
        Element<double> d2(Alg::H);
        if (k > 0 && k + 1 < n) {
            d2 = (1.0 / (step * step)) * (sol.psi[k - 1] - 2.0 * sol.psi[k] + sol.psi[k + 1]);
        } else if (n >= 3) {
            const size_t a = k == 0 ? 0 : n - 3;
            d2 = (1.0 / (step * step)) * (sol.psi[a] - 2.0 * sol.psi[a + 1] + sol.psi[a + 2]);
        }
        const double v = to_double(spec.V.eval(sol.x[k]).c[0]);
        const Element<double> w = spec.W.eval(sol.x[k]);
        Element<double> w_h(Alg::H);
        for (int i = 0; i < w.dim(); ++i) w_h.c[i] = w.c[i];
        const Element<double> r =
            mul(e1, c2 * d2 - v * sol.psi[k]) + mul(e2, mul(w_h, sol.psi[k]));
        sol.residual[k] = norm(r);
    }
    return sol;
}

int minimal_algebra_dimension()
{
    return closure(schrodinger_generators()).dimension;
}

} // namespace ndr
