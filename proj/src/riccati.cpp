#include "ndr/riccati.hpp"

#include <cmath>
#include <ostream>

namespace ndr {

void Trajectory::write_csv(std::ostream& os) const
{
    const int n = states.empty() ? 0 : states.front().dim();
    os << "t";
    for (int i = 0; i < n; ++i) os << ",x_" << i;
    os << "\n";
    os.precision(17);
    for (size_t k = 0; k < times.size(); ++k) {
        os << times[k];
        for (int i = 0; i < n; ++i) os << "," << states[k].c[i];
        os << "\n";
    }
}

namespace {

bool finite_and_bounded(const Element<double>& e, double bound)
{
    for (double x : e.c)
        if (!std::isfinite(x)) return false;
    return norm(e) <= bound;
}

} // namespace

Trajectory integrate(const RiccatiSpec& spec, const Element<double>& a0, double t0, double t1,
                     double step, double blowup_bound)
{
    if (!(step > 0.0))
        throw std::invalid_argument("step must be positive");
    if (!(t1 > t0))
        throw std::invalid_argument("t1 must exceed t0");

    Trajectory traj;
    traj.step = step;
    const auto n_steps = static_cast<long>(std::llround((t1 - t0) / step));

    auto f = [&](double t, const Element<double>& x) { return rhs(spec, t, x); };

    Element<double> x = a0;
    traj.times.push_back(t0);
    traj.states.push_back(x);
    for (long k = 0; k < n_steps; ++k) {
        const double t = t0 + k * step;
        const Element<double> k1 = f(t, x);
        const Element<double> k2 = f(t + step / 2, x + (step / 2) * k1);
        const Element<double> k3 = f(t + step / 2, x + (step / 2) * k2);
        const Element<double> k4 = f(t + step, x + step * k3);
        x = x + (step / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!finite_and_bounded(x, blowup_bound)) {
            traj.blew_up = true;
            break;
        }
        traj.times.push_back(t0 + (k + 1) * step);
        traj.states.push_back(x);
    }
    return traj;
}

double superposition_real(double x1, double x2, double x3, double k)
{
    const double den = (x3 - x2) + k * (x3 - x1);
    if (den == 0.0)
        throw singular_combination("superposition denominator vanishes");
    return (x1 * (x3 - x2) + k * x2 * (x3 - x1)) / den;
}

ConformalSpec to_conformal(const RiccatiSpec& spec)
{
    ConformalSpec cs;
    cs.n = dim_of(spec.alg);
    cs.alg = spec.alg;
    cs.b_minus = spec.b_minus;
    cs.b_0L = spec.b_0L;
    cs.b_0R = spec.b_0R;
    cs.b_plus = spec.b_plus;
    return cs;
}

double quadratic_identity_check(const Element<double>& b_plus, const Element<double>& a)
{
    return norm(quadratic_identity_residual(b_plus, a));
}

bool quadratic_identity_check_exact(const Element<Rational>& b_plus, const Element<Rational>& a)
{
    return quadratic_identity_residual(b_plus, a).is_zero();
}

} // namespace ndr
