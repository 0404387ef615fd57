#include "ndr/projective.hpp"

#include <cmath>
#include <ostream>

namespace ndr {

std::string to_string(Chart c) { return c == Chart::D1 ? "D1" : "D2"; }

ProjPoint project(const LiftState& s)
{
    if (!s.valid())
        throw std::invalid_argument("projective point needs a nonzero pair");
    ProjPoint p;
    p.alg = s.a1.alg;
    if (norm_sq(s.a2) >= norm_sq(s.a1)) {
        p.chart = Chart::D2;
        p.rep = mul(s.a1, inv(s.a2));
    } else {
        p.chart = Chart::D1;
        p.rep = mul(s.a2, inv(s.a1));
    }
    return p;
}

namespace {

template <typename S>
bool product_is_zero(const Element<S>& o1, const Element<S>& o2)
{
    // ||o1 o2|| = ||o1|| ||o2||, so the branch test needs no product.
    if constexpr (std::is_same_v<S, Rational>)
        return norm_sq(o1) == 0 || norm_sq(o2) == 0;
    else
        return std::sqrt(norm_sq(o1)) * std::sqrt(norm_sq(o2)) < 1e-12;
}

} // namespace

template <typename S>
std::pair<Element<S>, Element<S>> lift_rhs(const LiftSpec& spec, const S& t, const Element<S>& o1,
                                           const Element<S>& o2, int* branch_taken)
{
    if (o1.alg != spec.alg || o2.alg != spec.alg)
        throw std::invalid_argument("lift state algebra does not match spec");
    if (spec.alg == Alg::O && !spec.allow_nonreal_oct &&
        (!spec.a11.is_real_valued() || !spec.a22.is_real_valued()))
        throw unsupported_restriction(
            "octonionic lift requires real-valued a11 and a22 (set allow_nonreal_oct to override)");

    const Element<S> a11 = spec.a11.template eval_s<S>(t);
    const Element<S> a12 = spec.a12.template eval_s<S>(t);
    const Element<S> a21 = spec.a21.template eval_s<S>(t);
    const Element<S> a22 = spec.a22.template eval_s<S>(t);

    const bool general_oct = spec.alg == Alg::O && !product_is_zero(o1, o2);
    if (branch_taken) *branch_taken = general_oct ? 1 : 0;

    if (!general_oct) {
        return {mul(a11, o1) + mul(a12, o2), -(mul(a21, o1) + mul(a22, o2))};
    }
    const Element<S> w = mul(o1, inv(o2)); // o1 o2^-1
    Element<S> d1 = mul(mul(a11, w), o2) + mul(a12, o2);
    Element<S> inner_term = mul(inv(o1), mul(w, a22));
    Element<S> d2 = -(mul(a21, o1) + mul(mul(o2, inner_term), o2));
    return {std::move(d1), std::move(d2)};
}

template std::pair<Element<double>, Element<double>> lift_rhs(const LiftSpec&, const double&,
                                                              const Element<double>&,
                                                              const Element<double>&, int*);
template std::pair<Element<Rational>, Element<Rational>> lift_rhs(const LiftSpec&, const Rational&,
                                                                  const Element<Rational>&,
                                                                  const Element<Rational>&, int*);

double ProjTrajectory::max_switch_gap() const
{
    double g = 0.0;
    for (const auto& s : switches) g = std::max(g, s.gap);
    return g;
}

void ProjTrajectory::write_csv(std::ostream& os) const
{
    const int n = points.empty() ? 0 : points.front().rep.dim();
    os << "t,chart";
    for (int i = 0; i < n; ++i) os << ",w_" << i;
    os << "\n";
    os.precision(17);
    for (size_t k = 0; k < times.size(); ++k) {
        os << times[k] << "," << to_string(points[k].chart);
        for (int i = 0; i < n; ++i) os << "," << points[k].rep.c[i];
        os << "\n";
    }
}

namespace {

constexpr double kSwitchNorm = 1.1;  // threshold 1 with 10% hysteresis
constexpr double kRescaleAt = 1e6;

ProjPoint rep_in_chart(const LiftState& s, Chart chart)
{
    ProjPoint p;
    p.alg = s.a1.alg;
    p.chart = chart;
    p.rep = chart == Chart::D2 ? mul(s.a1, inv(s.a2)) : mul(s.a2, inv(s.a1));
    return p;
}

} // namespace

ProjTrajectory lift_integrate_and_project(const LiftSpec& spec, const LiftState& s0, double t0,
                                          double t1, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("step must be positive");
    if (!(t1 > t0))
        throw std::invalid_argument("t1 must exceed t0");
    if (!s0.valid())
        throw std::invalid_argument("initial pair must be nonzero");

    ProjTrajectory traj;
    LiftState s = s0;
    Chart chart = project(s).chart;
    int last_branch = -1;

    auto f = [&](double t, const LiftState& x, bool track = false) {
        int branch = 0;
        auto [d1, d2] = lift_rhs<double>(spec, t, x.a1, x.a2, track ? &branch : nullptr);
        if (track) {
            if (last_branch >= 0 && branch != last_branch) ++traj.branch_switches;
            last_branch = branch;
        }
        return LiftState{std::move(d1), std::move(d2)};
    };
    auto axpy = [](const LiftState& x, double h, const LiftState& d) {
        return LiftState{x.a1 + h * d.a1, x.a2 + h * d.a2};
    };

    const auto n_steps = static_cast<long>(std::llround((t1 - t0) / step));
    traj.times.push_back(t0);
    traj.points.push_back(rep_in_chart(s, chart));

    for (long k = 0; k < n_steps; ++k) {
        const double t = t0 + k * step;
        const LiftState k1 = f(t, s, /*track=*/true);
        const LiftState k2 = f(t + step / 2, axpy(s, step / 2, k1));
        const LiftState k3 = f(t + step / 2, axpy(s, step / 2, k2));
        const LiftState k4 = f(t + step, axpy(s, step, k3));
        LiftState next{
            s.a1 + (step / 6) * (k1.a1 + 2.0 * k2.a1 + 2.0 * k3.a1 + k4.a1),
            s.a2 + (step / 6) * (k1.a2 + 2.0 * k2.a2 + 2.0 * k3.a2 + k4.a2)};

        bool finite = true;
        for (double x : next.a1.c) finite = finite && std::isfinite(x);
        for (double x : next.a2.c) finite = finite && std::isfinite(x);
        if (!finite || !next.valid()) {
            traj.blew_up = true;
            break;
        }
        // projection-invariant rescale keeps the pair in floating range
        const double scale = std::max(norm(next.a1), norm(next.a2));
        if (scale > kRescaleAt) {
            for (double& x : next.a1.c) x /= scale;
            for (double& x : next.a2.c) x /= scale;
        }
        s = next;

        const double tk = t0 + (k + 1) * step;
        const Element<double>& den = chart == Chart::D2 ? s.a2 : s.a1;
        ProjPoint p;
        if (den.is_zero()) {
            // landed exactly on the old chart's point at infinity
            chart = chart == Chart::D2 ? Chart::D1 : Chart::D2;
            p = rep_in_chart(s, chart);
            traj.switches.push_back({tk, chart, 0.0});
        } else {
            p = rep_in_chart(s, chart);
            if (norm(p.rep) > kSwitchNorm) {
                const Chart to = chart == Chart::D2 ? Chart::D1 : Chart::D2;
                ProjPoint q = rep_in_chart(s, to);
                traj.switches.push_back({tk, to, norm(q.rep - inv(p.rep))});
                chart = to;
                p = std::move(q);
            }
        }
        traj.times.push_back(tk);
        traj.points.push_back(std::move(p));
    }
    return traj;
}

LiftSpec riccati_to_lift(const RiccatiSpec& spec)
{
    if (spec.alg == Alg::O && (!spec.b_0L.is_real_valued() || !spec.b_0R.is_real_valued()))
        throw unsupported_restriction(
            "octonionic Riccati lift requires real-valued b^{0_L} and b^{0_R}");
    LiftSpec l;
    l.alg = spec.alg;
    l.a12 = spec.b_minus;
    l.a11 = spec.b_0L;
    l.a22 = spec.b_0R;
    l.a21 = spec.b_plus;
    return l;
}

} // namespace ndr
