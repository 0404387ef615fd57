#ifndef NDR_PROJECTIVE_HPP
#define NDR_PROJECTIVE_HPP

#include "ndr/riccati.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace ndr {

enum class Chart { D1, D2 };
std::string to_string(Chart c);

/// Point of the projective line AP^1 held as a chart coordinate: w = a1 a2^-1
/// on D2, w = a2 a1^-1 on D1; the chart transition is w -> inv(w).
struct ProjPoint {
    Alg alg = Alg::R;
    Chart chart = Chart::D2;
    Element<double> rep;
};

/// Pair in A^2 minus the origin.
struct LiftState {
    Element<double> a1, a2;
    bool valid() const { return !(a1.is_zero() && a2.is_zero()); }
};

/// Canonical projection; picks D2 if ||a2|| >= ||a1||, else D1.
ProjPoint project(const LiftState& s);

class unsupported_restriction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 2x2 coefficient system on A^2_x whose projection is a Riccati equation.
struct LiftSpec {
    Alg alg = Alg::R;
    CoeffFn a11, a12, a21, a22;
    /// Octonionic systems with non-real a11/a22 are refused unless set.
    bool allow_nonreal_oct = false;
};

/// Right-hand side of the lifted system.  For R, C, H this is the linear
/// system d a1/dt = a11 a1 + a12 a2, d a2/dt = -a21 a1 - a22 a2.  For O the
/// two-branch form is evaluated verbatim:
///   o1 o2 != 0:  d o1/dt = [a11 (o1 o2^-1)] o2 + a12 o2,
///                d o2/dt = -a21 o1 - o2 { o1^-1 [ (o1 o2^-1) a22 ] } o2,
///   o1 o2  = 0:  the linear form.
/// The branch test is exact on rationals and uses ||o1|| ||o2|| < 1e-12 on
/// doubles.  branch_taken (if given) receives 0 for linear, 1 for general.
template <typename S>
std::pair<Element<S>, Element<S>> lift_rhs(const LiftSpec& spec, const S& t, const Element<S>& o1,
                                           const Element<S>& o2, int* branch_taken = nullptr);

struct ChartSwitch {
    double t;
    Chart to;
    double gap; // || rep_new - inv(rep_old) ||
};

struct ProjTrajectory {
    std::vector<double> times;
    std::vector<ProjPoint> points;
    std::vector<ChartSwitch> switches;
    int branch_switches = 0; // O-lift branch changes seen during integration
    bool blew_up = false;

    double max_switch_gap() const;
    void write_csv(std::ostream& os) const; // t, chart, w_0..w_{n-1}
};

/// Integrates the lift with RK4 and projects every state.  The chart
/// follows a hysteresis rule: switch whenever the current chart coordinate
/// has norm above 1.1 (the transition is exact, so the other chart then
/// sees norm below 1/1.1).  Pairs are rescaled by a positive real when
/// they grow large; the projection is invariant under that.
ProjTrajectory lift_integrate_and_project(const LiftSpec& spec, const LiftState& s0, double t0,
                                          double t1, double step);

/// The lift whose projection reproduces the given Riccati equation:
/// a12 = b^-, a11 = b^{0_L}, a22 = b^{0_R}, a21 = b^+.  For O the
/// coefficients b^{0_L}, b^{0_R} must be real-valued.
LiftSpec riccati_to_lift(const RiccatiSpec& spec);

} // namespace ndr

#endif
