#ifndef NDR_RICCATI_HPP
#define NDR_RICCATI_HPP

#include "ndr/coeff_fn.hpp"

#include <iosfwd>
#include <vector>

namespace ndr {

/// da/dt = b^-(t) + b^{0_L}(t) a + a b^{0_R}(t) + (a b^+(t)) a.
struct RiccatiSpec {
    Alg alg = Alg::R;
    CoeffFn b_minus, b_0L, b_0R, b_plus;

    static RiccatiSpec zero(Alg a)
    {
        return RiccatiSpec{a, CoeffFn::zero(a), CoeffFn::zero(a), CoeffFn::zero(a), CoeffFn::zero(a)};
    }
};

/// The quadratic term is evaluated as (a b^+) a; alternativity makes the
/// other bracketing agree, which the tests assert rather than assume.
template <typename S>
Element<S> rhs(const RiccatiSpec& spec, const S& t, const Element<S>& a)
{
    if (a.alg != spec.alg)
        throw std::invalid_argument("state algebra does not match spec");
    Element<S> r = spec.b_minus.template eval_s<S>(t);
    r = r + mul(spec.b_0L.template eval_s<S>(t), a);
    r = r + mul(a, spec.b_0R.template eval_s<S>(t));
    r = r + mul(mul(a, spec.b_plus.template eval_s<S>(t)), a);
    return r;
}

struct Trajectory {
    std::vector<double> times;
    std::vector<Element<double>> states;
    double step = 0.0;
    std::string method = "rk4";
    bool blew_up = false;

    const Element<double>& final_state() const { return states.back(); }
    void write_csv(std::ostream& os) const; // header t, x_0..x_{n-1}
};

constexpr double kDefaultBlowupBound = 1e8;

/// Fixed-step classical RK4.  On norm blow-up the trajectory is truncated
/// and flagged; escape in finite time is a legitimate Riccati outcome, not
/// an error.
Trajectory integrate(const RiccatiSpec& spec, const Element<double>& a0, double t0, double t1,
                     double step, double blowup_bound = kDefaultBlowupBound);

class singular_combination : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The classical three-solution combination for the real Riccati equation;
/// throws singular_combination when the denominator vanishes.
double superposition_real(double x1, double x2, double x3, double k);

/// Conformal form d xi/dt = a(t) + lambda(t) xi + Omega(t) xi
///                          + c(t) <xi,xi> - 2 <c(t),xi> xi
/// derived from a Riccati spec; evaluators work in both carriers.
struct ConformalSpec {
    int n = 1;
    Alg alg = Alg::R;
    CoeffFn b_minus, b_0L, b_0R, b_plus; // source coefficients

    template <typename S>
    std::vector<S> a_vec(const S& t) const
    {
        return coords(b_minus.template eval_s<S>(t));
    }
    template <typename S>
    std::vector<S> c_vec(const S& t) const
    {
        return coords(-conj(b_plus.template eval_s<S>(t)));
    }
    template <typename S>
    S lambda(const S& t) const
    {
        return scalar_part(b_0L.template eval_s<S>(t)) + scalar_part(b_0R.template eval_s<S>(t));
    }
    /// Matrix of T_t : a -> vec(b^{0_L}(t)) a + a vec(b^{0_R}(t)); columns
    /// are the images of the basis elements.
    template <typename S>
    std::vector<std::vector<S>> omega(const S& t) const
    {
        const Element<S> l = vector_part(b_0L.template eval_s<S>(t));
        const Element<S> r = vector_part(b_0R.template eval_s<S>(t));
        std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
        for (int j = 0; j < n; ++j) {
            const Element<S> img = mul(l, Element<S>::basis(alg, j)) + mul(Element<S>::basis(alg, j), r);
            for (int i = 0; i < n; ++i) m[i][j] = img.c[i];
        }
        return m;
    }

private:
    template <typename S>
    static std::vector<S> coords(const Element<S>& e) { return e.c; }
};

ConformalSpec to_conformal(const RiccatiSpec& spec);

template <typename S>
std::vector<S> conformal_rhs(const ConformalSpec& cs, const S& t, const std::vector<S>& xi)
{
    if (static_cast<int>(xi.size()) != cs.n)
        throw std::invalid_argument("state dimension does not match conformal spec");
    std::vector<S> r = cs.template a_vec<S>(t);
    const S lam = cs.template lambda<S>(t);
    const auto om = cs.template omega<S>(t);
    const auto c = cs.template c_vec<S>(t);
    S xx(0), cx(0);
    for (int i = 0; i < cs.n; ++i) {
        xx += xi[i] * xi[i];
        cx += c[i] * xi[i];
    }
    for (int i = 0; i < cs.n; ++i) {
        S acc = lam * xi[i];
        for (int j = 0; j < cs.n; ++j) acc += om[i][j] * xi[j];
        r[i] += acc + c[i] * xx - S(2) * cx * xi[i];
    }
    return r;
}

/// Residual of the quadratic decomposition
/// (a b^+) a = 2 g((b^+)*, a) a - (b^+)* g(a,a); zero on the exact carrier.
template <typename S>
Element<S> quadratic_identity_residual(const Element<S>& b_plus, const Element<S>& a)
{
    check_same_algebra(b_plus, a);
    const Element<S> lhs = mul(mul(a, b_plus), a);
    const Element<S> bc = conj(b_plus);
    const Element<S> rhs = S(2) * inner(bc, a) * a - norm_sq(a) * bc;
    return lhs - rhs;
}

double quadratic_identity_check(const Element<double>& b_plus, const Element<double>& a);
bool quadratic_identity_check_exact(const Element<Rational>& b_plus, const Element<Rational>& a);

} // namespace ndr

#endif
