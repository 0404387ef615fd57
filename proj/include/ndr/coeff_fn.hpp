#ifndef NDR_COEFF_FN_HPP
#define NDR_COEFF_FN_HPP

#include "ndr/algebra.hpp"

#include <cmath>
#include <vector>

namespace ndr {

/// One term of a t-dependent algebra-valued coefficient.  The family is
/// closed (no callbacks) so specs serialize and runs reproduce exactly.
struct CoeffTerm {
    enum class Kind { Constant, Poly, Sin, Exp };
    Kind kind = Kind::Constant;

    /// Constant/Sin/Exp: one element; Poly: element per power of t (low first).
    std::vector<Element<Rational>> coeffs;
    double omega = 0.0; // Sin: c * sin(omega t + phi)
    double phi = 0.0;
    double kappa = 0.0; // Exp: c * exp(kappa t)
};

struct CoeffFn {
    Alg alg = Alg::R;
    std::vector<CoeffTerm> terms; // evaluated as a sum

    static CoeffFn zero(Alg a) { return CoeffFn{a, {}}; }
    static CoeffFn constant(Element<Rational> value)
    {
        CoeffTerm t;
        t.kind = CoeffTerm::Kind::Constant;
        t.coeffs.push_back(std::move(value));
        CoeffFn f;
        f.alg = t.coeffs[0].alg;
        f.terms.push_back(std::move(t));
        return f;
    }

    /// True when every term evaluates exactly at rational t (no sin/exp).
    bool is_exact_family() const
    {
        for (const auto& t : terms)
            if (t.kind == CoeffTerm::Kind::Sin || t.kind == CoeffTerm::Kind::Exp) return false;
        return true;
    }

    bool is_zero() const;
    /// True when every value is a real multiple of the unit element.
    bool is_real_valued() const;

    Element<double> eval(double t) const;
    /// Exact evaluation; throws std::domain_error on sin/exp terms.
    Element<Rational> eval_exact(const Rational& t) const;

    template <typename S>
    Element<S> eval_s(const S& t) const
    {
        if constexpr (std::is_same_v<S, Rational>)
            return eval_exact(t);
        else
            return eval(t);
    }
};

/// Left-multiplies every element coefficient by k (exactly), keeping the
/// time dependence; used to push constants through the expression family.
CoeffFn left_mul(const Element<Rational>& k, const CoeffFn& f);

/// Re-embeds the function into a larger algebra (coefficients zero-padded).
CoeffFn embed(const CoeffFn& f, Alg target);

} // namespace ndr

#endif
