#include "ndr/coeff_fn.hpp"

namespace ndr {

bool CoeffFn::is_zero() const
{
    for (const auto& t : terms)
        for (const auto& e : t.coeffs)
            if (!e.is_zero()) return false;
    return true;
}

bool CoeffFn::is_real_valued() const
{
    for (const auto& t : terms)
        for (const auto& e : t.coeffs)
            for (int i = 1; i < e.dim(); ++i)
                if (e.c[i] != 0) return false;
    return true;
}

Element<double> CoeffFn::eval(double t) const
{
    Element<double> acc(alg);
    for (const auto& term : terms) {
        switch (term.kind) {
        case CoeffTerm::Kind::Constant:
            for (int i = 0; i < acc.dim(); ++i) acc.c[i] += to_double(term.coeffs[0].c[i]);
            break;
        case CoeffTerm::Kind::Poly: {
            double tk = 1.0;
            for (const auto& ck : term.coeffs) {
                for (int i = 0; i < acc.dim(); ++i) acc.c[i] += to_double(ck.c[i]) * tk;
                tk *= t;
            }
            break;
        }
        case CoeffTerm::Kind::Sin: {
            const double s = std::sin(term.omega * t + term.phi);
            for (int i = 0; i < acc.dim(); ++i) acc.c[i] += to_double(term.coeffs[0].c[i]) * s;
            break;
        }
        case CoeffTerm::Kind::Exp: {
            const double s = std::exp(term.kappa * t);
            for (int i = 0; i < acc.dim(); ++i) acc.c[i] += to_double(term.coeffs[0].c[i]) * s;
            break;
        }
        }
    }
    return acc;
}

Element<Rational> CoeffFn::eval_exact(const Rational& t) const
{
    Element<Rational> acc(alg);
    for (const auto& term : terms) {
        switch (term.kind) {
        case CoeffTerm::Kind::Constant:
            for (int i = 0; i < acc.dim(); ++i) acc.c[i] += term.coeffs[0].c[i];
            break;
        case CoeffTerm::Kind::Poly: {
            Rational tk(1);
            for (const auto& ck : term.coeffs) {
                for (int i = 0; i < acc.dim(); ++i) acc.c[i] += ck.c[i] * tk;
                tk *= t;
            }
            break;
        }
        default:
            throw std::domain_error("coefficient has sin/exp terms; exact evaluation unavailable");
        }
    }
    return acc;
}

CoeffFn left_mul(const Element<Rational>& k, const CoeffFn& f)
{
    if (k.alg != f.alg)
        throw std::invalid_argument("algebra mismatch in left_mul");
    CoeffFn r = f;
    for (auto& term : r.terms)
        for (auto& e : term.coeffs)
            e = mul(k, e);
    return r;
}

CoeffFn embed(const CoeffFn& f, Alg target)
{
    if (dim_of(target) < dim_of(f.alg))
        throw std::invalid_argument("cannot embed into a smaller algebra");
    CoeffFn r = f;
    r.alg = target;
    for (auto& term : r.terms) {
        for (auto& e : term.coeffs) {
            Element<Rational> big(target);
            for (int i = 0; i < e.dim(); ++i) big.c[i] = e.c[i];
            e = std::move(big);
        }
    }
    return r;
}

} // namespace ndr
