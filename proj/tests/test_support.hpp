#ifndef NDR_TEST_SUPPORT_HPP
#define NDR_TEST_SUPPORT_HPP

#include "ndr/algebra.hpp"

#include <span>
#include <vector>

namespace ndr::test {

/// Independent multiplication oracle: recursive Cayley-Dickson pair product
/// (a,b)(c,d) = (ac - d*b, da + bc*) on raw coefficient vectors.  Shares no
/// code with MulTable.
inline std::vector<Rational> cd_conj(std::span<const Rational> x)
{
    std::vector<Rational> r(x.begin(), x.end());
    for (size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

inline std::vector<Rational> cd_mul(std::span<const Rational> x, std::span<const Rational> y)
{
    const size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const size_t h = n / 2;
    const auto a = x.subspan(0, h), b = x.subspan(h);
    const auto c = y.subspan(0, h), d = y.subspan(h);
    const auto dc = cd_conj(d);
    const auto cc = cd_conj(c);
    const auto ac = cd_mul(a, c);
    const auto dcb = cd_mul(dc, b);
    const auto da = cd_mul(d, a);
    const auto bcc = cd_mul(b, cc);
    std::vector<Rational> r(n);
    for (size_t i = 0; i < h; ++i) {
        r[i] = ac[i] - dcb[i];
        r[h + i] = da[i] + bcc[i];
    }
    return r;
}

inline Element<Rational> cd_mul(const Element<Rational>& x, const Element<Rational>& y)
{
    return Element<Rational>(x.alg, cd_mul(std::span<const Rational>(x.c), std::span<const Rational>(y.c)));
}

/// Polynomial curve in A with element coefficients (t^0, t^1, ...).
using Curve = std::vector<Element<Rational>>;

inline Curve curve_mul(const Curve& a, const Curve& b)
{
    if (a.empty() || b.empty()) return {};
    const Alg alg = a[0].alg;
    Curve r(a.size() + b.size() - 1, Element<Rational>(alg));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + mul(a[i], b[j]);
    return r;
}

inline Curve curve_derivative(const Curve& a)
{
    if (a.size() <= 1) return {Element<Rational>(a.empty() ? Alg::R : a[0].alg)};
    Curve r;
    for (size_t k = 1; k < a.size(); ++k) r.push_back(Rational(static_cast<int>(k)) * a[k]);
    return r;
}

inline Curve curve_conj(const Curve& a)
{
    Curve r;
    for (const auto& e : a) r.push_back(conj(e));
    return r;
}

inline bool curve_is_zero(const Curve& a)
{
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

inline Curve curve_sub(const Curve& a, const Curve& b)
{
    const Alg alg = a.empty() ? b[0].alg : a[0].alg;
    Curve r(std::max(a.size(), b.size()), Element<Rational>(alg));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

inline Curve curve_add(const Curve& a, const Curve& b)
{
    const Alg alg = a.empty() ? b[0].alg : a[0].alg;
    Curve r(std::max(a.size(), b.size()), Element<Rational>(alg));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline Curve random_curve(Alg alg, int degree, Rng& rng)
{
    Curve c;
    for (int k = 0; k <= degree; ++k) c.push_back(random_element<Rational>(alg, rng, 5, 3));
    return c;
}

} // namespace ndr::test

#endif
