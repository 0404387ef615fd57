#ifndef NDR_POLYNOMIAL_HPP
#define NDR_POLYNOMIAL_HPP

#include "ndr/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ndr {

constexpr int kMaxVars = 8;

/// Exponent vector in at most kMaxVars variables, ordered degree-then-lex so
/// polynomial equality and printing are canonical.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int degree() const
    {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (int i = 0; i < kMaxVars; ++i)
            if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Multivariate polynomial with exact rational coefficients.
class Poly {
public:
    Poly() = default;

    static Poly constant(Rational r)
    {
        Poly p;
        if (r != 0) p.terms_[Monomial{}] = std::move(r);
        return p;
    }
    static Poly variable(int i)
    {
        Monomial m;
        m.e.at(i) = 1;
        Poly p;
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a)
    {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < kMaxVars; ++i)
                    m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Poly operator*(const Rational& s, const Poly& a)
    {
        Poly r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
        return r;
    }

    Poly derivative(int var) const
    {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    template <typename S>
    S eval(std::span<const S> x) const
    {
        S acc(0);
        for (const auto& [m, c] : terms_) {
            S t;
            if constexpr (std::is_same_v<S, Rational>)
                t = c;
            else
                t = to_double(c);
            for (int i = 0; i < kMaxVars; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Canonical text form, e.g. "o0^2 - 2*o1*o3 + 1/2".
    std::string to_string(const std::string& var_prefix = "o") const;

private:
    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

} // namespace ndr

#endif
