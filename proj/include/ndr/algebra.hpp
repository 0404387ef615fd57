#ifndef NDR_ALGEBRA_HPP
#define NDR_ALGEBRA_HPP

#include "ndr/rational.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndr {

/// The four normed division algebras, indexed by Cayley-Dickson doubling level.
enum class Alg : int { R = 0, C = 1, H = 2, O = 3 };

constexpr int dim_of(Alg a) { return 1 << static_cast<int>(a); }

std::string to_string(Alg a);
Alg alg_from_string(const std::string& s);

/// Signed basis product e_i * e_j = sign(i,j) * e_{index(i,j)}.
///
/// Built by Cayley-Dickson doubling (a,b)(c,d) = (ac - d*b, da + bc*)
/// starting from the reals; each level restricts to the previous algebra on
/// its first half-basis.  All entries are +-1.
class MulTable {
public:
    static const MulTable& of(Alg a);

    int dim() const { return dim_; }
    int sign(int i, int j) const { return sign_[i * dim_ + j]; }
    int index(int i, int j) const { return index_[i * dim_ + j]; }

    /// dim x dim text dump, entries like "+e3"; used for golden-file tests.
    std::string dump() const;

private:
    explicit MulTable(Alg a);

    int dim_;
    std::vector<std::int8_t> sign_;
    std::vector<std::int8_t> index_;
};

/// Element of a normed division algebra: coefficients over the canonical
/// basis.  Carrier S is Rational (exact) or double (numeric).
template <typename S>
struct Element {
    Alg alg = Alg::R;
    std::vector<S> c;

    Element() : c(1, S(0)) {}
    explicit Element(Alg a) : alg(a), c(dim_of(a), S(0)) {}
    Element(Alg a, std::vector<S> coeffs) : alg(a), c(std::move(coeffs))
    {
        if (static_cast<int>(c.size()) != dim_of(a))
            throw std::invalid_argument("element coefficient count does not match algebra dimension");
    }

    int dim() const { return static_cast<int>(c.size()); }

    static Element unit(Alg a)
    {
        Element e(a);
        e.c[0] = S(1);
        return e;
    }
    static Element basis(Alg a, int k)
    {
        Element e(a);
        e.c.at(k) = S(1);
        return e;
    }

    bool is_zero() const
    {
        for (const S& x : c)
            if (x != S(0)) return false;
        return true;
    }

    bool operator==(const Element& o) const { return alg == o.alg && c == o.c; }
};

template <typename S>
inline void check_same_algebra(const Element<S>& a, const Element<S>& b)
{
    if (a.alg != b.alg)
        throw std::invalid_argument("algebra mismatch between operands");
}

template <typename S>
Element<S> operator+(const Element<S>& a, const Element<S>& b)
{
    check_same_algebra(a, b);
    Element<S> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <typename S>
Element<S> operator-(const Element<S>& a, const Element<S>& b)
{
    check_same_algebra(a, b);
    Element<S> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <typename S>
Element<S> operator-(const Element<S>& a)
{
    Element<S> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = -a.c[i];
    return r;
}

template <typename S>
Element<S> operator*(const S& s, const Element<S>& a)
{
    Element<S> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = s * a.c[i];
    return r;
}

/// Bilinear product through the structure constants.
template <typename S>
Element<S> mul(const Element<S>& a, const Element<S>& b)
{
    check_same_algebra(a, b);
    const MulTable& t = MulTable::of(a.alg);
    Element<S> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) {
        if (a.c[i] == S(0)) continue;
        for (int j = 0; j < b.dim(); ++j) {
            if (b.c[j] == S(0)) continue;
            const S p = a.c[i] * b.c[j];
            if (t.sign(i, j) > 0)
                r.c[t.index(i, j)] += p;
            else
                r.c[t.index(i, j)] -= p;
        }
    }
    return r;
}

template <typename S>
Element<S> operator*(const Element<S>& a, const Element<S>& b) { return mul(a, b); }

/// Conjugation a* = 2 g(a,1) - a: flips the sign of coefficients 1..dim-1.
template <typename S>
Element<S> conj(const Element<S>& a)
{
    Element<S> r = a;
    for (int i = 1; i < a.dim(); ++i) r.c[i] = -r.c[i];
    return r;
}

template <typename S>
S norm_sq(const Element<S>& a)
{
    S s(0);
    for (const S& x : a.c) s += x * x;
    return s;
}

inline double norm(const Element<double>& a) { return std::sqrt(norm_sq(a)); }

/// Euclidean inner product; polarization of the norm.
template <typename S>
S inner(const Element<S>& a, const Element<S>& b)
{
    check_same_algebra(a, b);
    S s(0);
    for (int i = 0; i < a.dim(); ++i) s += a.c[i] * b.c[i];
    return s;
}

template <typename S>
Element<S> inv(const Element<S>& a)
{
    const S n = norm_sq(a);
    if (n == S(0))
        throw std::domain_error("inverse of zero element");
    Element<S> r = conj(a);
    for (S& x : r.c) x /= n;
    return r;
}

template <typename S>
S scalar_part(const Element<S>& a) { return a.c[0]; }

template <typename S>
Element<S> vector_part(const Element<S>& a)
{
    Element<S> r = a;
    r.c[0] = S(0);
    return r;
}

inline Element<double> to_double(const Element<Rational>& a)
{
    Element<double> r(a.alg);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = to_double(a.c[i]);
    return r;
}

template <typename S>
Element<S> random_element(Alg a, Rng& rng, int num_max = 9, int den_max = 4)
{
    Element<S> e(a);
    for (auto& x : e.c) {
        if constexpr (std::is_same_v<S, Rational>)
            x = rng.small_rational(num_max, den_max);
        else
            x = rng.in(-1.0, 1.0);
    }
    return e;
}

/// Maximum absolute residual per composition-law family.
struct LawReport {
    Alg alg = Alg::O;
    int samples = 0;
    std::uint64_t seed = 0;
    bool exact = true;
    std::vector<std::pair<std::string, double>> residuals;

    double max_residual() const;
    bool all_zero() const { return max_residual() == 0.0; }
};

/// Samples triples (a,b,c) and evaluates the scaling, exchange, braid,
/// inverse, alternative and Moufang laws plus basis anti-commutation and
/// norm multiplicativity, recording the worst residual of each family.
LawReport check_composition_laws(Alg a, int samples, std::uint64_t seed, bool exact);

} // namespace ndr

#endif
