#include "ndr/algebra.hpp"

#include <map>
#include <sstream>

namespace ndr {

std::string to_string(Alg a)
{
    switch (a) {
    case Alg::R: return "R";
    case Alg::C: return "C";
    case Alg::H: return "H";
    case Alg::O: return "O";
    }
    throw std::logic_error("bad algebra tag");
}

Alg alg_from_string(const std::string& s)
{
    if (s == "R") return Alg::R;
    if (s == "C") return Alg::C;
    if (s == "H") return Alg::H;
    if (s == "O") return Alg::O;
    throw std::invalid_argument("unknown algebra '" + s + "' (expected R, C, H or O)");
}

namespace {

struct SignedBasis {
    int sign;
    int index;
};

// One Cayley-Dickson doubling step on a signed basis table:
// (a,b)(c,d) = (ac - d*b, da + bc*), where the pair (x,y) sits at
// basis index x for the first copy and n + y for the second.
std::vector<SignedBasis> double_table(const std::vector<SignedBasis>& t, int n)
{
    const int m = 2 * n;
    std::vector<SignedBasis> r(m * m);
    auto conj_sign = [&](int k) { return k == 0 ? 1 : -1; };
    auto basis_mul = [&](int i, int j) { return t[i * n + j]; };

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const bool hi_i = i >= n, hi_j = j >= n;
            const int a = hi_i ? i - n : i;
            const int b = hi_j ? j - n : j;
            SignedBasis out{};
            if (!hi_i && !hi_j) {
                out = basis_mul(a, b); // (a,0)(c,0) = (ac, 0)
            } else if (!hi_i && hi_j) {
                // (a,0)(0,d) = (0, da)
                out = basis_mul(b, a);
                out.index += n;
            } else if (hi_i && !hi_j) {
                // (0,b)(c,0) = (0, bc*)
                out = basis_mul(a, b);
                out.sign *= conj_sign(b);
                out.index += n;
            } else {
                // (0,b)(0,d) = (-d*b, 0)
                out = basis_mul(b, a);
                out.sign *= -conj_sign(b);
            }
            r[i * m + j] = out;
        }
    }
    return r;
}

} // namespace

MulTable::MulTable(Alg a) : dim_(dim_of(a))
{
    std::vector<SignedBasis> t{{1, 0}};
    for (int n = 1; n < dim_; n *= 2)
        t = double_table(t, n);
    sign_.resize(dim_ * dim_);
    index_.resize(dim_ * dim_);
    for (int k = 0; k < dim_ * dim_; ++k) {
        sign_[k] = static_cast<std::int8_t>(t[k].sign);
        index_[k] = static_cast<std::int8_t>(t[k].index);
    }
}

const MulTable& MulTable::of(Alg a)
{
    static const MulTable tables[4] = {MulTable(Alg::R), MulTable(Alg::C),
                                       MulTable(Alg::H), MulTable(Alg::O)};
    return tables[static_cast<int>(a)];
}

std::string MulTable::dump() const
{
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (j) os << ' ';
            os << (sign(i, j) > 0 ? '+' : '-') << 'e' << index(i, j);
        }
        os << '\n';
    }
    return os.str();
}

double LawReport::max_residual() const
{
    double m = 0.0;
    for (const auto& [name, r] : residuals)
        m = std::max(m, r);
    return m;
}

namespace {

template <typename S>
double abs_scalar(const S& x)
{
    if constexpr (std::is_same_v<S, Rational>)
        return x == 0 ? 0.0 : std::abs(to_double(x));
    else
        return std::abs(x);
}

template <typename S>
double residual_norm(const Element<S>& e)
{
    double m = 0.0;
    for (const S& x : e.c) m = std::max(m, abs_scalar(x));
    return m;
}

template <typename S>
LawReport run_laws(Alg alg, int samples, std::uint64_t seed)
{
    Rng rng(seed);
    std::map<std::string, double> worst;
    auto note = [&](const std::string& law, double r) {
        auto& w = worst[law];
        w = std::max(w, r);
    };

    const MulTable& t = MulTable::of(alg);
    const int n = t.dim();

    for (int s = 0; s < samples; ++s) {
        const auto a = random_element<S>(alg, rng);
        const auto b = random_element<S>(alg, rng);
        const auto c = random_element<S>(alg, rng);
        const auto d = random_element<S>(alg, rng);

        const S na = norm_sq(a), nc = norm_sq(c);

        // norm multiplicativity: ||ab||^2 = ||a||^2 ||b||^2
        note("norm", abs_scalar<S>(norm_sq(a * b) - na * norm_sq(b)));

        // scaling
        note("scaling", abs_scalar<S>(inner(a * b, a * c) - na * inner(b, c)));
        note("scaling", abs_scalar<S>(inner(a * c, b * c) - inner(a, b) * nc));
        // exchange
        note("exchange",
             abs_scalar<S>(inner(a * b, c * d) - (S(2) * inner(a, c) * inner(b, d) - inner(a * d, c * b))));
        // braid
        note("braid", abs_scalar<S>(inner(a * b, c) - inner(b, conj(a) * c)));
        note("braid", abs_scalar<S>(inner(a * b, c) - inner(a, c * conj(b))));
        // inverse: a*(ab) = ||a||^2 b = (ba)a*
        note("inverse", residual_norm<S>(conj(a) * (a * b) - na * b));
        note("inverse", residual_norm<S>((b * a) * conj(a) - na * b));
        // alternative
        note("alternative", residual_norm<S>(a * (a * b) - (a * a) * b));
        note("alternative", residual_norm<S>((b * a) * a - b * (a * a)));
        note("alternative", residual_norm<S>(a * (b * a) - (a * b) * a));
        // Moufang
        note("moufang", residual_norm<S>((a * b) * (c * a) - (a * (b * c)) * a));
        note("moufang", residual_norm<S>(a * (b * (a * c)) - ((a * b) * a) * c));
        note("moufang", residual_norm<S>(((b * a) * c) * a - b * (a * (c * a))));

        if (alg == Alg::H) {
            // quaternions are associative outright
            note("associativity", residual_norm<S>((a * b) * c - a * (b * c)));
        }
    }

    // anti-commutation of distinct imaginary basis actions, e_i(e_j o) = -e_j(e_i o)
    // and (o e_i)e_j = -(o e_j)e_i; deterministic over the whole basis.
    {
        Rng rng2(seed ^ 0x9e3779b97f4a7c15ULL);
        const auto o = random_element<S>(alg, rng2);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                if (i == j) continue;
                const auto ei = Element<S>::basis(alg, i);
                const auto ej = Element<S>::basis(alg, j);
                note("anticommutation", residual_norm<S>(ei * (ej * o) + ej * (ei * o)));
                note("anticommutation", residual_norm<S>((o * ei) * ej + (o * ej) * ei));
            }
        }
    }

    LawReport rep;
    rep.alg = alg;
    rep.samples = samples;
    rep.seed = seed;
    rep.exact = std::is_same_v<S, Rational>;
    for (const auto& [name, r] : worst)
        rep.residuals.emplace_back(name, r);
    return rep;
}

} // namespace

LawReport check_composition_laws(Alg a, int samples, std::uint64_t seed, bool exact)
{
    if (samples < 1)
        throw std::invalid_argument("samples must be >= 1");
    return exact ? run_laws<Rational>(a, samples, seed) : run_laws<double>(a, samples, seed);
}

} // namespace ndr
