#include "ndr/hamiltonian.hpp"

#include <cmath>
#include <sstream>

namespace ndr {

ChartFn ChartFn::constant(Rational c) { return term(std::move(c), 0, 0); }

ChartFn ChartFn::term(Rational c, int o0_exp, int rho_exp)
{
    ChartFn f;
    if (c != 0) f.terms_[{o0_exp, rho_exp}] = std::move(c);
    return f;
}

void ChartFn::add(int a, int b, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChartFn& ChartFn::operator+=(const ChartFn& o)
{
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

ChartFn& ChartFn::operator-=(const ChartFn& o)
{
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

ChartFn operator-(const ChartFn& a)
{
    ChartFn r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
}

ChartFn operator*(const ChartFn& a, const ChartFn& b)
{
    ChartFn r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

ChartFn ChartFn::d_o0() const
{
    ChartFn r;
    for (const auto& [k, c] : terms_)
        if (k.first != 0) r.add(k.first - 1, k.second, c * k.first);
    return r;
}

ChartFn ChartFn::d_rho() const
{
    ChartFn r;
    for (const auto& [k, c] : terms_)
        if (k.second != 0) r.add(k.first, k.second - 1, c * k.second);
    return r;
}

ChartFn ChartFn::integrate_o0() const
{
    ChartFn r;
    for (const auto& [k, c] : terms_) {
        if (k.first < 0)
            throw std::logic_error("negative o0 exponent in radial chart function");
        r.add(k.first + 1, k.second, c / (k.first + 1));
    }
    return r;
}

std::optional<ChartFn> ChartFn::integrate_rho() const
{
    ChartFn r;
    for (const auto& [k, c] : terms_) {
        if (k.second == -1)
            return std::nullopt; // would need log(rho)
        r.add(k.first, k.second + 1, c / (k.second + 1));
    }
    return r;
}

bool ChartFn::depends_on_o0() const
{
    for (const auto& [k, c] : terms_)
        if (k.first != 0) return true;
    return false;
}

double ChartFn::eval(double o0, double rho) const
{
    double acc = 0.0;
    for (const auto& [k, c] : terms_)
        acc += to_double(c) * std::pow(o0, k.first) * std::pow(rho, k.second);
    return acc;
}

Rational ChartFn::eval_exact(const Rational& o0, const Rational& rho) const
{
    Rational acc(0);
    auto powr = [](const Rational& x, int e) {
        Rational p(1);
        for (int i = 0; i < std::abs(e); ++i) p *= x;
        return e >= 0 ? p : Rational(1) / p;
    };
    for (const auto& [k, c] : terms_)
        acc += c * powr(o0, k.first) * powr(rho, k.second);
    return acc;
}

std::string ChartFn::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string vars;
        if (k.first != 0) {
            vars += "o0";
            if (k.first != 1) vars += "^" + std::to_string(k.first);
        }
        if (k.second != 0) {
            if (!vars.empty()) vars += "*";
            vars += "rho";
            if (k.second != 1) vars += "^" + std::to_string(k.second);
        }
        if (vars.empty())
            os << rational_to_string(mag);
        else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << vars;
        }
    }
    return os.str();
}

std::array<RadialField, 3> real_coefficient_fields()
{
    RadialField xm{ChartFn::constant(1), ChartFn(), "X^-"};
    RadialField x0{ChartFn::term(1, 1, 0), ChartFn::term(1, 0, 1), "X^(0)"};
    RadialField xp{ChartFn::term(1, 2, 0) - ChartFn::term(1, 0, 2), ChartFn::term(2, 1, 1), "X^+"};
    return {xm, x0, xp};
}

SymplecticForm SymplecticForm::omega_O()
{
    SymplecticForm w;
    w.name = "omega_O";
    w.radial_weight = ChartFn::term(1, 0, -2);
    w.angular = {{"alpha", "beta", "1"}, {"gamma", "psi", "1"}, {"theta", "phi", "1"}};
    return w;
}

SymplecticForm SymplecticForm::omega_H()
{
    SymplecticForm w;
    w.name = "omega_H";
    w.radial_weight = ChartFn::term(1, 0, -2);
    w.angular = {{"theta", "phi", "sin(theta)"}};
    return w;
}

namespace {

// i_X (w do0 ^ drho) = A do0 + B drho with A = -w v, B = w u.
struct Contraction {
    ChartFn A, B;
};

Contraction contract(const RadialField& x, const SymplecticForm& omega)
{
    return {-(omega.radial_weight * x.v), omega.radial_weight * x.u};
}

} // namespace

std::optional<ChartFn> hamiltonian_of(const RadialField& x, const SymplecticForm& omega)
{
    const auto [A, B] = contract(x, omega);
    // df = A do0 + B drho requires d(i_X omega) = 0
    if (!(B.d_o0() - A.d_rho()).is_zero())
        return std::nullopt;
    const ChartFn f1 = A.integrate_o0();
    const ChartFn rest = B - f1.d_rho();
    if (rest.depends_on_o0())
        return std::nullopt; // cannot happen once closedness holds
    const auto g = rest.integrate_rho();
    if (!g)
        return std::nullopt;
    return f1 + *g;
}

ChartFn poisson(const ChartFn& f, const ChartFn& g, const SymplecticForm& omega)
{
    const auto& w = omega.radial_weight.terms();
    if (w.size() != 1)
        throw std::invalid_argument("poisson needs a monomial radial weight");
    const auto& [k, c] = *w.begin();
    const ChartFn w_inv = ChartFn::term(Rational(1) / c, -k.first, -k.second);
    return (f.d_o0() * g.d_rho() - f.d_rho() * g.d_o0()) * w_inv;
}

LieDerivativeResult lie_derivative_check(const RadialField& x, const SymplecticForm& omega,
                                         int samples, std::uint64_t seed)
{
    LieDerivativeResult res;
    const auto [A, B] = contract(x, omega);
    res.residual_coefficient = B.d_o0() - A.d_rho();

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Rational o0 = rng.small_rational(8, 4);
        const Rational rho(rng.int_in(0, 8), rng.int_in(1, 4));
        if (rho == 0) {
            ++res.skipped;
            continue;
        }
        const Rational r = res.residual_coefficient.eval_exact(o0, rho);
        res.max_residual = std::max(res.max_residual, std::abs(to_double(r)));
        ++res.samples_used;
    }
    return res;
}

std::vector<std::vector<Rational>> invariant_constant_two_forms(int n,
                                                                const std::vector<VField>& fields)
{
    // unknowns c_{ij}, i<j, lexicographic
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const int P = static_cast<int>(pairs.size());
    auto pair_index = [&](int i, int j) { return std::pair(std::min(i, j), std::max(i, j)); };

    std::vector<std::vector<Rational>> rows;
    for (const auto& f : fields) {
        if (f.dim != n)
            throw std::invalid_argument("field dimension mismatch in invariance system");
        if (f.degree() > 1)
            throw std::invalid_argument("invariance system expects affine fields");
        // linear part: comp_j = sum_i A[j][i] x_i (+ constant)
        std::vector<std::vector<Rational>> Amat(n, std::vector<Rational>(n, Rational(0)));
        for (int j = 0; j < n; ++j)
            for (const auto& [m, c] : f.comp[j].terms())
                for (int i = 0; i < kMaxVars; ++i)
                    if (m.e[i] == 1) Amat[j][i] = c;

        // L_X(dx_i ^ dx_j) = sum_k A_{ik} dx_k ^ dx_j + A_{jk} dx_i ^ dx_k
        std::map<std::pair<int, int>, std::vector<Rational>> eq; // output pair -> row
        auto row_of = [&](std::pair<int, int> kl) -> std::vector<Rational>& {
            auto [it, ins] = eq.try_emplace(kl, std::vector<Rational>(P, Rational(0)));
            return it->second;
        };
        for (int p = 0; p < P; ++p) {
            const auto [i, j] = pairs[p];
            for (int k = 0; k < n; ++k) {
                if (Amat[i][k] != 0 && k != j) {
                    const Rational s = k < j ? Amat[i][k] : -Amat[i][k];
                    row_of(pair_index(k, j))[p] += s;
                }
                if (Amat[j][k] != 0 && k != i) {
                    const Rational s = i < k ? Amat[j][k] : -Amat[j][k];
                    row_of(pair_index(i, k))[p] += s;
                }
            }
        }
        for (auto& [kl, row] : eq) rows.push_back(std::move(row));
    }

    // null space by Gauss-Jordan
    const int R = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < P && r < R; ++c) {
        int pr = -1;
        for (int i = r; i < R; ++i)
            if (rows[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        const Rational lead = rows[r][c];
        for (auto& v : rows[r]) v /= lead;
        for (int i = 0; i < R; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational m = rows[i][c];
            for (int cc = 0; cc < P; ++cc) rows[i][cc] -= m * rows[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<std::vector<Rational>> null_basis;
    std::vector<bool> is_pivot(P, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < P; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(P, Rational(0));
        v[c] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -rows[i][c];
        null_basis.push_back(std::move(v));
    }
    return null_basis;
}

} // namespace ndr
