#include "ndr/vfield.hpp"

#include <cctype>
#include <sstream>

namespace ndr {

std::string VField::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < dim; ++k) {
        if (comp[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << comp[k].to_string() << ")*d" << k;
    }
    if (first) os << "0";
    return os.str();
}

VField operator+(const VField& a, const VField& b)
{
    if (a.dim != b.dim)
        throw std::invalid_argument("vector field dimension mismatch");
    VField r(a.dim);
    for (int k = 0; k < a.dim; ++k) r.comp[k] = a.comp[k] + b.comp[k];
    return r;
}

VField operator-(const VField& a, const VField& b)
{
    if (a.dim != b.dim)
        throw std::invalid_argument("vector field dimension mismatch");
    VField r(a.dim);
    for (int k = 0; k < a.dim; ++k) r.comp[k] = a.comp[k] - b.comp[k];
    return r;
}

VField operator*(const Rational& s, const VField& a)
{
    VField r(a.dim);
    for (int k = 0; k < a.dim; ++k) r.comp[k] = s * a.comp[k];
    return r;
}

VField bracket(const VField& a, const VField& b)
{
    if (a.dim != b.dim)
        throw std::invalid_argument("vector field dimension mismatch");
    VField r(a.dim);
    for (int j = 0; j < a.dim; ++j) {
        Poly acc;
        for (int i = 0; i < a.dim; ++i) {
            if (!a.comp[i].is_zero()) acc += a.comp[i] * b.comp[j].derivative(i);
            if (!b.comp[i].is_zero()) acc -= b.comp[i] * a.comp[j].derivative(i);
        }
        r.comp[j] = std::move(acc);
    }
    r.name = "[" + a.name + "," + b.name + "]";
    return r;
}

namespace {

// Polynomial map A -> A in coordinates; multiplied through the structure
// constants.  The word parser evaluates into these.
struct PolyMap {
    Alg alg;
    std::vector<Poly> comp;

    static PolyMap zero(Alg a) { return {a, std::vector<Poly>(dim_of(a))}; }
    static PolyMap identity(Alg a)
    {
        PolyMap m = zero(a);
        for (int i = 0; i < dim_of(a); ++i) m.comp[i] = Poly::variable(i);
        return m;
    }
    static PolyMap basis(Alg a, int k)
    {
        PolyMap m = zero(a);
        m.comp[k] = Poly::constant(1);
        return m;
    }
};

PolyMap operator+(const PolyMap& a, const PolyMap& b)
{
    PolyMap r = a;
    for (size_t i = 0; i < r.comp.size(); ++i) r.comp[i] += b.comp[i];
    return r;
}

PolyMap operator-(const PolyMap& a, const PolyMap& b)
{
    PolyMap r = a;
    for (size_t i = 0; i < r.comp.size(); ++i) r.comp[i] -= b.comp[i];
    return r;
}

PolyMap operator*(const PolyMap& a, const PolyMap& b)
{
    const MulTable& t = MulTable::of(a.alg);
    PolyMap r = PolyMap::zero(a.alg);
    for (int i = 0; i < t.dim(); ++i) {
        if (a.comp[i].is_zero()) continue;
        for (int j = 0; j < t.dim(); ++j) {
            if (b.comp[j].is_zero()) continue;
            Poly p = a.comp[i] * b.comp[j];
            if (t.sign(i, j) < 0) p = -p;
            r.comp[t.index(i, j)] += p;
        }
    }
    return r;
}

class WordParser {
public:
    WordParser(const std::string& s, Alg alg) : s_(s), alg_(alg) {}

    PolyMap parse()
    {
        PolyMap r = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return r;
    }

private:
    PolyMap parse_expr()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        PolyMap acc = parse_term();
        if (neg) acc = PolyMap::zero(alg_) - acc;
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const bool minus = get() == '-';
                PolyMap t = parse_term();
                acc = minus ? acc - t : acc + t;
            } else {
                return acc;
            }
        }
    }

    PolyMap parse_term()
    {
        skip_ws();
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek())))
            coeff = parse_number();
        bool have_factor = false;
        PolyMap acc = PolyMap::basis(alg_, 0);
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == 'o' || c == 'e' || c == '(') {
                acc = have_factor ? acc * parse_factor() : parse_factor();
                have_factor = true;
            } else {
                break;
            }
        }
        if (!have_factor && coeff == 1)
            fail("expected a factor");
        PolyMap r = PolyMap::zero(alg_);
        for (size_t i = 0; i < acc.comp.size(); ++i) r.comp[i] = coeff * acc.comp[i];
        return r;
    }

    PolyMap parse_factor()
    {
        skip_ws();
        const char c = peek();
        if (c == 'o') {
            ++pos_;
            return PolyMap::identity(alg_);
        }
        if (c == 'e') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected basis index after 'e'");
            int k = 0;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                k = 10 * k + (get() - '0');
            if (k >= dim_of(alg_))
                fail("basis index out of range for algebra " + to_string(alg_));
            return PolyMap::basis(alg_, k);
        }
        if (c == '(') {
            ++pos_;
            PolyMap r = parse_expr();
            skip_ws();
            if (peek() != ')')
                fail("missing ')'");
            ++pos_;
            return r;
        }
        fail("unexpected character");
    }

    Rational parse_number()
    {
        auto digits = [&] {
            Integer v = 0;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected digits");
            while (std::isdigit(static_cast<unsigned char>(peek())))
                v = 10 * v + (get() - '0');
            return v;
        };
        Integer num = digits();
        if (peek() == '/') {
            ++pos_;
            Integer den = digits();
            if (den == 0)
                fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw word_parse_error("word '" + s_ + "' at position " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& s_;
    Alg alg_;
    size_t pos_ = 0;
};

VField lifted(const std::string& word, Alg alg, const std::string& name)
{
    VField f = lift_field(word, alg);
    f.name = name;
    return f;
}

} // namespace

VField lift_field(const std::string& word, Alg alg)
{
    PolyMap m = WordParser(word, alg).parse();
    VField f(dim_of(alg));
    f.comp = std::move(m.comp);
    f.name = word;
    return f;
}

std::vector<VField> riccati_generators(Alg alg)
{
    const int n = dim_of(alg);
    std::vector<VField> g;
    for (int i = 0; i < n; ++i)
        g.push_back(lifted("e" + std::to_string(i), alg, "X^-_" + std::to_string(i)));
    g.push_back(lifted("o", alg, "X^(0)"));
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("e" + std::to_string(j) + " o", alg, "X^{0_L}_" + std::to_string(j)));
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("o e" + std::to_string(j), alg, "X^{0_R}_" + std::to_string(j)));
    for (int i = 0; i < n; ++i)
        g.push_back(lifted("o e" + std::to_string(i) + " o", alg, "X^+_" + std::to_string(i)));
    return g;
}

std::vector<VField> rotation_generators(Alg alg)
{
    const int n = dim_of(alg);
    std::vector<VField> g;
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("e" + std::to_string(j) + " o", alg, "X^{0_L}_" + std::to_string(j)));
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("o e" + std::to_string(j), alg, "X^{0_R}_" + std::to_string(j)));
    return g;
}

std::vector<VField> plus_minus_generators(Alg alg)
{
    const int n = dim_of(alg);
    std::vector<VField> g;
    for (int i = 0; i < n; ++i)
        g.push_back(lifted("e" + std::to_string(i), alg, "X^-_" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        g.push_back(lifted("o e" + std::to_string(i) + " o", alg, "X^+_" + std::to_string(i)));
    return g;
}

std::vector<VField> alt_quadratic_generators(Alg alg, QuadSide side)
{
    if (alg != Alg::H && alg != Alg::O)
        throw std::invalid_argument("alt-quadratic generators are defined for H and O only");
    const int n = dim_of(alg);
    std::vector<VField> g;
    for (int i = 0; i < n; ++i)
        g.push_back(lifted("e" + std::to_string(i), alg, "X^-_" + std::to_string(i)));
    g.push_back(lifted("o", alg, "X^(0)"));
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("e" + std::to_string(j) + " o", alg, "X^{0_L}_" + std::to_string(j)));
    for (int j = 1; j < n; ++j)
        g.push_back(lifted("o e" + std::to_string(j), alg, "X^{0_R}_" + std::to_string(j)));
    for (int i = 0; i < n; ++i) {
        if (side == QuadSide::Left)
            g.push_back(lifted("e" + std::to_string(i) + " (o o)", alg, "Q^L_" + std::to_string(i)));
        else
            g.push_back(lifted("(o o) e" + std::to_string(i), alg, "Q^R_" + std::to_string(i)));
    }
    return g;
}

std::vector<VField> schrodinger_generators()
{
    std::vector<VField> g;
    g.push_back(lifted("o e0 o", Alg::H, "X^+_0"));
    for (int i = 0; i < 4; ++i)
        g.push_back(lifted("e" + std::to_string(i), Alg::H, "X^-_" + std::to_string(i)));
    return g;
}

RatMatrix linear_matrix(const VField& x)
{
    if (!x.is_linear())
        throw std::invalid_argument("linear_matrix requires a linear homogeneous field");
    RatMatrix m(x.dim, std::vector<Rational>(x.dim, Rational(0)));
    for (int j = 0; j < x.dim; ++j) {
        for (const auto& [mono, c] : x.comp[j].terms()) {
            for (int i = 0; i < kMaxVars; ++i) {
                if (mono.e[i] == 1) {
                    m[j][i] = -c;
                    break;
                }
            }
        }
    }
    return m;
}

bool is_antisymmetric(const RatMatrix& m)
{
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (m[i][j] != -m[j][i]) return false;
    return true;
}

Rational trace(const RatMatrix& m)
{
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

} // namespace ndr
