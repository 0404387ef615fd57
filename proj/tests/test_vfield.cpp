#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ndr/vfield.hpp"
#include "test_support.hpp"

#include <fstream>
#include <sstream>

using namespace ndr;
using namespace ndr::test;

namespace {

// value and directional derivative of p at point x in direction u, by
// first-order evaluation only (independent of Poly::derivative)
std::pair<Rational, Rational> eval_dual(const Poly& p, const std::vector<Rational>& x,
                                        const std::vector<Rational>& u)
{
    Rational val(0), der(0);
    for (const auto& [m, c] : p.terms()) {
        Rational prod(1);
        for (int i = 0; i < kMaxVars; ++i)
            for (int k = 0; k < m.e[i]; ++k) prod *= x[i];
        val += c * prod;
        for (int i = 0; i < kMaxVars; ++i) {
            if (m.e[i] == 0 || u[i] == 0) continue;
            Rational rest(static_cast<int>(m.e[i]));
            for (int j = 0; j < kMaxVars; ++j) {
                const int e = j == i ? m.e[j] - 1 : m.e[j];
                for (int k = 0; k < e; ++k) rest *= x[j];
            }
            der += c * rest * u[i];
        }
    }
    return {val, der};
}

VField parse_signed_row(const std::string& data, int dim)
{
    VField f(dim);
    std::istringstream is(data);
    std::string tok;
    for (int k = 0; k < dim; ++k) {
        REQUIRE(static_cast<bool>(is >> tok));
        REQUIRE(tok.size() >= 2);
        const Rational sign = tok[0] == '-' ? -1 : 1;
        const int idx = std::stoi(tok.substr(1));
        f.comp[k] = sign * Poly::variable(idx);
    }
    return f;
}

VField random_sparse_field(int dim, int max_degree, Rng& rng)
{
    VField f(dim);
    for (int k = 0; k < dim; ++k) {
        const int terms = static_cast<int>(rng.int_in(0, 2));
        for (int t = 0; t < terms; ++t) {
            Poly mono = Poly::constant(rng.small_rational(4, 2));
            const int deg = static_cast<int>(rng.int_in(0, max_degree));
            for (int d = 0; d < deg; ++d)
                mono = mono * Poly::variable(static_cast<int>(rng.int_in(0, dim - 1)));
            f.comp[k] += mono;
        }
    }
    return f;
}

} // namespace

TEST_CASE("lift of constants and the Euler field")
{
    const VField c = lift_field("e1", Alg::O);
    for (int k = 0; k < 8; ++k)
        CHECK(c.comp[k] == (k == 1 ? Poly::constant(1) : Poly()));

    const VField euler = lift_field("o", Alg::O);
    for (int k = 0; k < 8; ++k)
        CHECK(euler.comp[k] == Poly::variable(k));
}

TEST_CASE("word parser handles coefficients, parens and errors")
{
    const VField f = lift_field("2 o e1 o - e2", Alg::H);
    const VField g = Rational(2) * lift_field("o e1 o", Alg::H) - lift_field("e2", Alg::H);
    CHECK(f.same_components(g));

    // left association: "o e1 o" is (o e1) o; alternativity makes the
    // other bracketing agree, which we assert rather than assume
    CHECK(lift_field("o e1 o", Alg::O).same_components(lift_field("(o e1) o", Alg::O)));
    CHECK(lift_field("o e1 o", Alg::O).same_components(lift_field("o (e1 o)", Alg::O)));

    CHECK_THROWS_AS(lift_field("e9", Alg::H), word_parse_error);
    CHECK_THROWS_AS(lift_field("o +", Alg::H), word_parse_error);
    CHECK_THROWS_AS(lift_field("(o", Alg::H), word_parse_error);
    CHECK_THROWS_AS(lift_field("3/0 o", Alg::H), word_parse_error);
}

TEST_CASE("linear octonion fields match the golden table")
{
    std::ifstream in(std::string(NDR_GOLDEN_DIR) + "/linear_fields_O.txt");
    REQUIRE(in.good());
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        REQUIRE(colon != std::string::npos);
        const std::string name = line.substr(0, colon);
        const VField expected = parse_signed_row(line.substr(colon + 1), 8);

        std::string word;
        if (name == "X^(0)")
            word = "o";
        else if (name.rfind("X^{0_R}_", 0) == 0)
            word = "o e" + name.substr(8);
        else if (name.rfind("X^{0_L}_", 0) == 0)
            word = "e" + name.substr(8) + " o";
        else
            FAIL("unknown row ", name);
        CHECK_MESSAGE(lift_field(word, Alg::O).same_components(expected), name);
        ++checked;
    }
    CHECK(checked == 15);
}

TEST_CASE("generator families have the expected sizes and degrees")
{
    CHECK(riccati_generators(Alg::R).size() == 3);
    CHECK(riccati_generators(Alg::C).size() == 7);
    CHECK(riccati_generators(Alg::H).size() == 15);
    CHECK(riccati_generators(Alg::O).size() == 31);
    CHECK(rotation_generators(Alg::O).size() == 14);
    CHECK(plus_minus_generators(Alg::O).size() == 16);
    CHECK(alt_quadratic_generators(Alg::O, QuadSide::Left).size() == 31);
    CHECK(schrodinger_generators().size() == 5);
    CHECK_THROWS_AS(alt_quadratic_generators(Alg::C, QuadSide::Left), std::invalid_argument);

    // real case degenerates to d/dx, x d/dx, x^2 d/dx
    const auto real = riccati_generators(Alg::R);
    CHECK(real[0].same_components(lift_field("e0", Alg::R)));
    CHECK(real[1].same_components(lift_field("o", Alg::R)));
    CHECK(real[2].same_components(lift_field("o o", Alg::R)));

    for (const auto& g : riccati_generators(Alg::O))
        CHECK(g.degree() <= 2);
}

TEST_CASE("bracket antisymmetry, bilinearity and Jacobi on random fields")
{
    Rng rng(1234);
    int triples = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int dim = std::array{2, 4, 8}[rep % 3];
        const VField a = random_sparse_field(dim, 2, rng);
        const VField b = random_sparse_field(dim, 2, rng);
        const VField c = random_sparse_field(dim, 2, rng);
        CHECK((bracket(a, b) + bracket(b, a)).is_zero());
        const VField jac =
            bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
        CHECK(jac.is_zero());
        ++triples;
    }
    CHECK(triples == 1000);
}

TEST_CASE("bracket agrees with the directional-derivative oracle")
{
    // [Y1,Y2](o) = del_{F1(o)} F2 - del_{F2(o)} F1, evaluated pointwise by
    // first-order expansion only
    Rng rng(99);
    const auto gens = riccati_generators(Alg::O);
    for (int rep = 0; rep < 40; ++rep) {
        const VField& f1 = gens[rng.int_in(0, gens.size() - 1)];
        const VField& f2 = gens[rng.int_in(0, gens.size() - 1)];
        const VField br = bracket(f1, f2);

        std::vector<Rational> pt(8);
        for (auto& x : pt) x = rng.small_rational(3, 2);
        std::vector<Rational> v1(8), v2(8);
        for (int k = 0; k < 8; ++k) {
            v1[k] = eval_dual(f1.comp[k], pt, pt).first;
            v2[k] = eval_dual(f2.comp[k], pt, pt).first;
        }
        for (int k = 0; k < 8; ++k) {
            const Rational expected =
                eval_dual(f2.comp[k], pt, v1).second - eval_dual(f1.comp[k], pt, v2).second;
            CHECK(eval_dual(br.comp[k], pt, pt).first == expected);
        }
    }
}

TEST_CASE("classical sl(2) brackets on the real line")
{
    const auto g = riccati_generators(Alg::R);
    const VField &xm = g[0], &x0 = g[1], &xp = g[2];
    CHECK(bracket(xm, x0).same_components(xm));
    CHECK(bracket(xm, xp).same_components(Rational(2) * x0));
    CHECK(bracket(x0, xp).same_components(xp));
    // Z-grading: nothing lands outside the graded components
    CHECK(bracket(x0, x0).is_zero());
    CHECK(bracket(xp, xp).is_zero());
}

TEST_CASE("plus-minus brackets produce the stated combinations")
{
    const int n = 8;
    std::vector<VField> xm, xp;
    for (int i = 0; i < n; ++i) {
        xm.push_back(lift_field("e" + std::to_string(i), Alg::O));
        xp.push_back(lift_field("o e" + std::to_string(i) + " o", Alg::O));
    }
    const VField x0 = lift_field("o", Alg::O);

    // [X^-_0, X^+_0] = 2 X^(0), [X^-_i, X^+_i] = -2 X^(0) for i >= 1;
    // the sign is pinned by the directional-derivative expansion
    CHECK(bracket(xm[0], xp[0]).same_components(Rational(2) * x0));
    for (int i = 1; i < n; ++i)
        CHECK(bracket(xm[i], xp[i]).same_components(Rational(-2) * x0));

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::string si = std::to_string(i), sj = std::to_string(j);
            // [X^-_i, X^+_j] = X^{0_R}_{j.i} + X^{(0)}_{ij}
            const VField sum =
                lift_field("o (e" + sj + " e" + si + ")", Alg::O) +
                lift_field("e" + si + " (e" + sj + " o)", Alg::O);
            const VField br = bracket(xm[i], xp[j]);
            CHECK(br.same_components(sum));
            // ... = 2 o_i d_j - 2 o_j d_i
            VField tilde(8);
            tilde.comp[j] = Rational(2) * Poly::variable(i);
            tilde.comp[i] = Rational(-2) * Poly::variable(j);
            CHECK(br.same_components(tilde));
        }
    }
}

TEST_CASE("rotation family brackets close on e_i(e_j o) combinations")
{
    // [X^{0_L}_i, X^{0_L}_j] = -2 lift(e_i (e_j o)) for i != j
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            const std::string si = std::to_string(i), sj = std::to_string(j);
            const VField a = lift_field("e" + si + " o", Alg::O);
            const VField b = lift_field("e" + sj + " o", Alg::O);
            if (i == j) {
                CHECK(bracket(a, b).is_zero());
                continue;
            }
            const VField expected = Rational(-2) * lift_field("e" + si + " (e" + sj + " o)", Alg::O);
            CHECK(bracket(a, b).same_components(expected));
        }
    }
}

TEST_CASE("linear matrices")
{
    const VField x0 = lift_field("o", Alg::O);
    const auto m0 = linear_matrix(x0);
    CHECK(trace(m0) == Rational(-8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(m0[i][j] == Rational(i == j ? -1 : 0));

    for (int j = 1; j < 8; ++j) {
        const auto ml = linear_matrix(lift_field("e" + std::to_string(j) + " o", Alg::O));
        const auto mr = linear_matrix(lift_field("o e" + std::to_string(j), Alg::O));
        CHECK(is_antisymmetric(ml));
        CHECK(is_antisymmetric(mr));
        CHECK(trace(ml) == Rational(0));
    }

    // X~_ij = [X^-_i, X^+_j] is antisymmetric too
    const VField br = bracket(lift_field("e1", Alg::O), lift_field("o e3 o", Alg::O));
    CHECK(is_antisymmetric(linear_matrix(br)));

    CHECK_THROWS_AS(linear_matrix(lift_field("o e1 o", Alg::O)), std::invalid_argument);

    // X -> -A is a homomorphism: -A_[X,Y] = [-A_X, -A_Y]
    const VField x = lift_field("e2 o", Alg::O);
    const VField y = lift_field("o e5", Alg::O);
    const auto ax = linear_matrix(x), ay = linear_matrix(y), ab = linear_matrix(bracket(x, y));
    RatMatrix comm(8, std::vector<Rational>(8, Rational(0)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                comm[i][j] += ax[i][k] * ay[k][j] - ay[i][k] * ax[k][j];
    CHECK(ab == comm);
}
