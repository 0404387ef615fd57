#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ndr/closure.hpp"
#include "ndr/serialize.hpp"

using namespace ndr;

TEST_CASE("riccati generators close at the conformal dimensions")
{
    // dim conf(R^n) = (n+1)(n+2)/2 for n = 1, 2, 4, 8
    const std::pair<Alg, int> expected[] = {
        {Alg::R, 3}, {Alg::C, 6}, {Alg::H, 15}, {Alg::O, 45}};
    for (const auto& [alg, dim] : expected) {
        const auto rep = closure(riccati_generators(alg));
        CAPTURE(to_string(alg));
        CHECK(rep.closed);
        CHECK(rep.dimension == dim);
        for (const auto& f : rep.basis)
            CHECK(f.degree() <= 2);
    }
}

TEST_CASE("closure basis is actually closed under brackets")
{
    const auto rep = closure(riccati_generators(Alg::H));
    REQUIRE(rep.closed);
    for (size_t i = 0; i < rep.basis.size(); ++i)
        for (size_t j = i + 1; j < rep.basis.size(); ++j)
            CHECK(rep.spans(bracket(rep.basis[i], rep.basis[j])));
}

TEST_CASE("rotation family closes at so(8)")
{
    const auto rep = closure(rotation_generators(Alg::O));
    CHECK(rep.closed);
    CHECK(rep.dimension == 28);
    for (const auto& f : rep.basis) {
        CHECK(f.is_linear());
        CHECK(is_antisymmetric(linear_matrix(f)));
    }
}

TEST_CASE("rotation family on H closes at so(4)")
{
    const auto rep = closure(rotation_generators(Alg::H));
    CHECK(rep.closed);
    CHECK(rep.dimension == 6);
}

TEST_CASE("plus-minus generators span the same algebra as the full set")
{
    const auto pm = closure(plus_minus_generators(Alg::O));
    CHECK(pm.closed);
    CHECK(pm.dimension == 45);
    const auto full = closure(riccati_generators(Alg::O));
    for (const auto& f : full.basis)
        CHECK(pm.spans(f));
    for (const auto& f : pm.basis)
        CHECK(full.spans(f));
}

TEST_CASE("schrodinger generator set closes at 15 on H")
{
    const auto rep = closure(schrodinger_generators());
    CHECK(rep.closed);
    CHECK(rep.dimension == 15);

    // the intermediate fields of the construction lie in the closure
    CHECK(rep.spans(lift_field("o", Alg::H)));                      // X^(0)
    for (int i = 1; i < 4; ++i) {
        const std::string si = std::to_string(i);
        CHECK(rep.spans(lift_field("e" + si + " o + o e" + si, Alg::H))); // 2 X^(0)_{0i}
        CHECK(rep.spans(lift_field("o e" + si + " o", Alg::H)));          // X^+_i
    }
    // X~_{ji} for 1 <= i < j <= 3
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const std::string si = std::to_string(i), sj = std::to_string(j);
            CHECK(rep.spans(lift_field("e" + sj + " (e" + si + " o) + o (e" + si + " e" + sj + ")",
                                       Alg::H)));
        }

    // the stated intermediate brackets
    const auto gens = schrodinger_generators();
    const VField& xp0 = gens[0];
    const VField& xm0 = gens[1];
    CHECK(bracket(xm0, xp0).same_components(Rational(2) * lift_field("o", Alg::H)));
    for (int i = 1; i < 4; ++i) {
        const std::string si = std::to_string(i);
        const VField x0i = Rational(1, 2) * lift_field("e" + si + " o + o e" + si, Alg::H);
        CHECK(bracket(x0i, xp0).same_components(lift_field("o e" + si + " o", Alg::H)));
    }
}

TEST_CASE("alternative quadratic family does not close")
{
    for (QuadSide side : {QuadSide::Left, QuadSide::Right}) {
        for (Alg alg : {Alg::H, Alg::O}) {
            CAPTURE(side == QuadSide::Left);
            CAPTURE(to_string(alg));
            const auto rep = closure(alt_quadratic_generators(alg, side), {.degree_cap = 4});
            CHECK_FALSE(rep.closed);
            REQUIRE(rep.offending.has_value());
            CHECK(rep.offending_degree > 4);
            CHECK(rep.degree_histogram.count(3));
            CHECK(rep.degree_histogram.count(4));

            // the bracket chain reaches X^(i,j) = o_j^2 d/do_i
            VField xij(dim_of(alg));
            xij.comp[0] = Poly::variable(1) * Poly::variable(1);
            SpanBasis span;
            for (const auto& f : rep.basis) span.insert(f);
            CHECK(span.contains(xij));
        }
    }
}

TEST_CASE("closure report serializes")
{
    const auto rep = closure(riccati_generators(Alg::C));
    const json j = closure_report_to_json(rep);
    CHECK(j["dimension"] == 6);
    CHECK(j["closed"] == true);
    CHECK(j["basis"].size() == 6);
    CHECK(j["degree_histogram"]["2"] == 2);
    // Euler field component serialization: {"o0": 1} etc.
    bool found_euler = false;
    for (const auto& b : j["basis"])
        if (b["name"] == "X^(0)") {
            found_euler = true;
            CHECK(b["components"][0]["o0"] == 1);
            CHECK(b["components"][1]["o1"] == 1);
        }
    CHECK(found_euler);
}

TEST_CASE("closure input validation")
{
    CHECK_THROWS_AS(closure({}), std::invalid_argument);
    CHECK_THROWS_AS(closure(riccati_generators(Alg::R), ClosureOptions{.degree_cap = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(closure(riccati_generators(Alg::R), ClosureOptions{.degree_cap = 5, .round_cap = 0}),
                    std::invalid_argument);
}
