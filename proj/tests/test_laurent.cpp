#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cag/dsl.hpp"
#include "cag/laurent.hpp"
#include "cag/random_gen.hpp"

using namespace cag;

namespace {

const RingSig sig11{1, 1};
const RingSig sig21{2, 1};

LaurentPoly P(const std::string &s, RingSig sig) { return parse_poly(s, sig); }

// Independent differentiation oracle. Expands f(p + t*e_i) term by term with
// the binomial theorem over plain Rat arithmetic and returns the coefficient
// of t, i.e. (d f / d x_i)(p). Touches neither lp_partial nor lp_substitute.
Rat divided_difference_derivative(const LaurentPoly &f, std::size_t i,
                                  const std::vector<Rat> &x_vals,
                                  const std::vector<Rat> &y_vals) {
    Rat coeff_of_t(0);
    for (const auto &[mono, c] : f.terms()) {
        Rat rest = c;
        for (std::size_t k = 0; k < x_vals.size(); ++k)
            if (k != i && mono.x_exps[k]) rest *= x_vals[k].pow(mono.x_exps[k]);
        for (std::size_t j = 0; j < y_vals.size(); ++j)
            if (mono.y_exps[j]) rest *= y_vals[j].pow(mono.y_exps[j]);
        // (p + t)^e: coefficient of t^1 is e * p^(e-1)
        long e = mono.x_exps[i];
        if (e == 0) continue;
        coeff_of_t += rest * Rat(e) * x_vals[i].pow(e - 1);
    }
    return coeff_of_t;
}

} // namespace

TEST_CASE("addition and multiplication") {
    CHECK((P("x1", sig11) + P("-x1", sig11)).is_zero());
    CHECK(P("y1", sig11) * P("y1^-1", sig11) == P("1", sig11));
    // term-by-term oracle: (x1+y1)^2 = x1^2 + 2 x1 y1 + y1^2
    CHECK(P("(x1+y1)^2", sig11) == P("x1^2+2*x1*y1+y1^2", sig11));
    CHECK_THROWS_AS(P("x1", sig11) + P("x1", sig21), SignatureMismatch);
}

TEST_CASE("ring laws on random triples") {
    Gen gen(21);
    for (int i = 0; i < 100; ++i) {
        RingSig sig{2, 2};
        LaurentPoly a = gen.laurent(sig, 4, 3);
        LaurentPoly b = gen.laurent(sig, 4, 3);
        LaurentPoly c = gen.laurent(sig, 4, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("substitution") {
    // x1^2 with x1 -> 2 x1 gives 4 x1^2
    LaurentPoly f = P("x1^2", RingSig{1, 0});
    CHECK(lp_substitute(f, RingSig{1, 0}, {P("2*x1", RingSig{1, 0})}, {}) ==
          P("4*x1^2", RingSig{1, 0}));
    // y1^-1 with y1 -> 3 y1^2 gives (1/3) y1^-2
    LaurentPoly g = P("y1^-1", RingSig{0, 1});
    CHECK(lp_substitute(g, RingSig{0, 1}, {}, {Unit{Rat(3), {2}}}) ==
          P("1/3*y1^-2", RingSig{0, 1}));
    // manual expansion oracle
    LaurentPoly h = P("x1+y1", sig11);
    CHECK(lp_substitute(h, sig21, {P("x1+x2^2", sig21)}, {Unit{Rat(1), {1}}}) ==
          P("x1+x2^2+y1", sig21));
}

TEST_CASE("substitution is a ring homomorphism") {
    Gen gen(22);
    RingSig src{2, 1};
    RingSig dst{2, 2};
    for (int i = 0; i < 60; ++i) {
        LaurentPoly f = gen.laurent(src, 4, 3);
        LaurentPoly g = gen.laurent(src, 4, 3);
        std::vector<LaurentPoly> xi{gen.laurent(dst, 3, 2), gen.laurent(dst, 3, 2)};
        std::vector<Unit> yi{gen.unit(2, false)};
        CHECK(lp_substitute(f * g, dst, xi, yi) ==
              lp_substitute(f, dst, xi, yi) * lp_substitute(g, dst, xi, yi));
        CHECK(lp_substitute(f + g, dst, xi, yi) ==
              lp_substitute(f, dst, xi, yi) + lp_substitute(g, dst, xi, yi));
    }
}

TEST_CASE("formal partials") {
    CHECK(lp_partial(P("x1^2", sig11), 0) == P("2*x1", sig11));
    CHECK(lp_partial(P("y1*x2", sig21), 0).is_zero());
    CHECK(lp_partial(P("x1^3*y1^-1+5*x1", sig11), 0) == P("3*x1^2*y1^-1+5", sig11));
    CHECK_THROWS_AS(lp_partial(P("x1", sig11), 3), IndexOutOfRange);
}

TEST_CASE("partials agree with the divided-difference oracle") {
    Gen gen(23);
    RingSig sig{2, 2};
    for (int f_case = 0; f_case < 30; ++f_case) {
        LaurentPoly f = gen.laurent(sig, 6, 4);
        for (int pt = 0; pt < 20; ++pt) {
            std::vector<Rat> xs{gen.rat(), gen.rat()};
            std::vector<Rat> ys{gen.nonzero_rat(), gen.nonzero_rat()};
            for (std::size_t i = 0; i < sig.n; ++i)
                CHECK(lp_evaluate(lp_partial(f, i), xs, ys) ==
                      divided_difference_derivative(f, i, xs, ys));
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(lp_evaluate(P("x1+y1", sig11), {Rat(0)}, {Rat(1)}) == Rat(1));
    CHECK(lp_evaluate(P("y1^-2", RingSig{0, 1}), {}, {Rat(1, 2)}) == Rat(4));
    CHECK(lp_evaluate(P("x1^2*y1-3", sig11), {Rat(2)}, {Rat(3)}) == Rat(9));
    CHECK_THROWS_AS(lp_evaluate(P("y1", sig11), {Rat(1)}, {Rat(0)}), ZeroInTorusCoordinate);
}

TEST_CASE("unit recognition") {
    RingSig s{1, 2};
    auto u = lp_unit_decompose(P("3*y1^2*y2^-1", s));
    REQUIRE(u.has_value());
    CHECK(u->coeff == Rat(3));
    CHECK(u->y_exps == std::vector<long>{2, -1});
    CHECK_FALSE(lp_unit_decompose(P("x1+1", s)).has_value());
    // two terms are never invertible in the Laurent ring
    CHECK_FALSE(lp_unit_decompose(P("y1+y2", s)).has_value());
    CHECK_FALSE(lp_unit_decompose(P("0", s)).has_value());
}

TEST_CASE("two-term polynomials have no low-degree inverse") {
    // desk-scale check of "units are monomials": search all candidate
    // inverses a*y1^i + b*y1^j of y1+1 with small exponents over small
    // rationals and verify none multiplies to 1
    RingSig s{0, 1};
    LaurentPoly f = P("y1+1", s);
    LaurentPoly one = P("1", s);
    for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j)
            for (long a = -4; a <= 4; ++a)
                for (long b = -4; b <= 4; ++b) {
                    if (a == 0 && b == 0) continue;
                    LaurentPoly cand =
                        LaurentPoly::monomial(s, Rat(a, 2), Monomial{{}, {i}}) +
                        LaurentPoly::monomial(s, Rat(b, 2), Monomial{{}, {j}});
                    CHECK(f * cand != one);
                }
}

TEST_CASE("zero polynomial is the empty term map") {
    LaurentPoly z = P("x1-x1", sig11);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK(lp_to_string(z) == "0");
}
