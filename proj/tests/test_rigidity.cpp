#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cag/decompose.hpp"
#include "cag/dsl.hpp"
#include "cag/rigidity.hpp"

using namespace cag;

namespace {

// a valid counterexample is a pointed variety automorphism that the
// retraction moves: checking these four facts is independent of how the
// classifier reached its verdict
void check_counterexample_sound(const GroupPresentation &g, const VarietyMorphism &c) {
    CHECK(c.domain == g);
    CHECK(c.codomain == g);
    CHECK(is_pointed(c));
    CHECK(check_mutual_inverse(c, synthesize_counterexample_inverse(g)));
    CHECK_FALSE(is_homomorphism(c));
    CHECK(retract(c).morphism() != c);
}

std::vector<GroupPresentation> all_presentations_up_to(std::size_t budget) {
    std::vector<GroupPresentation> out;
    for (std::size_t n = 0; n <= budget; ++n)
        for (std::size_t m = 0; n + m <= budget; ++m)
            for (std::size_t e = 0; n + m + e <= budget; ++e)
                for (std::size_t f = 0; n + m + e + f <= budget; ++f) {
                    GroupPresentation g{n, m, {}};
                    if (e) g.bricks["E"] = e;
                    if (f) g.bricks["F"] = f;
                    out.push_back(g);
                }
    return out;
}

} // namespace

TEST_CASE("verdicts on named groups") {
    auto v = classify_rigidity(GroupPresentation{0, 0, {{"E", 1}}});
    CHECK(v.rigid);
    CHECK(v.reason == RigidityReason::antiaffine);

    v = classify_rigidity(GroupPresentation{0, 2, {{"E", 1}}});
    CHECK(v.rigid);
    CHECK(v.reason == RigidityReason::semiabelian);

    v = classify_rigidity(GroupPresentation{1, 0, {{"E", 1}, {"F", 2}}});
    CHECK(v.rigid);
    CHECK(v.reason == RigidityReason::Ga_times_antiaffine_semiabelian);

    v = classify_rigidity(GroupPresentation{1, 0, {}});
    CHECK(v.rigid);

    v = classify_rigidity(GroupPresentation{2, 0, {}});
    CHECK_FALSE(v.rigid);
    CHECK(v.reason == RigidityReason::not_rigid);
    REQUIRE(v.counterexample.has_value());

    v = classify_rigidity(GroupPresentation{1, 1, {}});
    CHECK_FALSE(v.rigid);
}

TEST_CASE("the shipped counterexamples in coordinates") {
    GroupPresentation Ga2{2, 0, {}};
    VarietyMorphism c = synthesize_counterexample(Ga2);
    CHECK(lp_to_string(c.u_coords[0]) == "x1+x2^2");
    CHECK(lp_to_string(c.u_coords[1]) == "x2");
    CHECK(lp_to_string(synthesize_counterexample_inverse(Ga2).u_coords[0]) == "x1-x2^2");

    GroupPresentation GaGm{1, 1, {}};
    VarietyMorphism d = synthesize_counterexample(GaGm);
    CHECK(lp_to_string(d.u_coords[0]) == "x1+y1-1");
    CHECK(d.t_coords[0] == Unit{Rat(1), {1}});
}

TEST_CASE("rigid groups refuse to synthesize a counterexample") {
    CHECK_THROWS_AS(synthesize_counterexample(GroupPresentation{0, 3, {}}), GroupIsRigid);
    CHECK_THROWS_AS(synthesize_counterexample(GroupPresentation{1, 0, {{"E", 1}}}),
                    GroupIsRigid);
}

TEST_CASE("exhaustive sweep of small presentations") {
    for (const GroupPresentation &g : all_presentations_up_to(4)) {
        RigidityVerdict v = classify_rigidity(g);
        bool expect_rigid = g.n == 0 || (g.n == 1 && g.m == 0);
        CHECK(v.rigid == expect_rigid);
        if (v.rigid) {
            CHECK_FALSE(v.counterexample.has_value());
            switch (v.reason) {
                case RigidityReason::antiaffine:
                    CHECK(predicates(g).is_antiaffine);
                    break;
                case RigidityReason::semiabelian:
                    CHECK(predicates(g).is_semiabelian);
                    CHECK(g.m >= 1);
                    break;
                case RigidityReason::Ga_times_antiaffine_semiabelian: {
                    StructuralParts parts = structural_parts(g);
                    CHECK(parts.unipotent_part == GroupPresentation{1, 0, {}});
                    CHECK(g.m == 0);
                    break;
                }
                case RigidityReason::not_rigid:
                    FAIL("rigid verdict must carry a rigid reason");
            }
        } else {
            CHECK(v.reason == RigidityReason::not_rigid);
            REQUIRE(v.counterexample.has_value());
            check_counterexample_sound(g, *v.counterexample);
        }
    }
}
