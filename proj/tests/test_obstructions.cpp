#include "doctest.h"
#include "test_util.hpp"

#include "tautilt/markoff.hpp"

using namespace tautilt;
using namespace testutil;

namespace {
const PrimeField F2{2};
const PrimeField F3{3};

Theta th3(Rational x, Rational y, Rational z) { return Theta{x, y, z}; }
}  // namespace

TEST_CASE("detector fires on the doubled 3-cycle and not on the plain one") {
    CHECK(detect_markoff(markoff_quiver()).has_value());
    CHECK(detect_markoff(markoff_quiver())->verdict_applies);

    Quiver plain;
    plain.n = 3;
    plain.arrows = {Arrow{"a", 1, 2}, Arrow{"b", 2, 3}, Arrow{"c", 3, 1}};
    CHECK_FALSE(detect_markoff(plain).has_value());

    // detection is orientation-blind up to relabeling: the displayed pattern
    Quiver displayed;
    displayed.n = 3;
    displayed.arrows = {Arrow{"x1", 2, 1}, Arrow{"x2", 2, 1}, Arrow{"y1", 1, 3},
                        Arrow{"y2", 1, 3}, Arrow{"z1", 3, 2}, Arrow{"z2", 3, 2}};
    CHECK(detect_markoff(displayed).has_value());

    // extra relations or arrows do not change the verdict on 3 vertices
    Quiver extra = markoff_quiver();
    extra.arrows.push_back(Arrow{"loop", 1, 1});
    CHECK(detect_markoff(extra).has_value());

    // larger quiver containing the pattern: witness found, verdict withheld
    Quiver big = markoff_quiver();
    big.n = 4;
    auto w = detect_markoff(big);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->verdict_applies);
}

TEST_CASE("family modules: dimension vectors and indecomposability") {
    auto C = markoff_algebra(F2);
    CHECK(build_family_module(C, WallFamily::F1, 0).dims == DimVector{1, 0, 0});
    CHECK(build_family_module(C, WallFamily::F1, 1).dims == DimVector{2, 0, 1});
    CHECK(build_family_module(C, WallFamily::F2, 2).dims == DimVector{2, 3, 0});
    CHECK(build_family_module(C, WallFamily::F3, 1).dims == DimVector{0, 1, 2});
    // bricks, pairwise distinct dimension vectors within the budget
    for (int n = 0; n <= 3; ++n)
        CHECK(is_brick(build_family_module(C, WallFamily::F1, n)));
}

TEST_CASE("wall formulas hold from first principles at small n") {
    auto C2 = markoff_algebra(F2);
    for (WallFamily f : {WallFamily::F1, WallFamily::F2, WallFamily::F3})
        for (int n = 0; n <= 2; ++n) {
            WallFormulaReport rep = verify_wall_formula(C2, f, n);
            CAPTURE(static_cast<int>(f));
            CAPTURE(n);
            CHECK(rep.wall_matches);
            CHECK(rep.submodule_claim);
            CHECK(rep.is_brick);
        }
    // spot check over F3 too
    auto C3 = markoff_algebra(F3);
    WallFormulaReport rep = verify_wall_formula(C3, WallFamily::F1, 1);
    CHECK(rep.pass());
    CHECK(rep.field == "fp(3)");
}

TEST_CASE("closed-form wall at n=1 is the expected ray pair") {
    // F1, n=1: {2x + z = 0, x <= 0}
    auto C = markoff_algebra(F2);
    Rep<PrimeField> M1 = build_family_module(C, WallFamily::F1, 1);
    StabilitySpace<PrimeField> D = stability_space(M1);
    CHECK(D.is_wall);
    // the wall is 2-dimensional: spanned by (0,1,0) and (-1,0,2) directions
    CHECK(D.vrep.dim == 2);
    for (const auto& r : D.vrep.rays) {
        CHECK(2 * r[0] + r[2] == 0);
        CHECK(r[0] <= 0);
    }
}

TEST_CASE("separation demo: first 5 family walls block the way to (1,1,1)") {
    SeparationReport rep =
        green_path_obstruction_demo(1, 5, th3(Rational(1, 10), Rational(-1), Rational(-1)));
    CHECK(rep.pass);
    CHECK(rep.checked == 5);

    // degenerate input: (1,1,1) is not past any crossing
    CHECK_THROWS_AS(green_path_obstruction_demo(1, 1, th3(1, 1, 1)), DomainError);

    // symmetric branches
    CHECK(green_path_obstruction_demo(2, 5, th3(Rational(-1), Rational(1, 10), Rational(-1)))
              .pass);
    CHECK(green_path_obstruction_demo(3, 5, th3(Rational(-1), Rational(-1), Rational(1, 10)))
              .pass);
}

TEST_CASE("wall lifting from the rad-square quotient to the cubic bound") {
    // A = kQ/J^3 over the doubled cycle, C = A/rad^2
    Quiver q = markoff_quiver();
    RelationSet rels;
    rels.nilpotency_bound = 3;
    auto big = std::make_shared<const PathAlgebra<PrimeField>>(
        build_path_algebra(F2, q, rels));
    auto C = markoff_algebra(F2);

    Rep<PrimeField> M1 = build_family_module(C, WallFamily::F1, 1);
    WallLiftReport rep = check_wall_lifting(big, M1);
    CHECK(rep.pass());

    // I = 0: lifting over the same algebra is trivially equal
    Rep<PrimeField> M2 = build_family_module(C, WallFamily::F2, 1);
    CHECK(check_wall_lifting(C, M2).pass());
}

TEST_CASE("simple walls bound both trivial chambers (A2 and the 3-cycle)") {
    CHECK(check_simple_walls(world_a2().cat, world_a2().fan).pass());
    CHECK(check_simple_walls(world_cycle3().cat, world_cycle3().fan).pass());
}

TEST_CASE("truncated doubled-cycle catalog admits no complete green chain") {
    auto C = markoff_algebra(F2);
    Catalog<PrimeField> cat = enumerate_catalog(C, 2);
    auto pairs = assemble_tau_tilting_pairs(cat);
    Fan<PrimeField> fan = assemble_fan(cat, pairs);
    CHECK_FALSE(fan.complete);
    ExchangeGraph<PrimeField> g = build_exchange_graph(cat, fan);
    CHECK(g.source >= 0);
    CHECK(g.sink >= 0);
    CHECK_FALSE(green_chain_search(g).has_value());
    CHECK_THROWS_AS(enumerate_mgs(g), BudgetError);
}
