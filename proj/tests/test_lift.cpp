#include <catch2/catch_amalgamated.hpp>

#include "matherlift/builtin.hpp"
#include "matherlift/lift.hpp"
#include "matherlift/verdier.hpp"

using namespace matherlift;

TEST_CASE("codimension-one lift") {
    SECTION("the A1 step: pairings (2, 2) give [N2] = [K]") {
        LiftStep step{"N1", builtin::verdier_n1_table(), 2, {2}};
        GradedClass lifted = lift_codim1(step);
        CHECK(lifted.same_class(GradedClass::single(2, "K", 1)));
    }
    SECTION("zero pairings give the zero class") {
        LiftStep step{"N1", builtin::verdier_n1_table(), 2, {0}};
        CHECK(lift_codim1(step).support().empty());
    }
    SECTION("antidiagonal pairing matrix swaps the coefficients") {
        IntersectionTable t;
        t.ambient_dim = 2;
        t.gens[2] = {"g1", "g2"};
        t.pairing[2] = matrix_from_rows({{0, 1}, {1, 0}});
        LiftStep step{"ambient", t, 2, {2, 0}};
        GradedClass lifted = lift_codim1(step);
        CHECK(lifted.coefficient(2, "g1") == 0);
        CHECK(lifted.coefficient(2, "g2") == 2);
    }
    SECTION("a singular pairing system is an error, never a choice") {
        IntersectionTable t;
        t.ambient_dim = 2;
        t.gens[2] = {"g1", "g2"};
        t.pairing[2] = matrix_from_rows({{1, 1}, {1, 1}});
        LiftStep step{"ambient", t, 2, {1, 1}};
        CHECK_THROWS_AS(lift_codim1(step), non_unique_lift_error);
    }
}

TEST_CASE("canonical lift along the polar chain") {
    SECTION("quadric cone: p1 + p2 and d1 + d2") {
        PolarChain chain = polar_chain(builtin::segre_quadric_cone(), builtin::verdier_flag());
        std::vector<GradedClass> lifted =
            canonical_lift(chain, builtin::verdier_lift_stages(), builtin::verdier_cone_table());
        REQUIRE(lifted.size() == 3);
        GradedClass p1p2;
        p1p2.add_term(4, "p1", 1);
        p1p2.add_term(4, "p2", 1);
        CHECK(lifted[0].same_class(p1p2));
        GradedClass d1d2;
        d1d2.add_term(2, "d1", 1);
        d1d2.add_term(2, "d2", 1);
        CHECK(lifted[1].same_class(d1d2));
        CHECK(lifted[2].support().empty()); // the empty chain step
    }
    SECTION("node: the single step lifts to zero") {
        GoodFlagCertificate cert = certify_good_flag(builtin::node_curve(), 4);
        std::vector<GradedClass> lifted =
            canonical_lift(cert.chain, {}, builtin::node_table());
        REQUIRE(lifted.size() == 1);
        CHECK(lifted[0].support().empty());
    }
    SECTION("cusp: three points against the fundamental class") {
        GoodFlagCertificate cert = certify_good_flag(builtin::cusp_curve(), 4);
        std::vector<ChainLiftStage> stages = builtin::curve_lift_stage(
            builtin::cusp_table(), Rational(cert.chain.steps.at(1).degree));
        std::vector<GradedClass> lifted =
            canonical_lift(cert.chain, stages, builtin::cusp_table());
        REQUIRE(lifted.size() == 1);
        CHECK(lifted[0].same_class(GradedClass::single(0, "pt", 3)));
    }
}

TEST_CASE("jacobian multiplicity") {
    SECTION("cusp branch t -> (t^2, t^3) has multiplicity one") {
        CHECK(jacobian_multiplicity(builtin::cusp_branch(), 1) == 1);
    }
    SECTION("an immersed branch has multiplicity zero") {
        LocalParam p;
        p.coords = {PowerSeries1::monomial(1, 1), PowerSeries1::monomial(2, 1)};
        CHECK(jacobian_multiplicity(p, 1) == 0);
    }
    SECTION("both node branches have multiplicity zero") {
        CHECK(jacobian_multiplicity(builtin::node_branch(0), 3) == 0);
        CHECK(jacobian_multiplicity(builtin::node_branch(1), 3) == 0);
    }
    SECTION("stability across user seeds") {
        for (std::uint64_t seed : {1ULL, 42ULL, 0xC0FFEEULL})
            CHECK(jacobian_multiplicity(builtin::cusp_branch(), seed) == 1);
    }
    SECTION("a constant parametrization has an indeterminate order") {
        LocalParam p;
        p.coords = {PowerSeries1::monomial(0, 5)};
        CHECK_THROWS_AS(jacobian_multiplicity(p, 1), indeterminate_order_error);
    }
    SECTION("vanishing to the truncation asks for a larger window") {
        LocalParam p;
        p.coords = {PowerSeries1::monomial(5, 1, 3)}; // t^5 at truncation 3
        CHECK_THROWS_AS(jacobian_multiplicity(p, 1), indeterminate_order_error);
    }
}

TEST_CASE("euler obstruction from jacobian multiplicity") {
    CHECK(eu_from_jacobian_multiplicity(1) == 2);
    CHECK(eu_from_jacobian_multiplicity(0) == 1);
    CHECK(eu_from_jacobian_multiplicity(3) == 4);
}

TEST_CASE("first Chern class of a small resolution") {
    SECTION("node: zero multiplicities change nothing") {
        GradedClass c1;
        c1.add_term(0, "pt1", 2);
        c1.add_term(0, "pt2", 2);
        std::vector<ResolutionComponent> comps{
            {"branch1", 0, GradedClass::single(0, "pt1", 1)},
            {"branch2", 0, GradedClass::single(0, "pt2", 1)}};
        CHECK(small_resolution_c1(c1, comps).same_class(c1));
        // and matches the normalization's own Chern class
        CHECK(c1.coefficient(0, "pt1") == builtin::node_resolution_chern().coefficient(0, "pt1"));
        CHECK(c1.coefficient(0, "pt2") == builtin::node_resolution_chern().coefficient(0, "pt2"));
    }
    SECTION("cusp: the correction is exactly one point") {
        const std::size_t n_w = jacobian_multiplicity(builtin::cusp_branch(), 9);
        GradedClass c1 = GradedClass::single(0, "pt", 3);
        std::vector<ResolutionComponent> comps{
            {"cusp_fiber", n_w, GradedClass::single(0, "pt", 1)}};
        GradedClass corrected = small_resolution_c1(c1, comps);
        CHECK((c1 - corrected).same_class(GradedClass::single(0, "pt", 1)));
        CHECK(corrected.coefficient(0, "pt") ==
              builtin::cusp_resolution_chern().coefficient(0, "pt"));
    }
    SECTION("no components: the identity") {
        GradedClass c1 = GradedClass::single(0, "pt", 7);
        CHECK(small_resolution_c1(c1, {}).same_class(c1));
    }
}

TEST_CASE("verdier scenario") {
    const VerdierReport r = verdier_scenario();

    SECTION("the lifted total class") {
        CHECK(r.c_hat.coefficient(6, "X") == 1);
        CHECK(r.c_hat.coefficient(4, "p1") == 3);
        CHECK(r.c_hat.coefficient(4, "p2") == 3);
        CHECK(r.c_hat.coefficient(2, "d1") == 4);
        CHECK(r.c_hat.coefficient(2, "d2") == 4);
        CHECK(r.c_hat.coefficient(0, "pt") == 6);
        CHECK(r.c_hat.all_integer());
    }
    SECTION("CSM subtracts the vertex") {
        CHECK((r.csm - r.c_hat).same_class(GradedClass::single(0, "vertex", -1)));
    }
    SECTION("resolution classes") {
        CHECK(r.c_x1.coefficient(2, "d1") == 3);
        CHECK(r.c_x1.coefficient(2, "d2") == 5);
        CHECK(r.c_x2.coefficient(2, "d1") == 5);
        CHECK(r.c_x2.coefficient(2, "d2") == 3);
    }
    SECTION("the proper inverse image differs from the canonical lift") {
        CHECK(r.n2_tilde.same_class(GradedClass::single(2, "d2", 2)));
        CHECK_FALSE(r.n2_tilde.same_class(r.n2_class));
    }
    SECTION("resolution discrepancy pairs to zero against the hyperplane class") {
        const IntersectionTable t = builtin::verdier_cone_table();
        for (const GradedClass* res : {&r.c_x1, &r.c_x2}) {
            GradedClass diff;
            diff.add_term(2, "d1", res->coefficient(2, "d1") - r.c_hat.coefficient(2, "d1"));
            diff.add_term(2, "d2", res->coefficient(2, "d2") - r.c_hat.coefficient(2, "d2"));
            GradedClass capped = t.cap(diff);
            CHECK(capped.support().empty());
        }
    }
    SECTION("the corrupted-table hook diverges") {
        VerdierOptions options;
        options.corrupt_table = true;
        CHECK_THROWS_AS(verdier_scenario(options), scenario_failure_error);
    }
}

TEST_CASE("lift-level flag independence probe") {
    const Hypersurface x = builtin::segre_quadric_cone();
    GoodFlagCertificate a = certify_good_flag(x, 0xA);
    GoodFlagCertificate b = certify_good_flag(x, 0xB);
    CHECK(verdier_lift_probe(a.chain) == verdier_lift_probe(b.chain));
}
