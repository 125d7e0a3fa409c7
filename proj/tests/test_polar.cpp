#include <catch2/catch_amalgamated.hpp>

#include "matherlift/builtin.hpp"
#include "matherlift/polar.hpp"
#include "matherlift/verdier.hpp"

using namespace matherlift;

namespace {

// Sylvester resultant in y of two polynomials over Q[x, y], computed by
// Laplace expansion of a matrix of polynomials. Independent of the Groebner
// and Hilbert machinery; the elimination oracle for polar degrees.
MultiPoly det_poly(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly acc = MultiPoly::zero(m[0][0].vars());
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        MultiPoly cof = m[0][c] * det_poly(std::move(minor));
        acc = (c % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

MultiPoly coeff_in_y(const MultiPoly& p, std::size_t y_index, std::uint32_t power) {
    MultiPoly out = MultiPoly::zero(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[y_index] != power) continue;
        Exponents stripped = e;
        stripped[y_index] = 0;
        out.add_term(stripped, c);
    }
    return out;
}

MultiPoly resultant_in_y(const MultiPoly& f, const MultiPoly& g, std::size_t y_index,
                         std::size_t deg_f, std::size_t deg_g) {
    const std::size_t n = deg_f + deg_g;
    std::vector<std::vector<MultiPoly>> sylvester(
        n, std::vector<MultiPoly>(n, MultiPoly::zero(f.vars())));
    for (std::size_t r = 0; r < deg_g; ++r)
        for (std::size_t k = 0; k <= deg_f; ++k)
            sylvester[r][r + deg_f - k] = coeff_in_y(f, y_index, static_cast<std::uint32_t>(k));
    for (std::size_t r = 0; r < deg_f; ++r)
        for (std::size_t k = 0; k <= deg_g; ++k)
            sylvester[deg_g + r][r + deg_g - k] = coeff_in_y(g, y_index, static_cast<std::uint32_t>(k));
    return det_poly(std::move(sylvester));
}

long long degree_in(const MultiPoly& p, std::size_t index) {
    long long d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, static_cast<long long>(e[index]));
    return d;
}

long long order_in(const MultiPoly& p, std::size_t index) {
    long long d = -1;
    for (const auto& [e, c] : p.terms()) {
        long long v = static_cast<long long>(e[index]);
        d = (d < 0 || v < d) ? v : d;
    }
    return d;
}

} // namespace

TEST_CASE("polar ideals of the quadric cone match the classical slices") {
    const Hypersurface x = builtin::segre_quadric_cone();
    const Flag flag = builtin::verdier_flag();
    const std::vector<std::string>& z = x.vars;

    SECTION("first polar variety is the hyperplane slice z0 = z3") {
        Ideal n1 = polar_ideal(x, flag, 1);
        CHECK(groebner(n1).basis ==
              groebner(Ideal(z, {x.f, parse_poly(z, "z0 - z3")})).basis);
    }
    SECTION("second polar variety adds z1 = z2") {
        Ideal n2 = polar_ideal(x, flag, 2);
        CHECK(groebner(n2).basis ==
              groebner(Ideal(z, {x.f, parse_poly(z, "z0 - z3"), parse_poly(z, "z1 - z2")})).basis);
    }
    SECTION("third polar variety is empty") {
        CHECK(groebner(polar_ideal(x, flag, 3)).is_unit());
    }
    SECTION("flag ambient mismatch is rejected") {
        CHECK_THROWS_AS(polar_ideal(x, random_flag(4, 1), 1), precondition_error);
    }
}

TEST_CASE("polar chains of the built-in examples") {
    SECTION("quadric cone: dimensions drop by one, all degrees 2") {
        PolarChain chain = polar_chain(builtin::segre_quadric_cone(), builtin::verdier_flag());
        REQUIRE(chain.steps.size() == 3);
        CHECK(chain.profile() ==
              std::vector<std::pair<long long, long long>>{{3, 2}, {2, 2}, {1, 2}});
        CHECK(chain.first_empty == 3);
    }
    SECTION("node: the chain terminates immediately") {
        GoodFlagCertificate cert = certify_good_flag(builtin::node_curve(), 5);
        REQUIRE(cert.chain.steps.size() == 1);
        CHECK(cert.chain.first_empty == 1);
        CHECK(cert.chain.steps[0].degree == 2);
    }
    SECTION("cusp: one polar step of dimension 0") {
        GoodFlagCertificate cert = certify_good_flag(builtin::cusp_curve(), 5);
        REQUIRE(cert.chain.steps.size() == 2);
        CHECK(cert.chain.steps[1].proj_dimension == 0);
        CHECK(cert.chain.steps[1].degree == 3);
    }
    SECTION("smooth conic: polar points of degree 2") {
        GoodFlagCertificate cert = certify_good_flag(builtin::smooth_conic(), 5);
        REQUIRE(cert.chain.steps.size() == 2);
        CHECK(cert.chain.steps[1].proj_dimension == 0);
        CHECK(cert.chain.steps[1].degree == 2);
    }
}

TEST_CASE("cusp polar degree against the resultant oracle") {
    // eliminate y from { x^3 + y^2, 3a x^2 + 2b y + c y^2 } (the chart z = 1)
    // and count the zeros away from the cusp: the resultant must be exactly
    // x^3 times a cubic with nonzero constant term
    const std::vector<std::string> xy{"x", "y"};
    const Rational a = 5, b = -3, c = 7; // any nonzero draw works
    MultiPoly f = parse_poly(xy, "x^3 + y^2");
    MultiPoly g = parse_poly(xy, "3*x^2").scaled(a) + parse_poly(xy, "2*y").scaled(b) +
                  parse_poly(xy, "y^2").scaled(c);
    MultiPoly res = resultant_in_y(f, g, 1, 2, 2);
    REQUIRE_FALSE(res.is_zero());
    CHECK(order_in(res, 0) == 3);            // the cusp contributes x^3
    CHECK(degree_in(res, 0) - order_in(res, 0) == 3); // three residual zeros
    // the saturated polar step agrees
    GoodFlagCertificate cert = certify_good_flag(builtin::cusp_curve(), 2);
    CHECK(cert.chain.steps.at(1).degree == 3);
}

TEST_CASE("smooth conic polar degree against the parametrization oracle") {
    // pull the gradient-orthogonality form back along [s^2 : st : t^2]; a
    // nonzero binary quadratic has two projective roots with multiplicity
    const std::vector<std::string> xyz{"x", "y", "z"};
    const std::vector<std::string> st{"s", "t"};
    SplitMix64 rng(0x51);
    std::vector<MultiPoly> grad = gradient(builtin::smooth_conic().f);
    MultiPoly form = MultiPoly::zero(st);
    std::vector<MultiPoly> images{parse_poly(st, "s^2"), parse_poly(st, "s*t"),
                                  parse_poly(st, "t^2")};
    std::vector<Rational> v{rng.small_nonzero_int(), rng.small_nonzero_int(),
                            rng.small_nonzero_int()};
    for (std::size_t i = 0; i < 3; ++i)
        form = form + grad[i].substitute(images).scaled(v[i]);
    REQUIRE_FALSE(form.is_zero());
    CHECK(form.is_homogeneous());
    CHECK(form.degree() == 2);
    // discriminant of a t^2 - 2b st + c s^2 style form: distinct roots
    const Rational disc = form.coeff({1, 1}) * form.coeff({1, 1}) -
                          form.coeff({2, 0}) * form.coeff({0, 2}) * 4;
    CHECK(disc != 0);
    GoodFlagCertificate cert = certify_good_flag(builtin::smooth_conic(), 31);
    CHECK(cert.chain.steps.at(1).degree == 2);
}

TEST_CASE("good flag certification") {
    SECTION("the classical flag for the quadric cone is accepted") {
        GoodFlagCertificate cert =
            certify_flag(builtin::segre_quadric_cone(), builtin::verdier_flag());
        REQUIRE(cert.checks.size() == 2);
        CHECK(cert.checks[0] == std::tuple<std::size_t, long long, long long>{1, 1, 1});
        CHECK(cert.checks[1] == std::tuple<std::size_t, long long, long long>{2, 2, 2});
    }
    SECTION("every seed certifies the smooth conic") {
        for (std::uint64_t seed : {1ULL, 17ULL, 999ULL}) {
            GoodFlagCertificate cert = certify_good_flag(builtin::smooth_conic(), seed);
            CHECK(cert.chain.steps.at(1).proj_dimension == 0);
        }
    }
    SECTION("node certificates terminate at once") {
        GoodFlagCertificate cert = certify_good_flag(builtin::node_curve(), 9);
        CHECK(cert.checks.empty());
        CHECK(cert.chain.first_empty == 1);
    }
}

TEST_CASE("polar chain structural invariants") {
    const Hypersurface x = builtin::segre_quadric_cone();
    PolarChain chain = polar_chain(x, builtin::verdier_flag());

    SECTION("nesting: each polar ideal is contained in the next") {
        for (std::size_t k = 0; k + 1 < chain.steps.size(); ++k) {
            GroebnerBasis bigger = groebner(chain.steps[k + 1].ideal);
            for (const MultiPoly& g : chain.steps[k].ideal.gens)
                CHECK(contains(bigger, g));
        }
    }
    SECTION("polar ideals are already saturated") {
        Ideal sing = singular_locus_ideal(x);
        for (std::size_t k = 1; k < chain.steps.size(); ++k) {
            Ideal again = ideal_saturate(chain.steps[k].ideal, sing);
            CHECK(groebner(again).basis == groebner(chain.steps[k].ideal).basis);
        }
    }
    SECTION("dimensions drop by exactly one along the chain") {
        for (std::size_t k = 0; k + 1 < chain.steps.size(); ++k)
            CHECK(chain.steps[k].proj_dimension == chain.steps[k + 1].proj_dimension + 1);
    }
}

TEST_CASE("flag independence") {
    SECTION("quadric cone across five seeds, including the lifted classes") {
        FlagIndependenceReport report = flag_independence_check(
            builtin::segre_quadric_cone(), {11, 22, 33, 44, 55}, verdier_lift_probe);
        CHECK(report.consistent);
        REQUIRE(report.profiles.size() == 5);
        CHECK(report.profiles.front() ==
              std::vector<std::pair<long long, long long>>{{3, 2}, {2, 2}, {1, 2}});
    }
    SECTION("smooth quadric surface across three seeds") {
        FlagIndependenceReport report =
            flag_independence_check(builtin::quadric_surface(), {3, 5, 8});
        CHECK(report.consistent);
        CHECK(report.profiles.front() ==
              std::vector<std::pair<long long, long long>>{{2, 2}, {1, 2}, {0, 2}});
    }
    SECTION("a single seed is rejected") {
        CHECK_THROWS_AS(flag_independence_check(builtin::smooth_conic(), {1}),
                        precondition_error);
    }
}
