#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matherlift/builtin.hpp"
#include "matherlift/ihcone.hpp"
#include "matherlift/lift.hpp"

namespace matherlift {

/// Everything the end-to-end Verdier computation produces, keyed the way
/// the classical write-ups name the objects.
struct VerdierReport {
    PolarChain chain;
    Ideal n1_ideal;
    Ideal n2_ideal;
    GradedClass n1_class;  // [N^1] in IH_4(X)
    GradedClass n2_in_n1;  // [N^2] in IH_2(N^1), a multiple of [K]
    GradedClass n2_class;  // [N^2] in IH_2(X)
    Rational n2_dot_k;
    Rational k_dot_k;
    GradedClass c_hat;     // lifted total Chern-Mather class
    GradedClass csm;       // c_hat with the vertex correction
    GradedClass c_x1;
    GradedClass c_x2;
    GradedClass n2_tilde;  // proper inverse image of N^2 in X1
    GradedBetti ih_betti;
    bool n1_is_rational_homology_manifold = false;
};

struct VerdierOptions {
    /// Test hook: perturb the built-in N^1 pairing so the scenario diverges.
    bool corrupt_table = false;
};

namespace detail {

inline void scenario_check(bool ok, const std::string& quantity, const std::string& detail) {
    if (!ok)
        throw scenario_failure_error("verdier scenario diverged at " + quantity +
                                     (detail.empty() ? "" : ": " + detail));
}

inline std::string class_brief(const GradedClass& c) {
    std::ostringstream out;
    for (const auto& [key, value] : c.support())
        out << key.second << "@" << key.first << "=" << rational_to_string(value) << " ";
    return out.str();
}

} // namespace detail

/// Runs the whole Verdier computation from built-in data and verifies every
/// intermediate quantity; the first divergence raises
/// scenario_failure_error naming it.
inline VerdierReport verdier_scenario(const VerdierOptions& options = {}) {
    using detail::scenario_check;
    VerdierReport report;

    const Hypersurface x = builtin::segre_quadric_cone();
    const Flag flag = builtin::verdier_flag();
    report.chain = polar_chain(x, flag);

    scenario_check(report.chain.steps.size() == 3 && report.chain.first_empty == 3,
                   "chain length", "expected polar steps 0,1,2 with N^3 empty");
    const std::vector<std::pair<long long, long long>> expected_profile{{3, 2}, {2, 2}, {1, 2}};
    scenario_check(report.chain.profile() == expected_profile, "chain profile",
                   "(dim, deg) per step must be (3,2),(2,2),(1,2)");

    report.n1_ideal = report.chain.steps[1].ideal;
    report.n2_ideal = report.chain.steps[2].ideal;
    {
        const std::vector<std::string>& z = x.vars;
        GroebnerBasis n1_expected = groebner(
            Ideal(z, {x.f, parse_poly(z, "z0 - z3")}));
        scenario_check(groebner(report.n1_ideal).basis == n1_expected.basis, "N1 ideal",
                       "N^1 must be the hyperplane slice z0 = z3 of X");
        GroebnerBasis n2_expected = groebner(
            Ideal(z, {x.f, parse_poly(z, "z0 - z3"), parse_poly(z, "z1 - z2")}));
        scenario_check(groebner(report.n2_ideal).basis == n2_expected.basis, "N2 ideal",
                       "N^2 must be the slice z0 = z3, z1 = z2 of X");
    }

    // the codimension-one lift chain
    report.n2_dot_k = 2;
    report.k_dot_k = options.corrupt_table ? Rational(3) : Rational(2);
    std::vector<ChainLiftStage> stages =
        builtin::verdier_lift_stages(report.n2_dot_k, report.k_dot_k);
    report.n2_in_n1 = lift_codim1(stages[1].step);
    std::vector<GradedClass> lifted =
        canonical_lift(report.chain, stages, builtin::verdier_cone_table());
    report.n1_class = lifted.at(0);
    report.n2_class = lifted.at(1);

    GradedClass p1p2;
    p1p2.add_term(4, "p1", 1);
    p1p2.add_term(4, "p2", 1);
    scenario_check(report.n1_class.same_class(p1p2), "[N1]",
                   "hyperplane section must lift to p1 + p2; got " +
                       detail::class_brief(report.n1_class));
    scenario_check(report.n2_in_n1.same_class(GradedClass::single(2, "K", 1)), "[N2] in N1",
                   "the pairing system must give [N2] = [K]; got " +
                       detail::class_brief(report.n2_in_n1));
    GradedClass d1d2;
    d1d2.add_term(2, "d1", 1);
    d1d2.add_term(2, "d2", 1);
    scenario_check(report.n2_class.same_class(d1d2), "[N2]",
                   "[K] = d1 + d2 in IH_2(X); got " + detail::class_brief(report.n2_class));

    // Chern-Mather lift and the CSM correction at the vertex
    const IntersectionTable table = builtin::verdier_cone_table();
    report.c_hat = mather_from_polar(lifted, x.n, table);
    GradedClass c_hat_expected;
    c_hat_expected.add_term(6, "X", 1);
    c_hat_expected.add_term(4, "p1", 3);
    c_hat_expected.add_term(4, "p2", 3);
    c_hat_expected.add_term(2, "d1", 4);
    c_hat_expected.add_term(2, "d2", 4);
    c_hat_expected.add_term(0, "pt", 6);
    scenario_check(report.c_hat.same_class(c_hat_expected), "c_hat",
                   "expected [X] + 3(p1+p2) + 4(d1+d2) + 6pt; got " +
                       detail::class_brief(report.c_hat));
    scenario_check(report.c_hat.all_integer(), "c_hat integrality", "");

    GradedClass with_vertex = report.c_hat;
    with_vertex.ensure_generator(0, "vertex");
    report.csm = csm_isolated(with_vertex, {{"vertex", builtin::verdier_vertex_eu()}});
    GradedClass csm_expected = c_hat_expected;
    csm_expected.add_term(0, "vertex", -1);
    scenario_check(report.csm.same_class(csm_expected), "csm",
                   "CSM must be c_hat - [vertex]; got " + detail::class_brief(report.csm));

    // the two small resolutions
    report.c_x1 = builtin::verdier_resolution_class_1();
    report.c_x2 = builtin::verdier_resolution_class_2();
    // X has an isolated singularity, no codimension-one exceptional set, so
    // the degree-4 and degree-0 parts of the resolutions must match c_hat
    for (const std::string p : {"p1", "p2"}) {
        scenario_check(report.c_x1.coefficient(4, p) == report.c_hat.coefficient(4, p) &&
                           report.c_x2.coefficient(4, p) == report.c_hat.coefficient(4, p),
                       "resolution degree-4 part", p);
    }
    scenario_check(report.c_x1.coefficient(0, "pt") == report.c_hat.coefficient(0, "pt") &&
                       report.c_x2.coefficient(0, "pt") == report.c_hat.coefficient(0, "pt"),
                   "resolution degree-0 part", "");
    // the degree-2 discrepancy is supported on the singular image: it pairs
    // to zero against the hyperplane class
    for (const GradedClass* res : {&report.c_x1, &report.c_x2}) {
        const Rational diff1 = res->coefficient(2, "d1") - report.c_hat.coefficient(2, "d1");
        const Rational diff2 = res->coefficient(2, "d2") - report.c_hat.coefficient(2, "d2");
        scenario_check(diff1 + diff2 == 0, "resolution discrepancy",
                       "the d1/d2 difference must pair to zero against the hyperplane class");
    }

    // proper inverse image of N^2 in X1: supported in two fibers, so it
    // pairs 0 against p2 and 2 against p1
    {
        LiftStep tilde{"X1", builtin::verdier_resolution_table(), 2, {2, 0}};
        report.n2_tilde = lift_codim1(tilde);
        GradedClass expected = GradedClass::single(2, "d2", 2);
        scenario_check(report.n2_tilde.same_class(expected), "N2_tilde",
                       "pairings (2, 0) against (p1, p2) must give 2 d2; got " +
                           detail::class_brief(report.n2_tilde));
        scenario_check(!report.n2_tilde.same_class(report.n2_class), "N2_tilde vs N2",
                       "the proper inverse image must differ from the canonical lift");
    }

    // topology of the cone and of N^1
    report.ih_betti = cone_ih_betti(ConeInput{GradedBetti{{1, 0, 2, 0, 1}}, 4, 0});
    scenario_check(report.ih_betti == GradedBetti{{1, 0, 2, 0, 2, 0, 1}}, "IH Betti numbers", "");
    report.n1_is_rational_homology_manifold = is_rational_homology_manifold_a_d(2);
    scenario_check(report.n1_is_rational_homology_manifold, "N1 link", "");

    return report;
}

/// The lift-level probe for flag independence: lifts the chain with
/// pairings derived from its own degrees and renders the two classes.
inline std::string verdier_lift_probe(const PolarChain& chain) {
    std::vector<ChainLiftStage> stages = builtin::verdier_lift_stages_from_chain(chain);
    std::vector<GradedClass> lifted =
        canonical_lift(chain, stages, builtin::verdier_cone_table());
    std::string out;
    for (const GradedClass& c : lifted) out += detail::class_brief(c) + "| ";
    return out;
}

} // namespace matherlift
