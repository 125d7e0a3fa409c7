#pragma once

#include <string>
#include <vector>

#include "matherlift/chernring.hpp"
#include "matherlift/lift.hpp"
#include "matherlift/polar.hpp"

namespace matherlift {
namespace builtin {

// ---------------------------------------------------------------------------
// hypersurfaces
// ---------------------------------------------------------------------------

/// Cone in P^4 over the Segre quadric P^1 x P^1 in P^3 (Verdier's example).
inline Hypersurface segre_quadric_cone() {
    std::vector<std::string> z{"z0", "z1", "z2", "z3", "z4"};
    return Hypersurface::from_poly(parse_poly(z, "z0*z3 - z1*z2"));
}

/// Node: two projective lines meeting at a point.
inline Hypersurface node_curve() {
    std::vector<std::string> v{"x", "y", "z"};
    return Hypersurface::from_poly(parse_poly(v, "x*y"));
}

/// Cuspidal cubic.
inline Hypersurface cusp_curve() {
    std::vector<std::string> v{"x", "y", "z"};
    return Hypersurface::from_poly(parse_poly(v, "x^3 + y^2*z"));
}

/// Smooth conic.
inline Hypersurface smooth_conic() {
    std::vector<std::string> v{"x", "y", "z"};
    return Hypersurface::from_poly(parse_poly(v, "x*z - y^2"));
}

/// Smooth quadric surface in P^3.
inline Hypersurface quadric_surface() {
    std::vector<std::string> w{"w0", "w1", "w2", "w3"};
    return Hypersurface::from_poly(parse_poly(w, "w0*w3 - w1*w2"));
}

/// The explicit flag used in the classical Verdier computation:
/// lin{e0-e3} in lin{e0-e3, e1-e2} in lin{e0, e1-e2, e3} in lin{e0..e3}.
inline Flag verdier_flag() {
    auto row = [](std::vector<int> v) {
        std::vector<Rational> r(v.begin(), v.end());
        return r;
    };
    std::vector<RationalMatrix> stages;
    stages.push_back(RationalMatrix(0, 5));
    stages.push_back(matrix_from_rows({row({1, 0, 0, -1, 0})}));
    stages.push_back(matrix_from_rows({row({1, 0, 0, -1, 0}), row({0, 1, -1, 0, 0})}));
    stages.push_back(matrix_from_rows(
        {row({1, 0, 0, 0, 0}), row({0, 1, -1, 0, 0}), row({0, 0, 0, 1, 0})}));
    stages.push_back(matrix_from_rows({row({1, 0, 0, 0, 0}), row({0, 1, 0, 0, 0}),
                                       row({0, 0, 1, 0, 0}), row({0, 0, 0, 1, 0})}));
    stages.push_back(RationalMatrix::identity(5));
    return Flag::from_stages(5, std::move(stages));
}

// ---------------------------------------------------------------------------
// intersection calculus of the quadric cone X and its resolutions
// ---------------------------------------------------------------------------

/// IH of the quadric cone X (complex dimension 3).
/// Degree 6: [X].  Degree 4: the cones p1, p2 over the two rulings.
/// Degree 2: the rulings d1, d2.  Degree 0: the point class.
/// Hyperplane action: [X] -> p1+p2, p_i -> d_i, d_i -> pt.
/// Pairing in the middle degrees: p_i . d_j = 1 for i != j, 0 otherwise.
inline IntersectionTable verdier_cone_table() {
    IntersectionTable t;
    t.ambient_dim = 3;
    t.gens[6] = {"X"};
    t.gens[4] = {"p1", "p2"};
    t.gens[2] = {"d1", "d2"};
    t.gens[0] = {"pt"};
    t.cap_hyperplane[6] = matrix_from_rows({{1}, {1}});
    t.cap_hyperplane[4] = RationalMatrix::identity(2);
    t.cap_hyperplane[2] = matrix_from_rows({{1, 1}});
    t.pairing[4] = matrix_from_rows({{0, 1}, {1, 0}});
    t.pairing[2] = matrix_from_rows({{0, 1}, {1, 0}});
    t.pairing[6] = matrix_from_rows({{1}});
    t.pairing[0] = matrix_from_rows({{1}});
    return t;
}

/// IH of the polar surface N^1 of X: the cone over a conic K (an A_1
/// quadric cone, a rational homology manifold). K is the hyperplane
/// section; [K].[K] = deg K = 2.
inline IntersectionTable verdier_n1_table() {
    IntersectionTable t;
    t.ambient_dim = 2;
    t.gens[4] = {"N1"};
    t.gens[2] = {"K"};
    t.gens[0] = {"pt"};
    t.cap_hyperplane[4] = matrix_from_rows({{1}});
    t.cap_hyperplane[2] = matrix_from_rows({{2}});
    t.pairing[2] = matrix_from_rows({{2}});
    t.pairing[4] = matrix_from_rows({{1}});
    t.pairing[0] = matrix_from_rows({{1}});
    return t;
}

/// Homology of the small resolution X1 (fibered over the first ruling
/// factor): same generator letters via proper inverse image; the pairing of
/// curves against surfaces is the one inherited from X.
inline IntersectionTable verdier_resolution_table() {
    IntersectionTable t;
    t.ambient_dim = 3;
    t.gens[6] = {"X1"};
    t.gens[4] = {"p1", "p2"};
    t.gens[2] = {"d1", "d2"};
    t.gens[0] = {"pt"};
    t.cap_hyperplane[6] = matrix_from_rows({{1}, {1}});
    t.cap_hyperplane[4] = RationalMatrix::identity(2);
    t.cap_hyperplane[2] = matrix_from_rows({{1, 1}});
    t.pairing[4] = matrix_from_rows({{0, 1}, {1, 0}});
    t.pairing[2] = matrix_from_rows({{0, 1}, {1, 0}});
    t.pairing[6] = matrix_from_rows({{1}});
    t.pairing[0] = matrix_from_rows({{1}});
    return t;
}

/// Homological Chern classes of the two small resolutions.
inline GradedClass verdier_resolution_class_1() {
    GradedClass c;
    c.add_term(6, "X1", 1);
    c.add_term(4, "p1", 3);
    c.add_term(4, "p2", 3);
    c.add_term(2, "d1", 3);
    c.add_term(2, "d2", 5);
    c.add_term(0, "pt", 6);
    return c;
}

inline GradedClass verdier_resolution_class_2() {
    GradedClass c;
    c.add_term(6, "X2", 1);
    c.add_term(4, "p1", 3);
    c.add_term(4, "p2", 3);
    c.add_term(2, "d1", 5);
    c.add_term(2, "d2", 3);
    c.add_term(0, "pt", 6);
    return c;
}

/// Local Euler obstruction of the cone vertex of X.
inline Rational verdier_vertex_eu() { return 2; }

/// Chain-lift stages for the Verdier example. [N^1] is a hyperplane
/// section of X, so it pairs 1 against each ruling; the second step lifts
/// [N^2] inside the A_1 surface N^1, where IH_2 = H_2 is generated by the
/// hyperplane section K, via the system ([N^2].[K], [K].[K]). K maps to
/// d1 + d2 in X. The default pairings are the classical numbers (2, 2);
/// `from_chain` derives them from the computed chain degrees instead, which
/// is what makes the lift reproducible across arbitrary good flags.
inline std::vector<ChainLiftStage> verdier_lift_stages(const Rational& n2_dot_k,
                                                       const Rational& k_dot_k) {
    std::vector<ChainLiftStage> stages;
    {
        ChainLiftStage s;
        s.step = LiftStep{"X", verdier_cone_table(), 4, {1, 1}};
        s.images_in_x["p1"] = GradedClass::single(4, "p1", 1);
        s.images_in_x["p2"] = GradedClass::single(4, "p2", 1);
        stages.push_back(std::move(s));
    }
    {
        ChainLiftStage s;
        IntersectionTable n1 = verdier_n1_table();
        n1.pairing[2] = matrix_from_rows({{k_dot_k}});
        s.step = LiftStep{"N1", n1, 2, {n2_dot_k}};
        GradedClass k_in_x;
        k_in_x.add_term(2, "d1", 1);
        k_in_x.add_term(2, "d2", 1);
        s.images_in_x["K"] = k_in_x;
        stages.push_back(std::move(s));
    }
    return stages;
}

inline std::vector<ChainLiftStage> verdier_lift_stages() {
    return verdier_lift_stages(2, 2);
}

/// Pairings derived from a computed chain: [K].[K] = deg N^1 and
/// [N^2].[K] = deg N^2 (cone curves meet a hyperplane section once per
/// degree).
inline std::vector<ChainLiftStage> verdier_lift_stages_from_chain(const PolarChain& chain) {
    if (chain.steps.size() < 3)
        throw precondition_error("verdier lift stages: chain is missing polar steps");
    return verdier_lift_stages(Rational(chain.steps[2].degree), Rational(chain.steps[1].degree));
}

// ---------------------------------------------------------------------------
// plane-curve calculus
// ---------------------------------------------------------------------------

/// Homology of the node X (two lines): hyperplane section = one point on
/// each line.
inline IntersectionTable node_table() {
    IntersectionTable t;
    t.ambient_dim = 1;
    t.gens[2] = {"X"};
    t.gens[0] = {"pt1", "pt2"};
    t.cap_hyperplane[2] = matrix_from_rows({{1}, {1}});
    t.pairing[2] = matrix_from_rows({{1, 1}});
    t.pairing[0] = matrix_from_rows({{1}, {1}});
    return t;
}

/// Homology of the cuspidal cubic: hyperplane section = 3 points.
inline IntersectionTable cusp_table() {
    IntersectionTable t;
    t.ambient_dim = 1;
    t.gens[2] = {"X"};
    t.gens[0] = {"pt"};
    t.cap_hyperplane[2] = matrix_from_rows({{3}});
    t.pairing[2] = matrix_from_rows({{1}});
    t.pairing[0] = matrix_from_rows({{1}});
    return t;
}

/// Lifting a polar point set into a curve's homology: pair against the
/// fundamental class ([points].[X] = degree).
inline std::vector<ChainLiftStage> curve_lift_stage(const IntersectionTable& table,
                                                    const Rational& polar_degree) {
    ChainLiftStage s;
    s.step = LiftStep{"X", table, 0, {polar_degree}};
    for (const std::string& g : table.generators(0))
        s.images_in_x[g] = GradedClass::single(0, g, 1);
    // a point set pairs its degree against [X]; distribute over a single
    // point generator only (reducible degree-0 parts are handled upstream)
    return {s};
}

/// Branch parametrizations of the node normalization: (t, 0) and (0, t) in
/// the affine chart z = 1.
inline LocalParam node_branch(int which, std::size_t trunc = kDefaultTruncation) {
    LocalParam p;
    if (which == 0) {
        p.coords = {PowerSeries1::monomial(1, 1, trunc), PowerSeries1::monomial(0, 0, trunc)};
    } else {
        p.coords = {PowerSeries1::monomial(0, 0, trunc), PowerSeries1::monomial(1, 1, trunc)};
    }
    return p;
}

/// Cusp normalization t -> (t^2, t^3) in the affine chart z = 1.
inline LocalParam cusp_branch(std::size_t trunc = kDefaultTruncation) {
    LocalParam p;
    p.coords = {PowerSeries1::monomial(2, 1, trunc), PowerSeries1::monomial(3, 1, trunc)};
    return p;
}

/// Chern class of the node's small resolution (its normalization, two
/// disjoint lines), written over the identified point generators.
inline GradedClass node_resolution_chern() {
    GradedClass c;
    c.add_term(2, "X", 1);
    c.add_term(0, "pt1", 2);
    c.add_term(0, "pt2", 2);
    return c;
}

/// Chern class of the cusp's small resolution (a projective line).
inline GradedClass cusp_resolution_chern() {
    GradedClass c;
    c.add_term(2, "X", 1);
    c.add_term(0, "pt", 2);
    return c;
}

// ---------------------------------------------------------------------------
// embedded JSON inputs for the CLI
// ---------------------------------------------------------------------------

struct BuiltinInput {
    std::string name;
    std::string json;
};

inline const std::vector<BuiltinInput>& builtin_inputs() {
    static const std::vector<BuiltinInput> inputs{
        {"quadric_cone",
         R"({"vars":["z0","z1","z2","z3","z4"],"terms":[{"c":"1","e":[1,0,0,1,0]},{"c":"-1","e":[0,1,1,0,0]}]})"},
        {"node", R"({"vars":["x","y","z"],"terms":[{"c":"1","e":[1,1,0]}]})"},
        {"cusp", R"({"vars":["x","y","z"],"terms":[{"c":"1","e":[3,0,0]},{"c":"1","e":[0,2,1]}]})"},
        {"smooth_conic", R"({"vars":["x","y","z"],"terms":[{"c":"1","e":[1,0,1]},{"c":"-1","e":[0,2,0]}]})"},
        {"quadric_surface",
         R"({"vars":["w0","w1","w2","w3"],"terms":[{"c":"1","e":[1,0,0,1]},{"c":"-1","e":[0,1,1,0]}]})"},
    };
    return inputs;
}

} // namespace builtin
} // namespace matherlift
