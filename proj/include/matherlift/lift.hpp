#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matherlift/chernring.hpp"
#include "matherlift/polar.hpp"
#include "matherlift/power_series.hpp"
#include "matherlift/rng.hpp"

namespace matherlift {

/// Data for one codimension-one lift: the intersection calculus of the
/// ambient stratum closure, the homological degree of the cycle, and its
/// intersection numbers against the complementary-degree generators.
struct LiftStep {
    std::string ambient_name;
    IntersectionTable table;
    int cycle_degree = 0;
    std::vector<Rational> cycle_pairings; // against generators(2n - cycle_degree)
};

/// The unique class with the prescribed pairings. The pairing matrix must
/// be square and invertible -- a singular system means the uniqueness
/// hypothesis of the codimension-one lift fails, and that is an error, not
/// a choice. The solution's pairings are re-verified exactly.
inline GradedClass lift_codim1(const LiftStep& step) {
    const std::vector<std::string>& gens = step.table.generators(step.cycle_degree);
    const std::vector<std::string>& dual =
        step.table.generators(step.table.top_degree() - step.cycle_degree);
    if (step.cycle_pairings.size() != dual.size())
        throw precondition_error("lift_codim1: one pairing per complementary generator required");
    auto pit = step.table.pairing.find(step.cycle_degree);
    if (pit == step.table.pairing.end())
        throw precondition_error("lift_codim1: table has no pairing in the cycle degree");
    const RationalMatrix& p = pit->second;
    if (p.rows != gens.size() || p.cols != dual.size() || gens.size() != dual.size())
        throw non_unique_lift_error("lift_codim1: pairing matrix is not square");
    // coefficients x with sum_g x_g (g . h) = pairing(h) for every dual h
    RationalMatrix system(dual.size(), gens.size());
    for (std::size_t r = 0; r < dual.size(); ++r)
        for (std::size_t c = 0; c < gens.size(); ++c) system.at(r, c) = p.at(c, r);
    auto solution = solve_square(system, step.cycle_pairings);
    if (!solution)
        throw non_unique_lift_error(
            "lift_codim1: singular pairing matrix in '" + step.ambient_name +
            "'; the lift is not unique");
    GradedClass out;
    GradedPart part{gens, *solution};
    out.set_part(step.cycle_degree, part);
    for (std::size_t r = 0; r < dual.size(); ++r) {
        GradedPart unit{dual, std::vector<Rational>(dual.size(), 0)};
        unit.coeff[r] = 1;
        if (step.table.pair(step.cycle_degree, part, unit) != step.cycle_pairings[r])
            throw error("internal: lift solution fails its own pairing checks");
    }
    return out;
}

/// One stage of a chain lift: the codimension-one step inside its ambient,
/// plus the expression of the ambient's generators in the IH of X.
struct ChainLiftStage {
    LiftStep step;
    std::map<std::string, GradedClass> images_in_x;
};

/// Pushes the polar classes through the chain into IH of X. stages[idx]
/// lifts [N^(idx+1)]; an empty chain step contributes the zero class in its
/// degree. Signs are NOT applied here -- the Chern recipe owns them.
inline std::vector<GradedClass> canonical_lift(const PolarChain& chain,
                                               const std::vector<ChainLiftStage>& stages,
                                               const IntersectionTable& table_x) {
    const std::size_t n = chain.hypersurface.n;
    if (stages.size() < n && chain.first_empty > stages.size() + 1)
        throw precondition_error("canonical_lift: not enough stages for the chain");
    std::vector<GradedClass> lifted;
    for (std::size_t i = 1; i <= n; ++i) {
        const int degree = 2 * (static_cast<int>(n) - static_cast<int>(i));
        if (i >= chain.first_empty) {
            lifted.push_back(GradedClass::zero_in(degree, table_x.generators(degree)));
            continue;
        }
        const ChainLiftStage& stage = stages.at(i - 1);
        GradedClass in_ambient = lift_codim1(stage.step);
        GradedClass in_x;
        const GradedPart& part = in_ambient.part(stage.step.cycle_degree);
        for (std::size_t g = 0; g < part.gens.size(); ++g) {
            auto img = stage.images_in_x.find(part.gens[g]);
            if (img == stage.images_in_x.end())
                throw precondition_error("canonical_lift: no image in X for generator '" +
                                         part.gens[g] + "'");
            in_x = in_x + img->second.scaled(part.coeff[g]);
        }
        lifted.push_back(std::move(in_x));
    }
    return lifted;
}

/// Local parametrization of a curve branch: one truncated power series per
/// ambient coordinate.
struct LocalParam {
    std::vector<PowerSeries1> coords;

    void validate() const {
        if (coords.empty()) throw precondition_error("local parametrization with no coordinates");
        bool some_nonzero = false;
        for (const PowerSeries1& s : coords)
            some_nonzero = some_nonzero || !s.identically_zero_to_truncation();
        if (!some_nonzero)
            throw indeterminate_order_error(
                "local parametrization vanishes to its truncation; "
                "re-run with the truncation doubled");
    }
};

/// Order of vanishing at t = 0 of the derivative of a generic linear
/// projection composed with the parametrization. Genericity is certified
/// by agreement of two seeded draws; identically-zero compositions reseed.
inline std::size_t jacobian_multiplicity(const LocalParam& param, std::uint64_t seed) {
    param.validate();
    auto one_draw = [&](std::uint64_t sub_seed) -> std::size_t {
        for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
            SplitMix64 rng(derive_seed(sub_seed, attempt));
            PowerSeries1 composite(param.coords.front().var, param.coords.front().truncation);
            for (const PowerSeries1& s : param.coords)
                composite = composite + s.scaled(rng.small_int());
            if (composite.identically_zero_to_truncation()) continue; // degenerate draw
            return series_order(composite.derivative());
        }
        throw genericity_error("jacobian_multiplicity: every projection draw collapsed to zero");
    };
    const std::size_t first = one_draw(derive_seed(seed, 1));
    const std::size_t second = one_draw(derive_seed(seed, 2));
    if (first != second)
        throw genericity_error("jacobian_multiplicity: two seeded projections disagree (" +
                               std::to_string(first) + " vs " + std::to_string(second) + ")");
    return first;
}

/// For a locally irreducible curve branch the local Euler obstruction is
/// the Jacobian multiplicity plus one.
inline Rational eu_from_jacobian_multiplicity(std::size_t n_w) {
    return Rational(n_w) + 1;
}

/// Exceptional component of a small resolution lying over the singular
/// locus in codimension one, with its Jacobian multiplicity.
struct ResolutionComponent {
    std::string name;
    std::size_t n_w = 0;
    GradedClass class_in_resolution;
};

/// First Chern class of a small resolution from the lifted class:
/// subtract n_W [W] over the codimension-one exceptional components.
inline GradedClass small_resolution_c1(const GradedClass& c1_lift,
                                       const std::vector<ResolutionComponent>& comps) {
    GradedClass out = c1_lift;
    for (const ResolutionComponent& w : comps)
        out = out - w.class_in_resolution.scaled(Rational(w.n_w));
    return out;
}

} // namespace matherlift
