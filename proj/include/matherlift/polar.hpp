#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "matherlift/grassmann.hpp"
#include "matherlift/hilbert.hpp"
#include "matherlift/saturation.hpp"

namespace matherlift {

/// Projective hypersurface X = V(f) in P^m, m+1 coordinates, dim X = m-1.
struct Hypersurface {
    std::vector<std::string> vars; // m+1 projective coordinates
    MultiPoly f;
    std::size_t n = 0; // dimension of X

    static Hypersurface from_poly(MultiPoly f) {
        if (f.is_zero()) throw precondition_error("hypersurface polynomial is zero");
        if (!f.is_homogeneous()) throw homogeneity_error("hypersurface polynomial is not homogeneous");
        if (f.vars().size() < 3)
            throw precondition_error("hypersurface needs at least 3 coordinates");
        Hypersurface h;
        h.vars = f.vars();
        h.n = h.vars.size() - 2;
        h.f = std::move(f);
        return h;
    }

    std::size_t ambient_proj_dim() const { return vars.size() - 1; } // m
    std::size_t cone_dim() const { return vars.size(); }             // m+1
};

/// The ideal (f, all partials): cuts out the singular cone set-theoretically.
/// Polar ideals are saturated against it; no radical is taken, since
/// saturation only sees the vanishing locus.
inline Ideal singular_locus_ideal(const Hypersurface& h) {
    std::vector<MultiPoly> gens{h.f};
    for (const MultiPoly& d : gradient(h.f)) gens.push_back(d);
    return Ideal(h.vars, std::move(gens));
}

/// Ideal of the i-th polar variety of the cone hypersurface, projectivized.
/// On a hypersurface the tangent space at a smooth point is the orthogonal
/// complement of the gradient, so the Schubert condition against stage V_i
/// of the flag becomes the i linear conditions <grad f, v> = 0 for v
/// spanning V_i. The naive ideal is then saturated by the singular locus to
/// strip components lying inside it; the unit ideal encodes the empty set.
inline Ideal polar_ideal(const Hypersurface& h, const Flag& flag, std::size_t i) {
    if (flag.m != h.cone_dim())
        throw precondition_error("polar_ideal: flag ambient must be the cone ambient C^(m+1)");
    if (i < 1 || i > h.n + 1)
        throw precondition_error("polar_ideal: need 1 <= i <= n+1");
    const std::vector<MultiPoly> grad = gradient(h.f);
    std::vector<MultiPoly> gens{h.f};
    const RationalMatrix& stage = flag.stage(i);
    for (std::size_t r = 0; r < stage.rows; ++r) {
        MultiPoly condition = MultiPoly::zero(h.vars);
        for (std::size_t c = 0; c < stage.cols; ++c)
            condition = condition + grad[c].scaled(stage.at(r, c));
        gens.push_back(std::move(condition));
    }
    return ideal_saturate(Ideal(h.vars, std::move(gens)), singular_locus_ideal(h));
}

/// One computed step of a polar chain. Dimensions are of the projectivized
/// variety; `degree` comes from the Hilbert series of the saturated ideal.
struct PolarStep {
    std::size_t i = 0;
    Ideal ideal;
    long long proj_dimension = 0;
    long long degree = 0;
};

/// Descending chain X = N^0, N^1, ..., stopping at the first empty step.
struct PolarChain {
    Hypersurface hypersurface;
    Flag flag;
    std::vector<PolarStep> steps;      // the nonempty steps, starting at i = 0
    std::size_t first_empty = 0;       // n+1 when the chain runs full length

    bool complete() const { return first_empty > hypersurface.n; }

    /// (proj_dimension, degree) per step; the shape tested for flag
    /// independence.
    std::vector<std::pair<long long, long long>> profile() const {
        std::vector<std::pair<long long, long long>> p;
        for (const PolarStep& s : steps) p.emplace_back(s.proj_dimension, s.degree);
        return p;
    }
};

/// Computes the polar chain for a given flag, enforcing the codimension
/// law: every nonempty N^i has codimension exactly i in X. A violation
/// raises bad_flag_error naming the step.
inline PolarChain polar_chain(const Hypersurface& h, const Flag& flag) {
    PolarChain chain{h, flag, {}, h.n + 1};
    {
        GroebnerBasis gb = groebner(Ideal(h.vars, {h.f}));
        DimDegree dd = hilbert_dim_degree(gb);
        chain.steps.push_back(PolarStep{0, ideal_from_basis(gb), dd.proj_dimension(), dd.degree});
    }
    for (std::size_t i = 1; i <= h.n; ++i) {
        Ideal ni = polar_ideal(h, flag, i);
        GroebnerBasis gb = groebner(ni);
        if (gb.is_unit()) {
            chain.first_empty = i;
            return chain;
        }
        DimDegree dd = hilbert_dim_degree(gb);
        if (dd.proj_empty()) {
            chain.first_empty = i;
            return chain;
        }
        const long long expected = static_cast<long long>(h.n) - static_cast<long long>(i);
        if (dd.proj_dimension() != expected) {
            std::ostringstream msg;
            msg << "polar step " << i << " has projective dimension " << dd.proj_dimension()
                << ", expected " << expected << " (flag not generic for this hypersurface)";
            throw bad_flag_error(msg.str());
        }
        chain.steps.push_back(PolarStep{i, ideal_from_basis(gb), dd.proj_dimension(), dd.degree});
    }
    return chain;
}

/// Record that a flag passed every expected-codimension check.
struct GoodFlagCertificate {
    Flag flag;
    std::uint64_t seed = 0;
    // (step index, expected codim in X, achieved codim)
    std::vector<std::tuple<std::size_t, long long, long long>> checks;
    PolarChain chain;
};

/// Validates one explicit flag by running the chain and recording the
/// achieved codimensions.
inline GoodFlagCertificate certify_flag(const Hypersurface& h, const Flag& flag,
                                        std::uint64_t seed = 0) {
    PolarChain chain = polar_chain(h, flag); // throws bad_flag_error on failure
    GoodFlagCertificate cert{flag, seed, {}, chain};
    for (const PolarStep& s : chain.steps) {
        if (s.i == 0) continue;
        const long long achieved = static_cast<long long>(h.n) - s.proj_dimension;
        cert.checks.emplace_back(s.i, static_cast<long long>(s.i), achieved);
    }
    return cert;
}

/// Draws seeded flags until one passes every codimension check (at most 16
/// attempts). Exhaustion means the hypersurface is likely too special for
/// the hypersurface-polar recipe; the caller should inspect.
inline GoodFlagCertificate certify_good_flag(const Hypersurface& h, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        Flag flag = random_flag(h.cone_dim(), derive_seed(seed, attempt));
        try {
            return certify_flag(h, flag, seed);
        } catch (const bad_flag_error&) {
            continue;
        }
    }
    throw degenerate_input_error(
        "certify_good_flag: 16 seeded flags failed the codimension checks; "
        "the hypersurface may be too degenerate");
}

/// Outcome of comparing polar chains across several certified flags.
struct FlagIndependenceReport {
    std::vector<std::uint64_t> seeds;
    std::vector<std::vector<std::pair<long long, long long>>> profiles;
    bool consistent = false;
};

/// Checks that every certified flag yields the same (dimension, degree)
/// profile; an optional probe lets callers also compare derived data (for
/// the built-in examples, the lifted class coefficients).
inline FlagIndependenceReport flag_independence_check(
    const Hypersurface& h, const std::vector<std::uint64_t>& seeds,
    const std::function<std::string(const PolarChain&)>& probe = {}) {
    if (seeds.size() < 2)
        throw precondition_error("flag_independence_check: need at least 2 seeds");
    FlagIndependenceReport report;
    report.seeds = seeds;
    std::vector<std::string> probe_values;
    for (std::uint64_t seed : seeds) {
        GoodFlagCertificate cert = certify_good_flag(h, seed);
        report.profiles.push_back(cert.chain.profile());
        if (probe) probe_values.push_back(probe(cert.chain));
    }
    auto describe = [](const std::vector<std::pair<long long, long long>>& profile) {
        std::ostringstream out;
        for (const auto& [d, deg] : profile) out << "(" << d << "," << deg << ") ";
        return out.str();
    };
    for (std::size_t k = 1; k < report.profiles.size(); ++k) {
        if (report.profiles[k] != report.profiles.front())
            throw property_violation_error(
                "flag independence violated: seed " + std::to_string(seeds.front()) + " gives " +
                describe(report.profiles.front()) + "but seed " + std::to_string(seeds[k]) +
                " gives " + describe(report.profiles[k]));
        if (probe && probe_values[k] != probe_values.front())
            throw property_violation_error(
                "flag independence violated at the lift level: '" + probe_values.front() +
                "' vs '" + probe_values[k] + "'");
    }
    report.consistent = true;
    return report;
}

} // namespace matherlift
