#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matherlift/matrix.hpp"
#include "matherlift/rng.hpp"

namespace matherlift {

/// Complete flag of rational subspaces of C^m. Stage j is a j-row matrix
/// spanning V_j; stage 0 is the empty matrix.
struct Flag {
    std::size_t m = 0;
    std::vector<RationalMatrix> stages; // indices 0..m

    const RationalMatrix& stage(std::size_t j) const { return stages.at(j); }

    /// Builds the flag whose stage j is the first j rows of `rows`.
    static Flag from_matrix(const RationalMatrix& rows) {
        Flag f;
        f.m = rows.cols;
        if (rows.rows != rows.cols)
            throw precondition_error("flag matrix must be square");
        for (std::size_t j = 0; j <= f.m; ++j) {
            RationalMatrix s(j, f.m);
            for (std::size_t r = 0; r < j; ++r)
                for (std::size_t c = 0; c < f.m; ++c) s.at(r, c) = rows.at(r, c);
            f.stages.push_back(std::move(s));
        }
        f.validate();
        return f;
    }

    static Flag from_stages(std::size_t m, std::vector<RationalMatrix> stages) {
        Flag f{m, std::move(stages)};
        f.validate();
        return f;
    }

    /// Checks stage ranks and the nesting of row spaces.
    void validate() const {
        if (stages.size() != m + 1)
            throw precondition_error("flag needs stages 0..m");
        for (std::size_t j = 0; j <= m; ++j) {
            if (stages[j].rows != j || (j > 0 && stages[j].cols != m))
                throw precondition_error("flag stage " + std::to_string(j) + " has wrong shape");
            if (matrix_rank(stages[j]) != j)
                throw precondition_error("flag stage " + std::to_string(j) + " is rank deficient");
            if (j > 0 && matrix_rank(vstack(stages[j], stages[j - 1])) != j)
                throw precondition_error("flag stages " + std::to_string(j - 1) + " and " +
                                         std::to_string(j) + " are not nested");
        }
    }
};

/// A point of G(n, m): an n-dimensional subspace of C^m given by a basis.
struct GrassmannPoint {
    std::size_t n = 0;
    std::size_t m = 0;
    RationalMatrix basis; // n rows, m cols, rank n

    static GrassmannPoint from_basis(RationalMatrix b) {
        GrassmannPoint w{b.rows, b.cols, std::move(b)};
        if (matrix_rank(w.basis) != w.n)
            throw precondition_error("grassmann point basis is rank deficient");
        return w;
    }
};

/// Stratum index of W inside the i-th Schubert variety of the flag:
/// codim(W + V_{m-n+i-1}) - 1, or -1 when the sum is the whole space
/// (W outside the variety). Membership is decided by exact rank only.
inline long long schubert_defect(const GrassmannPoint& w, const Flag& f, std::size_t i) {
    if (w.m != f.m)
        throw precondition_error("schubert_defect: ambient dimension mismatch");
    if (w.n >= w.m)
        throw precondition_error("schubert_defect: W must be a proper subspace");
    if (i > w.n + 1)
        throw precondition_error("schubert_defect: stage index i out of range");
    const std::size_t stage_index = f.m - w.n + i - 1; // i >= 0 and n < m keep this in range
    const std::size_t rank = matrix_rank(vstack(w.basis, f.stage(stage_index)));
    return static_cast<long long>(f.m) - static_cast<long long>(rank) - 1;
}

/// All (i, k) with W in the i-th Schubert variety at stratum k. The nesting
/// of the varieties makes the i's an initial segment; that is re-checked.
inline std::vector<std::pair<std::size_t, std::size_t>> stratum_classify(const GrassmannPoint& w,
                                                                         const Flag& f) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    bool gap = false;
    for (std::size_t i = 0; i <= w.n + 1; ++i) {
        long long k = schubert_defect(w, f, i);
        if (k < 0) {
            gap = true;
            continue;
        }
        if (gap)
            throw property_violation_error("stratum_classify: membership not downward closed");
        out.emplace_back(i, static_cast<std::size_t>(k));
    }
    return out;
}

/// Seeded random complete flag with integer entries in [-99, 99]; the
/// defining matrix is regenerated until invertible (at most 16 draws).
inline Flag random_flag(std::size_t m, std::uint64_t seed) {
    if (m < 1) throw precondition_error("random_flag: ambient dimension must be positive");
    for (int attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        RationalMatrix rows(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) rows.at(r, c) = rng.small_int();
        if (matrix_rank(rows) == m) return Flag::from_matrix(rows);
    }
    throw genericity_error("random_flag: no invertible draw in 16 attempts");
}

/// Seeded random point of G(n, m).
inline GrassmannPoint random_grassmann_point(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0 || n >= m) throw precondition_error("random_grassmann_point: need 0 < n < m");
    for (int attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(derive_seed(seed, 0xA11CE + static_cast<std::uint64_t>(attempt)));
        RationalMatrix b(n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) b.at(r, c) = rng.small_int();
        if (matrix_rank(b) == n) return GrassmannPoint{n, m, std::move(b)};
    }
    throw genericity_error("random_grassmann_point: no full-rank draw in 16 attempts");
}

/// Witness that consecutive Schubert varieties meet along their regular
/// strata: a W in the (i,0) and (i+1,0) strata simultaneously, containing
/// the new direction of stage m-n+i. Such W must keep the span one short of
/// the whole space, so the complement of W is drawn inside a hyperplane
/// containing V_{m-n+i}; defects are then verified by rank, retrying the
/// seeded draw on failure.
inline GrassmannPoint regular_overlap_witness(const Flag& f, std::size_t i, std::size_t n,
                                              std::uint64_t seed) {
    if (i >= n) throw precondition_error("regular_overlap_witness: requires i < n");
    if (n >= f.m) throw precondition_error("regular_overlap_witness: requires n < m");
    const std::size_t idx = f.m - n + i;

    // new direction alpha of V_idx over V_{idx-1}
    std::vector<Rational> alpha;
    for (std::size_t r = 0; r < idx; ++r) {
        RationalMatrix candidate(1, f.m);
        for (std::size_t c = 0; c < f.m; ++c) candidate.at(0, c) = f.stage(idx).at(r, c);
        if (matrix_rank(vstack(f.stage(idx - 1), candidate)) == idx) {
            alpha = candidate.row(0);
            break;
        }
    }
    if (alpha.empty()) throw error("internal: flag stage without a new direction");

    // hyperplane containing V_idx: kernel functional of the stage matrix
    std::vector<std::vector<Rational>> functionals = kernel_basis(f.stage(idx));
    if (functionals.empty())
        throw precondition_error("regular_overlap_witness: stage already fills the space");
    RationalMatrix functional(1, f.m);
    for (std::size_t c = 0; c < f.m; ++c) functional.at(0, c) = functionals.front()[c];
    std::vector<std::vector<Rational>> hyperplane = kernel_basis(functional);

    for (int attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(derive_seed(seed, 0xB0B + static_cast<std::uint64_t>(attempt)));
        RationalMatrix basis(n, f.m);
        for (std::size_t c = 0; c < f.m; ++c) basis.at(0, c) = alpha[c];
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> v(f.m, 0);
            for (const std::vector<Rational>& h : hyperplane) {
                const int coefficient = rng.small_int();
                for (std::size_t c = 0; c < f.m; ++c) v[c] += Rational(coefficient) * h[c];
            }
            for (std::size_t c = 0; c < f.m; ++c) basis.at(r, c) = v[c];
        }
        if (matrix_rank(basis) != n) continue;
        GrassmannPoint w{n, f.m, basis};
        if (schubert_defect(w, f, i) == 0 && schubert_defect(w, f, i + 1) == 0) return w;
    }
    throw genericity_error("regular_overlap_witness: 16 seeded draws failed the defect checks");
}

} // namespace matherlift
