#pragma once

#include <vector>

#include "matherlift/groebner.hpp"

namespace matherlift {

/// Dimension/degree report for a homogeneous ideal I in N variables:
/// `dimension` is the Krull dimension of the affine quotient ring (so the
/// projective dimension is one less), with -1 for the zero ring, and
/// `degree` is the degree of the projective scheme. A projective set is
/// empty exactly when dimension <= 0.
struct DimDegree {
    long long dimension = 0;
    long long degree = 0;

    long long proj_dimension() const { return dimension - 1; }
    bool proj_empty() const { return dimension <= 0; }

    bool operator==(const DimDegree&) const = default;
};

/// Hilbert series of the lead-term ideal by inclusion-exclusion over its
/// minimal monomial generators: the numerator of H(t)*(1-t)^N is
/// sum over subsets S of (-1)^|S| t^(deg lcm S). The reduced basis gives
/// the minimal generators directly. Capped at 20 generators (2^20 subsets).
inline DimDegree hilbert_dim_degree(const GroebnerBasis& gb) {
    const std::size_t nvars = gb.ideal.vars.size();
    for (const MultiPoly& b : gb.basis)
        if (!b.is_homogeneous())
            throw homogeneity_error("hilbert_dim_degree: non-homogeneous ideal");
    if (gb.is_unit()) return DimDegree{-1, 0};

    std::vector<Exponents> mins;
    for (const MultiPoly& b : gb.basis)
        mins.push_back(b.leading_exponents(gb.order));
    if (mins.size() > 20)
        throw precondition_error("hilbert_dim_degree: more than 20 minimal lead terms");

    std::size_t max_deg = 0;
    Exponents all = Exponents(nvars, 0);
    for (const Exponents& e : mins) all = exp_lcm(all, e);
    max_deg = static_cast<std::size_t>(total_degree(all));

    std::vector<long long> numerator(max_deg + 1, 0);
    const std::size_t subsets = std::size_t{1} << mins.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        Exponents lcm(nvars, 0);
        int bits = 0;
        for (std::size_t k = 0; k < mins.size(); ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            lcm = exp_lcm(lcm, mins[k]);
            ++bits;
        }
        numerator[static_cast<std::size_t>(total_degree(lcm))] += (bits % 2 == 0) ? 1 : -1;
    }

    // peel off (1-t) factors: h = (1-t) q  <=>  q_i = h_0 + ... + h_i
    auto value_at_one = [](const std::vector<long long>& h) {
        long long s = 0;
        for (long long c : h) s += c;
        return s;
    };
    std::size_t peeled = 0;
    std::vector<long long> h = numerator;
    while (!h.empty() && value_at_one(h) == 0) {
        std::vector<long long> q(h.size());
        long long acc = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            acc += h[i];
            q[i] = acc;
        }
        q.pop_back(); // the last prefix sum is h(1) = 0
        h = std::move(q);
        ++peeled;
    }
    // series = q(t) / (1-t)^(N - peeled); the pole order is the Krull dimension
    return DimDegree{static_cast<long long>(nvars) - static_cast<long long>(peeled),
                     value_at_one(h)};
}

} // namespace matherlift
