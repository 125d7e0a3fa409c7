#pragma once

#include <cstddef>
#include <vector>

#include "matherlift/errors.hpp"

namespace matherlift {

/// Rational Betti numbers indexed by homological degree.
struct GradedBetti {
    std::vector<std::size_t> betti;

    std::size_t at(std::size_t k) const { return k < betti.size() ? betti[k] : 0; }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t k = 0; k < betti.size(); ++k)
            chi += (k % 2 == 0) ? static_cast<long long>(betti[k])
                                : -static_cast<long long>(betti[k]);
        return chi;
    }

    bool operator==(const GradedBetti&) const = default;
};

/// Homology of the Thom space of a line bundle over B: reduced homology is
/// that of B shifted up by two, plus the class of the point.
inline GradedBetti thom_homology(const GradedBetti& base) {
    GradedBetti x;
    x.betti.assign(base.betti.size() + 2, 0);
    x.betti[0] = 1;
    for (std::size_t k = 0; k < base.betti.size(); ++k) x.betti[k + 2] = base.betti[k];
    return x;
}

/// Input for the cone IH computation: the smooth base, its real dimension,
/// and the rank of the Poincare map in the middle degree of the cone
/// (read off by the caller; it is 0 whenever the middle homology vanishes).
struct ConeInput {
    GradedBetti base_betti;
    std::size_t base_dim_real = 0; // 2(n-1) for a cone of complex dimension n
    std::size_t middle_pd_rank = 0;
};

/// Middle-perversity IH Betti numbers of the projective cone over B:
/// cohomological Betti numbers below the middle degree, homological above,
/// and the rank of the Poincare map in the middle. Rational coefficients
/// make cohomology Betti numbers equal homology ones degreewise.
inline GradedBetti cone_ih_betti(const ConeInput& input) {
    if (input.base_dim_real % 2 != 0)
        throw precondition_error("cone_ih_betti: base with odd real dimension");
    const std::size_t n = input.base_dim_real / 2 + 1; // complex dimension of the cone
    for (std::size_t k = 0; k <= input.base_dim_real; ++k)
        if (input.base_betti.at(k) != input.base_betti.at(input.base_dim_real - k))
            throw precondition_error("cone_ih_betti: base Betti numbers violate Poincare duality");
    const GradedBetti h = thom_homology(input.base_betti);
    GradedBetti ih;
    ih.betti.assign(2 * n + 1, 0);
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        if (k < n)
            ih.betti[k] = h.at(2 * n - k);
        else if (k == n)
            ih.betti[k] = input.middle_pd_rank;
        else
            ih.betti[k] = h.at(k);
    }
    return ih;
}

/// Betti numbers of the link of the cone singularity over a smooth
/// projective curve K embedded by a degree-d bundle. The link is the
/// circle bundle of that bundle over K; the Gysin sequence gives
/// H^1(L) = H^1(K) + ker(d. : H^0(K) -> H^2(K)), and d != 0 kills the
/// kernel. H^2(L) matches H^1(L) by duality of the closed oriented
/// 3-manifold L over the rationals.
inline GradedBetti a1_link_betti(std::size_t deg_d, std::size_t base_b0, std::size_t base_b1,
                                 std::size_t base_b2) {
    if (deg_d == 0) throw precondition_error("a1_link_betti: degenerate (degree-0) bundle");
    if (base_b0 != 1 || base_b2 != 1)
        throw precondition_error("a1_link_betti: base must be a connected smooth curve");
    GradedBetti link;
    link.betti = {1, base_b1, base_b1, 1};
    return link;
}

/// Cone over a smooth plane curve of degree d: rational homology manifold
/// exactly when the link has no middle cohomology. The curve's first Betti
/// number is twice its genus (d-1)(d-2)/2.
inline bool is_rational_homology_manifold_a_d(std::size_t d) {
    if (d == 0) throw precondition_error("degree must be positive");
    const std::size_t b1 = (d - 1) * (d - 2);
    GradedBetti link = a1_link_betti(d, 1, b1, 1);
    return link.at(1) == 0 && link.at(2) == 0;
}

} // namespace matherlift
