#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "matherlift/ideal.hpp"
#include "matherlift/multipoly.hpp"

namespace matherlift {

/// Reduced Gröbner basis of an ideal under a fixed monomial order.
/// Buchberger with the plain degree-first S-pair queue and full reduction;
/// the reduced basis is sorted by descending leading monomial, so output is
/// a canonical form of the ideal and is identical across runs.
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<MultiPoly> basis;

    bool is_unit() const {
        return basis.size() == 1 && basis.front().degree() == 0;
    }
};

/// Full multivariate division: every reducible term is eliminated, not only
/// the leading one. Deterministic given the basis order.
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                             const MonomialOrder& order) {
    MultiPoly p = f;
    MultiPoly remainder = MultiPoly::zero(f.vars());
    while (!p.is_zero()) {
        const Exponents lead = p.leading_exponents(order);
        const Rational lc = p.coeff(lead);
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (g.is_zero()) continue;
            const Exponents& glead = g.leading_exponents(order);
            if (!divides(glead, lead)) continue;
            const Rational factor = lc / g.coeff(glead);
            p = p - g.times_term(exp_sub(lead, glead), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lead, lc);
            p.add_term(lead, -lc);
        }
    }
    return remainder;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
    const Exponents& lf = f.leading_exponents(order);
    const Exponents& lg = g.leading_exponents(order);
    const Exponents lcm = exp_lcm(lf, lg);
    MultiPoly a = f.times_term(exp_sub(lcm, lf), Rational(1) / f.coeff(lf));
    MultiPoly b = g.times_term(exp_sub(lcm, lg), Rational(1) / g.coeff(lg));
    return a - b;
}

namespace detail {

inline bool coprime_leads(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Inter-reduce a Gröbner basis into the reduced basis: minimal lead terms,
// fully reduced tails, monic, sorted by descending lead monomial.
inline std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> basis, const MonomialOrder& order) {
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Exponents& li = basis[i].leading_exponents(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Exponents& lj = basis[j].leading_exponents(order);
            if (divides(lj, li) && (lj != li || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.greater(a.leading_exponents(order), b.leading_exponents(order));
    });
    return reduced;
}

} // namespace detail

/// Buchberger's algorithm. The zero ideal yields an empty basis; the unit
/// ideal yields {1}.
inline GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex()) {
    if (ideal.vars.empty()) throw precondition_error("groebner: empty ambient variable list");
    std::vector<MultiPoly> basis = ideal.gens;
    // (degree of lcm, i, j) queue: degree-first selection, index tiebreak
    using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t>;
    std::set<Pair> queue;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            const Exponents lcm = exp_lcm(basis[i].leading_exponents(order),
                                          basis[upto].leading_exponents(order));
            queue.emplace(total_degree(lcm), i, upto);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        if (detail::coprime_leads(basis[i].leading_exponents(order),
                                  basis[j].leading_exponents(order)))
            continue;
        MultiPoly s = s_polynomial(basis[i], basis[j], order);
        MultiPoly r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(r.monic(order));
        push_pairs(basis.size() - 1);
    }
    GroebnerBasis out{ideal, order, detail::reduce_basis(std::move(basis), order)};
    return out;
}

/// Ideal membership: exact zero remainder against the reduced basis.
inline bool contains(const GroebnerBasis& gb, const MultiPoly& f) {
    if (f.is_zero()) return true;
    if (gb.basis.empty()) return false;
    return normal_form(f, gb.basis, gb.order).is_zero();
}

/// Canonical generators: the reduced basis itself.
inline Ideal ideal_from_basis(const GroebnerBasis& gb) {
    return Ideal(gb.ideal.vars, gb.basis);
}

inline bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && a.basis == b.basis;
}

} // namespace matherlift
