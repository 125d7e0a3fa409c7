#pragma once

#include <vector>

#include "matherlift/groebner.hpp"
#include "matherlift/ideal.hpp"

namespace matherlift {

namespace detail {

inline const char* kTagVar = "_t0";

// Exact division h / g for h in (g); internal consistency error otherwise.
inline MultiPoly divide_exact(const MultiPoly& h, const MultiPoly& g, const MonomialOrder& order) {
    MultiPoly p = h;
    MultiPoly q = MultiPoly::zero(h.vars());
    const Exponents& glead = g.leading_exponents(order);
    const Rational glc = g.coeff(glead);
    while (!p.is_zero()) {
        const Exponents lead = p.leading_exponents(order);
        if (!divides(glead, lead))
            throw error("internal: inexact polynomial division");
        const Exponents shift = exp_sub(lead, glead);
        const Rational factor = p.coeff(lead) / glc;
        q.add_term(shift, factor);
        p = p - g.times_term(shift, factor);
    }
    return q;
}

} // namespace detail

/// Ideal intersection via the tag-variable trick: eliminate t from
/// t*I + (1-t)*J under a block order with t in the leading block.
inline Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.vars != rhs.vars)
        throw variable_context_error("ideal_intersect: ambient mismatch");
    if (lhs.is_zero_ideal() || rhs.is_zero_ideal()) return Ideal(lhs.vars);
    for (const std::string& v : lhs.vars)
        if (v == detail::kTagVar)
            throw precondition_error("ambient uses the reserved tag variable name");
    std::vector<std::string> ext;
    ext.reserve(lhs.vars.size() + 1);
    ext.push_back(detail::kTagVar);
    ext.insert(ext.end(), lhs.vars.begin(), lhs.vars.end());

    const MultiPoly t = MultiPoly::variable(ext, 0);
    const MultiPoly one_minus_t = MultiPoly::constant(ext, 1) - t;
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : lhs.gens) gens.push_back(t * f.embedded(ext));
    for (const MultiPoly& g : rhs.gens) gens.push_back(one_minus_t * g.embedded(ext));

    GroebnerBasis gb = groebner(Ideal(ext, std::move(gens)), MonomialOrder::block_elim(1));
    std::vector<MultiPoly> result;
    for (const MultiPoly& b : gb.basis) {
        bool tag_free = true;
        for (const auto& [e, c] : b.terms())
            if (e[0] != 0) { tag_free = false; break; }
        if (!tag_free) continue;
        MultiPoly stripped = MultiPoly::zero(lhs.vars);
        for (const auto& [e, c] : b.terms())
            stripped.add_term(Exponents(e.begin() + 1, e.end()), c);
        result.push_back(std::move(stripped));
    }
    return Ideal(lhs.vars, std::move(result));
}

/// Quotient by a single nonzero polynomial: (I : g) = (I ∩ (g)) / g.
inline Ideal ideal_quotient(const Ideal& lhs, const MultiPoly& g) {
    if (g.is_zero()) throw precondition_error("ideal_quotient: zero divisor polynomial");
    Ideal meet = ideal_intersect(lhs, Ideal(lhs.vars, {g}));
    const MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<MultiPoly> gens;
    gens.reserve(meet.gens.size());
    for (const MultiPoly& h : meet.gens)
        gens.push_back(detail::divide_exact(h, g, order));
    return Ideal(lhs.vars, std::move(gens));
}

/// (I : J) = intersection of (I : g) over the generators g of J.
inline Ideal ideal_quotient(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.vars != rhs.vars)
        throw variable_context_error("ideal_quotient: ambient mismatch");
    if (rhs.is_zero_ideal())
        throw precondition_error("ideal_quotient: quotient by the zero ideal");
    Ideal acc = ideal_quotient(lhs, rhs.gens.front());
    for (std::size_t i = 1; i < rhs.gens.size(); ++i)
        acc = ideal_intersect(acc, ideal_quotient(lhs, rhs.gens[i]));
    return acc;
}

/// Stable quotient I : J^inf, by iterating (I:J) until the reduced Gröbner
/// basis stops changing. Desk-scale inputs stabilize in a handful of
/// rounds; 32 is a hard cap.
inline Ideal ideal_saturate(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.vars != rhs.vars)
        throw variable_context_error("ideal_saturate: ambient mismatch");
    const MonomialOrder order = MonomialOrder::degrevlex();
    Ideal current = lhs;
    GroebnerBasis current_gb = groebner(current, order);
    for (int round = 0; round < 32; ++round) {
        Ideal next = ideal_quotient(ideal_from_basis(current_gb), rhs);
        GroebnerBasis next_gb = groebner(next, order);
        if (same_ideal(next_gb, current_gb)) return ideal_from_basis(current_gb);
        current_gb = std::move(next_gb);
    }
    throw error("ideal_saturate: no stabilization within 32 quotient rounds");
}

} // namespace matherlift
