#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "matherlift/errors.hpp"
#include "matherlift/rational.hpp"

namespace matherlift {

/// Exponent tuple; entry i is the exponent of the i-th ambient variable.
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

enum class OrderKind { degrevlex, lex, block_elim };

/// Monomial order. degrevlex is the default everywhere; block_elim orders
/// the first `block_split` variables ahead of the rest (degrevlex within
/// each block), which is what ideal intersection/elimination needs.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::size_t block_split = 0;

    static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder block_elim(std::size_t split) { return {OrderKind::block_elim, split}; }

    bool operator==(const MonomialOrder&) const = default;

    /// True when a is strictly greater than b.
    bool greater(const Exponents& a, const Exponents& b) const {
        switch (kind) {
        case OrderKind::lex: {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
        }
        case OrderKind::degrevlex:
            return drl_greater(a, b, 0, a.size());
        case OrderKind::block_elim: {
            if (drl_greater(a, b, 0, block_split)) return true;
            if (drl_greater(b, a, 0, block_split)) return false;
            return drl_greater(a, b, block_split, a.size());
        }
        }
        return false;
    }

private:
    // degrevlex on the slice [lo, hi): higher total degree wins; on ties the
    // last differing exponent decides, smaller exponent winning.
    static bool drl_greater(const Exponents& a, const Exponents& b,
                            std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da > db;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Multivariate polynomial with exact rational coefficients over a named,
/// ordered variable list. Zero coefficients are never stored; the term map
/// uses plain lexicographic key order so iteration is deterministic and
/// independent of any monomial order in play.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, std::size_t index) {
        MultiPoly p(std::move(vars));
        if (index >= p.vars_.size()) throw precondition_error("variable index out of range");
        Exponents e(p.vars_.size(), 0);
        e[index] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static MultiPoly from_term(std::vector<std::string> vars, Exponents e, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw precondition_error("exponent tuple length mismatch");
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const MultiPoly&) const = default;

    /// -1 for the zero polynomial.
    long long degree() const {
        long long d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, static_cast<long long>(total_degree(e)));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const std::uint64_t d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_context(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_context(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_context(o);
        MultiPoly r(vars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_)
                r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(vars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    /// Multiplication by the monomial term c * x^e.
    MultiPoly times_term(const Exponents& e, const Rational& c) const {
        MultiPoly r(vars_);
        if (c == 0) return r;
        for (const auto& [te, tc] : terms_) r.terms_[exp_add(te, e)] = tc * c;
        return r;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(vars_, 1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Formal partial derivative with respect to variable `index`.
    MultiPoly derivative(std::size_t index) const {
        if (index >= vars_.size()) throw precondition_error("derivative: variable index out of range");
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[index] == 0) continue;
            Exponents d = e;
            d[index] -= 1;
            r.add_term(d, c * Rational(e[index]));
        }
        return r;
    }

    /// Evaluates the polynomial on polynomial images of its variables; the
    /// result lives over the images' variable list.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size())
            throw precondition_error("substitute: one image per variable required");
        for (const MultiPoly& im : images)
            if (im.vars() != images.front().vars())
                throw variable_context_error("substitute: images over different variable lists");
        std::vector<std::string> target =
            images.empty() ? std::vector<std::string>{} : images.front().vars();
        MultiPoly r = MultiPoly::zero(target);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * images[i].pow(e[i]);
            r = r + t;
        }
        return r;
    }

    /// Re-expresses the polynomial over a superset variable list, matching
    /// variables by name.
    MultiPoly embedded(const std::vector<std::string>& target) const {
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(target.begin(), target.end(), vars_[i]);
            if (it == target.end())
                throw variable_context_error("embedded: variable '" + vars_[i] + "' missing from target");
            where[i] = static_cast<std::size_t>(it - target.begin());
        }
        MultiPoly r{std::vector<std::string>(target)};
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
            r.terms_[ne] = c;
        }
        return r;
    }

    /// Leading exponent under the given order; polynomial must be nonzero.
    const Exponents& leading_exponents(const MonomialOrder& order) const {
        if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
        const Exponents* best = &terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            if (order.greater(e, *best)) best = &e;
        return *best;
    }

    Rational leading_coeff(const MonomialOrder& order) const {
        return terms_.at(leading_exponents(order));
    }

    /// Scales so the leading coefficient is 1.
    MultiPoly monic(const MonomialOrder& order) const {
        return scaled(Rational(1) / leading_coeff(order));
    }

    void check_context(const MultiPoly& o) const {
        if (vars_ != o.vars_)
            throw variable_context_error("polynomials over different variable lists");
    }

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// All formal partial derivatives, in variable order. Entries may be zero.
inline std::vector<MultiPoly> gradient(const MultiPoly& f) {
    std::vector<MultiPoly> g;
    g.reserve(f.vars().size());
    for (std::size_t i = 0; i < f.vars().size(); ++i) g.push_back(f.derivative(i));
    return g;
}

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

inline std::string poly_to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    // canonical degrevlex-descending layout
    std::vector<const Exponents*> mons;
    for (const auto& [e, c] : p.terms()) mons.push_back(&e);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::sort(mons.begin(), mons.end(),
              [&](const Exponents* a, const Exponents* b) { return drl.greater(*a, *b); });
    std::ostringstream out;
    bool first = true;
    for (const Exponents* e : mons) {
        Rational c = p.coeff(*e);
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rational mag = neg ? Rational(-c) : c;
        bool has_vars = total_degree(*e) > 0;
        if (mag != 1 || !has_vars) out << rational_to_string(mag);
        bool printed = (mag != 1 || !has_vars);
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (printed) out << "*";
            out << p.vars()[i];
            if ((*e)[i] > 1) out << "^" << (*e)[i];
            printed = true;
        }
    }
    return out.str();
}

namespace detail {

// Minimal recursive parser for test and CLI literals:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ['^' uint]
class PolyParser {
public:
    PolyParser(const std::vector<std::string>& vars, std::string_view text)
        : vars_(vars), text_(text) {}

    MultiPoly parse() {
        MultiPoly p = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            throw parse_error("trailing input in polynomial: '" + std::string(text_.substr(pos_)) + "'");
        return p;
    }

private:
    MultiPoly parse_expr() {
        MultiPoly acc = MultiPoly::zero(vars_);
        bool negative = false;
        skip_space();
        if (peek() == '+' || peek() == '-') negative = (get() == '-');
        acc = acc + parse_term().scaled(negative ? -1 : 1);
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            MultiPoly t = parse_term();
            acc = (c == '-') ? acc - t : acc + t;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            skip_space();
            if (peek() != '*') break;
            get();
            acc = acc * parse_factor();
        }
        return acc;
    }

    MultiPoly parse_factor() {
        skip_space();
        char c = peek();
        if (c == '\0') throw parse_error("unexpected end of polynomial text");
        if ((c >= '0' && c <= '9')) {
            std::string lit;
            while (std::isdigit(static_cast<unsigned char>(peek()))) lit += get();
            if (peek() == '/') {
                lit += get();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw parse_error("malformed rational in polynomial text");
                while (std::isdigit(static_cast<unsigned char>(peek()))) lit += get();
            }
            return MultiPoly::constant(vars_, parse_rational(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end())
                throw parse_error("unknown variable '" + name + "' in polynomial text");
            std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
            unsigned exp = 1;
            skip_space();
            if (peek() == '^') {
                get();
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw parse_error("malformed exponent in polynomial text");
                exp = 0;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    exp = exp * 10 + static_cast<unsigned>(get() - '0');
            }
            Exponents e(vars_.size(), 0);
            e[idx] = exp;
            return MultiPoly::from_term(vars_, e, 1);
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial text");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    const std::vector<std::string>& vars_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline MultiPoly parse_poly(const std::vector<std::string>& vars, std::string_view text) {
    return detail::PolyParser(vars, text).parse();
}

} // namespace matherlift
