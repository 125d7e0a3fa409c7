#pragma once

#include <map>
#include <string>
#include <vector>

#include "matherlift/matrix.hpp"

namespace matherlift {

/// Generalized binomial coefficient: zero for 0 <= p < q, the usual value
/// for p >= q, and the polynomial extension p(p-1)...(p-q+1)/q! for
/// negative p.
inline long long binom(long long p, unsigned q) {
    BigInt num = 1;
    for (unsigned k = 0; k < q; ++k) num *= BigInt(p - static_cast<long long>(k));
    BigInt den = 1;
    for (unsigned k = 2; k <= q; ++k) den *= k;
    BigInt result = num / den;
    return result.convert_to<long long>();
}

/// One even homological degree of a class: named generators with aligned
/// rational coefficients.
struct GradedPart {
    std::vector<std::string> gens;
    std::vector<Rational> coeff;

    bool operator==(const GradedPart&) const = default;

    Rational coefficient(const std::string& name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return coeff[i];
        return 0;
    }
};

/// A homology (or intersection homology) class stored by even degree.
/// An absent degree means zero there; comparisons ignore explicit zeros.
class GradedClass {
public:
    GradedClass() = default;

    static GradedClass single(int degree, const std::string& gen, const Rational& c) {
        GradedClass g;
        g.parts_[degree] = GradedPart{{gen}, {c}};
        return g;
    }

    static GradedClass zero_in(int degree, std::vector<std::string> gens) {
        GradedClass g;
        g.parts_[degree] = GradedPart{std::move(gens), {}};
        g.parts_[degree].coeff.assign(g.parts_[degree].gens.size(), Rational(0));
        return g;
    }

    const std::map<int, GradedPart>& parts() const { return parts_; }
    bool has_degree(int degree) const { return parts_.count(degree) != 0; }
    const GradedPart& part(int degree) const { return parts_.at(degree); }

    void set_part(int degree, GradedPart part) {
        if (part.gens.size() != part.coeff.size())
            throw precondition_error("graded part: generator/coefficient length mismatch");
        parts_[degree] = std::move(part);
    }

    Rational coefficient(int degree, const std::string& gen) const {
        auto it = parts_.find(degree);
        return it == parts_.end() ? Rational(0) : it->second.coefficient(gen);
    }

    void add_term(int degree, const std::string& gen, const Rational& c) {
        GradedPart& p = parts_[degree];
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            if (p.gens[i] == gen) {
                p.coeff[i] += c;
                return;
            }
        }
        p.gens.push_back(gen);
        p.coeff.push_back(c);
    }

    /// Appends a degree-0 summand generator (coefficient 0) if missing;
    /// used to adjoin designated point summands before CSM corrections.
    void ensure_generator(int degree, const std::string& gen) {
        GradedPart& p = parts_[degree];
        for (const std::string& g : p.gens)
            if (g == gen) return;
        p.gens.push_back(gen);
        p.coeff.push_back(0);
    }

    GradedClass operator+(const GradedClass& o) const {
        GradedClass r = *this;
        for (const auto& [deg, part] : o.parts_)
            for (std::size_t i = 0; i < part.gens.size(); ++i)
                r.add_term(deg, part.gens[i], part.coeff[i]);
        return r;
    }

    GradedClass operator-(const GradedClass& o) const { return *this + o.scaled(-1); }

    GradedClass scaled(const Rational& c) const {
        GradedClass r = *this;
        for (auto& [deg, part] : r.parts_)
            for (Rational& x : part.coeff) x *= c;
        return r;
    }

    /// Nonzero terms as (degree, generator) -> coefficient; the comparison
    /// form (explicit zeros and generator order are presentation only).
    std::map<std::pair<int, std::string>, Rational> support() const {
        std::map<std::pair<int, std::string>, Rational> s;
        for (const auto& [deg, part] : parts_)
            for (std::size_t i = 0; i < part.gens.size(); ++i)
                if (part.coeff[i] != 0) s[{deg, part.gens[i]}] = part.coeff[i];
        return s;
    }

    bool same_class(const GradedClass& o) const { return support() == o.support(); }

    bool all_integer() const {
        for (const auto& [deg, part] : parts_)
            for (const Rational& c : part.coeff)
                if (!is_integer(c)) return false;
        return true;
    }

private:
    std::map<int, GradedPart> parts_;
};

/// Hand-encoded intersection calculus of one ambient space: generator names
/// per even degree, multiplication by the hyperplane class as matrices
/// degree -> degree-2, and the intersection pairing between complementary
/// degrees.
struct IntersectionTable {
    int ambient_dim = 0;                               // complex dimension n
    std::map<int, std::vector<std::string>> gens;      // homological degree -> names
    std::map<int, RationalMatrix> cap_hyperplane;      // degree d -> (|gens[d-2]| x |gens[d]|)
    std::map<int, RationalMatrix> pairing;             // degree d -> (|gens[d]| x |gens[2n-d]|)

    int top_degree() const { return 2 * ambient_dim; }

    const std::vector<std::string>& generators(int degree) const {
        auto it = gens.find(degree);
        if (it == gens.end())
            throw precondition_error("intersection table has no generators in degree " +
                                     std::to_string(degree));
        return it->second;
    }

    /// The fundamental class: coefficient 1 on the unique top generator.
    GradedClass fundamental() const {
        const std::vector<std::string>& top = generators(top_degree());
        if (top.size() != 1)
            throw precondition_error("intersection table needs a single top generator");
        return GradedClass::single(top_degree(), top.front(), 1);
    }

    /// Cap product with the hyperplane class, degree by degree.
    GradedClass cap(const GradedClass& x) const {
        GradedClass out;
        for (const auto& [deg, part] : x.parts()) {
            if (deg - 2 < 0) continue;
            auto mit = cap_hyperplane.find(deg);
            if (mit == cap_hyperplane.end())
                throw precondition_error("no hyperplane action out of degree " + std::to_string(deg));
            const RationalMatrix& m = mit->second;
            const std::vector<std::string>& source = generators(deg);
            const std::vector<std::string>& target = generators(deg - 2);
            if (m.rows != target.size() || m.cols != source.size())
                throw precondition_error("hyperplane action matrix shape mismatch in degree " +
                                         std::to_string(deg));
            std::vector<Rational> in(source.size(), 0);
            for (std::size_t i = 0; i < source.size(); ++i) in[i] = part.coefficient(source[i]);
            for (std::size_t r = 0; r < target.size(); ++r) {
                Rational acc = 0;
                for (std::size_t c = 0; c < source.size(); ++c) acc += m.at(r, c) * in[c];
                out.add_term(deg - 2, target[r], acc);
            }
        }
        return out;
    }

    /// Intersection number of a degree-d part against a complementary part.
    Rational pair(int degree, const GradedPart& x, const GradedPart& y) const {
        auto pit = pairing.find(degree);
        if (pit == pairing.end())
            throw precondition_error("no pairing out of degree " + std::to_string(degree));
        const RationalMatrix& p = pit->second;
        const std::vector<std::string>& left = generators(degree);
        const std::vector<std::string>& right = generators(top_degree() - degree);
        Rational acc = 0;
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                acc += x.coefficient(left[i]) * p.at(i, j) * y.coefficient(right[j]);
        return acc;
    }
};

/// Chern data of a rank-k bundle twisted by a line bundle: c_i lives in
/// homological degree 2(n-i); the line class acts through the table's
/// hyperplane action.
struct BundleClassData {
    std::size_t rank_k = 0;
    std::vector<GradedClass> classes; // classes[i-1] = c_i, i = 1..n
};

/// Total class of E (x) L from the closed-form double sum: the degree-i
/// piece is sum over j <= i of binom(k-i+j, j) a^j c_{i-j}, truncated at
/// homological degree 0. c_0 is the fundamental class.
inline GradedClass tensor_chern(const BundleClassData& bundle, std::size_t n,
                                const IntersectionTable& table) {
    if (static_cast<int>(n) != table.ambient_dim)
        throw precondition_error("tensor_chern: dimension does not match the table");
    auto chern_input = [&](std::size_t i) -> GradedClass {
        if (i == 0) return table.fundamental();
        if (i <= bundle.classes.size()) return bundle.classes[i - 1];
        return GradedClass{};
    };
    GradedClass total;
    const long long k = static_cast<long long>(bundle.rank_k);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const long long weight = binom(k - static_cast<long long>(i) + static_cast<long long>(j),
                                           static_cast<unsigned>(j));
            if (weight == 0) continue;
            GradedClass term = chern_input(i - j);
            for (std::size_t cap = 0; cap < j; ++cap) term = table.cap(term);
            total = total + term.scaled(Rational(weight));
        }
    }
    return total;
}

/// Chern-Mather class from lifted polar classes: c_i := (-1)^i [N^i],
/// k := n+1. lifted[idx] is the class of N^(idx+1) in degree 2(n-idx-1);
/// empty steps enter as zero classes.
inline GradedClass mather_from_polar(const std::vector<GradedClass>& lifted, std::size_t n,
                                     const IntersectionTable& table) {
    BundleClassData data;
    data.rank_k = n + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        GradedClass ci;
        if (i <= lifted.size()) {
            const int expect = 2 * (static_cast<int>(n) - static_cast<int>(i));
            for (const auto& [deg, part] : lifted[i - 1].parts()) {
                bool nonzero = false;
                for (const Rational& c : part.coeff) nonzero = nonzero || c != 0;
                if (nonzero && deg != expect)
                    throw precondition_error("mather_from_polar: lifted class " + std::to_string(i) +
                                             " lives in degree " + std::to_string(deg) +
                                             ", expected " + std::to_string(expect));
            }
            ci = lifted[i - 1].scaled((i % 2 == 0) ? 1 : -1);
        }
        data.classes.push_back(std::move(ci));
    }
    GradedClass mather = tensor_chern(data, n, table);
    const std::string& top = table.generators(table.top_degree()).front();
    if (mather.coefficient(table.top_degree(), top) != 1)
        throw error("internal: Mather class top coefficient is not 1");
    return mather;
}

/// CSM correction for isolated singular points: adds (1 - Eu) times each
/// named degree-0 point class. The generator must already exist (adjoin a
/// designated summand first when the point class lives in its own summand).
inline GradedClass csm_isolated(const GradedClass& mather,
                                const std::vector<std::pair<std::string, Rational>>& points) {
    GradedClass out = mather;
    for (const auto& [name, eu] : points) {
        if (!out.has_degree(0) || out.part(0).gens.empty())
            throw precondition_error("csm_isolated: class has no degree-0 part");
        const std::vector<std::string>& gens = out.part(0).gens;
        if (std::find(gens.begin(), gens.end(), name) == gens.end())
            throw precondition_error("csm_isolated: unknown degree-0 generator '" + name + "'");
        out.add_term(0, name, Rational(1) - eu);
    }
    return out;
}

} // namespace matherlift
