#include <catch2/catch_amalgamated.hpp>

#include "matherlift/builtin.hpp"
#include "matherlift/chernring.hpp"
#include "matherlift/multipoly.hpp"

using namespace matherlift;

namespace {

// elementary symmetric polynomial e_l(r_1..r_k) by direct subset expansion
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, std::size_t k,
                               std::size_t l) {
    MultiPoly acc = MultiPoly::zero(vars);
    if (l == 0) return MultiPoly::constant(vars, 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != l) continue;
        MultiPoly term = MultiPoly::constant(vars, 1);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) term = term * MultiPoly::variable(vars, i);
        acc = acc + term;
    }
    return acc;
}

MultiPoly degree_part(const MultiPoly& p, std::uint64_t degree) {
    MultiPoly out = MultiPoly::zero(p.vars());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == degree) out.add_term(e, c);
    return out;
}

long long factorial_binom(long long p, unsigned q) {
    // small independent binomial for the displayed-row comparison
    if (p >= 0 && p < static_cast<long long>(q)) return 0;
    long long num = 1, den = 1;
    for (unsigned i = 0; i < q; ++i) {
        num *= p - static_cast<long long>(i);
        den *= static_cast<long long>(i) + 1;
    }
    return num / den;
}

} // namespace

TEST_CASE("generalized binomial") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(3, 0) == 1);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(-1, 1) == -1);
    CHECK(binom(-2, 2) == 3);
    CHECK(binom(-3, 3) == -10);
}

TEST_CASE("graded class arithmetic") {
    GradedClass a = GradedClass::single(2, "d1", 1);
    GradedClass b = GradedClass::single(2, "d2", 2);
    GradedClass sum = a + b;
    CHECK(sum.coefficient(2, "d1") == 1);
    CHECK(sum.coefficient(2, "d2") == 2);
    CHECK((sum - sum).support().empty());
    CHECK(sum.scaled(Rational(1) / 2).coefficient(2, "d2") == 1);
    CHECK_FALSE(sum.scaled(Rational(1) / 2).all_integer());
    // comparison ignores explicit zeros
    GradedClass with_zero = a;
    with_zero.add_term(2, "d2", 0);
    CHECK(with_zero.same_class(a));
}

TEST_CASE("quadric cone intersection calculus") {
    const IntersectionTable t = builtin::verdier_cone_table();
    const GradedClass x = t.fundamental();

    SECTION("hyperplane images match the classical relations") {
        GradedClass b1 = t.cap(x); // image of b
        CHECK(b1.coefficient(4, "p1") == 1);
        CHECK(b1.coefficient(4, "p2") == 1);
        GradedClass b2 = t.cap(b1); // image of b^2
        CHECK(b2.coefficient(2, "d1") == 1);
        CHECK(b2.coefficient(2, "d2") == 1);
        GradedClass b3 = t.cap(b2); // b^3 = 2 [pt]
        CHECK(b3.coefficient(0, "pt") == 2);
    }
    SECTION("b . p_i = d_i and b . d_i = [pt]") {
        GradedClass p1 = t.cap(GradedClass::single(4, "p1", 1));
        CHECK(p1.same_class(GradedClass::single(2, "d1", 1)));
        GradedClass d2 = t.cap(GradedClass::single(2, "d2", 1));
        CHECK(d2.same_class(GradedClass::single(0, "pt", 1)));
    }
    SECTION("b^2 . p_i = [pt]") {
        GradedClass twice = t.cap(t.cap(GradedClass::single(4, "p2", 1)));
        CHECK(twice.same_class(GradedClass::single(0, "pt", 1)));
    }
    SECTION("the middle pairing is p_i . d_j = 1 exactly off the diagonal") {
        GradedPart p{{"p1", "p2"}, {1, 0}};
        GradedPart d_same{{"d1", "d2"}, {1, 0}};
        GradedPart d_other{{"d1", "d2"}, {0, 1}};
        CHECK(t.pair(4, p, d_same) == 0);
        CHECK(t.pair(4, p, d_other) == 1);
    }
}

TEST_CASE("tensor twist formula against the Chern-root expansion") {
    // rank k with formal roots r_1..r_k twisted by a line class a: the
    // degree-i part of prod (1 + r_i + a) must equal
    // sum_j binom(k-i+j, j) a^j e_{i-j}
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < k; ++i) vars.push_back("r" + std::to_string(i + 1));
        vars.push_back("a");
        MultiPoly product = MultiPoly::constant(vars, 1);
        for (std::size_t i = 0; i < k; ++i) {
            MultiPoly factor = MultiPoly::constant(vars, 1) + MultiPoly::variable(vars, i) +
                               MultiPoly::variable(vars, k);
            product = product * factor;
        }
        const MultiPoly a = MultiPoly::variable(vars, k);
        for (std::uint64_t i = 0; i <= 4; ++i) {
            MultiPoly expected = MultiPoly::zero(vars);
            for (std::size_t j = 0; j <= i; ++j) {
                const long long w = binom(static_cast<long long>(k) - static_cast<long long>(i) +
                                              static_cast<long long>(j),
                                          static_cast<unsigned>(j));
                if (w == 0) continue;
                MultiPoly term = elementary_symmetric(vars, k, static_cast<std::size_t>(i - j));
                for (std::size_t power = 0; power < j; ++power) term = term * a;
                expected = expected + term.scaled(w);
            }
            CHECK(degree_part(product, i) == expected);
        }
    }
}

TEST_CASE("tensor twist coefficients match the displayed rows") {
    // rows of the twist formula, as printed: coefficients of a^j c_{i-j}
    struct Row {
        std::size_t i;
        std::vector<std::pair<long long, unsigned>> entries; // (offset from k, j)
    };
    const std::vector<Row> rows{
        {1, {{-1, 0}, {0, 1}}},
        {2, {{-2, 0}, {-1, 1}, {0, 2}}},
        {3, {{-3, 0}, {-2, 1}, {-1, 2}, {0, 3}}},
        {4, {{-4, 0}, {-3, 1}, {-2, 2}, {-1, 3}, {0, 4}}},
    };
    for (long long k = 0; k <= 6; ++k) {
        for (const Row& row : rows) {
            for (std::size_t j = 0; j < row.entries.size(); ++j) {
                const long long implementation =
                    binom(k - static_cast<long long>(row.i) + static_cast<long long>(j),
                          static_cast<unsigned>(j));
                const auto [offset, q] = row.entries[j];
                CHECK(implementation == factorial_binom(k + offset, q));
            }
        }
    }
}

TEST_CASE("tensor_chern on tables") {
    SECTION("a trivial twist returns 1 + c_1 + c_2 + ...") {
        IntersectionTable t = builtin::verdier_cone_table();
        t.cap_hyperplane[6] = RationalMatrix(2, 1); // zero: a = 0
        t.cap_hyperplane[4] = RationalMatrix(2, 2);
        t.cap_hyperplane[2] = RationalMatrix(1, 2);
        BundleClassData bundle;
        bundle.rank_k = 5;
        bundle.classes = {GradedClass::single(4, "p1", 2), GradedClass::single(2, "d2", 3),
                          GradedClass::single(0, "pt", 4)};
        GradedClass total = tensor_chern(bundle, 3, t);
        GradedClass expected = t.fundamental() + bundle.classes[0] + bundle.classes[1] +
                               bundle.classes[2];
        CHECK(total.same_class(expected));
    }
    SECTION("zero input classes give the pure binomial expansion") {
        const IntersectionTable t = builtin::verdier_cone_table();
        BundleClassData bundle;
        bundle.rank_k = 4; // n + 1
        GradedClass total = tensor_chern(bundle, 3, t);
        // binom(4,1) a, binom(4,2) a^2, binom(4,3) a^3 capped into the table
        CHECK(total.coefficient(6, "X") == 1);
        CHECK(total.coefficient(4, "p1") == 4);
        CHECK(total.coefficient(2, "d1") == 6);
        CHECK(total.coefficient(0, "pt") == 8); // 4 * b^3 = 4 * 2 [pt]
    }
    SECTION("no part below degree zero is ever produced") {
        const IntersectionTable t = builtin::cusp_table();
        BundleClassData bundle;
        bundle.rank_k = 2;
        GradedClass total = tensor_chern(bundle, 1, t);
        for (const auto& [key, value] : total.support()) CHECK(key.first >= 0);
    }
}

TEST_CASE("Chern-Mather classes of the worked examples") {
    SECTION("quadric cone") {
        GradedClass n1;
        n1.add_term(4, "p1", 1);
        n1.add_term(4, "p2", 1);
        GradedClass n2;
        n2.add_term(2, "d1", 1);
        n2.add_term(2, "d2", 1);
        GradedClass mather =
            mather_from_polar({n1, n2}, 3, builtin::verdier_cone_table());
        GradedClass expected;
        expected.add_term(6, "X", 1);
        expected.add_term(4, "p1", 3);
        expected.add_term(4, "p2", 3);
        expected.add_term(2, "d1", 4);
        expected.add_term(2, "d2", 4);
        expected.add_term(0, "pt", 6);
        CHECK(mather.same_class(expected));
        CHECK(mather.all_integer());
    }
    SECTION("node: empty polar step, hyperplane class pt1 + pt2") {
        GradedClass empty_step = GradedClass::zero_in(0, {"pt1", "pt2"});
        GradedClass mather = mather_from_polar({empty_step}, 1, builtin::node_table());
        GradedClass expected;
        expected.add_term(2, "X", 1);
        expected.add_term(0, "pt1", 2);
        expected.add_term(0, "pt2", 2);
        CHECK(mather.same_class(expected));
    }
    SECTION("cusp: [X] + 3 [pt]") {
        GradedClass n1 = GradedClass::single(0, "pt", 3);
        GradedClass mather = mather_from_polar({n1}, 1, builtin::cusp_table());
        GradedClass expected;
        expected.add_term(2, "X", 1);
        expected.add_term(0, "pt", 3);
        CHECK(mather.same_class(expected));
        CHECK(mather.all_integer());
    }
    SECTION("misplaced degrees are rejected") {
        GradedClass wrong = GradedClass::single(2, "d1", 1); // should be degree 4
        CHECK_THROWS_AS(mather_from_polar({wrong}, 3, builtin::verdier_cone_table()),
                        precondition_error);
    }
}

TEST_CASE("CSM corrections for isolated singular points") {
    SECTION("vertex of the quadric cone, Euler obstruction 2") {
        GradedClass mather;
        mather.add_term(0, "pt", 6);
        mather.ensure_generator(0, "vertex");
        GradedClass csm = csm_isolated(mather, {{"vertex", 2}});
        CHECK(csm.coefficient(0, "vertex") == -1);
        CHECK(csm.coefficient(0, "pt") == 6);
    }
    SECTION("a smooth point changes nothing") {
        GradedClass mather = GradedClass::single(0, "pt", 3);
        CHECK(csm_isolated(mather, {{"pt", 1}}).same_class(mather));
    }
    SECTION("cusp: degree-0 coefficient drops to the Euler characteristic") {
        // the cuspidal cubic is homeomorphic to its normalization P^1, so
        // chi = 2; CSM degree zero must land exactly there
        GradedClass mather = GradedClass::single(0, "pt", 3);
        mather.add_term(2, "X", 1);
        GradedClass csm = csm_isolated(mather, {{"pt", 2}});
        CHECK(csm.coefficient(0, "pt") == 2);
        const long long chi_normalization = 2; // chi(P^1), one point over the cusp
        CHECK(csm.coefficient(0, "pt") == chi_normalization);
    }
    SECTION("unknown generator names are rejected") {
        GradedClass mather = GradedClass::single(0, "pt", 3);
        CHECK_THROWS_AS(csm_isolated(mather, {{"nowhere", 2}}), precondition_error);
    }
}
