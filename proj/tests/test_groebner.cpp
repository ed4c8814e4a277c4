#include <gtest/gtest.h>

#include "support.hpp"

using namespace nak;
using nak::testing::Random;
using nak::testing::S;

namespace {

NcPoly mono(std::size_t n, int i, int j, const char* c = "1") { return NcPoly(n, Word({i, j}), S(c)); }

std::vector<std::size_t> binomials(std::size_t n, std::size_t count, bool exterior) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < count; ++d) out.push_back(exterior ? detail::binomial(n, d) : detail::binomial(n + d - 1, n - 1));
    return out;
}

} // namespace

TEST(Complete, TwoGeneratorSkewRing) {
    const Presentation p(2, {mono(2, 2, 1) - mono(2, 1, 2, "2")}, AlgebraTag::Custom);
    const RewriteSystem rs = complete(p, 5);
    ASSERT_EQ(rs.rules().size(), 1u);
    EXPECT_EQ(rs.rules()[0].lead, Word({2, 1}));
    EXPECT_EQ(rs.rules()[0].tail, mono(2, 1, 2, "2"));
    EXPECT_EQ(rs.complete_to(), 5u);
    EXPECT_EQ(hilbert(rs).dims, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(Complete, SkewRingCaseIsAlreadyConfluent) {
    Params p(3, 2, nak::testing::M({{"1", "2", "-1"}, {"1/2", "1", "3"}, {"-1", "1/3", "1"}}), Matrix(3, 3));
    const RewriteSystem rs = complete(build_A(p), 6);
    EXPECT_EQ(rs.rules().size(), 3u);
}

TEST(Complete, RejectsTruncationBelowRelationDegree) {
    const Presentation p(2, {NcPoly(2, Word({1, 2, 1}))}, AlgebraTag::Custom);
    EXPECT_THROW(complete(p, 2), TruncationTooSmall);
    EXPECT_THROW(complete(build_A(nak::fixtures::ex2_1().params), 1), TruncationTooSmall);
}

TEST(Complete, InfiniteBasisIsTruncated) {
    // the braid relation g2 g1 g2 = g1 g2 g1 has an infinite basis, one new rule per degree
    const Presentation p(2, {NcPoly(2, Word({2, 1, 2})) - NcPoly(2, Word({1, 2, 1}))}, AlgebraTag::Custom);
    const RewriteSystem rs = complete(p, 7);
    for (std::size_t d = 4; d <= 7; ++d) EXPECT_LE(rs.rules_at_degree(d), divergence_cap(2));
    EXPECT_GT(rs.rules().size(), 1u);
    EXPECT_FALSE(find_unresolved_ambiguity(rs).has_value());
    EXPECT_EQ(divergence_cap(2), 40u);
}

TEST(Complete, InvariantsOfTheRuleSet) {
    for (const auto& f : nak::fixtures::all())
        for (AlgebraTag tag : {AlgebraTag::A, AlgebraTag::Dual, AlgebraTag::T1, AlgebraTag::T2}) {
            const RewriteSystem rs = complete(build_presentation(f.params, tag), 6);
            for (const auto& r : rs.rules()) {
                for (const auto& [w, c] : r.tail.terms()) EXPECT_LT(w, r.lead);
                for (const auto& other : rs.rules()) {
                    if (&other == &r) continue;
                    EXPECT_EQ(r.lead.key().find(other.lead.key()), std::string::npos) << r.lead.text() << " contains " << other.lead.text();
                }
                EXPECT_EQ(rs.reduce(r.tail), r.tail);
            }
            EXPECT_FALSE(find_unresolved_ambiguity(rs).has_value()) << f.name << " " << algebra_name(tag);
        }
}

TEST(Complete, Deterministic) {
    for (const auto& f : nak::fixtures::all())
        for (AlgebraTag tag : {AlgebraTag::A, AlgebraTag::Dual, AlgebraTag::T2}) {
            const std::string first = format_rules(complete(build_presentation(f.params, tag), 6));
            const std::string second = format_rules(complete(build_presentation(f.params, tag), 6));
            EXPECT_EQ(first, second);
        }
}

TEST(NormalForm, RelationsReduceToZero) {
    for (const auto& f : nak::fixtures::all())
        for (AlgebraTag tag : {AlgebraTag::A, AlgebraTag::Dual, AlgebraTag::T1, AlgebraTag::T2}) {
            const Presentation pres = build_presentation(f.params, tag);
            const RewriteSystem rs = complete(pres, 4);
            for (const auto& r : pres.relations()) EXPECT_TRUE(normal_form(rs, r).is_zero()) << f.name << " " << r.text();
        }
}

TEST(NormalForm, KnownReductions) {
    const RewriteSystem a = complete(build_A(nak::fixtures::ex2_1().params), 4);
    EXPECT_EQ(normal_form(a, mono(3, 3, 2)), mono(3, 2, 3, "2") + mono(3, 1, 1));

    // exterior-style dual, n = 2: x2 x1 -> -x1 x2, x2 x2 -> x1 x1 -> 0, so x2 x1 x2 -> -x1 x2 x2 -> 0
    const RewriteSystem e = complete(build_dual(nak::testing::trivial_params(2, 2)), 4);
    EXPECT_TRUE(normal_form(e, NcPoly(2, Word({2, 1, 2}))).is_zero());
    EXPECT_EQ(normal_form(e, mono(2, 2, 1)), mono(2, 1, 2, "-1"));
}

TEST(NormalForm, IsLinear) {
    Random rng(51);
    const RewriteSystem rs = complete(build_A(nak::fixtures::ex2_3().params), 5);
    for (int k = 0; k < 50; ++k) {
        NcPoly p(4), q(4);
        for (int t = 0; t < 4; ++t) {
            Word w, v;
            for (int l = 0; l < 3; ++l) {
                w.push_back(static_cast<std::size_t>(rng.integer(1, 4)));
                v.push_back(static_cast<std::size_t>(rng.integer(1, 4)));
            }
            p.add_term(w, rng.scalar());
            q.add_term(v, rng.scalar());
        }
        const Scalar a = rng.scalar();
        EXPECT_EQ(normal_form(rs, a * p + q), a * normal_form(rs, p) + normal_form(rs, q));
    }
}

TEST(NormalForm, RejectsDegreeBeyondTruncation) {
    const RewriteSystem rs = complete(build_A(nak::fixtures::ex2_1().params), 3);
    EXPECT_THROW(normal_form(rs, NcPoly(3, Word({1, 1, 1, 1}))), DegreeExceedsTruncation);
}

TEST(Hilbert, FixturesMatchClosedForms) {
    for (const auto& f : nak::fixtures::all()) {
        const std::size_t n = f.params.n;
        Workbench wb(f.params, 6);
        EXPECT_EQ(hilbert(wb.system(AlgebraTag::A)).dims, binomials(n, 6, false)) << f.name;
        EXPECT_EQ(hilbert(wb.system(AlgebraTag::T1)).dims, binomials(n, 6, false)) << f.name;
        EXPECT_EQ(hilbert(wb.system(AlgebraTag::Dual)).dims, binomials(n, 6, true)) << f.name;
        EXPECT_EQ(hilbert(wb.system(AlgebraTag::T2)).dims, expected_hilbert(AlgebraTag::T2, n, 6)) << f.name;
    }
}

TEST(Hilbert, KnownSequences) {
    Workbench wb(nak::fixtures::ex2_1().params, 5);
    EXPECT_EQ(hilbert(wb.system(AlgebraTag::A)).dims, (std::vector<std::size_t>{1, 3, 6, 10, 15}));
    EXPECT_EQ(hilbert(wb.system(AlgebraTag::T2)).dims, (std::vector<std::size_t>{1, 3, 4, 4, 4}));

    const RewriteSystem dual = complete(build_dual(nak::fixtures::ex2_2().params), 7);
    EXPECT_EQ(hilbert(dual).dims, (std::vector<std::size_t>{1, 4, 6, 4, 1, 0, 0}));
}

TEST(Hilbert, FreeAlgebraWithoutRelations) {
    const RewriteSystem rs = complete(Presentation(2, {}, AlgebraTag::Custom), 4);
    EXPECT_EQ(hilbert(rs).dims, (std::vector<std::size_t>{1, 2, 4, 8}));
}

TEST(Basis, NormalWordsInDescendingOrder) {
    const RewriteSystem t1 = complete(build_T1(nak::testing::trivial_params(2, 1)), 3);
    EXPECT_EQ(basis_at_degree(t1, 2), (std::vector<Word>{Word({2, 2}), Word({1, 2}), Word({1, 1})}));
    EXPECT_EQ(basis_at_degree(t1, 0), (std::vector<Word>{Word{}}));

    const RewriteSystem e = complete(build_dual(nak::testing::trivial_params(3, 3)), 5);
    EXPECT_EQ(basis_at_degree(e, 3).size(), 1u);
    EXPECT_THROW(basis_at_degree(e, 6), DegreeExceedsTruncation);
}

TEST(Hilbert, AgreesWithBruteForceRank) {
    Random rng(52);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        const std::size_t top = static_cast<std::size_t>(rng.integer(2, 4));
        const Presentation pres = nak::testing::random_presentation(rng, n == 1 ? 2 : n);
        const RewriteSystem rs = complete(pres, top);
        const HilbertFunction h = hilbert(rs);
        for (std::size_t d = 0; d < h.dims.size(); ++d)
            EXPECT_EQ(h.dims[d], nak::testing::brute_force_dimension(pres, d)) << "case " << k << " degree " << d;
        EXPECT_EQ(basis_at_degree(rs, top).size(), nak::testing::brute_force_dimension(pres, top)) << "case " << k;
    }
}
