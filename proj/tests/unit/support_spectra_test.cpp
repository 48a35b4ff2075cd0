#include <random>

#include <gtest/gtest.h>

#include "../oracles.hpp"

using namespace qwalk;

namespace {

std::vector<std::pair<std::string, graph>> connected_regular() {
    return {{"C3", generators::cycle(3)},
            {"C5", generators::cycle(5)},
            {"K4", generators::complete(4)},
            {"K5", generators::complete(5)},
            {"K33", generators::complete_bipartite(3, 3)},
            {"petersen", generators::petersen()},
            {"Q3", generators::hypercube(3)},
            {"circulant8", generators::circulant(8, {1, 3})},
            {"circulant7", generators::circulant(7, {1, 2})},
            {"paley13", generators::paley(13)}};
}

polynomial from_roots(std::initializer_list<long long> roots) {
    polynomial p = polynomial::constant(1);
    for (long long r : roots)
        p *= polynomial::linear_root(r);
    return p;
}

std::size_t multiplicity_of(const closed_form_spectrum& s, long long v) {
    std::size_t m = 0;
    for (const auto& r : s.rationals)
        if (r.value == v)
            m += r.multiplicity;
    return m;
}

const quadratic_pair* pair_for(const closed_form_spectrum& s, long long lambda) {
    for (const auto& p : s.pairs)
        if (p.exact() && *p.lambda_exact == lambda)
            return &p;
    return nullptr;
}

} // namespace

TEST(SupportU, C3IsTwoDirectedTriangles) {
    const arc_space a(generators::cycle(3));
    const int_matrix s = support_u(a);
    EXPECT_EQ(mat_pow(s, 3), int_matrix::identity(6));
    EXPECT_NE(s, int_matrix::identity(6));
    for (std::size_t i = 0; i < 6; ++i) {
        big_int row = 0;
        for (const auto& x : s.row(i))
            row += x;
        EXPECT_EQ(row, 1);
    }
}

TEST(SupportU, RowSums) {
    for (const auto& [name, g] : connected_regular()) {
        const arc_space a(g);
        const long long k = static_cast<long long>(a.valency());
        const int_matrix s1 = support_u(a);
        const int_matrix s2 = support_u_power(a, 2);
        for (std::size_t i = 0; i < a.size(); ++i) {
            big_int r1 = 0, r2 = 0;
            for (std::size_t j = 0; j < a.size(); ++j) {
                r1 += s1(i, j);
                r2 += s2(i, j);
            }
            EXPECT_EQ(r1, k - 1) << name;
            if (k > 2)
                EXPECT_EQ(r2, (k - 1) * (k - 1) + 1) << name;
        }
    }
}

TEST(SupportU, RejectsValencyOne) {
    EXPECT_THROW(support_u(arc_space(generators::complete(2))), valency_error);
}

TEST(SupportU, EqualsLineDigraphMinusReversal) {
    for (const auto& [name, g] : connected_regular()) {
        const arc_space a(g);
        EXPECT_EQ(support_u(a), line_digraph_matrix(a) - reversal_matrix(a)) << name;
    }
}

TEST(SupportUSquared, IdentityForKAboveTwo) {
    for (const auto& [name, g] : connected_regular()) {
        const arc_space a(g);
        if (a.valency() <= 2)
            continue;
        const int_matrix direct = support_u_power(a, 2);
        EXPECT_EQ(su2_via_identity(a), direct) << name;
        const int_matrix s1 = support_u(a);
        EXPECT_EQ(direct, mat_mul(s1, s1) + int_matrix::identity(a.size())) << name;
        const auto w = oracle::transition_from_arcs(a);
        EXPECT_EQ(oracle::to_dense(direct), oracle::sign_pattern(oracle::multiply(w, w))) << name;
    }
}

TEST(SupportUSquared, CyclesFollowTheNonBacktrackingSquare) {
    for (std::size_t n : {3, 4, 5, 6}) {
        const arc_space a(generators::cycle(n));
        const int_matrix s1 = support_u(a);
        const int_matrix direct = support_u_power(a, 2);
        // W = 2 S+(U) at k = 2, so sign(W^2) is the pattern of S+(U)^2.
        EXPECT_EQ(direct, positive_support(mat_mul(s1, s1)));
        EXPECT_NE(direct, mat_mul(s1, s1) + int_matrix::identity(a.size()));
        // The square of outs^T ins also reaches backtracking walks, which W^2 does not.
        const int_matrix l = line_digraph_matrix(a);
        EXPECT_NE(direct, positive_support(mat_mul(l, l)));
        EXPECT_THROW(su2_via_identity(a), hypothesis_error);
    }
}

TEST(SupportUSquared, K2HypothesisMessageNamesK) {
    try {
        su2_via_identity(arc_space(generators::cycle(4)));
        FAIL();
    } catch (const hypothesis_error& e) {
        EXPECT_NE(std::string(e.what()).find("k=2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("k > 2"), std::string::npos);
    }
}

TEST(SupportUCubed, PetersenIsRelabelInvariant) {
    const graph g = generators::petersen();
    const polynomial ref = char_poly(support_u_power(arc_space(g), 3));
    std::mt19937_64 rng(12);
    for (int t = 0; t < 5; ++t) {
        const arc_space a(relabel(g, oracle::random_permutation(10, rng)));
        const int_matrix s3 = support_u_power(a, 3);
        EXPECT_EQ(s3.rows(), 30u);
        EXPECT_EQ(char_poly(s3), ref);
    }
}

TEST(ClosedForm, K4) {
    const auto s = closed_form_spectrum_su(generators::complete(4));
    EXPECT_EQ(multiplicity_of(s, 2), 1u);
    EXPECT_EQ(multiplicity_of(s, 1), 3u);
    EXPECT_EQ(multiplicity_of(s, -1), 2u);
    const auto* p = pair_for(s, -1);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->multiplicity, 3u);
    EXPECT_EQ(p->quadratic(), (polynomial{2, 1, 1}));
    auto [a, b] = p->roots();
    EXPECT_NEAR(a.real(), -0.5, 1e-12);
    EXPECT_NEAR(std::abs(a.imag()), std::sqrt(7.0) / 2, 1e-12);
    EXPECT_NEAR(std::norm(a), 2.0, 1e-12);
    EXPECT_NEAR(std::norm(b), 2.0, 1e-12);
    EXPECT_EQ(s.total_multiplicity(), 12u);
}

TEST(ClosedForm, Petersen) {
    const auto s = closed_form_spectrum_su(generators::petersen());
    EXPECT_EQ(multiplicity_of(s, 2), 1u);
    EXPECT_EQ(multiplicity_of(s, 1), 6u);
    EXPECT_EQ(multiplicity_of(s, -1), 5u);
    ASSERT_NE(pair_for(s, 1), nullptr);
    ASSERT_NE(pair_for(s, -2), nullptr);
    EXPECT_EQ(pair_for(s, 1)->multiplicity, 5u);
    EXPECT_EQ(pair_for(s, -2)->multiplicity, 4u);
    EXPECT_EQ(pair_for(s, -2)->quadratic(), (polynomial{2, 2, 1}));
    EXPECT_EQ(s.total_multiplicity(), 30u);
}

TEST(ClosedForm, C3) {
    const auto s = closed_form_spectrum_su(generators::cycle(3));
    EXPECT_EQ(multiplicity_of(s, 1), 2u);
    EXPECT_EQ(multiplicity_of(s, -1), 0u);
    EXPECT_EQ(s.expanded_polynomial(), poly_pow(from_roots({1}), 2) * poly_pow(polynomial{1, 1, 1}, 2));
    EXPECT_EQ(s.expanded_polynomial(), (polynomial{1, 0, 0, -2, 0, 0, 1}));
}

TEST(ClosedForm, MatchesCharPoly) {
    for (const auto& [name, g] : connected_regular()) {
        const arc_space a(g);
        const auto s = closed_form_spectrum_su(g);
        EXPECT_EQ(s.expanded_polynomial(), char_poly(support_u(a))) << name;
        EXPECT_EQ(s.total_multiplicity(), a.size()) << name;
        EXPECT_EQ(s.trace(), 0) << name;
        EXPECT_EQ(support_u(a).trace(), 0) << name;
    }
}

TEST(ClosedForm, IrrationalEigenvaluesAreExact) {
    // C5 and C7 circulants have adjacency eigenvalues 2cos(2 pi j/n).
    for (const graph& g : {generators::cycle(5), generators::circulant(7, {1, 2})}) {
        const auto s = closed_form_spectrum_su(g);
        EXPECT_GT(s.irrational_lambdas.degree(), 0);
        EXPECT_EQ(s.expanded_polynomial(), char_poly(support_u(arc_space(g))));
        if (s.k > 2) {
            const auto s2 = closed_form_spectrum_su2(g);
            EXPECT_EQ(s2.expanded_polynomial(), char_poly(support_u_power(arc_space(g), 2)));
        }
    }
}

TEST(ClosedForm, ComplexPairsHaveModulusSqrtKMinusOne) {
    for (const auto& [name, g] : connected_regular()) {
        const auto s = closed_form_spectrum_su(g);
        for (const auto& p : s.pairs) {
            if (!p.complex_pair())
                continue;
            auto [a, b] = p.roots();
            EXPECT_NEAR(std::norm(a), static_cast<double>(s.k - 1), 1e-9) << name;
            EXPECT_NEAR(std::norm(b), static_cast<double>(s.k - 1), 1e-9) << name;
            if (p.exact())
                EXPECT_EQ(p.root_product(), big_int(s.k) - 1);
        }
    }
}

TEST(ClosedForm, NumericRootsMatchCharPoly) {
    for (const auto& [name, g] : connected_regular()) {
        const auto s = closed_form_spectrum_su(g);
        const auto roots = polynomial_roots(char_poly(support_u(arc_space(g))));
        EXPECT_LT(match_spectra(roots, s.eigenvalues()), 1e-6) << name;
    }
}

TEST(ClosedForm, HypothesisErrors) {
    EXPECT_THROW(closed_form_spectrum_su(disjoint_union(generators::cycle(3), generators::cycle(3))),
                 hypothesis_error);
    EXPECT_THROW(closed_form_spectrum_su(generators::complete_bipartite(2, 3)), hypothesis_error);
    EXPECT_THROW(closed_form_spectrum_su(generators::complete(2)), hypothesis_error);
    EXPECT_THROW(closed_form_spectrum_su2(generators::cycle(5)), hypothesis_error);
}

TEST(ClosedFormSquared, K4AndPetersen) {
    for (const graph& g : {generators::complete(4), generators::petersen()}) {
        const auto s = closed_form_spectrum_su2(g);
        const std::size_t n = g.order();
        EXPECT_EQ(multiplicity_of(s, 5), 1u);
        EXPECT_EQ(multiplicity_of(s, 2), n + 1);
        EXPECT_EQ(s.total_multiplicity(), 3 * n);
        EXPECT_EQ(s.expanded_polynomial(), char_poly(support_u_power(arc_space(g), 2)));
    }
}

TEST(ClosedFormSquared, TopEigenvalue) {
    for (std::size_t k : {3, 4, 5}) {
        const auto s = closed_form_spectrum_su2(generators::complete(k + 1));
        EXPECT_EQ(multiplicity_of(s, static_cast<long long>(k * k - 2 * k + 2)), 1u);
    }
}

TEST(ClosedFormSquared, PairImagesUseHalfCoefficient) {
    for (const auto& [name, g] : connected_regular()) {
        if (*is_regular(g) <= 2)
            continue;
        const auto s = closed_form_spectrum_su2(g);
        EXPECT_EQ(multiplicity_of(s, 2), g.order() * (s.k - 2) + 1) << name;
        EXPECT_EQ(s.expanded_polynomial(), char_poly(support_u_power(arc_space(g), 2))) << name;
        EXPECT_EQ(s.trace(), big_rational(support_u_power(arc_space(g), 2).trace())) << name;
        for (const auto& p : s.pairs) {
            if (!p.exact())
                continue;
            const big_rational l(*p.lambda_exact), kk(s.k);
            auto [a, b] = p.roots();
            const big_rational centre = (l * l - 2 * kk + 4) / 2;
            EXPECT_NEAR((a + b).real() / 2, centre.convert_to<double>(), 1e-9) << name;
        }
    }
}

TEST(Ihara, KnownGraphs) {
    const polynomial c3 = ihara_polynomial(char_poly(adjacency_matrix(generators::cycle(3))), 3, 2);
    EXPECT_EQ(c3, (polynomial{1, 0, 0, -2, 0, 0, 1}));
    for (const auto& [name, g] : connected_regular())
        EXPECT_TRUE(char_poly_identity_check(g)) << name;
}
