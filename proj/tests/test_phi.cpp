#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cyclenum/homo_poly.hpp"
#include "cyclenum/phi.hpp"

using namespace cyclenum;

namespace {

HomoPoly random_sparse(std::mt19937_64& rng, int m, int d, int terms) {
    HomoPoly p(m, d);
    std::uniform_int_distribution<std::size_t> cell(0, p.size() - 1);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    for (int t = 0; t < terms; ++t) p.coefficients()[cell(rng)] += coeff(rng);
    return p;
}

PhiIndices random_indices(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> pick(1, m);
    PhiIndices idx{pick(rng), pick(rng), pick(rng)};
    while (idx.c == idx.b) idx.c = pick(rng);
    return idx;
}

}  // namespace

TEST(HomoPoly, DenseLayout) {
    EXPECT_EQ(HomoPoly::cell_count(3, 3), 10u);
    EXPECT_EQ(HomoPoly::cell_count(4, 3), 20u);
    const HomoPoly p(4, 5);
    const auto exps = p.exponent_list();
    ASSERT_EQ(exps.size(), p.size());
    for (std::size_t t = 0; t < exps.size(); ++t) {
        EXPECT_EQ(p.index_of(exps[t]), t);
        EXPECT_EQ(p.exponents_at(t), exps[t]);
        EXPECT_EQ(exps[t][0] + exps[t][1] + exps[t][2] + exps[t][3], 5);
    }
    EXPECT_EQ(exps.front(), (Exponents{0, 0, 0, 5}));
    EXPECT_EQ(exps.back(), (Exponents{5, 0, 0, 0}));
}

TEST(HomoPoly, Arithmetic) {
    auto p = HomoPoly::monomial({1, 1, 0, 0}, 3, 4);
    p += HomoPoly::monomial({0, 2, 0, 0}, 3, 3);
    EXPECT_EQ(p.sum(), 7);
    EXPECT_EQ(p.coefficient({1, 1, 0, 0}), 4);
    EXPECT_EQ(p.coefficient({9, 0, 0, 0}), 0);
    EXPECT_THROW(p += HomoPoly(3, 1), std::invalid_argument);
    EXPECT_TRUE(HomoPoly(2, 4).is_zero());
}

TEST(Phi, HandExpandedExamples) {
    // Phi_{3,1,2}(1) = X3
    EXPECT_EQ(phi({3, 1, 2}, HomoPoly::constant(3, 1)), HomoPoly::monomial({0, 0, 1, 0}, 3));
    // Phi_{1,2,3}(X2 X3) = X1^2 (X2 + X3)
    auto expected = HomoPoly::monomial({2, 1, 0, 0}, 3) + HomoPoly::monomial({2, 0, 1, 0}, 3);
    EXPECT_EQ(phi({1, 2, 3}, HomoPoly::monomial({0, 1, 1, 0}, 3)), expected);
    // Phi_{1,1,3}(1) = X1
    EXPECT_EQ(phi({1, 1, 3}, HomoPoly::constant(3, 1)), HomoPoly::monomial({1, 0, 0, 0}, 3));
    // Phi_{1,1,2}(X1 X2^2) = X1^2 (X1^2 + X1 X2 + X2^2)
    expected = HomoPoly::monomial({4, 0, 0, 0}, 2) + HomoPoly::monomial({3, 1, 0, 0}, 2) + HomoPoly::monomial({2, 2, 0, 0}, 2);
    EXPECT_EQ(phi({1, 1, 2}, HomoPoly::monomial({1, 2, 0, 0}, 2)), expected);
}

TEST(Phi, RejectsBadIndices) {
    const auto p = HomoPoly::constant(3, 1);
    EXPECT_THROW(phi({1, 2, 2}, p), std::invalid_argument);
    EXPECT_THROW(phi_prefix({4, 1, 2}, p), std::invalid_argument);
    EXPECT_THROW(phi_index_form({0, 1, 2}, p), std::invalid_argument);
}

TEST(Phi, FormsAgreeOnAllSmallMonomials) {
    for (int m = 2; m <= 4; ++m) {
        for (int d = 0; d <= 5; ++d) {
            for (const auto& e : HomoPoly(m, d).exponent_list()) {
                const auto mono = HomoPoly::monomial(e, m);
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b)
                        for (int c = 1; c <= m; ++c) {
                            if (b == c) continue;
                            const auto expanded = phi({a, b, c}, mono);
                            ASSERT_EQ(expanded, phi_index_form({a, b, c}, mono)) << m << ' ' << d << ' ' << a << b << c;
                            ASSERT_EQ(expanded, phi_prefix({a, b, c}, mono)) << m << ' ' << d << ' ' << a << b << c;
                        }
            }
        }
    }
}

TEST(Phi, FormsAgreeOnRandomSparsePolynomials) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 8), vars(2, 4), terms(1, 12);
    for (int trial = 0; trial < 1200; ++trial) {
        const int m = trial < 600 ? 4 : vars(rng);
        const auto p = random_sparse(rng, m, deg(rng), terms(rng));
        const auto idx = random_indices(rng, m);
        const auto expanded = phi(idx, p);
        ASSERT_EQ(expanded, phi_index_form(idx, p)) << "trial " << trial;
        ASSERT_EQ(expanded, phi_prefix(idx, p)) << "trial " << trial;
    }
}

TEST(Phi, RaisesDegreeByOne) {
    std::mt19937_64 rng(11);
    for (int m = 2; m <= 4; ++m) {
        for (int d = 0; d <= 10; ++d) {
            const auto p = random_sparse(rng, m, d, 6);
            const auto idx = random_indices(rng, m);
            for (auto kernel : {PhiKernel::Prefix, PhiKernel::Expand, PhiKernel::IndexForm}) {
                const auto image = apply_phi(kernel, idx, p);
                EXPECT_EQ(image.degree(), d + 1);
                EXPECT_EQ(image.variables(), m);
            }
        }
    }
}

TEST(Phi, IsLinear) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 2 + trial % 3;
        const int d = trial % 9;
        const auto p = random_sparse(rng, m, d, 8);
        const auto q = random_sparse(rng, m, d, 8);
        const auto idx = random_indices(rng, m);
        ASSERT_EQ(phi_prefix(idx, p + q), phi_prefix(idx, p) + phi_prefix(idx, q));
        ASSERT_EQ(phi(idx, p + q), phi(idx, p) + phi(idx, q));
    }
}

TEST(Phi, PreservesCoefficientSumOnNonNegativeInput) {
    // each monomial X^e maps to i_c + 1 monomials, all with the same coefficient
    const auto mono = HomoPoly::monomial({2, 1, 3, 0}, 4, 5);
    EXPECT_EQ(phi({4, 2, 3}, mono).sum(), 5 * 4);
    EXPECT_EQ(phi({4, 3, 2}, mono).sum(), 5 * 2);
}
