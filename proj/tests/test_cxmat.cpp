#include <gtest/gtest.h>

#include <random>

#include "qscatter/cxmat.hpp"

using namespace qscatter;

namespace {

const Complex I{0.0, 1.0};

CMat random_matrix(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = {u(rng), u(rng)};
    }
    return m;
}

// Diagonally dominated so the condition number stays modest.
CMat well_conditioned(std::mt19937_64& rng, std::size_t dim) {
    CMat m = random_matrix(rng, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) += 3.0;
    return m;
}

}  // namespace

TEST(CMat, IdentityProduct) {
    EXPECT_EQ(max_abs_diff(mul(CMat::identity(4), CMat::identity(4)), CMat::identity(4)), 0.0);
}

TEST(CMat, DiagonalProduct) {
    const CMat prod = mul(CMat::diag({2.0, 2.0}), CMat::diag({3.0, 3.0}));
    EXPECT_EQ(max_abs_diff(prod, CMat::diag({6.0, 6.0})), 0.0);
}

TEST(CMat, PauliYSquaresToIdentity) {
    EXPECT_EQ(max_abs_diff(pauli_y() * pauli_y(), CMat::identity(2)), 0.0);
}

TEST(CMat, MulRejectsMixedDimensions) {
    try {
        mul(CMat::identity(2), CMat::identity(4));
        FAIL() << "expected DimensionMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(CMat, OnlyDimensionsTwoAndFour) {
    EXPECT_THROW(CMat(3), Error);
    EXPECT_THROW(CMat(2, {1.0, 2.0, 3.0}), Error);
}

TEST(CMat, AdjointConjugatesAndTransposes) {
    const CMat a(2, {I, 0.0, 0.0, 0.0});
    EXPECT_EQ(adjoint(a)(0, 0), -I);
    EXPECT_EQ(max_abs_diff(adjoint(pauli_y()), pauli_y()), 0.0);

    const CMat b(2, {1.0, 2.0 * I, 3.0, 4.0});
    const CMat bd = adjoint(b);
    EXPECT_EQ(bd(0, 1), Complex(3.0));
    EXPECT_EQ(bd(1, 0), -2.0 * I);
}

TEST(CMat, Det2) {
    EXPECT_EQ(det2(CMat::identity(2)), Complex(1.0));
    EXPECT_EQ(det2(pauli_y()), Complex(-1.0));
    EXPECT_THROW(det2(CMat::identity(4)), Error);
}

TEST(CMat, InverseOfSimpleMatrices) {
    EXPECT_EQ(max_abs_diff(inverse(CMat::identity(4)), CMat::identity(4)), 0.0);
    EXPECT_EQ(max_abs_diff(inverse(CMat::diag({2.0, 2.0, 2.0, 2.0})), CMat::diag({0.5, 0.5, 0.5, 0.5})), 0.0);
}

TEST(CMat, InverseNeedsPivoting) {
    const CMat a(2, {0.0, 1.0, 1.0, 0.0});
    EXPECT_EQ(max_abs_diff(inverse(a), a), 0.0);
}

TEST(CMat, SingularMatrixIsRejected) {
    const CMat rank_one(2, {1.0, 2.0, 2.0, 4.0});
    try {
        inverse(rank_one);
        FAIL() << "expected SingularMatrix";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    }
    EXPECT_THROW(inverse(CMat(4)), Error);
    // Relative threshold: a tiny pivot next to a large entry counts as singular.
    EXPECT_THROW(inverse(CMat::diag({1.0, 1e-14})), Error);
    EXPECT_NO_THROW(inverse(CMat::diag({1e-20, 1e-20})));
}

TEST(CMat, NonFiniteEntriesAreRejected) {
    EXPECT_THROW(CMat(2, {std::numeric_limits<double>::infinity(), 0.0, 0.0, 1.0}), Error);
    const CMat big = CMat::diag({1e300, 1e300});
    try {
        mul(big, big);
        FAIL() << "expected NonFinite";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
    }
}

TEST(CMat, BlocksRoundTrip) {
    std::mt19937_64 rng(11);
    const CMat m = random_matrix(rng, 4);
    const CMat back = from_blocks(block(m, 0, 0), block(m, 0, 1), block(m, 1, 0), block(m, 1, 1));
    EXPECT_EQ(max_abs_diff(m, back), 0.0);
    EXPECT_EQ(block(m, 1, 0)(1, 0), m(3, 0));
}

TEST(CMatProperty, InverseResidual) {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = trial % 2 ? 4 : 2;
        const CMat a = well_conditioned(rng, dim);
        EXPECT_LT(max_abs_diff(a * inverse(a), CMat::identity(dim)), 1e-12);
        EXPECT_LT(max_abs_diff(inverse(a) * a, CMat::identity(dim)), 1e-12);
    }
}

TEST(CMatProperty, AdjointInvolutionAndProductRule) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const CMat a = random_matrix(rng, 4);
        const CMat b = random_matrix(rng, 4);
        EXPECT_EQ(max_abs_diff(adjoint(adjoint(a)), a), 0.0);
        EXPECT_EQ(max_abs_diff(transpose(transpose(a)), a), 0.0);
        EXPECT_LT(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)), 1e-13);
    }
}

TEST(CMatProperty, Associativity) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const CMat a = random_matrix(rng, 4);
        const CMat b = random_matrix(rng, 4);
        const CMat c = random_matrix(rng, 4);
        EXPECT_LT(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
    }
}
