#include "g2k/exact.hpp"
#include "g2k/torus.hpp"
#include "random_rational.hpp"

#include <gtest/gtest.h>

using namespace g2k;

namespace {

ZMat random_int_matrix(sampling::RationalSampler& s, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    ZMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = s.integer(lo, hi);
    return m;
}

bool unimodular(const ZMat& m) {
    Rational d = det(to_q(m));
    return d == 1 || d == -1;
}

}  // namespace

TEST(Exact, RrefKernelRank) {
    QMat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(m), 2u);
    QMat k = kernel(m);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((m * k).is_zero());
}

TEST(Exact, DeterminantAndInverse) {
    QMat m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    EXPECT_EQ(det(m), Rational(18));
    EXPECT_EQ(m * inverse(m), QMat::identity(3));
    QMat sing{{1, 2}, {2, 4}};
    EXPECT_THROW(inverse(sing), std::domain_error);
}

TEST(Exact, SmithNormalFormOnRandomMatrices) {
    sampling::RationalSampler s(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = s.integer(1, 5), c = s.integer(1, 5);
        ZMat a = random_int_matrix(s, r, c);
        Smith snf = smith_normal_form(a);
        EXPECT_EQ(snf.P * a * snf.Q, snf.D);
        EXPECT_TRUE(unimodular(snf.P));
        EXPECT_TRUE(unimodular(snf.Q));
        EXPECT_EQ(snf.rank, rank(to_q(a)));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) EXPECT_EQ(snf.D(i, j), 0);
        for (std::size_t i = 0; i + 1 < snf.rank; ++i) EXPECT_EQ(snf.diag(i + 1) % snf.diag(i), 0);
        for (std::size_t i = 0; i < snf.rank; ++i) EXPECT_GT(snf.diag(i), 0);
    }
}

TEST(Exact, SmithKnownInvariants) {
    ZMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    Smith snf = smith_normal_form(a);
    EXPECT_EQ(snf.diag(0), 2);
    EXPECT_EQ(snf.diag(1), 6);
    EXPECT_EQ(snf.diag(2), 12);
}

TEST(Exact, UnimodularCompletion) {
    for (const ZVec& v : {ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{2, 3, 5}, ZVec{-1, 1, 1}, ZVec{4, -6, 9}}) {
        ZMat u = unimodular_completion(v);
        EXPECT_TRUE(unimodular(u));
        EXPECT_EQ(u.col(0), v);
    }
    EXPECT_THROW(unimodular_completion(ZVec{2, 4, 0}), std::invalid_argument);
}

TEST(Exact, HermiteFormIsLatticeInvariant) {
    sampling::RationalSampler s(11);
    for (int trial = 0; trial < 100; ++trial) {
        ZMat m = random_int_matrix(s, 2, 4);
        ZMat u = random_int_matrix(s, 2, 2, -2, 2);
        if (!unimodular(u)) continue;
        EXPECT_EQ(hermite_normal_form(m), hermite_normal_form(u * m));
    }
}

TEST(Torus, FixedSubtoriOfCoordinateInvolution) {
    // x -> -x + (1/2, 0): fixed set solves -2x = -t mod 1 in each coordinate
    AffineZ g{ZMat{{-1, 0}, {0, -1}}, {Rational(1, 2), 0}};
    auto f = fixed_subtori(g);
    EXPECT_EQ(f.size(), 4u);
    for (const auto& c : f) {
        EXPECT_EQ(c.dim(), 0u);
        EXPECT_TRUE(is_integral(sub(g.apply(c.offset), c.offset)));
    }
    AffineZ glide{ZMat{{1, 0}, {0, -1}}, {Rational(1, 2), 0}};
    EXPECT_TRUE(fixed_subtori(glide).empty());
}

TEST(Torus, SubtorusKeysIdentifyCosets) {
    Subtorus a{ZMat{{1}, {1}}, {Rational(1, 3), 0}};
    Subtorus b{ZMat{{-1}, {-1}}, {Rational(4, 3) + 5, 1}};
    EXPECT_TRUE(same_subtorus(a, b));
    Subtorus c{ZMat{{1}, {1}}, {Rational(1, 2), 0}};
    EXPECT_FALSE(same_subtorus(a, c));
    EXPECT_FALSE(intersects(a, c));
    Subtorus d{ZMat{{1}, {0}}, {0, 0}};
    EXPECT_TRUE(intersects(a, d));
    EXPECT_TRUE(contains(a, {Rational(4, 3) + 2, Rational(1)}));
}

TEST(Torus, GroupClosure) {
    AffineZ g{ZMat{{0, -1}, {1, 0}}, {0, 0}};
    EXPECT_EQ(generate_group({g}, 2).size(), 4u);
    AffineZ shift{ZMat::identity(2), {Rational(1, 2), 0}};
    EXPECT_EQ(generate_group({shift}, 2).size(), 2u);
    EXPECT_EQ(generate_group({}, 2).size(), 1u);
}
