#include "g2k/flat_orbifold.hpp"
#include "example_groups.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace g2k;
using namespace g2k::sampling;

TEST(FlatOrbifold, PhiPreservation) {
    G2Form f = G2Form::standard();
    auto g = involution_group();
    for (const auto& h : g.generators) EXPECT_TRUE(preserves_phi(h, f));
    EXPECT_TRUE(preserves_phi(involution_symmetry(), f));
    ZMat swap = ZMat::identity(7);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    EXPECT_FALSE(preserves_phi({swap, QVec(7, Rational(0))}, f));
}

TEST(FlatOrbifold, QuotientGroupOrders) {
    auto g = involution_group();
    EXPECT_EQ(quotient_group_elements(g).size(), 8u);
    EXPECT_EQ(quotient_group_elements({{g.generators[0]}, {"iota1"}}).size(), 2u);
    EXPECT_EQ(quotient_group_elements({}).size(), 1u);
}

TEST(FlatOrbifold, SingleInvolution) {
    auto s = singular_components({{involution_group().generators[0]}, {"iota1"}});
    EXPECT_EQ(s.components.size(), 16u);
    EXPECT_TRUE(s.flags.empty());
    for (const auto& c : s.components) {
        EXPECT_EQ(c.dim(), 3u);
        EXPECT_EQ(c.isotropy, "C2");
        EXPECT_EQ(c.lifts.size(), 1u);
    }
    EXPECT_TRUE(singular_components({}).components.empty());
}

TEST(FlatOrbifold, InvolutionGroupComponents) {
    auto g = involution_group();
    auto s = singular_components(g);
    ASSERT_EQ(s.components.size(), 12u);
    EXPECT_EQ(s.lifted_count(), 48u);
    EXPECT_TRUE(s.flags.empty());
    std::map<std::string, int> strata;
    for (const auto& c : s.components) {
        ++strata[c.stratum];
        EXPECT_EQ(c.dim(), 3u);
        EXPECT_EQ(c.isotropy, "C2");
        EXPECT_EQ(c.lifts.size(), 4u);
        EXPECT_EQ(c.stabilizer.size(), 2u);
        auto lm = local_model(g, c);
        EXPECT_EQ(lm.gamma, "C2");
        EXPECT_EQ(lm.g_alpha, BieberbachClass::Trivial);
        EXPECT_TRUE(lm.rho_trivial);
    }
    EXPECT_EQ(strata, (std::map<std::string, int>{{"A1", 4}, {"A2", 4}, {"A3", 4}}));
    EXPECT_EQ(s.components.front().id, "A1.1");
}

TEST(FlatOrbifold, SymmetryActionOnComponents) {
    auto g = involution_group();
    auto s = singular_components(g);
    G2Form f = G2Form::standard();
    auto act = symmetry_action_on_components(g, s, involution_symmetry(), f);
    EXPECT_EQ(act.fixed.size(), 12u);
    EXPECT_TRUE(act.swapped.empty());
    EXPECT_EQ(act.lifted_total, 48u);
    EXPECT_EQ(act.lifted_fixed, 16u);
    EXPECT_EQ(act.lifted_two_cycles, 16u);

    auto id = symmetry_action_on_components(g, s, AffineZ::identity(7), f);
    for (std::size_t i = 0; i < id.permutation.size(); ++i) EXPECT_EQ(id.permutation[i], i);

    ZMat swap = ZMat::identity(7);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    EXPECT_THROW(symmetry_action_on_components(g, s, {swap, QVec(7, Rational(0))}, f), std::invalid_argument);
}

TEST(FlatOrbifold, TangentActionAndQuotient) {
    auto g = involution_group();
    auto s = singular_components(g);
    const auto& c = s.components.front();
    ASSERT_EQ(c.stratum, "A1");
    AffineIsometry k = tangent_action(c, involution_symmetry());
    EXPECT_EQ(k.rot, (ZMat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    auto flat = make_bieberbach(BieberbachClass::Trivial, Lattice::cubic());
    auto q = quotient_action_matrix(flat, ZVec{1, 0, 0}, k);
    EXPECT_EQ(q.matrix, (ZMat{{-1, 0}, {0, -1}}));
    EXPECT_EQ(q.invariant_dim, 0u);
}

TEST(FlatOrbifold, CompleteBasis) {
    ZMat d{{1, 0}, {1, 1}, {0, 2}};
    ZMat u = complete_basis(d);
    Rational dt = det(to_q(u));
    EXPECT_TRUE(dt == 1 || dt == -1);
    EXPECT_EQ(u.col(0), d.col(0));
    EXPECT_THROW(complete_basis(ZMat{{2}, {0}}), std::invalid_argument);
}
