#include "g2k/ale_deformation.hpp"
#include "fixed_locus_oracle.hpp"
#include "random_rational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace g2k;

namespace {

const QMat R2{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
const QMat Rminus{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};

ImVec iv(Rational a, Rational b, Rational c) { return {a, b, c}; }

}  // namespace

TEST(GibbonsHawking, ConfigValidation) {
    EXPECT_THROW(GHConfig::make({iv(1, 0, 0)}), std::invalid_argument);
    EXPECT_THROW(GHConfig::make({iv(1, 0, 0), iv(1, 0, 0)}), std::invalid_argument);
    EXPECT_NO_THROW(GHConfig::make({iv(1, 0, 0), iv(-1, 0, 0)}));
}

TEST(GibbonsHawking, ExactPotential) {
    auto c = GHConfig::make({iv(0, 0, 0), iv(0, 0, 0)});
    auto v = gh_potential(c, iv(3, 4, 0));
    ASSERT_TRUE(v.exact);
    EXPECT_EQ(*v.exact, Rational(1, 5));
    auto c2 = GHConfig::make({iv(1, 0, 0), iv(-1, 0, 0)});
    EXPECT_FALSE(gh_potential(c2, iv(0, 1, 0)).exact);
    EXPECT_NEAR(gh_potential(c2, iv(0, 1, 0)).value, 1 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(gh_potential(c2, iv(1, 0, 0)), std::invalid_argument);
}

TEST(GibbonsHawking, HarmonicWithSecondOrderStencil) {
    auto c = GHConfig::make({iv(1, 0, 0), iv(0, 1, 0), iv(-1, -1, 0)});
    Vec3 q{0.7, -0.4, 0.9};
    double r1 = std::abs(gh_harmonicity_residual(c, q, 0.08));
    double r2 = std::abs(gh_harmonicity_residual(c, q, 0.04));
    EXPECT_LT(r2, r1);
    EXPECT_GT(r1 / r2, 3.5);
    EXPECT_LT(r1 / r2, 4.5);
    EXPECT_THROW(gh_harmonicity_residual(c, {1.0, 0, 0.05}, 0.1), std::invalid_argument);
}

TEST(GibbonsHawking, MonopoleFormsClosed) {
    auto c = GHConfig::make({iv(0, 0, 0), iv(0, 0, 0)});
    Vec3 s{0, 0, -1};
    auto f = gh_form_closedness(c, {1.2, -0.7, 0.9}, s, 1e-3);
    EXPECT_LE(f.closedness, 1e-6);
    EXPECT_LE(f.algebraic, 1e-12);
    auto coarse = gh_form_closedness(c, {1.2, -0.7, 0.9}, s, 2e-2);
    auto fine = gh_form_closedness(c, {1.2, -0.7, 0.9}, s, 1e-2);
    EXPECT_NEAR(coarse.closedness / fine.closedness, 4.0, 0.5);
    // a different string direction changes the connection by a gauge term only
    auto g = gh_form_closedness(GHConfig::make({iv(1, 0, 0), iv(-1, 0, 0)}), {0.3, 1.1, 0.4}, {1, 1, 0}, 1e-3);
    EXPECT_LE(g.closedness, 5e-5);
}

TEST(GibbonsHawking, QuadrupoleDecay) {
    auto c = GHConfig::make({iv(1, 0, 0), iv(0, 1, 0), iv(-1, -1, 0)});
    auto fit = gh_decay_exponent(c, default_decay_ladder(c));
    EXPECT_LE(fit.slope, -2.9);
    EXPECT_GE(fit.slope, -3.1);
    EXPECT_NEAR(fit.quadrupole_scaled.back(), fit.quadrupole_oracle, 0.05 * fit.quadrupole_oracle);
    auto zero = GHConfig::make({iv(0, 0, 0), iv(0, 0, 0)});
    EXPECT_TRUE(gh_decay_exponent(zero, default_decay_ladder(zero)).zero_config);
    EXPECT_THROW(gh_decay_exponent(c, {10, 10, 20}), std::invalid_argument);
}

TEST(RootSystems, WeylOrders) {
    std::size_t fact = 1;
    for (int k = 1; k <= 5; ++k) {
        fact *= static_cast<std::size_t>(k + 1);
        auto rs = root_system("A" + std::to_string(k));
        EXPECT_EQ(rs.positive_roots.size(), static_cast<std::size_t>(k * (k + 1) / 2));
        EXPECT_EQ(weyl_group(rs).order(), fact);
    }
    auto d4 = root_system("D4");
    EXPECT_EQ(d4.positive_roots.size(), 12u);
    EXPECT_EQ(weyl_group(d4).order(), 192u);
    EXPECT_THROW(root_system("E6"), std::invalid_argument);
    EXPECT_THROW(root_system("D5"), std::invalid_argument);
    EXPECT_THROW(root_system("A9"), std::invalid_argument);
    EXPECT_EQ(d4.simple_coordinates(ZVec{1, 0, 0, 1}), (ZVec{1, 1, 0, 1}));
}

TEST(FixedLocus, A1UnderHalfTurn) {
    auto rs = root_system("A1");
    auto fl = fixed_locus({R2}, rs);
    ASSERT_EQ(fl.components.size(), 2u);
    std::vector<std::size_t> dims;
    for (const auto& c : fl.components) {
        dims.push_back(c.dim());
        ASSERT_TRUE(c.witness);
        EXPECT_FALSE(on_wall(rs, *c.witness));
        EXPECT_EQ(R2 * *c.witness, weyl_act(c.weyl_tuple[0], *c.witness));
    }
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2}));
}

TEST(FixedLocus, A2UnderHalfTurn) {
    auto rs = root_system("A2");
    auto fl = fixed_locus({R2}, rs);
    EXPECT_EQ(fl.components.size(), 2u);
    auto oracle = sampling::sample_fixed_locus({R2}, rs, fl, 2000, 17);
    EXPECT_GT(oracle.fixed_off_wall, 0u);
    EXPECT_EQ(oracle.covered, oracle.fixed_off_wall);
}

TEST(FixedLocus, D4UnderKleinGroup) {
    auto rs = root_system("D4");
    auto wg = weyl_group(rs);
    auto fl = fixed_locus({R2, Rminus}, rs);
    EXPECT_EQ(fl.components.size(), 30u);
    EXPECT_EQ(fl.tuples_examined, 192u * 192u);
    for (const auto& c : fl.components) ASSERT_TRUE(c.witness);
    auto oracle = sampling::sample_fixed_locus({R2, Rminus}, rs, fl, 1500, 23);
    EXPECT_EQ(oracle.covered, oracle.fixed_off_wall);

    // all charges on the i-axis: lifts are identity and -identity, four invariant curves
    DeformationPoint z = from_charges({iv(4, 0, 0), iv(3, 0, 0), iv(2, 0, 0), iv(1, 0, 0)});
    ASSERT_FALSE(on_wall(rs, z));
    auto lift = weyl_lift({R2, Rminus}, z, rs, wg);
    ASSERT_TRUE(lift);
    EXPECT_EQ((*lift)[0], ZMat::identity(4));
    ZMat minus = ZMat::identity(4);
    for (std::size_t i = 0; i < 4; ++i) minus(i, i) = -1;
    EXPECT_EQ((*lift)[1], minus);
    auto curves = invariant_curve_classes(rs, z, iv(1, 0, 0));
    EXPECT_EQ(curves.size(), 4u);
    EXPECT_TRUE(invariant_curve_classes(rs, z, iv(0, 1, 0)).empty());
}

TEST(Curves, CollinearSegments) {
    auto c = GHConfig::make({iv(Rational(-3, 2), 0, 0), iv(Rational(1, 2), 0, 0), iv(1, 0, 0)});
    auto s = segments(c, iv(1, 0, 0));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].simple_coordinates, (ZVec{1, 0}));
    EXPECT_EQ(s[1].simple_coordinates, (ZVec{0, 1}));
    auto rs = root_system("A2");
    auto viaroots = invariant_curve_classes(rs, from_charges(c.charges), iv(1, 0, 0));
    ASSERT_EQ(viaroots.size(), 2u);
    EXPECT_EQ(viaroots[0].simple_coordinates, (ZVec{1, 0}));
    EXPECT_EQ(viaroots[1].charges, (std::pair<std::size_t, std::size_t>{1, 2}));
    EXPECT_TRUE(segments(c, iv(0, 1, 0)).empty());
    auto dup = GHConfig{{iv(1, 0, 0), iv(1, 0, 0), iv(-2, 0, 0)}};
    EXPECT_THROW(segments(dup, iv(1, 0, 0)), std::invalid_argument);
}

TEST(GibbonsHawking, PotentialSymmetries) {
    auto c = GHConfig::make({iv(Rational(1, 2), 0, 0), iv(Rational(-1, 2), 0, 0)});
    auto v = gh_potential(c, iv(0, 0, 0));
    ASSERT_TRUE(v.exact);
    EXPECT_EQ(*v.exact, 2);
    auto one = GHConfig::make({iv(0, 0, 0), iv(0, 0, 0)});
    EXPECT_EQ(*gh_potential(one, iv(0, Rational(1, 2), 0)).exact, 2);

    sampling::RationalSampler s(31);
    for (int t = 0; t < 50; ++t) {
        ImVec a = ImVec::from(s.vec(3)), b = ImVec::from(s.vec(3));
        auto c1 = GHConfig::make({a, b, Rational(-1) * (a + b)});
        auto c2 = GHConfig::make({b, Rational(-1) * (a + b), a});
        ImVec q = ImVec::from(s.vec(3));
        if (q == a || q == b || q == Rational(-1) * (a + b)) continue;
        EXPECT_EQ(gh_potential(c1, q).value, gh_potential(c2, q).value);
        // a quarter turn about i is exact on rationals
        auto rot = [](const ImVec& x) { return ImVec{x.i, -x.k, x.j}; };
        auto c3 = GHConfig::make({rot(a), rot(b), rot(Rational(-1) * (a + b))});
        EXPECT_NEAR(gh_potential(c3, rot(q)).value, gh_potential(c1, q).value, 1e-12);
    }
    EXPECT_THROW(invariant_curve_classes(root_system("A1"), from_charges({iv(0, 0, 0), iv(0, 0, 0)}), iv(1, 0, 0)),
                 std::invalid_argument);
}

TEST(GibbonsHawking, RandomConfigsDecayAsQuadrupoles) {
    sampling::RationalSampler s(37);
    for (int t = 0; t < 20; ++t) {
        int k = 2 + t % 3;
        std::vector<ImVec> ch;
        ImVec sum;
        for (int a = 0; a < k; ++a) {
            ch.push_back(ImVec::from(s.vec(3)));
            sum = sum + ch.back();
        }
        ch.push_back(Rational(-1) * sum);
        auto c = GHConfig::make(ch);
        if (c.is_zero()) continue;
        auto fit = gh_decay_exponent(c, default_decay_ladder(c));
        EXPECT_LE(fit.slope, -2.9) << "config " << t;
        EXPECT_NEAR(fit.quadrupole_scaled.back(), fit.quadrupole_oracle, 0.1 * fit.quadrupole_oracle) << "config " << t;
    }
}
