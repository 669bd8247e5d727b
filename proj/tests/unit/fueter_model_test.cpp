#include "g2k/fueter_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace g2k;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralOperator model_A(double L) { return SpectralOperator::make(two_block_model(2, 4, 2), L); }

GridSection random_grid(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    GridSection s{Eigen::MatrixXd(m, n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s.values(i, j) = g(rng);
    return s;
}

// Trigonometric section with a known derivative, sampled directly.
struct TrigSample {
    GridSection s, ds;
};
TrigSample trig(std::size_t m, double L) {
    TrigSample r{GridSection{Eigen::MatrixXd(m, 6)}, GridSection{Eigen::MatrixXd(m, 6)}};
    for (std::size_t j = 0; j < m; ++j) {
        double t = L * static_cast<double>(j) / static_cast<double>(m);
        double w = 2 * kPi / L;
        for (int c = 0; c < 6; ++c) {
            int k = c % 3 + 1;
            r.s.values(j, c) = std::sin(k * w * t + c);
            r.ds.values(j, c) = k * w * std::cos(k * w * t + c);
        }
    }
    return r;
}

}  // namespace

TEST(Fueter, ModelSpectrum) {
    auto op = model_A(3);
    KernelData k = kernel_data(op);
    EXPECT_EQ(k.basis.cols(), 2);
    EXPECT_DOUBLE_EQ(k.lambda_min, 2);
    EXPECT_DOUBLE_EQ(k.lambda_max, 3);
    EXPECT_EQ(kernel_dimension(op), 2u);
    EXPECT_EQ(kernel_dimension(SpectralOperator::make(Eigen::MatrixXd::Identity(3, 3), 1)), 0u);
    EXPECT_THROW(kernel_dimension(op, 8), std::invalid_argument);
}

TEST(Fueter, Validation) {
    Eigen::MatrixXd skew(2, 2);
    skew << 0, 1, -1, 0;
    EXPECT_THROW(SpectralOperator::make(skew, 1), std::invalid_argument);
    EXPECT_THROW(SpectralOperator::make(Eigen::MatrixXd::Identity(2, 2), 0), std::invalid_argument);
    EXPECT_THROW(SpectralOperator::make(Eigen::MatrixXd(2, 3), 1), std::invalid_argument);

    Eigen::MatrixXd ill = Eigen::MatrixXd::Zero(3, 3);
    ill(0, 0) = 1;
    ill(1, 1) = 1e-13;
    auto op = SpectralOperator::make(ill, 1);
    try {
        kernel_data(op);
        FAIL() << "ill-conditioned A accepted";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("condition number"), std::string::npos);
    }

    auto good = model_A(1);
    EXPECT_THROW(apply_dt_plus_A(good, GridSection{Eigen::MatrixXd::Zero(3, 6)}), std::invalid_argument);
    EXPECT_THROW(apply_dt_plus_A(good, GridSection{Eigen::MatrixXd::Zero(8, 5)}), std::invalid_argument);
}

TEST(Fueter, SpectralDerivativeMatchesCalculus) {
    for (double L : {1.0, 7.5}) {
        auto op = model_A(L);
        auto tr = trig(32, L);
        GridSection d = time_derivative(op, tr.s);
        EXPECT_LE((d.values - tr.ds.values).cwiseAbs().maxCoeff(), 1e-11 * (1 + 2 * kPi / L));
        GridSection full = apply_dt_plus_A(op, tr.s);
        Eigen::MatrixXd expect = tr.ds.values + tr.s.values * op.A;
        EXPECT_LE((full.values - expect).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Fueter, FiniteDifferencesConverge) {
    auto op = model_A(2);
    double prev = 0;
    for (std::size_t m : {32u, 64u, 128u}) {
        auto tr = trig(m, op.L);
        double err = (apply_dt_plus_A_fd(op, tr.s).values - apply_dt_plus_A(op, tr.s).values).cwiseAbs().maxCoeff();
        if (prev > 0) EXPECT_GT(prev / err, 12.0);  // fourth order: ratio near 16
        prev = err;
    }
}

TEST(Fueter, ProjectorProperties) {
    auto op = model_A(5);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto s = random_grid(16, 6, seed);
        Eigen::VectorXd p = projector_Pi(op, s);
        Eigen::VectorXd pp = projector_Pi(op, constant_section(p, 16));
        EXPECT_LE((p - pp).norm(), 1e-12);
        EXPECT_LE((op.A * p).norm(), 1e-12);
        EXPECT_LE(p.tail(4).norm(), 1e-12);

        // Pi o (d_t + A) = (d_t + A) o Pi.
        Eigen::VectorXd lhs = projector_Pi(op, apply_dt_plus_A(op, s));
        GridSection rhs = apply_dt_plus_A(op, constant_section(p, 16));
        EXPECT_LE(lhs.norm(), 1e-10);
        EXPECT_LE(rhs.values.cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Fueter, SelfAdjointness) {
    for (double L : {1.0, 10.0, 64.0}) EXPECT_LE(selfadjointness_residual(model_A(L)), 1e-10);
    SpectralOperator bad{two_block_model(2, 4, 2), 1};
    bad.A(0, 3) = 0.5;
    EXPECT_GT(selfadjointness_residual(bad), 1e-3);
}

TEST(Fueter, NormsBehave) {
    auto op = model_A(4);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(6);
    v(0) = 3;
    v(1) = 4;
    auto c = constant_section(v, 16);
    EXPECT_DOUBLE_EQ(l2_norm(c), 5);
    EXPECT_DOUBLE_EQ(c0_alpha_norm(c, op.L), 5);
    EXPECT_NEAR(c1_alpha_norm(op, c), 5, 1e-12);
    auto s = random_grid(16, 6, 3);
    GridSection twice{2 * s.values};
    EXPECT_NEAR(c1_alpha_norm(op, twice), 2 * c1_alpha_norm(op, s), 1e-9);
}

TEST(Fueter, L2ConstantBelowFourierOracle) {
    for (double L : {1.0, 4.0, 16.0, 64.0}) {
        auto est = estimate_constant(model_A(L), NormChoice::L2, 200, 7);
        EXPECT_LE(est.empirical, est.fourier_oracle * (1 + 1e-9)) << "L = " << L;
        EXPECT_GE(est.empirical, 0.99 * est.fourier_oracle) << "L = " << L;
    }
}

TEST(Fueter, NormalizedConstantUniformInL) {
    for (NormChoice n : {NormChoice::Holder, NormChoice::L2}) {
        double lo = 1e300, hi = 0, raw_small = 0, raw_big = 0;
        for (double L : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
            auto est = estimate_constant(model_A(L), n, 100, 11);
            lo = std::min(lo, est.empirical);
            hi = std::max(hi, est.empirical);
            if (L == 1.0) raw_small = est.unnormalized;
            if (L == 64.0) raw_big = est.unnormalized;
        }
        EXPECT_LE(hi, 1.1 * lo) << to_string(n);
        // Without the (L+1) factor the low time modes dominate and the constant grows with L.
        EXPECT_GT(raw_big, 3 * raw_small) << to_string(n);
    }
}

TEST(Fueter, ScalarQuadraticModel) {
    for (auto [a, b] : {std::pair{0.1, 1.0}, std::pair{0.01, 3.0}, std::pair{0.2, 0.5}}) {
        auto r = scalar_quadratic_solve(a, b);
        ASSERT_TRUE(r.converged);
        EXPECT_NEAR(r.value, r.closed_form, 1e-12);
        EXPECT_NEAR(r.value, a - b * r.value * r.value, 1e-14);
    }
    EXPECT_DOUBLE_EQ(scalar_quadratic_solve(0, 1).value, 0);
    EXPECT_THROW(scalar_quadratic_solve(1, 0), std::invalid_argument);
}

namespace {
ContractionProblem sweep_problem(double t) {
    ContractionProblem p;
    p.c1 = 0.5;
    p.c2 = 1;
    p.c3 = 0.25;
    p.t = t;
    return p;
}
}  // namespace

TEST(Fueter, ThresholdSolvesKappaHalf) {
    auto p = sweep_problem(0.1);
    double T = contraction_threshold(p);
    ASSERT_GT(T, 0.25);
    ASSERT_LT(T, 1);
    p.t = T;
    EXPECT_NEAR(p.predicted_lipschitz(), 0.5, 1e-12);
    ContractionProblem bad = p;
    bad.beta = 2;
    EXPECT_THROW(contraction_threshold(bad), std::invalid_argument);
}

TEST(Fueter, ContractionSweep) {
    double worst = 0;
    for (int k = 2; k <= 10; ++k) {
        double t = std::ldexp(1.0, -k);
        auto p = sweep_problem(t);
        auto res = contraction_solve(p, default_error_term(p));
        ASSERT_EQ(res.status, ContractionStatus::Converged) << res.message;
        EXPECT_LE(res.v.norm(), p.radius());
        EXPECT_LE(res.residual, 1e-13);
        for (std::size_t i = 1; i < res.steps.size(); ++i)
            if (res.steps[i - 1] > 1e-300 && res.steps[i] > 1e-14 * res.v.norm())
                EXPECT_LE(res.steps[i] / res.steps[i - 1], res.predicted_lipschitz * (1 + 1e-9));
        worst = std::max(worst, res.v.norm() / std::pow(t, 1.5));
    }
    EXPECT_LE(worst, 2 * sweep_problem(1).c_E());
}

TEST(Fueter, LinearCaseIsOneStep) {
    auto p = sweep_problem(0.01);
    p.c3 = 0;
    Eigen::VectorXd e = default_error_term(p);
    auto res = contraction_solve(p, e);
    EXPECT_EQ(res.status, ContractionStatus::Converged);
    EXPECT_EQ(res.steps.size(), 1u);
    EXPECT_LE((res.v + p.c2 * std::pow(p.t, -p.gamma) * e).norm(), 1e-15);
}

TEST(Fueter, OutOfRegime) {
    auto p = sweep_problem(1);
    auto rej = contraction_solve(p, default_error_term(p));
    EXPECT_EQ(rej.status, ContractionStatus::RejectedAboveThreshold);
    EXPECT_NE(rej.message.find("threshold"), std::string::npos);

    // Forced through with a large error term: the measured ratio reaches 1.
    auto e = default_error_term(p) * 40;
    auto forced = contraction_solve(p, e, 200, true);
    EXPECT_EQ(forced.status, ContractionStatus::NonContractive);
    EXPECT_GE(forced.measured_lipschitz, 1);
    EXPECT_NE(forced.message.find("Lipschitz"), std::string::npos);
}
