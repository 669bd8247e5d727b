#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace g2k {

/// Symmetric truncation A of an elliptic operator on a circle of length L.
struct SpectralOperator {
    Eigen::MatrixXd A;
    double L = 1;

    /// Throws unless A is square and symmetric and L > 0.
    static SpectralOperator make(Eigen::MatrixXd A, double L);
    std::size_t size() const { return static_cast<std::size_t>(A.rows()); }
};

/// values(j, :) is the section at t_j = j L / m.
struct GridSection {
    Eigen::MatrixXd values;

    std::size_t samples() const { return static_cast<std::size_t>(values.rows()); }
};

/// Two-block model: zero block of size kernel_dim plus diag(+-gap, +-(gap+1), ...) of size invertible_dim.
Eigen::MatrixXd two_block_model(std::size_t kernel_dim, std::size_t invertible_dim, double gap);

struct KernelData {
    Eigen::MatrixXd basis;  // orthonormal columns spanning ker A
    double lambda_min = 0;  // smallest |eigenvalue| on the complement, 0 if none
    double lambda_max = 0;
};
/// Throws std::invalid_argument when the condition number on (ker A)^perp exceeds 1e12.
KernelData kernel_data(const SpectralOperator& op);

/// Spectral time derivative (Nyquist mode dropped) of every column.
GridSection time_derivative(const SpectralOperator& op, const GridSection& s);
GridSection apply_dt_plus_A(const SpectralOperator& op, const GridSection& s);
/// Same operator by periodic fourth-order finite differences.
GridSection apply_dt_plus_A_fd(const SpectralOperator& op, const GridSection& s);

/// Time average followed by orthogonal projection to ker A.
Eigen::VectorXd projector_Pi(const SpectralOperator& op, const GridSection& s);
GridSection constant_section(const Eigen::VectorXd& v, std::size_t m);

enum class NormChoice { Holder, L2 };
std::string to_string(NormChoice n);

constexpr double kHolderAlpha = 1.0 / 32;

/// sup |s| plus the alpha-Holder seminorm in t.
double c0_alpha_norm(const GridSection& s, double L, double alpha = kHolderAlpha);
/// C^{0,alpha} norms of s, d_t s and A s added.
double c1_alpha_norm(const SpectralOperator& op, const GridSection& s, double alpha = kHolderAlpha);
/// Root-mean-square over the grid, so constants have norm |v|.
double l2_norm(const GridSection& s);

struct ConstantEstimate {
    double L = 0;
    NormChoice norm = NormChoice::Holder;
    double empirical = 0;  // max of |s| / ((L+1)|(d_t+A)s| + |Pi s|)
    double unnormalized = 0;  // same without the (L+1) factor
    double fourier_oracle = 0;  // L2 mode-wise bound max(1, L/(2 pi (L+1)), 1/(lambda_min (L+1)))
    std::size_t trials = 0;
};

double fourier_oracle(const SpectralOperator& op, const KernelData& k);
ConstantEstimate estimate_constant(const SpectralOperator& op, NormChoice norm, std::size_t trials, std::uint64_t seed,
                                   std::size_t samples = 64);

/// Relative defect |<(d_t+A)u, v> - <u, (-d_t+A)v>| / (|u| |v|) for seeded u, v.
double selfadjointness_residual(const SpectralOperator& op, std::size_t samples = 33, std::uint64_t seed = 1);

/// Nullity of the dense grid operator on an odd grid; equals dim ker A.
std::size_t kernel_dimension(const SpectralOperator& op, std::size_t samples = 9);

// ---------------------------------------------------------------------------
// Contraction scheme for D v + Q(v) + e = 0 with |D^{-1}| = c2 t^-gamma, Q(v) = c3 |v| v, |e| = c1 t^beta.

struct ContractionProblem {
    double c1 = 1, c2 = 1, c3 = 1;
    double alpha = 1.0 / 32, beta = 2.5, gamma = 1;
    double t = 0.01;
    std::size_t dim = 4;

    /// c2 * max(c1, 2 c3): bounds |E(0)| by cE t^(beta-gamma) and the Lipschitz constant on B_r by cE r t^-gamma.
    double c_E() const;
    double radius() const;  // 2 cE t^(beta-gamma)
    double predicted_lipschitz() const;  // cE (r + t^beta) t^-gamma
};

/// Largest t in (0,1] with predicted_lipschitz <= 1/2; needs beta > 2 gamma.
double contraction_threshold(const ContractionProblem& p);

enum class ContractionStatus { Converged, RejectedAboveThreshold, NonContractive, MaxIterations };
std::string to_string(ContractionStatus s);

struct ContractionResult {
    ContractionStatus status = ContractionStatus::MaxIterations;
    Eigen::VectorXd v;
    double threshold = 0;
    double predicted_lipschitz = 0;
    double measured_lipschitz = 0;  // largest consecutive step ratio
    double residual = 0;  // |v + E(v)|
    std::vector<double> steps;  // |v_{k+1} - v_k|
    std::string message;
};

/// Default error term: fixed unit direction scaled to c1 t^beta.
Eigen::VectorXd default_error_term(const ContractionProblem& p);
/// With force, iterates above the threshold too (to exhibit non-contraction).
ContractionResult contraction_solve(const ContractionProblem& p, const Eigen::VectorXd& e, std::size_t max_iterations = 200,
                                    bool force = false, double tol = 1e-14);

struct ScalarQuadratic {
    double value = 0;
    double closed_form = 0;
    std::size_t iterations = 0;
    bool converged = false;
};
/// Fixed point of v = a - b v^2 by iteration, and the root (-1 + sqrt(1 + 4ab)) / (2b).
ScalarQuadratic scalar_quadratic_solve(double a, double b, double tol = 1e-15, std::size_t max_iterations = 10000);

}  // namespace g2k
