#include "g2k/fueter_model.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace g2k {

namespace {

constexpr double kPi = std::numbers::pi;

void check_grid(const SpectralOperator& op, const GridSection& s) {
    if (s.values.rows() < 4) throw std::invalid_argument("grid needs at least 4 samples");
    if (s.values.cols() != op.A.rows()) throw std::invalid_argument("section dimension does not match A");
}

double holder_seminorm(const Eigen::MatrixXd& f, double L, double alpha) {
    const auto m = f.rows();
    double best = 0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) {
            auto k = j - i;
            double d = L * static_cast<double>(std::min(k, m - k)) / static_cast<double>(m);
            best = std::max(best, (f.row(i) - f.row(j)).norm() / std::pow(d, alpha));
        }
    return best;
}

double sup_norm(const Eigen::MatrixXd& f) { return f.rowwise().norm().maxCoeff(); }

GridSection random_section(std::size_t m, std::size_t n, std::mt19937_64& rng) {
    // Random Fourier coefficients with mildly decaying amplitudes.
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> modes(0, 3);
    GridSection s{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n))};
    int kmax = 1 << modes(rng);
    kmax = std::min<int>(kmax, static_cast<int>(m / 2) - 1);
    for (int k = 0; k <= kmax; ++k) {
        Eigen::VectorXd a(n), b(n);
        for (std::size_t r = 0; r < n; ++r) {
            a(r) = g(rng) / (1.0 + k);
            b(r) = g(rng) / (1.0 + k);
        }
        for (std::size_t j = 0; j < m; ++j) {
            double th = 2 * kPi * k * static_cast<double>(j) / static_cast<double>(m);
            s.values.row(static_cast<Eigen::Index>(j)) += (std::cos(th) * a + std::sin(th) * b).transpose();
        }
    }
    return s;
}

GridSection mode_section(std::size_t m, const Eigen::VectorXd& v, int k) {
    GridSection s{Eigen::MatrixXd(static_cast<Eigen::Index>(m), v.size())};
    for (std::size_t j = 0; j < m; ++j)
        s.values.row(static_cast<Eigen::Index>(j)) =
            std::cos(2 * kPi * k * static_cast<double>(j) / static_cast<double>(m)) * v.transpose();
    return s;
}

}  // namespace

SpectralOperator SpectralOperator::make(Eigen::MatrixXd A, double L) {
    if (A.rows() != A.cols() || A.rows() == 0) throw std::invalid_argument("A must be a non-empty square matrix");
    if (!(L > 0)) throw std::invalid_argument("L must be positive");
    double scale = std::max(1.0, A.norm());
    if ((A - A.transpose()).norm() > 1e-12 * scale) throw std::invalid_argument("A must be symmetric");
    return SpectralOperator{std::move(A), L};
}

Eigen::MatrixXd two_block_model(std::size_t kernel_dim, std::size_t invertible_dim, double gap) {
    auto n = static_cast<Eigen::Index>(kernel_dim + invertible_dim);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < invertible_dim; ++i) {
        double mag = gap + static_cast<double>(i / 2);
        A(static_cast<Eigen::Index>(kernel_dim + i), static_cast<Eigen::Index>(kernel_dim + i)) = (i % 2 == 0) ? mag : -mag;
    }
    return A;
}

KernelData kernel_data(const SpectralOperator& op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.A);
    const auto& ev = es.eigenvalues();
    double amax = ev.cwiseAbs().maxCoeff();
    double tol = 1e-14 * std::max(1.0, amax);
    KernelData k;
    std::vector<Eigen::Index> ker;
    k.lambda_min = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double a = std::abs(ev(i));
        if (a <= tol) {
            ker.push_back(i);
        } else if (k.lambda_min == 0 || a < k.lambda_min) {
            k.lambda_min = a;
        }
    }
    k.lambda_max = amax;
    if (k.lambda_min > 0 && amax / k.lambda_min > 1e12) {
        std::ostringstream os;
        os << "condition number " << amax / k.lambda_min << " exceeds 1e12";
        throw std::invalid_argument(os.str());
    }
    k.basis.resize(op.A.rows(), static_cast<Eigen::Index>(ker.size()));
    for (std::size_t c = 0; c < ker.size(); ++c) k.basis.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(ker[c]);
    return k;
}

GridSection time_derivative(const SpectralOperator& op, const GridSection& s) {
    check_grid(op, s);
    const auto m = s.values.rows();
    Eigen::FFT<double> fft;
    GridSection out{Eigen::MatrixXd(m, s.values.cols())};
    std::vector<double> col(static_cast<std::size_t>(m)), back;
    std::vector<std::complex<double>> spec;
    for (Eigen::Index c = 0; c < s.values.cols(); ++c) {
        for (Eigen::Index j = 0; j < m; ++j) col[static_cast<std::size_t>(j)] = s.values(j, c);
        fft.fwd(spec, col);
        for (Eigen::Index k = 0; k < m; ++k) {
            Eigen::Index freq = k <= m / 2 ? k : k - m;
            if (m % 2 == 0 && k == m / 2) freq = 0;  // Nyquist has no real derivative
            spec[static_cast<std::size_t>(k)] *= std::complex<double>(0, 2 * kPi * static_cast<double>(freq) / op.L);
        }
        fft.inv(back, spec);
        for (Eigen::Index j = 0; j < m; ++j) out.values(j, c) = back[static_cast<std::size_t>(j)];
    }
    return out;
}

GridSection apply_dt_plus_A(const SpectralOperator& op, const GridSection& s) {
    GridSection out = time_derivative(op, s);
    out.values += s.values * op.A.transpose();
    return out;
}

GridSection apply_dt_plus_A_fd(const SpectralOperator& op, const GridSection& s) {
    check_grid(op, s);
    const auto m = s.values.rows();
    const double h = op.L / static_cast<double>(m);
    auto at = [&](Eigen::Index j) { return s.values.row(((j % m) + m) % m); };
    GridSection out{Eigen::MatrixXd(m, s.values.cols())};
    for (Eigen::Index j = 0; j < m; ++j)
        out.values.row(j) = (-at(j + 2) + 8 * at(j + 1) - 8 * at(j - 1) + at(j - 2)) / (12 * h);
    out.values += s.values * op.A.transpose();
    return out;
}

Eigen::VectorXd projector_Pi(const SpectralOperator& op, const GridSection& s) {
    check_grid(op, s);
    Eigen::VectorXd mean = s.values.colwise().mean().transpose();
    KernelData k = kernel_data(op);
    return k.basis * (k.basis.transpose() * mean);
}

GridSection constant_section(const Eigen::VectorXd& v, std::size_t m) {
    return GridSection{v.transpose().replicate(static_cast<Eigen::Index>(m), 1)};
}

std::string to_string(NormChoice n) { return n == NormChoice::Holder ? "holder" : "l2"; }

double c0_alpha_norm(const GridSection& s, double L, double alpha) {
    return sup_norm(s.values) + holder_seminorm(s.values, L, alpha);
}

double c1_alpha_norm(const SpectralOperator& op, const GridSection& s, double alpha) {
    GridSection ds = time_derivative(op, s);
    GridSection as{s.values * op.A.transpose()};
    return c0_alpha_norm(s, op.L, alpha) + c0_alpha_norm(ds, op.L, alpha) + c0_alpha_norm(as, op.L, alpha);
}

double l2_norm(const GridSection& s) {
    return std::sqrt(s.values.squaredNorm() / static_cast<double>(s.values.rows()));
}

double fourier_oracle(const SpectralOperator& op, const KernelData& k) {
    double c = 1;
    if (k.basis.cols() > 0) c = std::max(c, op.L / (2 * kPi * (op.L + 1)));
    if (k.lambda_min > 0) c = std::max(c, 1 / (k.lambda_min * (op.L + 1)));
    return c;
}

ConstantEstimate estimate_constant(const SpectralOperator& op, NormChoice norm, std::size_t trials, std::uint64_t seed,
                                   std::size_t samples) {
    if (samples < 4) throw std::invalid_argument("grid needs at least 4 samples");
    KernelData kd = kernel_data(op);
    ConstantEstimate est;
    est.L = op.L;
    est.norm = norm;
    est.fourier_oracle = fourier_oracle(op, kd);
    const std::size_t n = op.size();

    auto measure = [&](const GridSection& s) {
        GridSection ds = apply_dt_plus_A(op, s);
        Eigen::VectorXd pi = projector_Pi(op, s);
        double top, dnorm;
        if (norm == NormChoice::Holder) {
            top = c1_alpha_norm(op, s);
            dnorm = c0_alpha_norm(ds, op.L);
        } else {
            top = l2_norm(s);
            dnorm = l2_norm(ds);
        }
        double pnorm = pi.norm();
        if (top == 0) return;
        est.empirical = std::max(est.empirical, top / ((op.L + 1) * dnorm + pnorm));
        est.unnormalized = std::max(est.unnormalized, top / (dnorm + pnorm));
        ++est.trials;
    };

    // Pure modes first: they realise the mode-wise extremes.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.A);
    for (int k = 0; k <= 2; ++k)
        for (Eigen::Index c = 0; c < es.eigenvectors().cols(); ++c) measure(mode_section(samples, es.eigenvectors().col(c), k));

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) measure(random_section(samples, n, rng));
    return est;
}

double selfadjointness_residual(const SpectralOperator& op, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    auto m = static_cast<Eigen::Index>(samples);
    auto n = op.A.rows();
    GridSection u{Eigen::MatrixXd(m, n)}, v{Eigen::MatrixXd(m, n)};
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            u.values(i, j) = g(rng);
            v.values(i, j) = g(rng);
        }
    GridSection du = apply_dt_plus_A(op, u);
    // Formal adjoint of d_t + A when A is symmetric.
    GridSection adj = time_derivative(op, v);
    adj.values = -adj.values + v.values * op.A.transpose();
    double lhs = (du.values.array() * v.values.array()).sum();
    double rhs = (u.values.array() * adj.values.array()).sum();
    return std::abs(lhs - rhs) / (u.values.norm() * v.values.norm());
}

std::size_t kernel_dimension(const SpectralOperator& op, std::size_t samples) {
    if (samples < 5 || samples % 2 == 0) throw std::invalid_argument("kernel_dimension needs an odd grid of at least 5 samples");
    auto m = static_cast<Eigen::Index>(samples);
    auto n = op.A.rows();
    Eigen::MatrixXd M(m * n, m * n);
    for (Eigen::Index col = 0; col < m * n; ++col) {
        GridSection e{Eigen::MatrixXd::Zero(m, n)};
        e.values(col / n, col % n) = 1;
        GridSection img = apply_dt_plus_A(op, e);
        for (Eigen::Index row = 0; row < m * n; ++row) M(row, col) = img.values(row / n, row % n);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    double tol = 1e-10 * std::max(1.0, sv(0));
    std::size_t nullity = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol) ++nullity;
    return nullity;
}

// ---------------------------------------------------------------------------

double ContractionProblem::c_E() const { return c2 * std::max(c1, 2 * c3); }

double ContractionProblem::radius() const { return 2 * c_E() * std::pow(t, beta - gamma); }

double ContractionProblem::predicted_lipschitz() const {
    return c_E() * (radius() + std::pow(t, beta)) * std::pow(t, -gamma);
}

double contraction_threshold(const ContractionProblem& p) {
    if (!(p.beta > 2 * p.gamma)) throw std::invalid_argument("contraction regime needs beta > 2 gamma");
    auto kappa = [&](double t) {
        ContractionProblem q = p;
        q.t = t;
        return q.predicted_lipschitz();
    };
    if (kappa(1) <= 0.5) return 1;
    double lo = 0, hi = 1;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (kappa(mid) <= 0.5 ? lo : hi) = mid;
    }
    return lo;
}

std::string to_string(ContractionStatus s) {
    switch (s) {
        case ContractionStatus::Converged: return "converged";
        case ContractionStatus::RejectedAboveThreshold: return "rejected-above-threshold";
        case ContractionStatus::NonContractive: return "non-contractive";
        case ContractionStatus::MaxIterations: return "max-iterations";
    }
    return "unknown";
}

Eigen::VectorXd default_error_term(const ContractionProblem& p) {
    Eigen::VectorXd e(static_cast<Eigen::Index>(p.dim));
    for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = 1.0 + static_cast<double>(i);
    return e.normalized() * p.c1 * std::pow(p.t, p.beta);
}

ContractionResult contraction_solve(const ContractionProblem& p, const Eigen::VectorXd& e, std::size_t max_iterations,
                                    bool force, double tol) {
    if (!(p.t > 0)) throw std::invalid_argument("t must be positive");
    if (e.size() != static_cast<Eigen::Index>(p.dim)) throw std::invalid_argument("error term has the wrong dimension");
    ContractionResult res;
    res.threshold = contraction_threshold(p);
    res.predicted_lipschitz = p.predicted_lipschitz();
    res.v = Eigen::VectorXd::Zero(e.size());

    if (p.t >= res.threshold && !force) {
        std::ostringstream os;
        os << "t = " << p.t << " is not below the threshold T = " << res.threshold;
        res.status = ContractionStatus::RejectedAboveThreshold;
        res.message = os.str();
        return res;
    }

    const double dinv = p.c2 * std::pow(p.t, -p.gamma);
    auto E = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return dinv * (p.c3 * v.norm() * v + e); };

    if (p.c3 == 0) {
        res.v = -E(res.v);
        res.steps.push_back(res.v.norm());
        res.status = ContractionStatus::Converged;
        res.message = "linear problem solved in one step";
        return res;
    }

    std::size_t growing = 0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd next = -E(res.v);
        double step = (next - res.v).norm();
        if (!res.steps.empty() && res.steps.back() > 0) {
            double ratio = step / res.steps.back();
            res.measured_lipschitz = std::max(res.measured_lipschitz, ratio);
            growing = ratio >= 1 ? growing + 1 : 0;
        }
        res.steps.push_back(step);
        res.v = next;
        if (!std::isfinite(step) || growing >= 3) {
            std::ostringstream os;
            os << "iteration is not contracting: measured Lipschitz ratio " << res.measured_lipschitz;
            res.status = ContractionStatus::NonContractive;
            res.message = os.str();
            return res;
        }
        if (step <= tol * std::max(1.0, res.v.norm())) {
            res.status = ContractionStatus::Converged;
            break;
        }
    }
    res.residual = (res.v + E(res.v)).norm();
    if (res.status != ContractionStatus::Converged) res.message = "iteration budget exhausted";
    return res;
}

ScalarQuadratic scalar_quadratic_solve(double a, double b, double tol, std::size_t max_iterations) {
    if (!(b > 0) || !(a >= 0)) throw std::invalid_argument("scalar model needs a >= 0 and b > 0");
    ScalarQuadratic r;
    r.closed_form = (-1 + std::sqrt(1 + 4 * a * b)) / (2 * b);
    double v = 0;
    for (std::size_t i = 0; i < max_iterations; ++i) {
        double next = a - b * v * v;
        ++r.iterations;
        bool done = std::abs(next - v) <= tol * std::max(1.0, std::abs(next));
        v = next;
        if (!std::isfinite(v)) break;
        if (done) {
            r.converged = true;
            break;
        }
    }
    r.value = v;
    return r;
}

}  // namespace g2k
