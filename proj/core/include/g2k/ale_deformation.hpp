#pragma once

#include "g2k/exact.hpp"
#include "g2k/quaternion.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace g2k {

// ---------------------------------------------------------------------------
// Gibbons-Hawking data

using Vec3 = std::array<double, 3>;

Vec3 to_double(const ImVec& v);

/// Balanced multiset of charges in Im H.
struct GHConfig {
    std::vector<ImVec> charges;

    /// Throws unless k >= 1 and the charges sum to zero.
    static GHConfig make(std::vector<ImVec> charges);
    std::size_t size() const { return charges.size(); }
    double radius() const;  // max |zeta_a|
    bool is_zero() const;
};

struct GHValue {
    double value = 0;
    std::optional<Rational> exact;
};

/// V(q) = sum 1 / (2 |q - zeta_a|); exact when every squared distance is a rational square.
GHValue gh_potential(const GHConfig& c, const ImVec& q);
double gh_potential(const GHConfig& c, const Vec3& q);
/// V_zeta - V_0 evaluated without cancellation.
double gh_potential_deviation(const GHConfig& c, const Vec3& q);

/// Seven-point Laplacian of V at q with step h.
double gh_harmonicity_residual(const GHConfig& c, const Vec3& q, double h);

struct FormCheck {
    double closedness = 0;  // max_k |curl(a)_k + dV_k|, i.e. d theta + *dV
    double algebraic = 0;  // max |omega_r ^ omega_s - 2 delta_rs V theta ^ dq123|
    double residual() const { return closedness > algebraic ? closedness : algebraic; }
};

/// Dirac-monopole connection a = sum (x x s) / (2 r (r - s.x)), x = q - zeta_a, strings along unit s.
Vec3 gh_connection(const GHConfig& c, const Vec3& q, const Vec3& string_dir);
FormCheck gh_form_closedness(const GHConfig& c, const Vec3& q, const Vec3& string_dir, double h);

struct DecayFit {
    bool zero_config = false;  // V_zeta == V_0 identically
    double slope = 0;
    std::vector<double> radii;
    std::vector<double> deviation;  // sup over directions of |V_zeta - V_0|
    std::vector<double> quadrupole_scaled;  // r^3 * deviation
    double quadrupole_oracle = 0;  // sup over directions of |Q(q_hat)|
};

/// Quadrupole coefficient sum (3 (q_hat . zeta)^2 - |zeta|^2) / 4.
double gh_quadrupole(const GHConfig& c, const Vec3& unit_dir);
std::vector<Vec3> sphere_directions(std::size_t n);
DecayFit gh_decay_exponent(const GHConfig& c, const std::vector<double>& radii, std::size_t directions = 64);
/// Radii 10 * |zeta| * 2^j for j = 0..count-1.
std::vector<double> default_decay_ladder(const GHConfig& c, int count = 7);

// ---------------------------------------------------------------------------
// Root systems and Weyl groups

enum class RootType { A, D, E };

struct RootSystemData {
    RootType type = RootType::A;
    int rank = 1;
    std::size_t ambient = 2;  // coordinates the roots live in
    std::vector<ZVec> simple_roots;
    std::vector<ZVec> positive_roots;
    std::vector<ZMat> reflections;
    bool sum_zero = true;  // A_k charges obey sum zeta_a = 0

    std::string name() const;
    std::vector<ZVec> roots() const;
    /// Coordinates of a root in the simple-root basis.
    ZVec simple_coordinates(const ZVec& root) const;
};

/// Throws std::invalid_argument("unsupported ADE type ...") outside A_1..A_8 and D_4.
RootSystemData root_system(const std::string& name);

struct WeylGroup {
    std::vector<ZMat> generators;
    std::vector<ZMat> elements;  // sorted, identity included
    std::size_t order() const { return elements.size(); }
    std::size_t index_of(const ZMat& w) const;
};

WeylGroup weyl_group(const RootSystemData& rs);

// ---------------------------------------------------------------------------
// Deformation space Im H (x) R^n as 3 x n matrices, Weyl group acting by zeta -> zeta w^T

using DeformationPoint = QMat;

DeformationPoint weyl_act(const ZMat& w, const DeformationPoint& z);
/// zeta(alpha) = zeta * alpha.
ImVec evaluate_root(const DeformationPoint& z, const ZVec& alpha);
bool on_wall(const RootSystemData& rs, const DeformationPoint& z);
DeformationPoint from_charges(const std::vector<ImVec>& charges);
std::vector<ImVec> to_charges(const DeformationPoint& z);

struct FixedLocusComponent {
    std::vector<ZMat> weyl_tuple;  // w_i paired with rotations R_i
    QMat basis;  // columns: row-major vec(zeta), 3n entries
    std::size_t dim() const { return basis.cols(); }
    std::optional<DeformationPoint> witness;
    std::vector<ZVec> walls_containing;  // roots whose wall contains the whole subspace
    std::size_t orbit_size = 1;  // tuples in the W-conjugacy orbit
};

struct FixedLocus {
    std::vector<FixedLocusComponent> components;  // off-wall, one per W-orbit
    std::size_t wall_bound_orbits = 0;
    std::size_t tuples_examined = 0;
};

QVec vec_of(const DeformationPoint& z);
DeformationPoint point_of(const QVec& v, std::size_t n);

/// Fixed points of zeta -> R_i zeta w_i^T for all tuples in W^m, deduplicated up to W.
FixedLocus fixed_locus(const std::vector<QMat>& rotations, const RootSystemData& rs, std::size_t max_tuples = 1000000);

/// Kernel of the fixed-point system for one tuple, including the A_k balance condition.
QMat fixed_subspace(const std::vector<QMat>& rotations, const std::vector<ZMat>& tuple, const RootSystemData& rs);

/// Weyl elements w_i with R_i zeta w_i^T = zeta; empty optional when some R_i has none.
std::optional<std::vector<ZMat>> weyl_lift(const std::vector<QMat>& rotations, const DeformationPoint& z,
                                           const RootSystemData& rs, const WeylGroup& w);

/// Up-to-W subspace equality (columns span the subspaces).
bool same_up_to_weyl(const QMat& a, const QMat& b, const WeylGroup& w, std::size_t n);

// ---------------------------------------------------------------------------
// Holomorphic curves

struct CurveClass {
    ZVec root;  // positive for xi_hat
    std::pair<std::size_t, std::size_t> charges{0, 0};  // A_k only: segment endpoints (0-based)
    ImVec direction;  // xi_hat
    std::string genus = "sphere";
    ZVec simple_coordinates;
};

/// Minimal collinear segments along xi_hat; throws on coincident charges.
std::vector<CurveClass> segments(const GHConfig& c, const ImVec& xi_hat);

/// Simple roots of {alpha : zeta(alpha) parallel to xi_hat}, oriented so that xi_hat . zeta(alpha) > 0.
std::vector<CurveClass> invariant_curve_classes(const RootSystemData& rs, const DeformationPoint& z, const ImVec& xi_hat);

}  // namespace g2k
