#pragma once

#include "g2k/quaternion.hpp"
#include "g2k/torus.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2k {

enum class BieberbachClass { Trivial, C2, C3, C4, C6, C2xC2 };

std::string to_string(BieberbachClass c);
BieberbachClass bieberbach_class_from(const std::string& tag);
std::size_t class_order(BieberbachClass c);

struct Lattice {
    std::array<ImVec, 3> basis;

    /// Columns are the basis vectors in ambient (i,j,k) coordinates.
    QMat basis_matrix() const;
    QMat gram() const;
    ImVec ambient(const QVec& lattice_coords) const;
    QVec coords(const ImVec& v) const;

    static Lattice cubic();
    /// lambda_1 = i+j+k, lambda_2 = i-j, lambda_3 = j-k: satisfies the C3/C6 constraints.
    static Lattice hexagonal();
};

/// Generators act in lattice coordinates: rot is the integer matrix of Rotation3 in the basis.
struct AffineIsometry {
    ZMat rot;
    QVec trans;

    AffineZ as_affine() const { return {rot, trans}; }
};

struct BieberbachGroup {
    BieberbachClass cls = BieberbachClass::Trivial;
    Lattice lattice;
    std::vector<AffineIsometry> generators;

    /// The finite quotient H = G / Lambda as affine classes mod Lambda.
    std::vector<AffineZ> quotient() const;
    /// Ambient orthogonal matrix B R B^{-1}.
    Rotation3 ambient_rotation(const ZMat& rot) const;
};

ZMat matrix_R2();
ZMat matrix_R3();
ZMat matrix_R4();
ZMat matrix_R6();
ZMat matrix_Rplus();
ZMat matrix_Rminus();

/// Throws std::invalid_argument naming the failing Gram relation.
BieberbachGroup make_bieberbach(BieberbachClass cls, const Lattice& lattice,
                                std::optional<std::vector<AffineIsometry>> generators = std::nullopt);

struct TorsionCheck {
    bool torsion_free = true;
    std::optional<AffineZ> element;
    std::optional<QVec> witness;
};
TorsionCheck torsion_free_check(const BieberbachGroup& g);

/// Primitive simultaneous eigenvectors of all rotation parts, up to sign, with max |coord| <= height.
std::vector<ZVec> eligible_axes(const BieberbachGroup& g, int height = 1);
bool is_eligible_axis(const BieberbachGroup& g, const ZVec& xi);
bool is_primitive(const ZVec& xi);
bool is_central(const ZVec& xi, const BieberbachGroup& g);

struct SingularPoint {
    QVec point;  // coordinates on M in the completed basis, in [0,1)^2
    std::size_t isotropy = 1;
};

struct BaseOrbifold {
    ZVec axis;
    ZMat completion;  // unimodular, first column = axis
    std::vector<AffineZ> action;  // induced action of H on M = R^2 / Z^2
    std::vector<SingularPoint> singular_points;
    std::size_t n_f = 0;
    std::string topology;  // torus, klein_bottle, sphere_orbifold, projective_orbifold
    int underlying_euler = 0;
    /// chi(|Q|) - sum(1 - 1/m); zero for a quotient of T^2.
    Rational orbifold_euler() const;
    std::vector<std::size_t> isotropy_orders() const;
};

BaseOrbifold base_orbifold(const BieberbachGroup& g, const ZVec& xi);

struct QuotientAction {
    ZMat matrix;  // 2x2 on H_1(M) in the completed basis
    std::size_t invariant_dim = 0;  // dim of invariants of the transpose action
};

/// kappa given in lattice coordinates of g; must satisfy kappa.rot xi = +-xi.
QuotientAction quotient_action_matrix(const BieberbachGroup& g, const ZVec& xi, const AffineIsometry& kappa);

}  // namespace g2k
