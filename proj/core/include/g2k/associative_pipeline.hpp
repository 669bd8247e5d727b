#pragma once

#include "g2k/ale_deformation.hpp"
#include "g2k/crystallographic.hpp"
#include "g2k/flat_orbifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2k {

/// q -> left * q * right on H.
struct QuatMap {
    Quat left, right;
    QMat matrix() const;
    Rotation3 lambda_plus() const;
};

/// Local data (Gamma, G, rho) of a singular component, possibly standing for several isometric copies.
struct LocalComponentData {
    std::string id;
    std::size_t multiplicity = 1;
    std::string gamma;  // C2, C3, C4, Dic2, ...
    std::string ade;  // A1, A2, A3, D4
    BieberbachGroup g_alpha;
    std::vector<std::optional<QuatMap>> rho;  // one entry per generator of g_alpha
    bool rho_xi_trivial = true;  // translation by xi acts trivially on X
    std::string monodromy = "identity";
};

struct NamedSymmetry {
    std::string name;
    AffineZ map;
};

struct OrbifoldData {
    std::string name;
    bool partial = false;  // only local data is known
    std::optional<CrystalGroupR7> global;
    std::vector<NamedSymmetry> symmetries;
    std::vector<LocalComponentData> components;

    const LocalComponentData& component(const std::string& id) const;
};

/// Gamma label to ADE type: C_n -> A_{n-1}, Dic_n -> D_{n+2}, 2T -> E6.
std::string ade_of_gamma(const std::string& gamma);

/// Local data for every component of a global group; only class-1 tangent actions are supported.
std::vector<LocalComponentData> local_components_from_global(const CrystalGroupR7& g);

struct KData {
    std::string symmetry;  // name in OrbifoldData::symmetries
    std::optional<QuatMap> kappa_hat;
};

struct ResolutionEntry {
    std::string component;
    std::string mechanism = "orbifold-fixed-points";  // or "K-equivariant-exact"
    DeformationPoint zeta;
    ImVec xi_hat;
    ZVec xi;  // lattice coordinates in G_alpha's lattice
    std::optional<std::vector<ZMat>> weyl_lift;  // per generator of g_alpha
    std::optional<std::vector<ZVec>> curve_roots;  // restrict to these roots (up to sign)
    std::optional<KData> k;
};

struct ResolutionChoice {
    std::vector<ResolutionEntry> entries;
};

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string evidence;
    bool gating = true;  // false: reported only
};

struct AssociativeCertificate {
    std::string component;
    std::size_t multiplicity = 1;
    std::string mechanism;
    std::string gamma;
    ZVec xi;
    ImVec xi_hat;
    Rational length_squared;
    std::optional<CurveClass> curve;
    std::size_t n_f = 0;
    std::vector<CheckItem> checklist;
    std::size_t guaranteed_count = 0;  // per copy of the component, lower bound
    std::string homology_tag;

    bool passed() const;
    std::size_t total() const { return guaranteed_count * multiplicity; }
};

struct CountReport {
    std::vector<AssociativeCertificate> certificates;
    std::size_t total = 0;  // lower bound
};

/// Lambda^+ of rho for every generator; throws std::invalid_argument("lift data unavailable ...") if one is missing.
std::vector<QMat> rho_rotations(const LocalComponentData& c);

/// One checklist per candidate curve (or a single failing one if no curve exists).
std::vector<AssociativeCertificate> check_fixed_point_mechanism(const LocalComponentData& c, const ResolutionEntry& e);
CountReport count_fixed_point_mechanism(const OrbifoldData& o, const ResolutionChoice& r);

/// Fixed-point checklist plus the symmetry items: kappa normalises the axis and kills the invariants.
std::vector<AssociativeCertificate> check_equivariant_mechanism(const OrbifoldData& o, const LocalComponentData& c, const ResolutionEntry& e);
CountReport count_equivariant_mechanism(const OrbifoldData& o, const ResolutionChoice& r);

/// Dispatches each entry on its mechanism.
CountReport count_associatives(const OrbifoldData& o, const ResolutionChoice& r);

std::string homology_tag(const std::string& component, const CurveClass& curve, const ZVec& xi);

}  // namespace g2k
