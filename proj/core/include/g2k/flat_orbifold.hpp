#pragma once

#include "g2k/crystallographic.hpp"
#include "g2k/quaternion.hpp"
#include "g2k/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2k {

/// Group of affine isometries of T^7 = R^7 / Z^7 generated by (R, t) with R orthogonal and integral.
struct CrystalGroupR7 {
    std::vector<AffineZ> generators;
    std::vector<std::string> names;
};

bool preserves_phi(const AffineZ& g, const G2Form& form);

/// Affine classes mod Z^7 of the generated group, sorted.
std::vector<AffineZ> quotient_group_elements(const CrystalGroupR7& g, std::size_t max_elements = 4096);

struct SingularComponent {
    std::string id;
    std::string stratum;  // "A<k>" with k the 1-based index of the first generator fixing the locus
    Subtorus locus;  // canonical representative of the G-orbit
    std::vector<Subtorus> lifts;  // all fixed subtori of T^7 in the orbit
    AffineZ representative;  // nontrivial element fixing locus pointwise
    std::vector<AffineZ> stabilizer;  // pointwise stabilizer of a generic point
    std::string isotropy;  // C2, C3, C4, C6, Dic2, Dic3, 2T
    std::size_t dim() const { return locus.dim(); }
};

struct SingularSet {
    std::vector<SingularComponent> components;
    std::vector<std::string> flags;  // intersecting loci with distinct stabilizers etc.
    std::size_t lifted_count() const;
};

SingularSet singular_components(const CrystalGroupR7& g);

struct LocalModel {
    std::string gamma;
    BieberbachClass g_alpha = BieberbachClass::Trivial;
    std::vector<QMat> normal_action;  // stabilizer elements restricted to the normal space
    std::vector<AffineZ> tangent_action;  // setwise stabilizer restricted to the locus
    bool rho_trivial = true;
    std::string rho;
};

/// Throws std::domain_error when the normal action is not conjugate into Sp(1).
LocalModel local_model(const CrystalGroupR7& g, const SingularComponent& c);

struct ComponentAction {
    std::vector<std::size_t> permutation;  // component i -> permutation[i]
    std::vector<std::size_t> fixed;
    std::vector<std::pair<std::size_t, std::size_t>> swapped;
    // action on the fixed subtori of T^7 before passing to the quotient
    std::size_t lifted_total = 0;
    std::size_t lifted_fixed = 0;
    std::size_t lifted_two_cycles = 0;
};

/// Throws std::invalid_argument if lambda does not normalize G or does not preserve phi.
ComponentAction symmetry_action_on_components(const CrystalGroupR7& g, const SingularSet& s, const AffineZ& lambda,
                                              const G2Form& form);

/// Action of an affine map preserving the locus, in the locus' own lattice coordinates.
AffineIsometry tangent_action(const SingularComponent& c, const AffineZ& kappa);

/// Unimodular matrix whose leading columns are the given saturated lattice basis.
ZMat complete_basis(const ZMat& dirs);

}  // namespace g2k
