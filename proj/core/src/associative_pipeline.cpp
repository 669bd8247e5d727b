#include "g2k/associative_pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2k {

QMat QuatMap::matrix() const { return left_mul_matrix(left) * right_mul_matrix(right); }

Rotation3 QuatMap::lambda_plus() const {
    // a q b with |a|^2 |b|^2 = 1 is a rotation; other scalings are not isometries
    if (norm2(left) * norm2(right) != 1) throw std::invalid_argument("quaternion map is not an isometry");
    return g2k::lambda_plus(Rotation::make(matrix()));
}

bool AssociativeCertificate::passed() const {
    return !checklist.empty() &&
           std::all_of(checklist.begin(), checklist.end(), [](const CheckItem& i) { return i.ok || !i.gating; });
}

const LocalComponentData& OrbifoldData::component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return c;
    throw std::invalid_argument("unknown component '" + id + "'");
}

std::string ade_of_gamma(const std::string& gamma) {
    if (gamma.size() >= 2 && gamma[0] == 'C') return "A" + std::to_string(std::stoi(gamma.substr(1)) - 1);
    if (gamma.rfind("Dic", 0) == 0) return "D" + std::to_string(std::stoi(gamma.substr(3)) + 2);
    if (gamma == "2T") return "E6";
    throw std::invalid_argument("unknown isotropy label '" + gamma + "'");
}

std::vector<LocalComponentData> local_components_from_global(const CrystalGroupR7& g) {
    std::vector<LocalComponentData> out;
    for (const auto& sc : singular_components(g).components) {
        LocalModel lm = local_model(g, sc);
        if (lm.g_alpha != BieberbachClass::Trivial || !lm.rho_trivial)
            throw std::invalid_argument("component " + sc.id + ": only class-1 components with trivial rho are derived automatically");
        LocalComponentData c;
        c.id = sc.id;
        c.gamma = lm.gamma;
        c.ade = ade_of_gamma(lm.gamma);
        c.g_alpha = make_bieberbach(BieberbachClass::Trivial, Lattice::cubic());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<QMat> rho_rotations(const LocalComponentData& c) {
    if (c.rho.size() != c.g_alpha.generators.size())
        throw std::invalid_argument("lift data unavailable for component " + c.id + ": rho must list one map per generator");
    std::vector<QMat> out;
    for (std::size_t i = 0; i < c.rho.size(); ++i) {
        if (!c.rho[i]) throw std::invalid_argument("lift data unavailable for component " + c.id + ", generator " + std::to_string(i));
        out.push_back(c.rho[i]->lambda_plus().m);
    }
    return out;
}

std::string homology_tag(const std::string& component, const CurveClass& curve, const ZVec& xi) {
    std::string s = component + ":root(";
    for (std::size_t i = 0; i < curve.simple_coordinates.size(); ++i)
        s += (i ? "," : "") + curve.simple_coordinates[i].get_str();
    s += "):xi(";
    for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "," : "") + xi[i].get_str();
    return s + ")";
}

namespace {

ZVec negated(ZVec v) {
    for (auto& x : v) x = -x;
    return v;
}

bool maps_root_to_pm(const ZMat& w, const ZVec& a) {
    ZVec img = w * a;
    return img == a || img == negated(a);
}

std::string str(const ZVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

struct Prepared {
    RootSystemData rs;
    WeylGroup w;
    std::vector<CheckItem> items;
    std::optional<std::vector<ZMat>> lift;
    std::vector<CurveClass> curves;
    std::size_t n_f = 0;
    Rational length_squared;
};

std::optional<std::vector<ZMat>> verified_lift(const std::vector<QMat>& rots, const DeformationPoint& z, const RootSystemData& rs,
                                               const WeylGroup& w, const std::optional<std::vector<ZMat>>& supplied,
                                               std::string& evidence) {
    if (!supplied) {
        auto lift = weyl_lift(rots, z, rs, w);
        evidence = lift ? "Weyl lift found by search" : "no Weyl element matches some generator";
        return lift;
    }
    if (supplied->size() != rots.size()) {
        evidence = "supplied Weyl lift has the wrong length";
        return std::nullopt;
    }
    for (std::size_t i = 0; i < rots.size(); ++i) {
        const ZMat& g = (*supplied)[i];
        if (g.rows() != rs.ambient || !std::binary_search(w.elements.begin(), w.elements.end(), g)) {
            evidence = "supplied element " + std::to_string(i) + " is not in the Weyl group";
            return std::nullopt;
        }
        if (!(weyl_act(g, rots[i] * z) == z)) {
            evidence = "supplied lift does not fix zeta for generator " + std::to_string(i);
            return std::nullopt;
        }
    }
    evidence = "supplied Weyl lift verified";
    return supplied;
}

Prepared prepare(const LocalComponentData& c, const ResolutionEntry& e) {
    Prepared p;
    p.rs = root_system(c.ade);
    p.w = weyl_group(p.rs);
    auto rots = rho_rotations(c);
    const auto& gens = c.g_alpha.generators;

    bool compat = true;
    std::string ev = "Lambda+ rho(g) equals the rotation part for all generators";
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(c.g_alpha.ambient_rotation(gens[i].rot).m == rots[i])) {
            compat = false;
            ev = "generator " + std::to_string(i) + ": Lambda+ rho(g) differs from its rotation part";
        }
    p.items.push_back({"rho_compatible", compat, ev});

    bool shape = e.zeta.rows() == 3 && e.zeta.cols() == p.rs.ambient;
    bool balanced = shape;
    if (shape && p.rs.sum_zero)
        for (std::size_t r = 0; r < 3; ++r) {
            Rational s = 0;
            for (std::size_t a = 0; a < e.zeta.cols(); ++a) s += e.zeta(r, a);
            balanced = balanced && s == 0;
        }
    bool off_wall = shape && !on_wall(p.rs, e.zeta);
    p.items.push_back({"zeta_regular", balanced && off_wall,
                       !shape ? "zeta has the wrong shape for " + c.ade
                              : !balanced ? "charges do not sum to zero" : off_wall ? "zeta avoids all walls" : "zeta lies on a wall"});

    std::string lift_ev = "zeta not regular";
    if (balanced && off_wall) p.lift = verified_lift(rots, e.zeta, p.rs, p.w, e.weyl_lift, lift_ev);
    p.items.push_back({"zeta_fixed", p.lift.has_value(), lift_ev});

    bool prim = !e.xi.empty() && e.xi.size() == 3 && is_primitive(e.xi);
    p.items.push_back({"axis_primitive", prim, "gcd of " + str(e.xi) + " is " + (e.xi.size() == 3 ? gcd_of(e.xi).get_str() : "n/a")});
    bool normal = prim && is_eligible_axis(c.g_alpha, e.xi);
    p.items.push_back({"axis_normal", normal, normal ? "every rotation part maps xi to +-xi" : "Z xi is not normalized"});
    bool central = prim && is_central(e.xi, c.g_alpha);
    p.items.push_back({"axis_central", central, central ? "xi is fixed by every rotation part" : "some rotation part sends xi to -xi",
                       false});

    ImVec amb = e.xi.size() == 3 ? c.g_alpha.lattice.ambient(to_q(e.xi)) : ImVec{};
    p.length_squared = norm2(amb);
    bool dir = !(e.xi_hat == ImVec{}) && bracket(amb, e.xi_hat) == ImVec{} && dot(amb, e.xi_hat) > 0;
    p.items.push_back({"xi_hat_direction", dir, dir ? "xi is a positive multiple of xi_hat" : "xi is not a positive multiple of xi_hat"});
    p.items.push_back({"rho_xi_trivial", c.rho_xi_trivial, c.rho_xi_trivial ? "translation by xi acts trivially on X" : "not stated"});
    p.items.push_back({"monodromy_identity", c.monodromy == "identity", "monodromy " + c.monodromy});

    if (normal) p.n_f = base_orbifold(c.g_alpha, e.xi).n_f;

    if (p.lift && !(e.xi_hat == ImVec{})) {
        p.curves = invariant_curve_classes(p.rs, e.zeta, e.xi_hat);
        if (e.curve_roots) {
            std::vector<CurveClass> kept;
            for (const auto& cc : p.curves)
                for (const auto& r : *e.curve_roots)
                    if (cc.root == r || cc.root == negated(r)) {
                        kept.push_back(cc);
                        break;
                    }
            p.curves = kept;
        }
    }
    return p;
}

AssociativeCertificate base_certificate(const LocalComponentData& c, const ResolutionEntry& e, const Prepared& p,
                                        const std::string& mechanism) {
    AssociativeCertificate cert;
    cert.component = c.id;
    cert.multiplicity = c.multiplicity;
    cert.mechanism = mechanism;
    cert.gamma = c.gamma;
    cert.xi = e.xi;
    cert.xi_hat = e.xi_hat;
    cert.length_squared = p.length_squared;
    cert.n_f = p.n_f;
    cert.checklist = p.items;
    return cert;
}

std::vector<AssociativeCertificate> certificates(const LocalComponentData& c, const ResolutionEntry& e, const Prepared& p,
                                                 const std::string& mechanism) {
    std::vector<AssociativeCertificate> out;
    if (p.curves.empty()) {
        auto cert = base_certificate(c, e, p, mechanism);
        cert.checklist.push_back({"curve_sphere", false, "no holomorphic curve for xi_hat"});
        out.push_back(cert);
        return out;
    }
    for (const auto& cc : p.curves) {
        auto cert = base_certificate(c, e, p, mechanism);
        cert.curve = cc;
        cert.checklist.push_back({"curve_sphere", cc.genus == "sphere", "genus " + cc.genus + ", root " + str(cc.root)});
        bool inv = std::all_of(p.lift->begin(), p.lift->end(), [&](const ZMat& w) { return maps_root_to_pm(w, cc.root); });
        cert.checklist.push_back({"curve_invariant", inv, inv ? "every lifted Weyl element maps the root to +-itself"
                                                              : "some lifted Weyl element moves the curve"});
        cert.homology_tag = homology_tag(c.id, cc, e.xi);
        out.push_back(cert);
    }
    return out;
}

}  // namespace

std::vector<AssociativeCertificate> check_fixed_point_mechanism(const LocalComponentData& c, const ResolutionEntry& e) {
    Prepared p = prepare(c, e);
    auto out = certificates(c, e, p, "orbifold-fixed-points");
    for (auto& cert : out) cert.guaranteed_count = cert.passed() ? cert.n_f : 0;
    return out;
}

std::vector<AssociativeCertificate> check_equivariant_mechanism(const OrbifoldData& o, const LocalComponentData& c, const ResolutionEntry& e) {
    if (!o.global) throw std::invalid_argument("symmetry mechanism needs the global group");
    if (!e.k) throw std::invalid_argument("lift data unavailable for component " + c.id + ": no symmetry data");
    if (!e.k->kappa_hat) throw std::invalid_argument("lift data unavailable for component " + c.id + ": kappa_hat missing");
    auto sym = std::find_if(o.symmetries.begin(), o.symmetries.end(), [&](const NamedSymmetry& s) { return s.name == e.k->symmetry; });
    if (sym == o.symmetries.end()) throw std::invalid_argument("unknown symmetry '" + e.k->symmetry + "'");

    Prepared p = prepare(c, e);
    SingularSet s = singular_components(*o.global);
    auto it = std::find_if(s.components.begin(), s.components.end(), [&](const SingularComponent& x) { return x.id == c.id; });
    if (it == s.components.end()) throw std::invalid_argument("component '" + c.id + "' is not in the singular set");
    std::size_t idx = static_cast<std::size_t>(it - s.components.begin());
    ComponentAction act = symmetry_action_on_components(*o.global, s, sym->map, G2Form::standard());

    std::vector<CheckItem> extra;
    bool fixed = act.permutation[idx] == idx;
    extra.push_back({"component_fixed", fixed, fixed ? "the symmetry maps the component to itself" : "component is moved"});

    std::optional<AffineIsometry> kappa;
    if (fixed) kappa = tangent_action(*it, sym->map);
    bool normalizes = kappa && e.xi.size() == 3 &&
                      (kappa->rot * e.xi == e.xi || kappa->rot * e.xi == negated(e.xi));
    extra.push_back({"kappa_normalizes_axis", normalizes, kappa ? "tangent action " + kappa->rot.str() : "no tangent action"});

    // kappa_hat must be the normal part of the symmetry, up to the central -1 of Gamma
    QMat nb = kernel(to_q(it->locus.dirs).transpose());
    QMat nbt = nb.transpose();
    QMat block = inverse(nbt * nb) * nbt * to_q(sym->map.R) * nb;
    QMat kh = e.k->kappa_hat->matrix();
    bool matches = block.rows() == 4 && (kh == block || kh == QMat(4, 4) - block);
    extra.push_back({"kappa_hat_matches_symmetry", matches, matches ? "kappa_hat equals the normal action" : "normal action " + block.str()});

    std::optional<std::vector<ZMat>> klift;
    if (p.lift) klift = weyl_lift({e.k->kappa_hat->lambda_plus().m}, e.zeta, p.rs, p.w);
    extra.push_back({"zeta_fixed_by_kappa", klift.has_value(), klift ? "Lambda+ kappa_hat fixes zeta up to W" : "zeta not fixed"});

    bool vanish = false;
    std::string vev = "no tangent action";
    if (kappa && normalizes) {
        QuotientAction qa = quotient_action_matrix(c.g_alpha, e.xi, *kappa);
        vanish = qa.invariant_dim == 0;
        vev = "H1 action " + qa.matrix.str() + ", invariants of dim " + std::to_string(qa.invariant_dim);
    }
    extra.push_back({"invariants_vanish", vanish, vev});

    auto out = certificates(c, e, p, "K-equivariant-exact");
    for (auto& cert : out) {
        cert.checklist.insert(cert.checklist.end(), extra.begin(), extra.end());
        if (cert.curve) {
            bool inv = klift && maps_root_to_pm((*klift)[0], cert.curve->root);
            cert.checklist.push_back({"curve_invariant_under_kappa", inv, inv ? "kappa_hat maps the curve to itself" : "curve moved"});
        }
        cert.guaranteed_count = cert.passed() ? 3 : 0;
    }
    return out;
}

namespace {

void append(CountReport& r, std::vector<AssociativeCertificate> certs) {
    for (auto& c : certs) {
        r.total += c.total();
        r.certificates.push_back(std::move(c));
    }
}

}  // namespace

CountReport count_fixed_point_mechanism(const OrbifoldData& o, const ResolutionChoice& r) {
    CountReport rep;
    for (const auto& e : r.entries)
        if (e.mechanism == "orbifold-fixed-points") append(rep, check_fixed_point_mechanism(o.component(e.component), e));
    return rep;
}

CountReport count_equivariant_mechanism(const OrbifoldData& o, const ResolutionChoice& r) {
    CountReport rep;
    for (const auto& e : r.entries)
        if (e.mechanism == "K-equivariant-exact") append(rep, check_equivariant_mechanism(o, o.component(e.component), e));
    return rep;
}

CountReport count_associatives(const OrbifoldData& o, const ResolutionChoice& r) {
    CountReport rep;
    for (const auto& e : r.entries) {
        if (e.mechanism == "orbifold-fixed-points") append(rep, check_fixed_point_mechanism(o.component(e.component), e));
        else if (e.mechanism == "K-equivariant-exact") append(rep, check_equivariant_mechanism(o, o.component(e.component), e));
        else throw std::invalid_argument("unknown mechanism '" + e.mechanism + "'");
    }
    return rep;
}

}  // namespace g2k
