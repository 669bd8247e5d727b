#include "g2k/flat_orbifold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace g2k {

bool preserves_phi(const AffineZ& g, const G2Form& form) {
    return form.phi.pullback(to_q(g.R)) == form.phi;
}

std::vector<AffineZ> quotient_group_elements(const CrystalGroupR7& g, std::size_t max_elements) {
    return generate_group(g.generators, 7, max_elements);
}

std::size_t SingularSet::lifted_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.lifts.size();
    return n;
}

namespace {

const long kGenericPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039};

QVec generic_point(const Subtorus& s) {
    QVec c(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) c[i] = Rational(1, kGenericPrimes[i % 7]);
    return add(s.offset, to_q(s.dirs) * c);
}

bool fixes(const AffineZ& g, const QVec& x) { return is_integral(sub(g.apply(x), x)); }

std::size_t element_order(const AffineZ& g) {
    AffineZ p = g;
    std::size_t k = 1;
    while (!p.is_identity()) {
        p = g.compose(p);
        if (++k > 1000) throw std::runtime_error("element of unbounded order");
    }
    return k;
}

std::string group_label(const std::vector<AffineZ>& grp) {
    std::size_t n = grp.size();
    for (const auto& g : grp)
        if (element_order(g) == n) return "C" + std::to_string(n);
    if (n == 8) return "Dic2";
    if (n == 12) return "Dic3";
    if (n == 24) return "2T";
    return "order" + std::to_string(n);
}

SubtorusKey orbit_key(const std::vector<AffineZ>& elems, const Subtorus& s) {
    SubtorusKey best = key_of(s);
    for (const auto& g : elems) best = std::min(best, key_of(image(g, s)));
    return best;
}

QMat normal_basis(const ZMat& dirs) {
    if (dirs.cols() == 0) return QMat::identity(dirs.rows());
    return kernel(to_q(dirs).transpose());
}

QMat restrict_to(const QMat& r, const QMat& basis) {
    QMat bt = basis.transpose();
    return inverse(bt * basis) * bt * r * basis;
}

}  // namespace

SingularSet singular_components(const CrystalGroupR7& g) {
    auto elems = quotient_group_elements(g);
    std::map<SubtorusKey, Subtorus> lifted;
    for (const auto& h : elems) {
        if (h.is_identity()) continue;
        for (const auto& s : fixed_subtori(h)) lifted.emplace(key_of(s), s);
    }

    SingularSet out;
    std::vector<Subtorus> all;
    for (const auto& [k, s] : lifted) all.push_back(s);
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (intersects(all[a], all[b]))
                out.flags.push_back("fixed loci " + to_string(all[a].offset) + " and " + to_string(all[b].offset) +
                                    " intersect (non-isolated isotropy)");

    std::set<SubtorusKey> seen;
    for (const auto& [k, s] : lifted) {
        if (seen.count(k)) continue;
        SingularComponent c;
        std::map<SubtorusKey, Subtorus> orbit;
        for (const auto& h : elems) {
            Subtorus img = canonical(image(h, s));
            orbit.emplace(key_of(img), img);
        }
        for (const auto& [ok, os] : orbit) {
            seen.insert(ok);
            c.lifts.push_back(os);
        }
        c.locus = orbit.begin()->second;
        QVec p = generic_point(c.locus);
        for (const auto& h : elems)
            if (fixes(h, p)) c.stabilizer.push_back(h);
        for (const auto& h : c.stabilizer)
            if (!h.is_identity()) {
                c.representative = h;
                break;
            }
        c.isotropy = group_label(c.stabilizer);
        c.stratum = "other";
        for (std::size_t i = 0; i < g.generators.size(); ++i)
            if (fixes(g.generators[i], p)) {
                c.stratum = "A" + std::to_string(i + 1);
                break;
            }
        out.components.push_back(std::move(c));
    }
    std::sort(out.components.begin(), out.components.end(), [](const SingularComponent& a, const SingularComponent& b) {
        if (a.stratum != b.stratum) return a.stratum < b.stratum;
        return key_of(a.locus) < key_of(b.locus);
    });
    std::map<std::string, int> counter;
    for (auto& c : out.components) c.id = c.stratum + "." + std::to_string(++counter[c.stratum]);
    return out;
}

ZMat complete_basis(const ZMat& dirs) {
    std::size_t n = dirs.rows(), d = dirs.cols();
    if (d == 0) return ZMat::identity(n);
    Smith s = smith_normal_form(dirs);
    for (std::size_t i = 0; i < d; ++i)
        if (s.diag(i) != 1) throw std::invalid_argument("direction lattice is not saturated");
    ZMat u = to_z(inverse(to_q(s.P)));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = dirs(i, j);
    return u;
}

AffineIsometry tangent_action(const SingularComponent& c, const AffineZ& kappa) {
    const ZMat& d = c.locus.dirs;
    std::size_t n = d.rows(), k = d.cols();
    ZMat u = complete_basis(d);
    QMat u_inv = inverse(to_q(u));
    QMat m = u_inv * to_q(kappa.R * d);
    QVec shift = u_inv * sub(kappa.apply(c.locus.offset), c.locus.offset);
    AffineIsometry out{ZMat(k, k), QVec(k)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i >= k && m(i, j) != 0) throw std::invalid_argument("map does not preserve the locus direction");
            if (i < k) {
                if (!is_integer(m(i, j))) throw std::invalid_argument("map is not integral on the locus lattice");
                out.rot(i, j) = m(i, j).get_num();
            }
        }
    for (std::size_t i = k; i < n; ++i)
        if (!is_integer(shift[i])) throw std::invalid_argument("map does not preserve the locus");
    for (std::size_t i = 0; i < k; ++i) out.trans[i] = frac(shift[i]);
    return out;
}

LocalModel local_model(const CrystalGroupR7& g, const SingularComponent& c) {
    LocalModel lm;
    QMat nb = normal_basis(c.locus.dirs);
    std::vector<QMat> gamma_normal;
    for (const auto& h : c.stabilizer) {
        QMat nm = restrict_to(to_q(h.R), nb);
        if (det(nm) != 1) throw std::domain_error("normal action reverses orientation; not in Sp(1)");
        // elements of a conjugate of Sp(1) in SO(4) are isoclinic: N + N^T is scalar
        QMat sym = nm + nm.transpose();
        for (std::size_t i = 0; i < sym.rows(); ++i)
            for (std::size_t j = 0; j < sym.cols(); ++j)
                if ((i != j && sym(i, j) != 0) || sym(i, i) != sym(0, 0))
                    throw std::domain_error("normal action of component " + c.id + " is not conjugate into Sp(1)");
        gamma_normal.push_back(nm);
    }
    lm.normal_action = gamma_normal;
    lm.gamma = c.isotropy;

    // setwise stabilizer acting along the locus
    std::set<AffineZ> tangent;
    std::vector<QMat> rho_parts;
    for (const auto& h : quotient_group_elements(g)) {
        Subtorus img = image(h, c.locus);
        if (!same_subtorus(img, c.locus)) continue;
        tangent.insert(tangent_action(c, h).as_affine());
        QMat nm = restrict_to(to_q(h.R), nb);
        bool in_gamma = std::any_of(gamma_normal.begin(), gamma_normal.end(), [&](const QMat& x) { return x == nm; });
        if (!in_gamma) rho_parts.push_back(nm);
    }
    lm.tangent_action.assign(tangent.begin(), tangent.end());
    std::set<ZMat> point_group;
    for (const auto& t : lm.tangent_action) point_group.insert(t.R);
    switch (point_group.size()) {
        case 1: lm.g_alpha = BieberbachClass::Trivial; break;
        case 2: lm.g_alpha = BieberbachClass::C2; break;
        case 3: lm.g_alpha = BieberbachClass::C3; break;
        case 6: lm.g_alpha = BieberbachClass::C6; break;
        case 4: {
            bool klein = std::all_of(point_group.begin(), point_group.end(), [](const ZMat& r) { return r * r == ZMat::identity(r.rows()); });
            lm.g_alpha = klein ? BieberbachClass::C2xC2 : BieberbachClass::C4;
            break;
        }
        default: throw std::domain_error("unexpected point group of order " + std::to_string(point_group.size()));
    }
    lm.rho_trivial = rho_parts.empty();
    lm.rho = lm.rho_trivial ? "trivial" : std::to_string(rho_parts.size()) + " normal rotations outside Gamma";
    return lm;
}

ComponentAction symmetry_action_on_components(const CrystalGroupR7& g, const SingularSet& s, const AffineZ& lambda,
                                              const G2Form& form) {
    if (!preserves_phi(lambda, form)) throw std::invalid_argument("symmetry does not preserve phi");
    auto elems = quotient_group_elements(g);
    std::set<AffineZ> members(elems.begin(), elems.end());
    AffineZ inv = lambda.inverse();
    for (const auto& h : elems)
        if (!members.count(lambda.compose(h).compose(inv))) throw std::invalid_argument("symmetry does not normalize the group");

    std::vector<SubtorusKey> comp_keys;
    for (const auto& c : s.components) comp_keys.push_back(orbit_key(elems, c.locus));

    ComponentAction act;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        SubtorusKey k = orbit_key(elems, image(lambda, s.components[i].locus));
        auto it = std::find(comp_keys.begin(), comp_keys.end(), k);
        if (it == comp_keys.end()) throw std::runtime_error("image of component " + s.components[i].id + " is not a component");
        act.permutation.push_back(static_cast<std::size_t>(it - comp_keys.begin()));
    }
    for (std::size_t i = 0; i < act.permutation.size(); ++i) {
        std::size_t j = act.permutation[i];
        if (j == i) act.fixed.push_back(i);
        else if (act.permutation[j] == i && i < j) act.swapped.push_back({i, j});
    }

    std::vector<SubtorusKey> lift_keys;
    for (const auto& c : s.components)
        for (const auto& l : c.lifts) lift_keys.push_back(key_of(l));
    std::vector<std::size_t> lift_perm;
    for (const auto& c : s.components)
        for (const auto& l : c.lifts) {
            auto it = std::find(lift_keys.begin(), lift_keys.end(), key_of(image(lambda, l)));
            if (it == lift_keys.end()) throw std::runtime_error("image of a fixed torus is not fixed");
            lift_perm.push_back(static_cast<std::size_t>(it - lift_keys.begin()));
        }
    act.lifted_total = lift_perm.size();
    for (std::size_t i = 0; i < lift_perm.size(); ++i) {
        if (lift_perm[i] == i) ++act.lifted_fixed;
        else if (lift_perm[lift_perm[i]] == i && i < lift_perm[i]) ++act.lifted_two_cycles;
    }
    return act;
}

}  // namespace g2k
