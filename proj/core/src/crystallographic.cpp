#include "g2k/crystallographic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2k {

std::string to_string(BieberbachClass c) {
    switch (c) {
        case BieberbachClass::Trivial: return "1";
        case BieberbachClass::C2: return "C2";
        case BieberbachClass::C3: return "C3";
        case BieberbachClass::C4: return "C4";
        case BieberbachClass::C6: return "C6";
        case BieberbachClass::C2xC2: return "C2xC2";
    }
    return "?";
}

BieberbachClass bieberbach_class_from(const std::string& tag) {
    if (tag == "1" || tag == "trivial") return BieberbachClass::Trivial;
    if (tag == "C2") return BieberbachClass::C2;
    if (tag == "C3") return BieberbachClass::C3;
    if (tag == "C4") return BieberbachClass::C4;
    if (tag == "C6") return BieberbachClass::C6;
    if (tag == "C2xC2" || tag == "C2^2") return BieberbachClass::C2xC2;
    throw std::invalid_argument("unknown Bieberbach class tag '" + tag + "'");
}

std::size_t class_order(BieberbachClass c) {
    switch (c) {
        case BieberbachClass::Trivial: return 1;
        case BieberbachClass::C2: return 2;
        case BieberbachClass::C3: return 3;
        case BieberbachClass::C4: return 4;
        case BieberbachClass::C6: return 6;
        case BieberbachClass::C2xC2: return 4;
    }
    return 0;
}

QMat Lattice::basis_matrix() const {
    QMat b(3, 3);
    for (int c = 0; c < 3; ++c) b.set_col(c, basis[c].vec());
    return b;
}

QMat Lattice::gram() const {
    QMat b = basis_matrix();
    return b.transpose() * b;
}

ImVec Lattice::ambient(const QVec& x) const { return ImVec::from(basis_matrix() * x); }

QVec Lattice::coords(const ImVec& v) const { return inverse(basis_matrix()) * v.vec(); }

Lattice Lattice::cubic() { return {{ImVec{1, 0, 0}, ImVec{0, 1, 0}, ImVec{0, 0, 1}}}; }

Lattice Lattice::hexagonal() { return {{ImVec{1, 1, 1}, ImVec{1, -1, 0}, ImVec{0, 1, -1}}}; }

ZMat matrix_R2() { return {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}; }
ZMat matrix_R3() { return {{1, 0, 0}, {0, -1, 1}, {0, -1, 0}}; }
ZMat matrix_R4() { return {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}; }
ZMat matrix_R6() { return {{1, 0, 0}, {0, 1, -1}, {0, 1, 0}}; }
ZMat matrix_Rplus() { return {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}; }
ZMat matrix_Rminus() { return {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}; }

std::vector<AffineZ> BieberbachGroup::quotient() const {
    std::vector<AffineZ> gens;
    for (const auto& g : generators) gens.push_back(g.as_affine());
    return generate_group(gens, 3, 64);
}

Rotation3 BieberbachGroup::ambient_rotation(const ZMat& rot) const {
    QMat b = lattice.basis_matrix();
    return Rotation::make(b * to_q(rot) * inverse(b));
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("lattice constraint violated: " + what);
}

void check_gram(BieberbachClass cls, const QMat& g) {
    using C = BieberbachClass;
    if (cls == C::Trivial) return;
    require(g(0, 1) == 0, "<l1,l2> = 0 (got " + to_string(g(0, 1)) + ")");
    require(g(0, 2) == 0, "<l1,l3> = 0 (got " + to_string(g(0, 2)) + ")");
    if (cls == C::C3 || cls == C::C6) {
        require(g(1, 1) == g(2, 2), "|l2|^2 = |l3|^2");
        require(g(1, 1) == -2 * g(1, 2), "|l2|^2 = -2<l2,l3>");
    } else if (cls == C::C4) {
        require(g(1, 1) == g(2, 2), "|l2|^2 = |l3|^2");
        require(g(1, 2) == 0, "<l2,l3> = 0");
    } else if (cls == C::C2xC2) {
        require(g(1, 2) == 0, "<l2,l3> = 0");
    }
}

std::vector<AffineIsometry> default_generators(BieberbachClass cls) {
    using C = BieberbachClass;
    auto t = [](Rational a, Rational b, Rational c) { return QVec{a, b, c}; };
    switch (cls) {
        case C::Trivial: return {};
        case C::C2: return {{matrix_R2(), t(Rational(1, 2), 0, 0)}};
        case C::C3: return {{matrix_R3(), t(Rational(1, 3), 0, 0)}};
        case C::C4: return {{matrix_R4(), t(Rational(1, 4), 0, 0)}};
        case C::C6: return {{matrix_R6(), t(Rational(1, 6), 0, 0)}};
        case C::C2xC2:
            return {{matrix_Rplus(), t(Rational(1, 2), Rational(1, 2), 0)},
                    {matrix_Rminus(), t(0, Rational(1, 2), Rational(1, 2))}};
    }
    return {};
}

bool is_cyclic_of_order(const std::vector<AffineZ>& h, std::size_t n) {
    if (h.size() != n) return false;
    for (const auto& g : h) {
        AffineZ p = g;
        std::size_t k = 1;
        while (!p.is_identity()) p = g.compose(p), ++k;
        if (k == n) return true;
    }
    return false;
}

}  // namespace

BieberbachGroup make_bieberbach(BieberbachClass cls, const Lattice& lattice,
                                std::optional<std::vector<AffineIsometry>> generators) {
    QMat b = lattice.basis_matrix();
    require(det(b) != 0, "basis linearly independent");
    QMat g = lattice.gram();
    check_gram(cls, g);

    BieberbachGroup grp{cls, lattice, generators ? *generators : default_generators(cls)};
    for (const auto& gen : grp.generators) {
        QMat r = to_q(gen.rot);
        if (!(r.transpose() * g * r == g)) throw std::invalid_argument("generator rotation " + r.str() + " is not an isometry of the lattice");
        if (det(r) != 1) throw std::invalid_argument("generator rotation " + r.str() + " is not orientation preserving");
    }
    auto h = grp.quotient();
    bool ok = cls == BieberbachClass::C2xC2
                  ? h.size() == 4 && std::all_of(h.begin(), h.end(), [](const AffineZ& x) { return x.compose(x).is_identity(); })
                  : is_cyclic_of_order(h, class_order(cls));
    if (!ok) throw std::invalid_argument("generated quotient has order " + std::to_string(h.size()) + ", not of type " + to_string(cls));
    return grp;
}

TorsionCheck torsion_free_check(const BieberbachGroup& g) {
    for (const auto& h : g.quotient()) {
        if (h.is_identity()) continue;
        auto fixed = fixed_subtori(h);
        if (!fixed.empty()) return {false, h, fixed.front().offset};
    }
    return {};
}

bool is_primitive(const ZVec& xi) { return gcd_of(xi) == 1; }

bool is_eligible_axis(const BieberbachGroup& g, const ZVec& xi) {
    if (!is_primitive(xi)) return false;
    for (const auto& gen : g.generators) {
        ZVec r = gen.rot * xi;
        ZVec neg(xi.size());
        for (std::size_t i = 0; i < xi.size(); ++i) neg[i] = -xi[i];
        if (r != xi && r != neg) return false;
    }
    return true;
}

std::vector<ZVec> eligible_axes(const BieberbachGroup& g, int height) {
    // joint eigenspaces for each sign pattern of the generators
    std::size_t m = g.generators.size();
    std::vector<QMat> spaces;
    for (std::size_t pattern = 0; pattern < (std::size_t(1) << m); ++pattern) {
        std::vector<QVec> eqs;
        for (std::size_t i = 0; i < m; ++i) {
            Rational s = (pattern >> i) & 1u ? -1 : 1;
            for (int r = 0; r < 3; ++r) {
                QVec row(3);
                for (int c = 0; c < 3; ++c) row[c] = Rational(g.generators[i].rot(r, c)) - (r == c ? s : Rational(0));
                eqs.push_back(row);
            }
        }
        QMat sys(eqs.size(), 3);
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (int c = 0; c < 3; ++c) sys(r, c) = eqs[r][c];
        QMat k = eqs.empty() ? QMat::identity(3) : kernel(sys);
        if (k.cols()) spaces.push_back(k);
    }
    std::vector<ZVec> out;
    for (int a = -height; a <= height; ++a)
        for (int b = -height; b <= height; ++b)
            for (int c = -height; c <= height; ++c) {
                ZVec v{a, b, c};
                // sign normalization: first nonzero coordinate positive
                auto nz = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
                if (nz == v.end() || *nz < 0 || !is_primitive(v)) continue;
                QVec q = to_q(v);
                bool ok = std::any_of(spaces.begin(), spaces.end(), [&](const QMat& k) { return in_span(k, q); });
                if (ok) out.push_back(v);
            }
    std::sort(out.begin(), out.end(), [](const ZVec& x, const ZVec& y) {
        Integer hx = 0, hy = 0;
        for (const auto& e : x) hx = std::max<Integer>(hx, abs(e));
        for (const auto& e : y) hy = std::max<Integer>(hy, abs(e));
        if (hx != hy) return hx < hy;
        return x > y;
    });
    return out;
}

bool is_central(const ZVec& xi, const BieberbachGroup& g) {
    return std::all_of(g.generators.begin(), g.generators.end(), [&](const AffineIsometry& gen) { return gen.rot * xi == xi; });
}

Rational BaseOrbifold::orbifold_euler() const {
    Rational chi = underlying_euler;
    for (const auto& p : singular_points) chi -= 1 - Rational(1, p.isotropy);
    return chi;
}

std::vector<std::size_t> BaseOrbifold::isotropy_orders() const {
    std::vector<std::size_t> o;
    for (const auto& p : singular_points) o.push_back(p.isotropy);
    std::sort(o.rbegin(), o.rend());
    return o;
}

namespace {

AffineZ reduce_to_base(const AffineZ& h, const ZMat& u, const ZMat& u_inv) {
    ZMat r = u_inv * h.R * u;
    QVec t = to_q(u_inv) * h.t;
    AffineZ out{ZMat(2, 2), {t[1], t[2]}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.R(i, j) = r(i + 1, j + 1);
    return out.canonical();
}

bool same_point(const QVec& a, const QVec& b) { return is_integral(sub(a, b)); }

}  // namespace

BaseOrbifold base_orbifold(const BieberbachGroup& g, const ZVec& xi) {
    if (!is_eligible_axis(g, xi)) throw std::invalid_argument("axis is not a primitive simultaneous eigenvector; Z xi is not normal");
    BaseOrbifold bo;
    bo.axis = xi;
    bo.completion = unimodular_completion(xi);
    ZMat u_inv = to_z(inverse(to_q(bo.completion)));

    std::set<AffineZ> induced;
    for (const auto& h : g.quotient()) induced.insert(reduce_to_base(h, bo.completion, u_inv));
    bo.action.assign(induced.begin(), induced.end());

    std::vector<QVec> points;
    bool reverses = false;
    for (const auto& h : bo.action) {
        if (det(to_q(h.R)) < 0) reverses = true;
        if (h.is_identity()) continue;
        for (const auto& s : fixed_subtori(h)) {
            if (s.dim() > 0) throw std::runtime_error("base action has a reflection line; not a cone-point orbifold");
            if (std::none_of(points.begin(), points.end(), [&](const QVec& p) { return same_point(p, s.offset); }))
                points.push_back(frac(s.offset));
        }
    }

    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i]) continue;
        QVec rep = points[i];
        std::size_t stab = 0;
        for (const auto& h : bo.action) {
            QVec img = frac(h.apply(points[i]));
            if (same_point(img, points[i])) ++stab;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (!used[j] && same_point(img, points[j])) {
                    used[j] = true;
                    if (points[j] < rep) rep = points[j];
                }
        }
        used[i] = true;
        bo.singular_points.push_back({rep, stab});
    }
    std::sort(bo.singular_points.begin(), bo.singular_points.end(),
              [](const SingularPoint& a, const SingularPoint& b) { return a.point < b.point; });
    bo.n_f = bo.singular_points.size();
    if (bo.n_f == 0) {
        bo.topology = reverses ? "klein_bottle" : "torus";
        bo.underlying_euler = 0;
    } else {
        bo.topology = reverses ? "projective_orbifold" : "sphere_orbifold";
        bo.underlying_euler = reverses ? 1 : 2;
    }
    return bo;
}

QuotientAction quotient_action_matrix(const BieberbachGroup& g, const ZVec& xi, const AffineIsometry& kappa) {
    if (!is_primitive(xi)) throw std::invalid_argument("axis is not primitive");
    Rational d = det(to_q(kappa.rot));
    if (d != 1 && d != -1) throw std::invalid_argument("kappa does not normalize the lattice");
    ZVec img = kappa.rot * xi;
    ZVec neg(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) neg[i] = -xi[i];
    if (img != xi && img != neg) throw std::invalid_argument("kappa does not normalize Z xi");
    (void)g;
    ZMat u = unimodular_completion(xi);
    ZMat r = to_z(inverse(to_q(u))) * kappa.rot * u;
    QuotientAction qa{ZMat(2, 2), 0};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) qa.matrix(i, j) = r(i + 1, j + 1);
    qa.invariant_dim = kernel(to_q(qa.matrix.transpose()) - QMat::identity(2)).cols();
    return qa;
}

}  // namespace g2k
