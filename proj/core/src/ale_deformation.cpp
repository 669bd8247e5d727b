#include "g2k/ale_deformation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace g2k {

Vec3 to_double(const ImVec& v) { return {v.i.get_d(), v.j.get_d(), v.k.get_d()}; }

namespace {

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 shifted(Vec3 q, int axis, double d) {
    q[axis] += d;
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

GHConfig GHConfig::make(std::vector<ImVec> charges) {
    if (charges.size() < 2) throw std::invalid_argument("need at least two charges (k >= 1)");
    ImVec s;
    for (const auto& z : charges) s = s + z;
    if (!(s == ImVec{})) throw std::invalid_argument("charges must sum to zero");
    return GHConfig{std::move(charges)};
}

double GHConfig::radius() const {
    double r = 0;
    for (const auto& z : charges) r = std::max(r, norm(to_double(z)));
    return r;
}

bool GHConfig::is_zero() const {
    return std::all_of(charges.begin(), charges.end(), [](const ImVec& z) { return z == ImVec{}; });
}

GHValue gh_potential(const GHConfig& c, const ImVec& q) {
    GHValue out;
    Rational exact = 0;
    bool all_exact = true;
    for (const auto& z : c.charges) {
        Rational d2 = norm2(q - z);
        if (d2 == 0) throw std::invalid_argument("point coincides with a charge");
        if (auto r = rational_sqrt(d2)) exact += Rational(1, 2) / *r;
        else all_exact = false;
    }
    out.value = gh_potential(c, to_double(q));
    if (all_exact) {
        out.exact = exact;
        out.value = exact.get_d();
    }
    return out;
}

double gh_potential(const GHConfig& c, const Vec3& q) {
    // terms summed in sorted order so the result does not depend on the charge order
    std::vector<double> terms;
    for (const auto& z : c.charges) {
        double r = norm(minus(q, to_double(z)));
        if (r == 0) throw std::invalid_argument("point coincides with a charge");
        terms.push_back(0.5 / r);
    }
    std::sort(terms.begin(), terms.end());
    double v = 0;
    for (double t : terms) v += t;
    return v;
}

double gh_potential_deviation(const GHConfig& c, const Vec3& q) {
    // 1/(2|q-z|) - 1/(2|q|) = (2 q.z - |z|^2) / (2 |q| |q-z| (|q| + |q-z|))
    double rq = norm(q), dev = 0;
    for (const auto& z : c.charges) {
        Vec3 zd = to_double(z);
        double rz = norm(minus(q, zd));
        dev += (2 * dot3(q, zd) - dot3(zd, zd)) / (2 * rq * rz * (rq + rz));
    }
    return dev;
}

double gh_harmonicity_residual(const GHConfig& c, const Vec3& q, double h) {
    if (!(h > 0)) throw std::invalid_argument("step must be positive");
    for (const auto& z : c.charges)
        if (norm(minus(q, to_double(z))) <= h * (1 + 1e-9)) throw std::invalid_argument("stencil hits a charge");
    double lap = -6 * gh_potential(c, q);
    for (int k = 0; k < 3; ++k) lap += gh_potential(c, shifted(q, k, h)) + gh_potential(c, shifted(q, k, -h));
    return lap / (h * h);
}

Vec3 gh_connection(const GHConfig& c, const Vec3& q, const Vec3& s) {
    Vec3 a{0, 0, 0};
    for (const auto& z : c.charges) {
        Vec3 x = minus(q, to_double(z));
        double r = norm(x), den = 2 * r * (r - dot3(s, x));
        if (den <= 1e-14 * (1 + r * r)) throw std::invalid_argument("point lies on a Dirac string");
        Vec3 n = cross3(x, s);
        for (int k = 0; k < 3; ++k) a[k] += n[k] / den;
    }
    return a;
}

FormCheck gh_form_closedness(const GHConfig& c, const Vec3& q, const Vec3& string_dir, double h) {
    double sn = norm(string_dir);
    if (sn == 0) throw std::invalid_argument("string direction must be nonzero");
    Vec3 s{string_dir[0] / sn, string_dir[1] / sn, string_dir[2] / sn};
    for (const auto& z : c.charges)
        if (norm(minus(q, to_double(z))) <= 2 * h) throw std::invalid_argument("stencil hits a charge");

    // da[k][m] = d a_m / d q_k
    double da[3][3], dv[3];
    for (int k = 0; k < 3; ++k) {
        Vec3 ap = gh_connection(c, shifted(q, k, h), s), am = gh_connection(c, shifted(q, k, -h), s);
        for (int m = 0; m < 3; ++m) da[k][m] = (ap[m] - am[m]) / (2 * h);
        dv[k] = (gh_potential(c, shifted(q, k, h)) - gh_potential(c, shifted(q, k, -h))) / (2 * h);
    }
    double curl[3] = {da[1][2] - da[2][1], da[2][0] - da[0][2], da[0][1] - da[1][0]};
    FormCheck out;
    for (int k = 0; k < 3; ++k) out.closedness = std::max(out.closedness, std::abs(curl[k] + dv[k]));

    // 2-forms on R^4 = (t, q1, q2, q3) as antisymmetric matrices
    double v = gh_potential(c, q);
    Vec3 a = gh_connection(c, q, s);
    double theta[4] = {1, a[0], a[1], a[2]};
    double w[3][4][4] = {};
    for (int r = 0; r < 3; ++r) {
        for (int mu = 0; mu < 4; ++mu) {
            w[r][mu][r + 1] += theta[mu];
            w[r][r + 1][mu] -= theta[mu];
        }
        int p = 1 + (r + 1) % 3, t = 1 + (r + 2) % 3;
        w[r][p][t] += v;
        w[r][t][p] -= v;
    }
    auto top = [](const double (&x)[4][4], const double (&y)[4][4]) {
        return x[0][1] * y[2][3] - x[0][2] * y[1][3] + x[0][3] * y[1][2] + x[1][2] * y[0][3] - x[1][3] * y[0][2] +
               x[2][3] * y[0][1];
    };
    for (int r = 0; r < 3; ++r)
        for (int t = 0; t < 3; ++t)
            out.algebraic = std::max(out.algebraic, std::abs(top(w[r], w[t]) - (r == t ? 2 * v : 0.0)));
    return out;
}

double gh_quadrupole(const GHConfig& c, const Vec3& u) {
    double q = 0;
    for (const auto& z : c.charges) {
        Vec3 zd = to_double(z);
        double p = dot3(u, zd);
        q += (3 * p * p - dot3(zd, zd)) / 4;
    }
    return q;
}

std::vector<Vec3> sphere_directions(std::size_t n) {
    std::vector<Vec3> out;
    const double golden = M_PI * (3 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        double y = 1 - 2 * (i + 0.5) / n, r = std::sqrt(1 - y * y), th = golden * i;
        out.push_back({r * std::cos(th), y, r * std::sin(th)});
    }
    return out;
}

std::vector<double> default_decay_ladder(const GHConfig& c, int count) {
    double base = 10 * (c.radius() > 0 ? c.radius() : 1.0);
    std::vector<double> r;
    for (int j = 0; j < count; ++j) r.push_back(base * std::ldexp(1.0, j));
    return r;
}

DecayFit gh_decay_exponent(const GHConfig& c, const std::vector<double>& radii, std::size_t directions) {
    if (radii.size() < 2) throw std::invalid_argument("degenerate radius ladder: need at least two radii");
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (!(radii[i] > 0) || (i > 0 && !(radii[i] > radii[i - 1])))
            throw std::invalid_argument("degenerate radius ladder: radii must be positive and strictly increasing");
    DecayFit fit;
    fit.radii = radii;
    auto dirs = sphere_directions(directions);
    for (const auto& u : dirs) fit.quadrupole_oracle = std::max(fit.quadrupole_oracle, std::abs(gh_quadrupole(c, u)));
    if (c.is_zero()) {
        fit.zero_config = true;
        fit.deviation.assign(radii.size(), 0.0);
        fit.quadrupole_scaled.assign(radii.size(), 0.0);
        return fit;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : radii) {
        double sup = 0;
        for (const auto& u : dirs) sup = std::max(sup, std::abs(gh_potential_deviation(c, {r * u[0], r * u[1], r * u[2]})));
        fit.deviation.push_back(sup);
        fit.quadrupole_scaled.push_back(sup * r * r * r);
        double x = std::log(r), y = std::log(sup);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    double n = static_cast<double>(radii.size());
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

// ---------------------------------------------------------------------------

namespace {

ZVec unit(std::size_t n, std::size_t i) {
    ZVec v(n, Integer(0));
    v[i] = 1;
    return v;
}

ZVec root_diff(std::size_t n, std::size_t a, std::size_t b, int sign_b = -1) {
    ZVec v = unit(n, a);
    v[b] += sign_b;
    return v;
}

ZVec negate(ZVec v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

std::string RootSystemData::name() const {
    return std::string(type == RootType::A ? "A" : type == RootType::D ? "D" : "E") + std::to_string(rank);
}

std::vector<ZVec> RootSystemData::roots() const {
    std::vector<ZVec> out = positive_roots;
    for (const auto& r : positive_roots) out.push_back(negate(r));
    return out;
}

ZVec RootSystemData::simple_coordinates(const ZVec& root) const {
    QMat s(ambient, simple_roots.size());
    for (std::size_t j = 0; j < simple_roots.size(); ++j) s.set_col(j, to_q(simple_roots[j]));
    QMat st = s.transpose();
    QVec c = inverse(st * s) * (st * to_q(root));
    if (!is_zero(sub(s * c, to_q(root)))) throw std::invalid_argument("vector is not in the root lattice span");
    return to_z(c);
}

RootSystemData root_system(const std::string& name) {
    RootSystemData rs;
    int k = 0;
    if (name.size() >= 2) {
        try {
            k = std::stoi(name.substr(1));
        } catch (...) {
            k = 0;
        }
    }
    if (name[0] == 'A' && k >= 1 && k <= 8) {
        rs.type = RootType::A;
        rs.rank = k;
        rs.ambient = k + 1;
        rs.sum_zero = true;
        for (std::size_t i = 0; i < rs.ambient - 1; ++i) rs.simple_roots.push_back(root_diff(rs.ambient, i, i + 1));
        for (std::size_t a = 0; a < rs.ambient; ++a)
            for (std::size_t b = a + 1; b < rs.ambient; ++b) rs.positive_roots.push_back(root_diff(rs.ambient, a, b));
    } else if (name == "D4") {
        rs.type = RootType::D;
        rs.rank = 4;
        rs.ambient = 4;
        rs.sum_zero = false;
        rs.simple_roots = {root_diff(4, 0, 1), root_diff(4, 1, 2), root_diff(4, 2, 3), root_diff(4, 2, 3, 1)};
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) {
                rs.positive_roots.push_back(root_diff(4, a, b));
                rs.positive_roots.push_back(root_diff(4, a, b, 1));
            }
    } else {
        throw std::invalid_argument("unsupported ADE type '" + name + "' (supported: A1..A8, D4)");
    }
    for (const auto& a : rs.simple_roots) {
        ZMat s = ZMat::identity(rs.ambient);
        for (std::size_t i = 0; i < rs.ambient; ++i)
            for (std::size_t j = 0; j < rs.ambient; ++j) s(i, j) -= a[i] * a[j];
        rs.reflections.push_back(s);
    }
    return rs;
}

std::size_t WeylGroup::index_of(const ZMat& w) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || !(*it == w)) throw std::invalid_argument("matrix is not in the Weyl group");
    return static_cast<std::size_t>(it - elements.begin());
}

WeylGroup weyl_group(const RootSystemData& rs) {
    const std::size_t limit = 50000;
    WeylGroup w;
    w.generators = rs.reflections;
    std::set<ZMat> seen{ZMat::identity(rs.ambient)};
    std::vector<ZMat> frontier{ZMat::identity(rs.ambient)};
    while (!frontier.empty()) {
        std::vector<ZMat> next;
        for (const auto& g : frontier)
            for (const auto& s : w.generators) {
                ZMat h = s * g;
                if (seen.insert(h).second) next.push_back(h);
            }
        if (seen.size() > limit) throw std::invalid_argument("Weyl group of " + rs.name() + " is too large to enumerate");
        frontier = std::move(next);
    }
    w.elements.assign(seen.begin(), seen.end());
    return w;
}

// ---------------------------------------------------------------------------

DeformationPoint weyl_act(const ZMat& w, const DeformationPoint& z) { return z * to_q(w).transpose(); }

ImVec evaluate_root(const DeformationPoint& z, const ZVec& alpha) { return ImVec::from(z * to_q(alpha)); }

bool on_wall(const RootSystemData& rs, const DeformationPoint& z) {
    return std::any_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                       [&](const ZVec& a) { return evaluate_root(z, a) == ImVec{}; });
}

DeformationPoint from_charges(const std::vector<ImVec>& charges) {
    QMat z(3, charges.size());
    for (std::size_t a = 0; a < charges.size(); ++a) z.set_col(a, charges[a].vec());
    return z;
}

std::vector<ImVec> to_charges(const DeformationPoint& z) {
    std::vector<ImVec> out;
    for (std::size_t a = 0; a < z.cols(); ++a) out.push_back(ImVec::from(z.col(a)));
    return out;
}

QVec vec_of(const DeformationPoint& z) {
    QVec v;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < z.cols(); ++a) v.push_back(z(r, a));
    return v;
}

DeformationPoint point_of(const QVec& v, std::size_t n) {
    if (v.size() != 3 * n) throw std::invalid_argument("vector length does not match 3n");
    QMat z(3, n);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < n; ++a) z(r, a) = v[r * n + a];
    return z;
}

namespace {

QMat kron_minus_identity(const QMat& r, const ZMat& w) {
    std::size_t n = w.rows();
    QMat m(3 * n, 3 * n);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t b = 0; b < n; ++b) {
                    Rational x = r(i, j) * w(a, b);
                    if (i == j && a == b) x -= 1;
                    m(i * n + a, j * n + b) = x;
                }
    return m;
}

QMat base_space(const RootSystemData& rs) {
    std::size_t n = rs.ambient;
    if (!rs.sum_zero) return QMat::identity(3 * n);
    QMat c(3, 3 * n);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < n; ++a) c(r, r * n + a) = 1;
    return kernel(c);
}

// Columns of basis * kernel(m * basis): the part of span(basis) killed by m.
QMat restrict_kernel(const QMat& basis, const QMat& m) {
    if (basis.cols() == 0) return basis;
    QMat k = kernel(m * basis);
    if (k.cols() == 0) return QMat(basis.rows(), 0);
    return basis * k;
}

std::vector<ZVec> walls_containing(const RootSystemData& rs, const QMat& basis) {
    std::vector<ZVec> out;
    std::size_t n = rs.ambient;
    for (const auto& a : rs.positive_roots) {
        bool inside = true;
        for (std::size_t j = 0; j < basis.cols() && inside; ++j)
            inside = evaluate_root(point_of(basis.col(j), n), a) == ImVec{};
        if (inside) out.push_back(a);
    }
    return out;
}

// Off-wall point of span(basis) via basis * (1, t, t^2, ...); some t <= #walls * dim + 1 works
// whenever no wall contains the whole span.
std::optional<DeformationPoint> find_witness(const RootSystemData& rs, const QMat& basis) {
    std::size_t d = basis.cols(), n = rs.ambient;
    if (d == 0) return std::nullopt;
    std::size_t limit = rs.positive_roots.size() * d + 2;
    for (std::size_t t = 1; t <= limit; ++t) {
        QVec c(d);
        Rational p = 1;
        for (std::size_t j = 0; j < d; ++j, p *= Rational(static_cast<long>(t))) c[j] = p;
        DeformationPoint z = point_of(basis * c, n);
        if (!on_wall(rs, z)) return z;
    }
    return std::nullopt;
}

}  // namespace

QMat fixed_subspace(const std::vector<QMat>& rotations, const std::vector<ZMat>& tuple, const RootSystemData& rs) {
    if (rotations.size() != tuple.size()) throw std::invalid_argument("tuple length must match the rotation count");
    QMat basis = base_space(rs);
    for (std::size_t i = 0; i < rotations.size(); ++i) basis = restrict_kernel(basis, kron_minus_identity(rotations[i], tuple[i]));
    return basis.cols() ? span_canonical(basis) : basis;
}

FixedLocus fixed_locus(const std::vector<QMat>& rotations, const RootSystemData& rs, std::size_t max_tuples) {
    for (const auto& r : rotations)
        if (r.rows() != 3 || r.cols() != 3 || !(r * r.transpose() == QMat::identity(3)))
            throw std::invalid_argument("rotations must be orthogonal 3x3 matrices");
    WeylGroup wg = weyl_group(rs);
    const std::size_t order = wg.order(), m = rotations.size();
    double total = std::pow(static_cast<double>(order), static_cast<double>(m));
    if (total > static_cast<double>(max_tuples)) throw std::invalid_argument("too many Weyl tuples to enumerate");

    // index arithmetic for conjugation
    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    std::vector<std::size_t> inv(order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) mul[a][b] = wg.index_of(wg.elements[a] * wg.elements[b]);
    std::size_t id = wg.index_of(ZMat::identity(rs.ambient));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (mul[a][b] == id) inv[a] = b;
    auto canonical_tuple = [&](const std::vector<std::size_t>& t) {
        std::vector<std::size_t> best = t;
        for (std::size_t g = 0; g < order; ++g) {
            std::vector<std::size_t> c;
            for (auto x : t) c.push_back(mul[mul[g][x]][inv[g]]);
            best = std::min(best, c);
        }
        return best;
    };

    FixedLocus out;
    std::map<std::vector<std::size_t>, FixedLocusComponent> found;
    std::set<std::vector<std::size_t>> wall_orbits;
    QMat start = base_space(rs);
    std::vector<std::size_t> idx;
    std::vector<QMat> stack{start};
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (level == m) {
            ++out.tuples_examined;
            const QMat& basis = stack.back();
            if (basis.cols() == 0) return;
            auto key = canonical_tuple(idx);
            if (found.count(key) || wall_orbits.count(key)) return;
            auto walls = walls_containing(rs, basis);
            if (!walls.empty()) {
                wall_orbits.insert(key);
                return;
            }
            FixedLocusComponent c;
            for (auto x : key) c.weyl_tuple.push_back(wg.elements[x]);
            c.basis = fixed_subspace(rotations, c.weyl_tuple, rs);
            c.witness = find_witness(rs, c.basis);
            std::set<std::vector<std::size_t>> orbit;
            for (std::size_t g = 0; g < order; ++g) {
                std::vector<std::size_t> t;
                for (auto x : key) t.push_back(mul[mul[g][x]][inv[g]]);
                orbit.insert(t);
            }
            c.orbit_size = orbit.size();
            found.emplace(key, std::move(c));
            return;
        }
        for (std::size_t w = 0; w < order; ++w) {
            QMat next = restrict_kernel(stack.back(), kron_minus_identity(rotations[level], wg.elements[w]));
            if (next.cols() == 0) {
                out.tuples_examined += static_cast<std::size_t>(std::pow(static_cast<double>(order), static_cast<double>(m - level - 1)));
                continue;
            }
            idx.push_back(w);
            stack.push_back(next);
            self(self, level + 1);
            stack.pop_back();
            idx.pop_back();
        }
    };
    recurse(recurse, 0);
    for (auto& [k, c] : found) out.components.push_back(std::move(c));
    out.wall_bound_orbits = wall_orbits.size();
    return out;
}

std::optional<std::vector<ZMat>> weyl_lift(const std::vector<QMat>& rotations, const DeformationPoint& z,
                                           const RootSystemData& rs, const WeylGroup& w) {
    std::vector<ZMat> out;
    if (z.cols() != rs.ambient) throw std::invalid_argument("deformation point has the wrong number of columns");
    for (const auto& r : rotations) {
        QMat rz = r * z;
        auto it = std::find_if(w.elements.begin(), w.elements.end(), [&](const ZMat& g) { return weyl_act(g, rz) == z; });
        if (it == w.elements.end()) return std::nullopt;
        out.push_back(*it);
    }
    return out;
}

bool same_up_to_weyl(const QMat& a, const QMat& b, const WeylGroup& w, std::size_t n) {
    if (a.cols() != b.cols() || a.rows() != b.rows()) return false;
    if (a.cols() == 0) return true;
    QMat target = span_canonical(b);
    for (const auto& g : w.elements) {
        QMat img(a.rows(), a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) img.set_col(j, vec_of(weyl_act(g, point_of(a.col(j), n))));
        if (span_canonical(img) == target) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

namespace {

bool parallel(const ImVec& a, const ImVec& b) { return bracket(a, b) == ImVec{}; }

ZVec standard_positive(const RootSystemData& rs, const ZVec& a) {
    for (const auto& p : rs.positive_roots)
        if (p == a) return a;
    return negate(a);
}

}  // namespace

std::vector<CurveClass> segments(const GHConfig& c, const ImVec& xi_hat) {
    if (xi_hat == ImVec{}) throw std::invalid_argument("direction must be nonzero");
    RootSystemData rs = root_system("A" + std::to_string(c.size() - 1));
    Rational nn = norm2(xi_hat);
    // group charges by their projection orthogonal to xi_hat, sort along xi_hat
    std::map<std::vector<Rational>, std::vector<std::pair<Rational, std::size_t>>> lines;
    for (std::size_t a = 0; a < c.size(); ++a) {
        Rational t = dot(c.charges[a], xi_hat) / nn;
        ImVec perp = c.charges[a] - t * xi_hat;
        lines[perp.vec()].push_back({t, a});
    }
    std::vector<CurveClass> out;
    for (auto& [perp, pts] : lines) {
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i].first == pts[i + 1].first) throw std::invalid_argument("coincident charges");
            std::size_t a = std::min(pts[i].second, pts[i + 1].second), b = std::max(pts[i].second, pts[i + 1].second);
            CurveClass cc;
            cc.root = root_diff(c.size(), a, b);
            cc.charges = {a, b};
            cc.direction = xi_hat;
            cc.simple_coordinates = rs.simple_coordinates(cc.root);
            out.push_back(cc);
        }
    }
    return out;
}

std::vector<CurveClass> invariant_curve_classes(const RootSystemData& rs, const DeformationPoint& z, const ImVec& xi_hat) {
    if (xi_hat == ImVec{}) throw std::invalid_argument("direction must be nonzero");
    if (z.cols() != rs.ambient) throw std::invalid_argument("deformation point has the wrong number of columns");
    if (on_wall(rs, z)) throw std::invalid_argument("deformation point lies on a wall");
    std::vector<ZVec> pos;
    for (const auto& a : rs.positive_roots) {
        ImVec v = evaluate_root(z, a);
        if (v == ImVec{} || !parallel(v, xi_hat)) continue;
        pos.push_back(dot(v, xi_hat) > 0 ? a : negate(a));
    }
    std::set<ZVec> sums;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
            ZVec s = pos[i];
            for (std::size_t k = 0; k < s.size(); ++k) s[k] += pos[j][k];
            sums.insert(s);
        }
    std::vector<CurveClass> out;
    for (const auto& a : pos) {
        if (sums.count(a)) continue;
        CurveClass cc;
        cc.root = a;
        cc.direction = xi_hat;
        cc.simple_coordinates = rs.simple_coordinates(standard_positive(rs, a));
        if (rs.type == RootType::A) {
            std::size_t p = 0, q = 0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] == 1) p = k;
                if (a[k] == -1) q = k;
            }
            cc.charges = {std::min(p, q), std::max(p, q)};
        }
        out.push_back(cc);
    }
    std::sort(out.begin(), out.end(), [](const CurveClass& x, const CurveClass& y) { return x.simple_coordinates > y.simple_coordinates; });
    return out;
}

}  // namespace g2k
