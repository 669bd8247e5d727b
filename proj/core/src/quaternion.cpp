#include "g2k/quaternion.hpp"

#include <bit>
#include <stdexcept>

namespace g2k {

Quat quat_mul(const Quat& p, const Quat& q) {
    return {p.re * q.re - p.i * q.i - p.j * q.j - p.k * q.k,
            p.re * q.i + p.i * q.re + p.j * q.k - p.k * q.j,
            p.re * q.j - p.i * q.k + p.j * q.re + p.k * q.i,
            p.re * q.k + p.i * q.j - p.j * q.i + p.k * q.re};
}

Quat operator*(const Quat& p, const Quat& q) { return quat_mul(p, q); }
Quat operator+(const Quat& p, const Quat& q) { return {p.re + q.re, p.i + q.i, p.j + q.j, p.k + q.k}; }
Quat operator-(const Quat& p, const Quat& q) { return {p.re - q.re, p.i - q.i, p.j - q.j, p.k - q.k}; }
Quat conj(const Quat& q) { return {q.re, -q.i, -q.j, -q.k}; }
Rational norm2(const Quat& q) { return q.re * q.re + q.i * q.i + q.j * q.j + q.k * q.k; }

Quat inverse(const Quat& q) {
    Rational n = norm2(q);
    if (n == 0) throw std::domain_error("inverse of zero quaternion");
    Quat c = conj(q);
    return {c.re / n, c.i / n, c.j / n, c.k / n};
}

ImVec operator+(const ImVec& a, const ImVec& b) { return {a.i + b.i, a.j + b.j, a.k + b.k}; }
ImVec operator-(const ImVec& a, const ImVec& b) { return {a.i - b.i, a.j - b.j, a.k - b.k}; }
ImVec operator*(const Rational& s, const ImVec& a) { return {s * a.i, s * a.j, s * a.k}; }
Rational dot(const ImVec& a, const ImVec& b) { return a.i * b.i + a.j * b.j + a.k * b.k; }
Rational norm2(const ImVec& a) { return dot(a, a); }

ImVec bracket(const ImVec& u, const ImVec& v) {
    Quat a = Quat::imag(u), b = Quat::imag(v);
    return (a * b - b * a).im();
}

namespace {

std::vector<int> indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

// sign of dx_A ^ dx_B relative to dx_{A|B}; 0 when they overlap
int wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inv = 0;
    for (int x : indices(a)) inv += std::popcount(b & ((1u << x) - 1u));
    return inv % 2 ? -1 : 1;
}

std::vector<std::uint32_t> subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

}  // namespace

Form Form::basis(int dim, std::initializer_list<int> idx) {
    Form f(dim, static_cast<int>(idx.size()));
    std::uint32_t mask = 0;
    int sign = 1;
    for (int i : idx) {
        if (mask & (1u << i)) return f;
        // moving dx_i past the higher indices already present
        if (std::popcount(mask & ~((1u << (i + 1)) - 1u)) % 2) sign = -sign;
        mask |= 1u << i;
    }
    f.add_term(mask, sign);
    return f;
}

Rational Form::coeff(std::uint32_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Rational(0) : it->second;
}

void Form::add_term(std::uint32_t mask, const Rational& c) {
    if (c == 0) return;
    auto& slot = c_[mask];
    slot += c;
    if (slot == 0) c_.erase(mask);
}

Form Form::operator+(const Form& o) const {
    Form r = *this;
    for (const auto& [m, c] : o.c_) r.add_term(m, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + o * Rational(-1); }

Form Form::operator*(const Rational& s) const {
    Form r(n_, deg_);
    for (const auto& [m, c] : c_) r.add_term(m, s * c);
    return r;
}

Form Form::wedge(const Form& o) const {
    Form r(n_, deg_ + o.deg_);
    for (const auto& [a, ca] : c_)
        for (const auto& [b, cb] : o.c_) {
            int s = wedge_sign(a, b);
            if (s) r.add_term(a | b, s * ca * cb);
        }
    return r;
}

Form Form::interior(const QVec& v) const {
    Form r(n_, deg_ - 1);
    for (const auto& [m, c] : c_) {
        auto idx = indices(m);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const Rational& vi = v[idx[p]];
            if (vi == 0) continue;
            r.add_term(m & ~(1u << idx[p]), (p % 2 ? -1 : 1) * c * vi);
        }
    }
    return r;
}

Rational Form::evaluate(const std::vector<QVec>& vs) const {
    if (static_cast<int>(vs.size()) != deg_) throw std::invalid_argument("form evaluated on wrong number of vectors");
    if (deg_ == 0) return coeff(0);
    Form f = *this;
    for (const auto& v : vs) f = f.interior(v);
    return f.coeff(0);
}

Form Form::hodge_star() const {
    Form r(n_, n_ - deg_);
    std::uint32_t full = (1u << n_) - 1u;
    for (const auto& [m, c] : c_) r.add_term(full & ~m, wedge_sign(m, full & ~m) * c);
    return r;
}

Form Form::pullback(const QMat& m) const {
    Form r(n_, deg_);
    for (std::uint32_t mask : subsets(n_, deg_)) {
        std::vector<QVec> vs;
        for (int i : indices(mask)) vs.push_back(m.col(i));
        r.add_term(mask, evaluate(vs));
    }
    return r;
}

G2Form G2Form::standard() {
    auto b = [](std::initializer_list<int> idx) { return Form::basis(7, idx); };
    Form w1 = b({3, 4}) + b({5, 6});
    Form w2 = b({3, 5}) + b({6, 4});
    Form w3 = b({3, 6}) + b({4, 5});
    G2Form g;
    g.phi = b({0, 1, 2}) - b({0}).wedge(w1) - b({1}).wedge(w2) - b({2}).wedge(w3);
    g.psi = g.phi.hodge_star();
    return g;
}

Rational G2Form::metric(const QVec& u, const QVec& v) const {
    Form top = phi.interior(u).wedge(phi.interior(v)).wedge(phi);
    return top.coeff((1u << 7) - 1u) / 6;
}

QVec cross(const QVec& u, const QVec& v, const G2Form& f) {
    Form w = f.phi.interior(u).interior(v);
    QVec out(7);
    for (int c = 0; c < 7; ++c) out[c] = w.coeff(1u << c);
    return out;
}

QVec associator(const QVec& u, const QVec& v, const QVec& w, const G2Form& f) {
    Form x = f.psi.interior(u).interior(v).interior(w);
    QVec out(7);
    for (int d = 0; d < 7; ++d) out[d] = x.coeff(1u << d);
    return out;
}

Rotation Rotation::make(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rotation must be square");
    if (!(m.transpose() * m == QMat::identity(m.rows()))) throw std::invalid_argument("matrix is not orthogonal: " + m.str());
    Rational d = g2k::det(m);
    return {m, d == 1 ? 1 : -1};
}

QMat left_mul_matrix(const Quat& a) {
    QMat m(4, 4);
    const Quat basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int c = 0; c < 4; ++c) m.set_col(c, (a * basis[c]).vec());
    return m;
}

QMat right_mul_matrix(const Quat& a) {
    QMat m(4, 4);
    const Quat basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int c = 0; c < 4; ++c) m.set_col(c, (basis[c] * a).vec());
    return m;
}

QMat quat_bimul_matrix(const Quat& a, const Quat& b) {
    return left_mul_matrix(a) * right_mul_matrix(conj(b));
}

Rotation3 lambda_plus(const Rotation4& r) {
    if (r.m.rows() != 4) throw std::invalid_argument("lambda_plus expects a 4x4 rotation");
    if (r.det != 1) throw std::invalid_argument("lambda_plus is defined on SO(H); got det = -1");
    const QMat L[3] = {left_mul_matrix({0, 1, 0, 0}), left_mul_matrix({0, 0, 1, 0}), left_mul_matrix({0, 0, 0, 1})};
    QMat rt = r.m.transpose();
    QMat out(3, 3);
    for (int a = 0; a < 3; ++a) {
        QMat conjugated = r.m * L[a] * rt;
        for (int b = 0; b < 3; ++b) {
            QMat p = L[b].transpose() * conjugated;
            Rational tr = p(0, 0) + p(1, 1) + p(2, 2) + p(3, 3);
            out(b, a) = tr / 4;
        }
    }
    return Rotation::make(out);
}

Quat unit_from(const Quat& p) {
    Quat s = p * p;
    Rational n = norm2(p);
    return {s.re / n, s.i / n, s.j / n, s.k / n};
}

}  // namespace g2k
