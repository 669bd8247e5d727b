#include "g2k/torus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace g2k {

AffineZ AffineZ::identity(std::size_t n) { return {ZMat::identity(n), QVec(n, Rational(0))}; }

AffineZ AffineZ::canonical() const { return {R, frac(t)}; }

AffineZ AffineZ::compose(const AffineZ& o) const {
    return AffineZ{R * o.R, add(to_q(R) * o.t, t)}.canonical();
}

AffineZ AffineZ::inverse() const {
    ZMat ri = to_z(g2k::inverse(to_q(R)));
    return AffineZ{ri, scale(-1, to_q(ri) * t)}.canonical();
}

QVec AffineZ::apply(const QVec& x) const { return add(to_q(R) * x, t); }

bool AffineZ::is_identity() const { return R == ZMat::identity(R.rows()) && is_integral(t); }

bool operator<(const AffineZ& a, const AffineZ& b) {
    if (!(a.R == b.R)) return a.R < b.R;
    return a.t < b.t;
}

std::vector<AffineZ> generate_group(const std::vector<AffineZ>& gens, std::size_t dim, std::size_t max_elements) {
    std::set<AffineZ> seen{AffineZ::identity(dim)};
    std::vector<AffineZ> frontier{AffineZ::identity(dim)};
    std::vector<AffineZ> cg;
    for (const auto& g : gens) cg.push_back(g.canonical());
    while (!frontier.empty()) {
        std::vector<AffineZ> next;
        for (const auto& h : frontier)
            for (const auto& g : cg) {
                AffineZ p = g.compose(h);
                if (seen.insert(p).second) {
                    if (seen.size() > max_elements)
                        throw std::runtime_error("group generation exceeded " + std::to_string(max_elements) + " classes");
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool operator<(const SubtorusKey& a, const SubtorusKey& b) {
    if (!(a.annihilator == b.annihilator)) return a.annihilator < b.annihilator;
    return a.values < b.values;
}

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(ZMat& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}

}  // namespace

ZMat hermite_normal_form(const ZMat& m) {
    ZMat h = m;
    std::size_t k = h.rows(), n = h.cols();
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < k; ++c) {
        while (true) {
            std::size_t best = k;
            for (std::size_t i = row; i < k; ++i)
                if (h(i, c) != 0 && (best == k || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best == k) break;
            if (best != row)
                for (std::size_t j = 0; j < n; ++j) std::swap(h(best, j), h(row, j));
            bool done = true;
            for (std::size_t i = row + 1; i < k; ++i) {
                if (h(i, c) == 0) continue;
                row_axpy(h, i, row, fdiv(h(i, c), h(row, c)));
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (row >= k || h(row, c) == 0) continue;
        if (h(row, c) < 0)
            for (std::size_t j = 0; j < n; ++j) h(row, j) = -h(row, j);
        for (std::size_t i = 0; i < row; ++i) row_axpy(h, i, row, fdiv(h(i, c), h(row, c)));
        ++row;
    }
    ZMat out(row, n);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

ZMat integral_annihilator(const ZMat& dirs) {
    std::size_t n = dirs.rows();
    if (dirs.cols() == 0) return ZMat::identity(n);
    Smith s = smith_normal_form(dirs.transpose());
    ZMat rows(n - s.rank, n);
    for (std::size_t r = s.rank; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) rows(r - s.rank, j) = s.Q(j, r);
    return hermite_normal_form(rows);
}

SubtorusKey key_of(const Subtorus& s) {
    ZMat f = integral_annihilator(s.dirs);
    return {f, frac(to_q(f) * s.offset)};
}

Subtorus canonical(const Subtorus& s) {
    std::size_t n = s.offset.size();
    SubtorusKey key = key_of(s);
    ZMat dirs = s.dirs.cols() ? hermite_normal_form(s.dirs.transpose()).transpose() : ZMat(n, 0);
    QMat aug(key.annihilator.rows(), n + 1);
    for (std::size_t i = 0; i < key.annihilator.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(key.annihilator(i, j));
        aug(i, n) = key.values[i];
    }
    auto piv = rref(aug);
    QVec x(n, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, n);
    return {dirs, frac(x)};
}

bool same_subtorus(const Subtorus& a, const Subtorus& b) { return key_of(a) == key_of(b); }

bool intersects(const Subtorus& a, const Subtorus& b) {
    std::size_t n = a.offset.size();
    ZMat both(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) both(i, j) = a.dirs(i, j);
        for (std::size_t j = 0; j < b.dim(); ++j) both(i, a.dim() + j) = b.dirs(i, j);
    }
    ZMat f = integral_annihilator(both);
    return is_integral(to_q(f) * sub(a.offset, b.offset));
}

bool contains(const Subtorus& s, const QVec& x) {
    ZMat f = integral_annihilator(s.dirs);
    return is_integral(to_q(f) * sub(x, s.offset));
}

Subtorus image(const AffineZ& g, const Subtorus& s) { return {g.R * s.dirs, g.apply(s.offset)}; }

std::vector<Subtorus> fixed_subtori(const AffineZ& g) {
    std::size_t n = g.dim();
    ZMat a = g.R - ZMat::identity(n);
    Smith s = smith_normal_form(a);
    QVec c = scale(-1, to_q(s.P) * g.t);
    for (std::size_t i = s.rank; i < n; ++i)
        if (!is_integer(c[i])) return {};

    ZMat dirs(n, n - s.rank);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) dirs(i, j - s.rank) = s.Q(i, j);

    // enumerate y_i = (c_i + m_i) / d_i for the pivot coordinates
    std::vector<Subtorus> out;
    std::vector<Integer> m(s.rank, 0);
    QMat q = to_q(s.Q);
    while (true) {
        QVec y(n, Rational(0));
        for (std::size_t i = 0; i < s.rank; ++i) y[i] = (c[i] + Rational(m[i])) / Rational(s.diag(i));
        out.push_back(canonical(Subtorus{dirs, frac(q * y)}));
        std::size_t i = 0;
        while (i < s.rank) {
            if (++m[i] < s.diag(i)) break;
            m[i] = 0;
            ++i;
        }
        if (i == s.rank) break;
    }
    std::sort(out.begin(), out.end(), [](const Subtorus& x, const Subtorus& y) { return key_of(x) < key_of(y); });
    return out;
}

}  // namespace g2k
