#include "g2k/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2k {

template <typename T>
Mat<T>::Mat(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : row) a_.push_back(x);
    }
}

template <typename T>
Mat<T> Mat<T>::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename T>
Mat<T> Mat<T>::column(const std::vector<T>& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

template <typename T>
std::vector<T> Mat<T>::col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <typename T>
std::vector<T> Mat<T>::row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

template <typename T>
void Mat<T>::set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

template <typename T>
Mat<T> Mat<T>::transpose() const {
    Mat m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

template <typename T>
bool Mat<T>::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x == 0; });
}

template <typename T>
std::string Mat<T>::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

template <typename T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    Mat<T> m(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) m(i, j) += x(i, k) * y(k, j);
        }
    return m;
}

template <typename T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch in sum");
    Mat<T> m = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) += y(i, j);
    return m;
}

template <typename T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch in difference");
    Mat<T> m = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) -= y(i, j);
    return m;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& x, const std::vector<T>& v) {
    if (x.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(x.rows(), T(0));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x(i, j) * v[j];
    return out;
}

template class Mat<Rational>;
template class Mat<Integer>;
template QMat operator* <Rational>(const QMat&, const QMat&);
template ZMat operator* <Integer>(const ZMat&, const ZMat&);
template QMat operator+ <Rational>(const QMat&, const QMat&);
template ZMat operator+ <Integer>(const ZMat&, const ZMat&);
template QMat operator- <Rational>(const QMat&, const QMat&);
template ZMat operator- <Integer>(const ZMat&, const ZMat&);
template QVec operator* <Rational>(const QMat&, const QVec&);
template ZVec operator* <Integer>(const ZMat&, const ZVec&);

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const Rational& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

QMat to_q(const ZMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

ZMat to_z(const QMat& m) {
    ZMat z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::domain_error("non-integer entry " + to_string(m(i, j)));
            z(i, j) = m(i, j).get_num();
        }
    return z;
}

ZVec to_z(const QVec& v) {
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::domain_error("non-integer entry " + to_string(v[i]));
        z[i] = v[i].get_num();
    }
    return z;
}

QVec to_q(const ZVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const QMat& m) {
    QMat t = m;
    return rref(t).size();
}

QMat kernel(const QMat& m) {
    QMat t = m;
    auto piv = rref(t);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    QMat k(m.cols(), m.cols() - piv.size());
    std::size_t kc = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        k(f, kc) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], kc) = -t(r, f);
        ++kc;
    }
    return k;
}

Rational det(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    QMat t = m;
    Rational d = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && t(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(t(p, j), t(c, j));
            d = -d;
        }
        d *= t(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (t(i, c) == 0) continue;
            Rational f = t(i, c) / t(c, c);
            for (std::size_t j = c; j < n; ++j) t(i, j) -= f * t(c, j);
        }
    }
    return d;
}

QMat inverse(const QMat& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    QMat aug = hcat(m, QMat::identity(n));
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

QMat span_canonical(const QMat& cols) {
    QMat t = cols.transpose();
    auto piv = rref(t);
    QMat out(cols.rows(), piv.size());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t i = 0; i < cols.rows(); ++i) out(i, r) = t(r, i);
    return out;
}

bool in_span(const QMat& cols, const QVec& v) {
    if (cols.cols() == 0) return is_zero(v);
    return rank(hcat(cols, QMat::column(v))) == rank(cols);
}

QMat hcat(const QMat& a, const QMat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    QMat m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

namespace {

void swap_rows(ZMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_a -= f * row_b
void axpy_row(ZMat& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}

void axpy_col(ZMat& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Smith smith_normal_form(const ZMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    Smith s{ZMat::identity(m), a, ZMat::identity(n), 0};
    ZMat& D = s.D;
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // smallest nonzero |entry| in the trailing block
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) bi = i, bj = j;
        if (bi == m) break;
        swap_rows(D, t, bi);
        swap_rows(s.P, t, bi);
        swap_cols(D, t, bj);
        swap_cols(s.Q, t, bj);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (D(i, t) == 0) continue;
            Integer f = fdiv(D(i, t), D(t, t));
            axpy_row(D, i, t, f);
            axpy_row(s.P, i, t, f);
            if (D(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (D(t, j) == 0) continue;
            Integer f = fdiv(D(t, j), D(t, t));
            axpy_col(D, j, t, f);
            axpy_col(s.Q, j, t, f);
            if (D(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // divisibility of the remaining block
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    for (std::size_t k = 0; k < n; ++k) D(t, k) += D(i, k);
                    for (std::size_t k = 0; k < m; ++k) s.P(t, k) += s.P(i, k);
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (D(t, t) < 0) {
            for (std::size_t k = 0; k < n; ++k) D(t, k) = -D(t, k);
            for (std::size_t k = 0; k < m; ++k) s.P(t, k) = -s.P(t, k);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

Rational frac(const Rational& x) { return x - Rational(floor_q(x)); }

QVec frac(const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
    return r;
}

Integer floor_q(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool is_integral(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

Integer gcd_of(const ZVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

ZMat unimodular_completion(const ZVec& v) {
    if (gcd_of(v) != 1) throw std::invalid_argument("unimodular completion needs a primitive vector");
    ZMat col(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
    Smith s = smith_normal_form(col);
    // P v Q = e_1, so P^{-1} e_1 = v * Q^{-1} = v * Q(0,0)
    ZMat U = to_z(inverse(to_q(s.P)));
    if (s.Q(0, 0) < 0)
        for (std::size_t i = 0; i < v.size(); ++i) U(i, 0) = -U(i, 0);
    return U;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

}  // namespace g2k
