#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace g2k {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix over an exact ring (Rational or Integer).
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows);

    static Mat identity(std::size_t n);
    static Mat column(const std::vector<T>& v);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> col(std::size_t j) const;
    std::vector<T> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<T>& v);

    Mat transpose() const;
    bool is_zero() const;

    friend bool operator==(const Mat& x, const Mat& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }
    friend bool operator<(const Mat& x, const Mat& y) {
        if (x.r_ != y.r_) return x.r_ < y.r_;
        if (x.c_ != y.c_) return x.c_ < y.c_;
        return x.a_ < y.a_;
    }

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMat = Mat<Rational>;
using ZMat = Mat<Integer>;
using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

template <typename T> Mat<T> operator*(const Mat<T>& x, const Mat<T>& y);
template <typename T> Mat<T> operator+(const Mat<T>& x, const Mat<T>& y);
template <typename T> Mat<T> operator-(const Mat<T>& x, const Mat<T>& y);
template <typename T> std::vector<T> operator*(const Mat<T>& x, const std::vector<T>& v);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& s, const QVec& a);
Rational dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& a);

QMat to_q(const ZMat& m);
/// Throws if any entry is not an integer.
ZMat to_z(const QMat& m);
ZVec to_z(const QVec& v);
QVec to_q(const ZVec& v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat& m);
std::size_t rank(const QMat& m);
/// Columns form a basis of the right kernel, in RREF-derived canonical order.
QMat kernel(const QMat& m);
Rational det(const QMat& m);
QMat inverse(const QMat& m);
/// Canonical basis of the column span: rows of the RREF of the transpose, returned as columns.
QMat span_canonical(const QMat& cols);
bool in_span(const QMat& cols, const QVec& v);
/// Horizontal concatenation.
QMat hcat(const QMat& a, const QMat& b);

/// P * A * Q = D with P, Q unimodular and D diagonal, d_1 | d_2 | ..., d_i > 0 for i < rank.
struct Smith {
    ZMat P, D, Q;
    std::size_t rank = 0;
    Integer diag(std::size_t i) const { return D(i, i); }
};
Smith smith_normal_form(const ZMat& a);

/// Entrywise fractional part in [0,1).
Rational frac(const Rational& x);
QVec frac(const QVec& v);
Integer floor_q(const Rational& x);
bool is_integer(const Rational& x);
bool is_integral(const QVec& v);

Integer gcd_of(const ZVec& v);
/// Unimodular matrix whose first column is the primitive vector v.
ZMat unimodular_completion(const ZVec& v);

std::string to_string(const Rational& x);
std::string to_string(const QVec& v);

}  // namespace g2k
