#pragma once

#include "g2k/exact.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace g2k {

struct ImVec {
    Rational i = 0, j = 0, k = 0;

    QVec vec() const { return {i, j, k}; }
    static ImVec from(const QVec& v) { return {v.at(0), v.at(1), v.at(2)}; }
    friend bool operator==(const ImVec&, const ImVec&) = default;
};

struct Quat {
    Rational re = 0, i = 0, j = 0, k = 0;

    static Quat real(const Rational& r) { return {r, 0, 0, 0}; }
    static Quat imag(const ImVec& v) { return {0, v.i, v.j, v.k}; }
    QVec vec() const { return {re, i, j, k}; }
    static Quat from(const QVec& v) { return {v.at(0), v.at(1), v.at(2), v.at(3)}; }
    ImVec im() const { return {i, j, k}; }
    friend bool operator==(const Quat&, const Quat&) = default;
};

Quat quat_mul(const Quat& p, const Quat& q);
Quat operator*(const Quat& p, const Quat& q);
Quat operator+(const Quat& p, const Quat& q);
Quat operator-(const Quat& p, const Quat& q);
Quat conj(const Quat& q);
Rational norm2(const Quat& q);
Quat inverse(const Quat& q);

ImVec operator+(const ImVec& a, const ImVec& b);
ImVec operator-(const ImVec& a, const ImVec& b);
ImVec operator*(const Rational& s, const ImVec& a);
Rational dot(const ImVec& a, const ImVec& b);
Rational norm2(const ImVec& a);
/// [u,v] = uv - vu, i.e. twice the R^3 cross product.
ImVec bracket(const ImVec& u, const ImVec& v);

/// Exterior form on R^n stored sparsely: bitmask of increasing indices -> coefficient.
class Form {
public:
    Form(int dim, int degree) : n_(dim), deg_(degree) {}
    static Form basis(int dim, std::initializer_list<int> idx);

    int dim() const { return n_; }
    int degree() const { return deg_; }
    const std::map<std::uint32_t, Rational>& terms() const { return c_; }
    Rational coeff(std::uint32_t mask) const;
    void add_term(std::uint32_t mask, const Rational& c);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Rational& s) const;
    friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.deg_ == b.deg_ && a.c_ == b.c_; }

    Form wedge(const Form& o) const;
    Form interior(const QVec& v) const;
    Rational evaluate(const std::vector<QVec>& vs) const;
    Form hodge_star() const;
    /// x -> M x pulled back: (M^* f)(v_1..v_p) = f(M v_1, .., M v_p).
    Form pullback(const QMat& m) const;

private:
    int n_, deg_;
    std::map<std::uint32_t, Rational> c_;
};

/// Flat G2 structure on R^7 (0-based coordinates x0..x6).
struct G2Form {
    Form phi{7, 3};
    Form psi{7, 4};

    static G2Form standard();
    /// g(u,v) read off from (i_u phi) ^ (i_v phi) ^ phi = 6 g(u,v) vol.
    Rational metric(const QVec& u, const QVec& v) const;
};

QVec cross(const QVec& u, const QVec& v, const G2Form& f);
QVec associator(const QVec& u, const QVec& v, const QVec& w, const G2Form& f);

struct Rotation {
    QMat m;
    int det = 1;
    /// Validates M^T M = I exactly.
    static Rotation make(const QMat& m);
};
using Rotation3 = Rotation;
using Rotation4 = Rotation;

/// 4x4 matrix of q -> a q conj(b) / (|a||b|) given |a| = |b| = 1.
QMat quat_bimul_matrix(const Quat& a, const Quat& b);
/// Matrix of left multiplication by a on H.
QMat left_mul_matrix(const Quat& a);
QMat right_mul_matrix(const Quat& a);

/// Induced rotation on self-dual 2-forms, identified with Im H via left multiplications.
Rotation3 lambda_plus(const Rotation4& r);

/// Unit rational quaternion p^2 / |p|^2.
Quat unit_from(const Quat& p);

}  // namespace g2k
