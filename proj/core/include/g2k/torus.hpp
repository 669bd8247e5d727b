#pragma once

#include "g2k/exact.hpp"

#include <cstddef>
#include <vector>

namespace g2k {

/// Affine map x -> R x + t on R^n / Z^n, with R integral and t kept in [0,1)^n.
struct AffineZ {
    ZMat R;
    QVec t;

    static AffineZ identity(std::size_t n);
    AffineZ canonical() const;
    AffineZ compose(const AffineZ& o) const;  // this after o
    AffineZ inverse() const;
    QVec apply(const QVec& x) const;
    bool is_identity() const;
    std::size_t dim() const { return t.size(); }

    friend bool operator==(const AffineZ& a, const AffineZ& b) { return a.R == b.R && a.t == b.t; }
    friend bool operator<(const AffineZ& a, const AffineZ& b);
};

/// Closure of the generators modulo Z^n. Throws if more than max_elements classes appear.
std::vector<AffineZ> generate_group(const std::vector<AffineZ>& gens, std::size_t dim, std::size_t max_elements = 4096);

/// Affine subtorus {offset + span(dirs)} mod Z^n. dirs are integral and extend to a basis of Z^n.
struct Subtorus {
    ZMat dirs;
    QVec offset;

    std::size_t dim() const { return dirs.cols(); }
};

/// Canonical invariant of a subtorus: HNF basis F of the integral annihilator of span(dirs)
/// and F * offset mod 1.
struct SubtorusKey {
    ZMat annihilator;
    QVec values;

    friend bool operator==(const SubtorusKey& a, const SubtorusKey& b) { return a.annihilator == b.annihilator && a.values == b.values; }
    friend bool operator<(const SubtorusKey& a, const SubtorusKey& b);
};

/// Row Hermite normal form (positive pivots, entries above pivots reduced); zero rows dropped.
ZMat hermite_normal_form(const ZMat& m);
/// Basis of {f in Z^n : f . v = 0 for all columns v}, as rows in HNF.
ZMat integral_annihilator(const ZMat& dirs);

SubtorusKey key_of(const Subtorus& s);
/// Deterministic representative with coordinates in [0,1).
Subtorus canonical(const Subtorus& s);
bool same_subtorus(const Subtorus& a, const Subtorus& b);
bool intersects(const Subtorus& a, const Subtorus& b);
bool contains(const Subtorus& s, const QVec& x);
Subtorus image(const AffineZ& g, const Subtorus& s);

/// All components of {x : R x + t = x mod Z^n}.
std::vector<Subtorus> fixed_subtori(const AffineZ& g);

}  // namespace g2k
