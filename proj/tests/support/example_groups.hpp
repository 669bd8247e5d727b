#pragma once

#include "g2k/flat_orbifold.hpp"

namespace g2k::sampling {

inline AffineZ diag7(std::initializer_list<int> d, QVec t = QVec(7, Rational(0))) {
    ZMat r(7, 7);
    std::size_t i = 0;
    for (int x : d) r(i, i) = x, ++i;
    return {r, t};
}

inline QVec half_at(std::initializer_list<std::size_t> idx) {
    QVec t(7, Rational(0));
    for (auto i : idx) t[i] = Rational(1, 2);
    return t;
}

// Three commuting involutions preserving phi_0 and a fourth symmetry normalizing them.
inline CrystalGroupR7 involution_group() {
    CrystalGroupR7 g;
    g.generators = {diag7({1, 1, 1, -1, -1, -1, -1}), diag7({1, -1, -1, 1, 1, -1, -1}, half_at({5})),
                    diag7({-1, 1, -1, 1, -1, 1, -1}, half_at({4, 6}))};
    g.names = {"iota1", "iota2", "iota3"};
    return g;
}

inline AffineZ involution_symmetry() { return diag7({1, -1, -1, 1, 1, -1, -1}); }

}  // namespace g2k::sampling
