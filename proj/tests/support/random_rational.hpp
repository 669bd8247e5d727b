#pragma once

#include "g2k/quaternion.hpp"

#include <random>

namespace g2k::sampling {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational scalar(int max_num = 9, int max_den = 7) {
        std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }
    QVec vec(std::size_t n) {
        QVec v(n);
        for (auto& x : v) x = scalar();
        return v;
    }
    Quat quat() { return {scalar(), scalar(), scalar(), scalar()}; }
    Quat nonzero_quat() {
        Quat q;
        do q = quat(); while (norm2(q) == 0);
        return q;
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace g2k::sampling
