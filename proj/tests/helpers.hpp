#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "twh/finite_group.hpp"
#include "twh/lattice.hpp"

namespace testing_support {

using namespace twh;

inline AffineLatticeMap amap(IntMat m, const std::vector<std::string>& b = {}) {
    AffineLatticeMap a;
    const std::size_t d = m.size();
    a.matrix = std::move(m);
    a.translation.assign(d, Rotation());
    for (std::size_t i = 0; i < b.size(); ++i) a.translation[i] = Rotation::parse(b[i]);
    return a;
}

inline AffineLatticeMap translation(const std::vector<std::string>& b) {
    return amap(int_identity(b.size()), b);
}

inline TorusPoint point(const std::vector<std::string>& x) {
    TorusPoint p;
    for (const auto& s : x) p.push_back(Rotation::parse(s));
    return p;
}

inline std::shared_ptr<const FiniteGroup> shared(const ActionGroup& g) {
    return std::make_shared<const FiniteGroup>(g.group);
}

// Signed permutation matrix.
inline IntMat signed_perm(const std::vector<int>& perm, const std::vector<int>& sign) {
    IntMat m(perm.size(), std::vector<long>(perm.size(), 0));
    for (std::size_t i = 0; i < perm.size(); ++i) m[i][perm[i]] = sign[i];
    return m;
}

// Random unimodular matrix built from elementary operations.
inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t d, int steps) {
    IntMat m = int_identity(d);
    if (d < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, d - 1);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int c = coef(rng);
        for (std::size_t k = 0; k < d; ++k) m[i][k] += c * m[j][k];
    }
    return m;
}

// A random finite-order matrix: a conjugate of a signed permutation.
inline IntMat random_finite_order(std::mt19937_64& rng, std::size_t d) {
    std::vector<int> perm(d), sign(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& s : sign) s = coin(rng) ? 1 : -1;
    IntMat p = signed_perm(perm, sign);
    IntMat u = random_unimodular(rng, d, 2);
    return int_mul(int_mul(u, p), int_inverse(u));
}

inline Rotation random_rotation(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    long q = den(rng);
    std::uniform_int_distribution<long> num(0, q - 1);
    return Rotation(num(rng), q);
}

inline std::uint32_t matrix_order(const IntMat& a) {
    IntMat p = a;
    for (std::uint32_t k = 1; k <= 24; ++k) {
        if (p == int_identity(a.size())) return k;
        p = int_mul(p, a);
    }
    return 0;
}

inline ActionGroup inversion_group() { return generate_group(1, {amap({{-1}})}); }

inline ActionGroup quaternion_group() { return generate_group(2, {amap({{-1, 0}, {0, 1}}), amap({{1, 0}, {0, -1}})}); }

// Weyl group of A2 on its coroot lattice.
inline ActionGroup s3_group() { return generate_group(2, {amap({{-1, 1}, {0, 1}}), amap({{1, 0}, {1, -1}})}); }

// Weyl group of B2 as signed permutations.
inline ActionGroup b2_group() { return generate_group(2, {amap({{0, 1}, {1, 0}}), amap({{1, 0}, {0, -1}})}); }

inline Cocycle quaternion_cocycle(const ActionGroup& g) {
    return bilinear_cocycle(shared(g), {1, 2}, {{0, 0}, {1, 0}}, 2);
}

}  // namespace testing_support
