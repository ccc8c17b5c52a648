#pragma once

#include <string>
#include <vector>

#include "helpers.hpp"
#include "twh/datum.hpp"
#include "twh/lattice.hpp"
#include "twh/presets.hpp"

// Checks shared by the property suites and the acceptance binary.
namespace testing_support {

inline bool is_smith_diagonal(const SmithForm& sf) {
    for (std::size_t i = 0; i < sf.S.size(); ++i)
        for (std::size_t j = 0; j < sf.S[i].size(); ++j)
            if (i != j && sf.S[i][j] != 0) return false;
    for (std::size_t i = 0; i < sf.diagonal.size(); ++i) {
        if (sf.diagonal[i] < 0) return false;
        if (i + 1 < sf.diagonal.size()) {
            const Int& a = sf.diagonal[i];
            const Int& b = sf.diagonal[i + 1];
            if (a == 0 && b != 0) return false;
            if (a != 0 && b % a != 0) return false;
        }
    }
    return true;
}

// All points of (Z/q)^d / q fixed by phi, counted by direct enumeration.
inline std::size_t brute_force_fixed(const AffineLatticeMap& phi, long q) {
    const std::size_t d = phi.rank();
    std::vector<long> k(d, 0);
    std::size_t count = 0;
    while (true) {
        TorusPoint x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = Rotation(k[i], q);
        if (phi.apply(x) == x) ++count;
        std::size_t i = 0;
        while (i < d && ++k[i] == q) k[i++] = 0;
        if (i == d) break;
    }
    return count;
}

// Number of q-torsion points on the fixed set predicted from its component structure:
// a coset p + T of an r-dimensional subtorus carries q^r such points when -q p lies in T, else none.
inline std::size_t predicted_fixed(const FixedPointSet& F, long q) {
    if (F.empty) return 0;
    std::size_t per = 1;
    for (std::size_t i = 0; i < F.dimension(); ++i) per *= static_cast<std::size_t>(q);
    TorusPoint origin(F.ambient_rank);
    std::size_t total = 0;
    for (const auto& p : F.component_reps) {
        TorusPoint mq(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) mq[i] = -(p[i] * q);
        // mq lies in T + Z^d iff V^-1 mq is integral on the Smith-rank coordinates
        bool in = true;
        for (std::size_t i = 0; i < F.smith_rank; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < p.size(); ++j) s += Rat(F.V_inverse[i][j]) * mq[j].value();
            if (s.get_den() != 1) in = false;
        }
        if (in) total += per;
    }
    return total;
}

// Independent check: T_a (T_b T_c) == (T_a T_b) T_c in the twisted group algebra.
inline bool associative(const Cocycle& c) {
    const auto n = c.group().order();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t d = 0; d < n; ++d) {
                auto ta = twisted_basis(c, a), tb = twisted_basis(c, b), td = twisted_basis(c, d);
                if (twisted_multiply(c, twisted_multiply(c, ta, tb), td) !=
                    twisted_multiply(c, ta, twisted_multiply(c, tb, td)))
                    return false;
            }
    return true;
}

inline std::vector<ActionGroup> fuzz_groups() {
    std::vector<ActionGroup> gs;
    gs.push_back(generate_group(1, {translation({"1/5"})}));
    gs.push_back(generate_group(2, {translation({"1/2", "0"}), translation({"0", "1/2"})}));
    gs.push_back(generate_group(2, {translation({"1/4", "0"}), translation({"0", "1/4"})}));
    gs.push_back(generate_group(2, {translation({"1/3", "0"}), translation({"0", "1/3"})}));
    gs.push_back(s3_group());
    gs.push_back(generate_group(2, {amap({{0, 1}, {1, 0}}), amap({{-1, 0}, {0, 1}})}));
    gs.push_back(generate_group(3, {amap(signed_perm({0, 1, 2}, {-1, 1, 1})), amap(signed_perm({0, 1, 2}, {1, -1, 1})),
                                    amap(signed_perm({0, 1, 2}, {1, 1, -1}))}));
    gs.push_back(generate_group(2, {amap({{0, 1}, {1, 0}}), amap({{-1, 0}, {0, 1}}), translation({"1/2", "1/2"})}));
    return gs;
}

struct Battery {
    BernsteinDatum datum;
    std::vector<TorusPoint> points;
};

inline std::vector<TorusPoint> grid(std::size_t rank, const std::vector<std::vector<std::string>>& pts) {
    std::vector<TorusPoint> out;
    for (const auto& p : pts)
        if (p.size() == rank) out.push_back(point(p));
    return out;
}

inline std::vector<Battery> battery() {
    const std::vector<std::vector<std::string>> one{{"0"}, {"1/2"}, {"1/3"}, {"1/4"}, {"2/5"}};
    const std::vector<std::vector<std::string>> two{{"0", "0"}, {"1/2", "0"}, {"1/2", "1/2"}, {"1/3", "2/3"},
                                                    {"1/4", "1/2"}, {"1/3", "1/5"}};
    std::vector<Battery> out;
    out.push_back({sl2_iwahori_datum(), grid(1, one)});
    out.push_back({quaternion_datum(), grid(2, two)});
    out.push_back({trivial_group_datum(2), grid(2, two)});
    auto a2 = make_datum(2, {amap({{-1, 1}, {0, 1}}), amap({{1, 0}, {1, -1}})});
    a2.name = "A2";
    out.push_back({a2, grid(2, two)});
    auto b2 = make_datum(2, {amap({{0, 1}, {1, 0}}), amap({{1, 0}, {0, -1}})});
    b2.name = "B2";
    out.push_back({b2, grid(2, two)});
    auto shifted = make_datum(1, {amap({{-1}}, {"1/2"})});
    shifted.name = "shifted-inversion";
    out.push_back({shifted, grid(1, one)});
    return out;
}

}  // namespace testing_support
