#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "property_support.hpp"
#include "twh/crossed_product.hpp"
#include "twh/homology.hpp"
#include "twh/presets.hpp"

using namespace twh;
using namespace testing_support;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("hh_summary examples") {
    auto t1 = hh_summary(trivial_group_datum(1));
    CHECK(t1.generic_rank == std::vector<long>{1, 1});

    auto s = hh_summary(sl2_iwahori_datum());
    REQUIRE(s.classes.size() == 2);
    const auto& e = s.classes[0];
    CHECK(e.representative == 0);
    CHECK(e.fixed_dimension == 1);
    CHECK(e.component_count == 1);
    CHECK(e.generic_rank == std::vector<long>{1, 1});
    const auto& refl = s.classes[1];
    CHECK(refl.fixed_dimension == 0);
    CHECK(refl.component_count == 2);
    CHECK(refl.component_orbits == 2);
    CHECK(refl.generic_rank == std::vector<long>{2, 0});
    CHECK(refl.invariant_cohomology == std::vector<long>{2, 0});
    CHECK(e.invariant_cohomology == std::vector<long>{1, 0});

    auto q = hh_summary(quaternion_datum());
    bool found = false;
    for (const auto& c : q.classes)
        if (c.fixed_dimension == 0 && c.component_count == 4) {
            found = true;
            CHECK_FALSE(c.twist_trivial);
            CHECK(c.generic_rank == std::vector<long>{0, 0, 0});
            CHECK(c.invariant_cohomology == std::vector<long>{0, 0, 0});
        }
    CHECK(found);
}

TEST_CASE("hp_dimensions and ktheory_ranks examples") {
    auto sl2 = hp_dimensions(sl2_iwahori_datum());
    CHECK(sl2.even == 3);
    CHECK(sl2.odd == 0);
    auto k = ktheory_ranks(sl2_iwahori_datum());
    CHECK(k.even == 3);
    CHECK(k.odd == 0);
    for (std::size_t d = 1; d <= 5; ++d) {
        auto r = hp_dimensions(trivial_group_datum(d));
        CHECK(r.even == 1L << (d - 1));
        CHECK(r.odd == 1L << (d - 1));
        auto s = hh_summary(trivial_group_datum(d));
        for (std::size_t n = 0; n <= d; ++n) CHECK(s.generic_rank[n] == binom(static_cast<long>(d), static_cast<long>(n)));
    }
    const auto qd = quaternion_datum();
    auto q = hp_dimensions(qd);
    CHECK(q.even == 1);
    CHECK(q.odd == 4);
    // per class: e -> (1,0), each single inversion -> (0,2), double inversion -> (0,0)
    for (const auto& c : q.breakdown) {
        const auto& m = qd.group.elements[c.representative].matrix;
        const int flips = (m[0][0] == -1) + (m[1][1] == -1);
        if (flips == 0) CHECK((c.even == 1 && c.odd == 0));
        if (flips == 1) CHECK((c.even == 0 && c.odd == 2));
        if (flips == 2) CHECK((c.even == 0 && c.odd == 0));
    }
    CHECK(ktheory_ranks(trivial_group_datum(1)).even == 1);
    CHECK(ktheory_ranks(trivial_group_datum(1)).odd == 1);
}

TEST_CASE("hh0_specialization examples") {
    auto sl2 = sl2_iwahori_datum();
    CHECK(hh0_specialization(sl2, point({"1/3"})) == 1);
    CHECK(hh0_specialization(sl2, point({"0"})) == 2);
    CHECK(hh0_specialization(sl2, point({"1/2"})) == 2);
    CHECK(hh0_specialization(quaternion_datum(), point({"0", "0"})) == 1);
}

TEST_CASE("trace_pairing_matrix examples") {
    auto sl2 = sl2_iwahori_datum();
    auto p = trace_pairing_matrix(sl2, point({"0"}));
    REQUIRE(p.matrix.rows() == 2);
    // rows e and s; columns the two characters of S2 in some order
    CHECK(p.matrix(0, 0) == Cyc(1));
    CHECK(p.matrix(0, 1) == Cyc(1));
    CHECK(p.matrix(1, 0) * p.matrix(1, 1) == Cyc(-1));
    CHECK(p.determinant * p.determinant == Cyc(4));
    auto f = trace_pairing_matrix(sl2, point({"1/3"}));
    CHECK(f.matrix.rows() == 1);
    CHECK(f.matrix(0, 0) == Cyc(1));
    auto q = trace_pairing_matrix(quaternion_datum(), point({"0", "0"}));
    REQUIRE(q.matrix.rows() == 1);
    CHECK(q.matrix(0, 0) == Cyc(2));
}

TEST_CASE("battery: counts agree and the trace pairing is nondegenerate") {
    std::size_t orbits = 0;
    for (const auto& b : battery()) {
        CAPTURE(b.datum.name);
        for (const auto& x : b.points) {
            CAPTURE(x.size());
            const auto st = stabilizer_data(b.datum, x);
            const std::size_t regular = regular_classes(st.cocycle).size();
            CHECK(hh0_specialization(b.datum, x) == regular);
            CHECK(extended_quotient_fiber(b.datum, x).labels.size() == regular);
            auto p = trace_pairing_matrix(b.datum, x);
            CHECK_FALSE(p.determinant.is_zero());
            ++orbits;
        }
        auto r = hp_dimensions(b.datum);
        auto s = hh_summary(b.datum);
        long total = 0;
        for (auto v : s.invariant_cohomology) {
            CHECK(v >= 0);
            total += v;
        }
        CHECK(r.even + r.odd == total);
    }
    CHECK(orbits >= 20);
}

TEST_CASE("coboundary invariance of counts and ranks") {
    std::mt19937_64 rng(41);
    for (const auto& b : battery()) {
        CAPTURE(b.datum.name);
        const auto base = hp_dimensions(b.datum);
        const auto n = b.datum.order();
        for (int t = 0; t < 3; ++t) {
            std::vector<Rotation> f(n);
            for (std::size_t i = 1; i < n; ++i) f[i] = random_rotation(rng, 4);
            auto d = with_cocycle(b.datum, b.datum.cocycle + coboundary(b.datum.cocycle.group_ptr(), f));
            auto r = hp_dimensions(d);
            CHECK(r.even == base.even);
            CHECK(r.odd == base.odd);
            auto k = ktheory_ranks(d);
            CHECK(k.even == base.even);
            CHECK(k.odd == base.odd);
            CHECK(regular_classes(d.cocycle).size() == regular_classes(b.datum.cocycle).size());
            for (const auto& x : b.points) {
                CHECK(hh0_specialization(d, x, false) == hh0_specialization(b.datum, x, false));
                if (t == 0) CHECK(extended_quotient_fiber(d, x).labels.size() == extended_quotient_fiber(b.datum, x).labels.size());
            }
        }
    }
}

TEST_CASE("hecke_hh_dimensions examples") {
    HeckeAlgebra r1(rank_one_root_datum(Rat(1)));
    auto s = hecke_hh_dimensions(r1);
    CHECK(s.generic_rank == std::vector<long>{2, 1});
    REQUIRE(s.classes.size() == 2);
    CHECK(s.classes[0].fixed_dimension == 1);
    CHECK(s.classes[1].fixed_dimension == 0);

    RootDatum none;
    none.rank = 3;
    auto t = hecke_hh_dimensions(HeckeAlgebra(none));
    CHECK(t.generic_rank == std::vector<long>{1, 3, 3, 1});

    auto a2 = hecke_hh_dimensions(HeckeAlgebra(a2_root_datum(Rat(1))));
    std::vector<std::size_t> dims;
    for (const auto& c : a2.classes) dims.push_back(c.fixed_dimension);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{0, 1, 2});
    // independent of k
    auto a2k = hecke_hh_dimensions(HeckeAlgebra(a2_root_datum(Rat(7) / Rat(3))));
    CHECK(a2k.generic_rank == a2.generic_rank);
}
