#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "twh/modp.hpp"
#include "twh/module.hpp"
#include "twh/oracle.hpp"
#include "twh/presets.hpp"

using namespace twh;
using namespace testing_support;

namespace {

Cyc random_cyc(std::mt19937_64& rng, std::uint32_t n) {
    std::uniform_int_distribution<long> coef(-4, 4), den(1, 3);
    std::vector<Rat> c(n);
    for (auto& x : c) x = Rat(coef(rng)) / Rat(den(rng));
    return Cyc::from_exponents(n, c);
}

CMatrix cmat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Cyc>> r;
    for (auto row : rows) {
        r.emplace_back();
        for (long v : row) r.back().emplace_back(v);
    }
    return CMatrix::from_rows(r);
}

struct NamedCocycle {
    std::string name;
    Cocycle cocycle;
    std::vector<std::size_t> expected_dims;  // sorted
};

std::vector<NamedCocycle> battery() {
    std::vector<NamedCocycle> out;
    out.push_back({"Z2", Cocycle(shared(inversion_group())), {1, 1}});
    out.push_back({"S3", Cocycle(shared(s3_group())), {1, 1, 2}});
    out.push_back({"B2", Cocycle(shared(b2_group())), {1, 1, 1, 1, 2}});
    auto q = quaternion_group();
    out.push_back({"quaternion", quaternion_cocycle(q), {2}});
    out.push_back({"Klein", Cocycle(shared(q)), {1, 1, 1, 1}});
    auto e8 = generate_group(3, {amap(signed_perm({0, 1, 2}, {-1, 1, 1})), amap(signed_perm({0, 1, 2}, {1, -1, 1})),
                                 amap(signed_perm({0, 1, 2}, {1, 1, -1}))});
    out.push_back({"(Z2)^3", Cocycle(shared(e8)), std::vector<std::size_t>(8, 1)});
    auto h = generate_group(2, {translation({"1/3", "0"}), translation({"0", "1/3"})});
    const std::vector<std::uint32_t> hg{h.index_of(translation({"1/3", "0"})), h.index_of(translation({"0", "1/3"}))};
    out.push_back({"Heisenberg", bilinear_cocycle(shared(h), hg, {{0, 1}, {0, 0}}, 3), {3}});
    out.push_back({"Z5", Cocycle(shared(generate_group(1, {translation({"1/5"})}))), {1, 1, 1, 1, 1}});
    return out;
}

std::vector<std::size_t> sorted_dims(const std::vector<TwistedIrrep>& irr) {
    std::vector<std::size_t> d;
    for (const auto& r : irr) d.push_back(r.module.dim);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("prime field reduction is a ring map") {
    std::mt19937_64 rng(3);
    for (std::uint32_t n : {1u, 3u, 4u, 8u, 12u, 15u}) {
        PrimeField f(n);
        CHECK(is_prime_u64(f.prime()));
        CHECK((f.prime() - 1) % n == 0);
        CHECK(*f.map(Cyc::zeta(n, static_cast<long>(n))) == 1);
        for (int t = 0; t < 20; ++t) {
            Cyc a = random_cyc(rng, n), b = random_cyc(rng, n);
            CHECK(*f.map(a * b) == f.mul(*f.map(a), *f.map(b)));
            CHECK(*f.map(a + b) == f.add(*f.map(a), *f.map(b)));
        }
    }
    CHECK_FALSE(PrimeField(4).map(Cyc::zeta(3)).has_value());
}

TEST_CASE("burnside_irreducible examples") {
    FiniteModule one(1);
    one.add("a", cmat({{5}}));
    CHECK(burnside_irreducible(one));
    FiniteModule diag(2);
    diag.add("a", cmat({{1, 0}, {0, 2}}));
    CHECK_FALSE(burnside_irreducible(diag));
    CHECK(burnside_certificate(diag).span_dimension == 2);
    FiniteModule full(2);
    full.add("a", cmat({{1, 0}, {0, -1}}));
    full.add("b", cmat({{0, 1}, {1, 0}}));
    auto cert = burnside_certificate(full);
    CHECK(cert.irreducible);
    CHECK(cert.modular);
    CHECK_THROWS_AS(full.add("c", cmat({{1}})), PreconditionError);
}

TEST_CASE("modular and exact span dimensions agree on random modules") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 3), entry(-2, 2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(pick(rng) % 2);
        FiniteModule m(n);
        for (int g = 0; g < 2; ++g) {
            CMatrix a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    // upper triangular for half the trials, so reducible cases occur
                    if (t % 2 == 0 || i <= j) a(i, j) = Cyc(entry(rng)) * (pick(rng) == 0 ? Cyc::zeta(3) : Cyc(1));
            m.add("g" + std::to_string(g), a);
        }
        CHECK(burnside_certificate(m).irreducible == (algebra_span_dimension(m.images, n) == n * n));
    }
}

TEST_CASE("submodule_test and invariant_span") {
    FiniteModule m(2);
    m.add("a", cmat({{1, 1}, {0, 1}}));
    CHECK(submodule_test(m, {{Cyc(1), Cyc(0)}}));
    CHECK_FALSE(submodule_test(m, {{Cyc(0), Cyc(1)}}));
    CHECK(invariant_span(m, {{Cyc(0), Cyc(1)}}).size() == 2);
    auto sub = restrict_to(m, invariant_span(m, {{Cyc(1), Cyc(0)}}));
    CHECK(sub.dim == 1);
    CHECK(sub.image("a")(0, 0) == Cyc(1));
}

TEST_CASE("center_dimension examples") {
    CHECK(center_dimension(twisted_group_algebra(Cocycle(shared(inversion_group())))) == 2);
    CHECK(center_dimension(twisted_group_algebra(Cocycle(shared(s3_group())))) == 3);
    auto q = quaternion_group();
    CHECK(center_dimension(twisted_group_algebra(quaternion_cocycle(q))) == 1);
}

TEST_CASE("finite_quotient_algebra examples") {
    auto sl2 = sl2_iwahori_datum();
    auto a = finite_quotient_algebra(sl2, point({"1/3"}));
    CHECK(a.dim == 4);
    CHECK(center_dimension(a) == 1);
    verify_associativity(a);
    CHECK(a.associativity_exhaustive);
    auto b = finite_quotient_algebra(sl2, point({"0"}));
    CHECK(b.dim == 2);
    CHECK(center_dimension(b) == 2);
    auto q = finite_quotient_algebra(quaternion_datum(), point({"0", "0"}));
    CHECK(q.dim == 4);
    CHECK(center_dimension(q) == 1);
}

TEST_CASE("associativity check rejects corrupted structure constants") {
    auto a = twisted_group_algebra(quaternion_cocycle(quaternion_group()));
    a.products[1 * a.dim + 2][0].second = -a.products[1 * a.dim + 2][0].second;
    CHECK_THROWS_AS(verify_associativity(a), InvariantViolation);
    auto big = finite_quotient_algebra(make_datum(2, {amap({{0, 1}, {1, 0}}), amap({{1, 0}, {0, -1}})}),
                                       point({"1/5", "2/5"}));
    CHECK(big.dim == 64);
    verify_associativity(big);
    CHECK(big.associativity_exhaustive);
    // S3 x {+-1} acting freely on a generic point: above the exhaustive threshold
    auto sampled = finite_quotient_algebra(
        make_datum(3, {amap(signed_perm({1, 0, 2}, {1, 1, 1})), amap(signed_perm({0, 2, 1}, {1, 1, 1})),
                       amap(signed_perm({0, 1, 2}, {-1, -1, -1}))}),
        point({"1/7", "2/7", "4/7"}));
    REQUIRE(sampled.dim == 144);
    verify_associativity(sampled, 77);
    CHECK_FALSE(sampled.associativity_exhaustive);
    CHECK(sampled.associativity_triples == 1000);
    CHECK(sampled.associativity_seed == 77);
}

TEST_CASE("twisted group algebra decompositions") {
    for (const auto& nc : battery()) {
        CAPTURE(nc.name);
        auto irr = decompose_twisted_group_algebra(nc.cocycle);
        CHECK(sorted_dims(irr) == nc.expected_dims);
        CHECK(irr.size() == regular_classes(nc.cocycle).size());
        std::vector<FiniteModule> modules;
        for (const auto& r : irr) {
            CHECK(twisted_relation_check(nc.cocycle, r.module));
            CHECK(burnside_irreducible(r.module));
            modules.push_back(r.module);
        }
        auto report = completeness_certificate(twisted_group_algebra(nc.cocycle), modules);
        CHECK(report.ok);
        CHECK(report.center_dimension == irr.size());
    }
}

TEST_CASE("decomposition is stable under coboundary rescaling") {
    std::mt19937_64 rng(5);
    for (const auto& nc : battery()) {
        CAPTURE(nc.name);
        const auto n = nc.cocycle.group().order();
        for (int t = 0; t < 3; ++t) {
            std::vector<Rotation> f(n);
            for (std::size_t i = 1; i < n; ++i) f[i] = random_rotation(rng, 6);
            Cocycle c = nc.cocycle + coboundary(nc.cocycle.group_ptr(), f);
            auto irr = decompose_twisted_group_algebra(c);
            CHECK(sorted_dims(irr) == nc.expected_dims);
            for (const auto& r : irr) CHECK(twisted_relation_check(c, r.module));
        }
    }
}

TEST_CASE("completeness_certificate negative controls") {
    auto c = Cocycle(shared(inversion_group()));
    auto irr = decompose_twisted_group_algebra(c);
    auto A = twisted_group_algebra(c);
    auto dropped = completeness_certificate(A, {irr[0].module});
    CHECK_FALSE(dropped.ok);
    bool named = false;
    for (const auto& f : dropped.failures) named = named || f == "sum of squares 1 ≠ 2";
    CHECK(named);
    auto doubled = completeness_certificate(A, {irr[0].module, irr[0].module});
    CHECK_FALSE(doubled.ok);
    // a reducible module: the regular representation
    FiniteModule reg(2);
    reg.add("T0", cmat({{1, 0}, {0, 1}}));
    reg.add("T1", cmat({{0, 1}, {1, 0}}));
    CHECK(twisted_relation_check(c, reg));
    CHECK_FALSE(completeness_certificate(A, {reg}).ok);
    FiniteModule bad(1);
    bad.add("T0", cmat({{1}}));
    bad.add("T1", cmat({{2}}));
    CHECK_FALSE(twisted_relation_check(c, bad));
    CHECK_FALSE(completeness_certificate(A, {bad, irr[1].module}).ok);
}
