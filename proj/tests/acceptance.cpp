// One line per acceptance criterion: PASS or FAIL, the measured time and the limit.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "json.hpp"
#include "property_support.hpp"
#include "twh/cli.hpp"
#include "twh/crossed_product.hpp"
#include "twh/errors.hpp"
#include "twh/hecke.hpp"
#include "twh/homology.hpp"
#include "twh/oracle.hpp"
#include "twh/presets.hpp"

using namespace twh;
using namespace testing_support;

namespace {

struct Check {
    bool ok = true;
    std::string first_failure;
    std::string summary;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
};

Weight wt(std::initializer_list<const char*> xs) {
    Weight w;
    for (const char* x : xs) w.push_back(GaussRat::parse(x));
    return w;
}

std::vector<Cyc> vec(std::initializer_list<long> xs) {
    std::vector<Cyc> v;
    for (long x : xs) v.push_back(Cyc(x));
    return v;
}

void criterion1(Check& c) {
    std::ostringstream out, err;
    const int code = run_cli({"k", "--preset", "sl2-iwahori"}, out, err);
    c.expect(code == 0, "exit code " + std::to_string(code));
    const auto j = nlohmann::json::parse(out.str());
    c.expect(j == nlohmann::json{{"K0_rank", 3}, {"K1_rank", 0}}, "output " + j.dump());
    c.summary = j.dump();
}

void criterion2(Check& c) {
    const auto d = sl2_iwahori_datum();
    const auto s = hh_summary(d);
    c.expect(s.classes.size() == 2, "two conjugacy classes");
    const auto& e = s.classes[0];
    c.expect(e.fixed_dimension == 1 && e.component_count == 1, "class e: the whole circle");
    c.expect(e.generic_rank == std::vector<long>{1, 1}, "class e: degrees 0 and 1");
    const auto& refl = s.classes[1];
    c.expect(refl.fixed_dimension == 0 && refl.component_count == 2, "class s: two points");
    c.expect(refl.generic_rank == std::vector<long>{2, 0}, "class s: degree 0 only");
    const auto generic = hh0_specialization(d, point({"1/3"}));
    const auto at0 = hh0_specialization(d, point({"0"}));
    const auto at_half = hh0_specialization(d, point({"1/2"}));
    c.expect(generic == 1 && at0 == 2 && at_half == 2, "hh0 specializations");
    c.summary = "e: rank (1,1) on 1 component; s: rank (2,0) on 2 points; hh0 = " + std::to_string(generic) + "," +
                std::to_string(at0) + "," + std::to_string(at_half);
}

void criterion3(Check& c) {
    const auto d = quaternion_datum();
    const auto regular = regular_classes(d.cocycle).size();
    c.expect(regular == 1, "regular classes " + std::to_string(regular));
    const TorusPoint origin = point({"0", "0"});
    const auto fiber = extended_quotient_fiber(d, origin, false);
    c.expect(fiber.labels.size() == 1 && fiber.labels[0].dimension == 2, "one 2-dimensional label");
    auto a = finite_quotient_algebra(d, origin);
    verify_associativity(a);
    std::vector<FiniteModule> images;
    for (const auto& l : fiber.labels) images.push_back(quotient_images(d, origin, l.module));
    const auto cert = completeness_certificate(a, images);
    c.expect(cert.ok, cert.failures.empty() ? "certificate" : cert.failures[0]);
    c.expect(cert.sum_of_squares == 4 && cert.algebra_dimension == 4 && cert.center_dimension == 1, "sum of squares 4");
    c.summary = "regular classes " + std::to_string(regular) + ", certified dims [2], sum of squares " +
                std::to_string(cert.sum_of_squares);
}

void criterion4(Check& c) {
    HeckeAlgebra h(rank_one_root_datum(Rat(1)));
    std::string reducible;
    for (const char* l : {"0", "1", "-1", "2", "-2", "3", "i", "1+i"}) {
        const auto I = induced_module_I(h, wt({l}));
        const std::string s = l;
        const bool special = s == "1" || s == "-1";
        c.expect(hecke_relation_check(h, I), "relations of I(" + s + ")");
        const bool irreducible = burnside_irreducible(I);
        if (!irreducible) reducible += (reducible.empty() ? "" : ",") + s;
        c.expect(irreducible == !special, "irreducibility of I(" + s + ")");
        // basis N_e, N_s: the line C(1 - s) is a submodule exactly at lambda = k, C(1 + s) at lambda = -k
        c.expect(submodule_test(I, {vec({1, -1})}) == (s == "1"), "line C(1 - s) at " + s);
        c.expect(submodule_test(I, {vec({1, 1})}) == (s == "-1"), "line C(1 + s) at " + s);
    }
    for (long k : {1L, -1L}) {
        HeckeAlgebra hk(rank_one_root_datum(Rat(k)));
        bool found = false;
        for (const auto& m : one_dimensional_modules(hk)) {
            if (m.image("N1")(0, 0) != Cyc(-1)) continue;
            found = true;
            const WeightReport w{{{GaussRat::from_cyc(m.image("x1")(0, 0))}}, {1}};
            c.expect(is_tempered(hk, w) == (k > 0), "Steinberg temperedness at k = " + std::to_string(k));
            c.expect(is_discrete_series_weights(hk, w) == (k > 0), "Steinberg discrete series at k = " + std::to_string(k));
        }
        c.expect(found, "Steinberg module at k = " + std::to_string(k));
    }
    c.summary = "reducible exactly at {" + reducible + "}; Steinberg tempered+DS at k=1, not tempered at k=-1";
}

void criterion5(Check& c) {
    std::size_t checks = 0;
    auto all = [&](const RootDatum& r, bool formal_r, const std::string& name) {
        HeckeAlgebra h(r, HeckeOptions{true, formal_r, 10000});
        for (std::size_t i = 0; i < h.simple_count(); ++i) {
            c.expect(tau_square_check(h, i), name + ": tau_" + std::to_string(i + 1));
            ++checks;
        }
        return h.parameter_count();
    };
    all(rank_one_root_datum(Rat(1)), false, "rank 1");
    all(rank_one_root_datum(Rat(1)), true, "rank 1 with formal r");
    all(a2_root_datum(Rat(1)), false, "A2");
    const auto b2_params = all(b2_root_datum(Rat(1), Rat(3)), false, "B2");
    c.expect(b2_params == 2, "B2 carries two independent parameters");
    c.summary = std::to_string(checks) + " symbolic tau^2 = 1 identities (rank 1, A2, B2 with k_long != k_short)";
}

void criterion6(Check& c) {
    std::size_t orbits = 0, data = 0;
    for (const auto& b : battery()) {
        ++data;
        for (const auto& x : b.points) {
            const auto p = trace_pairing_matrix(b.datum, x);
            c.expect(!p.determinant.is_zero(), b.datum.name + ": degenerate pairing");
            ++orbits;
        }
    }
    c.expect(orbits >= 20 && data >= 5, "battery size");
    c.summary = std::to_string(orbits) + " orbits across " + std::to_string(data) + " data, all determinants nonzero";
}

void criterion7(Check& c) {
    std::mt19937_64 rng(20261016);
    // cocycle fuzzing
    std::size_t cocycles = 0;
    for (const auto& g : fuzz_groups()) {
        c.expect(g.order() <= 16, "fuzz group order");
        auto gp = shared(g);
        const auto n = g.order();
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rotation> f(n);
            for (std::size_t i = 1; i < n; ++i) f[i] = random_rotation(rng, 6);
            Cocycle co = coboundary(gp, f);
            if (g.group.is_abelian() && g.group.exponent() == 2 && n == 4)
                co = co + bilinear_cocycle(gp, {1, 2}, {{0, 0}, {1, 0}}, 2);
            c.expect(associative(validate_cocycle(gp, co.table(), true)), "cocycle associativity");
            if (n >= 3) {
                auto t = co.table();
                t[1 * n + 2] += Rotation(1, 7);
                bool rejected = false;
                try {
                    validate_cocycle(gp, t);
                } catch (const ValidationError&) {
                    rejected = true;
                }
                c.expect(rejected, "perturbed table rejected");
            }
            ++cocycles;
        }
    }
    // Smith normal form
    std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
    for (int t = 0; t < 500; ++t) {
        const int rows = dim(rng), cols = (t % 5 == 0) ? dim(rng) : rows;
        ZMat M(rows, std::vector<Int>(cols));
        for (auto& row : M)
            for (auto& x : row) x = entry(rng);
        const auto sf = smith_normal_form(M);
        c.expect(zmat_mul(zmat_mul(sf.U, M), sf.V) == sf.S && is_smith_diagonal(sf), "U M V = S");
        c.expect(abs(zmat_det(sf.U)) == 1 && abs(zmat_det(sf.V)) == 1, "unimodular transforms");
    }
    // fixed-point components against brute-force torsion enumeration
    std::uniform_int_distribution<int> d3(1, 3);
    int maps = 0;
    while (maps < 200) {
        const std::size_t d = d3(rng);
        IntMat A = random_finite_order(rng, d);
        if (matrix_order(A) == 0 || matrix_order(A) > 6) continue;
        AffineLatticeMap phi = amap(A);
        for (std::size_t i = 0; i < d; ++i) phi.translation[i] = random_rotation(rng, 6);
        ++maps;
        const auto F = fixed_point_set(phi);
        for (long q = 1; q <= 12; ++q) c.expect(brute_force_fixed(phi, q) == predicted_fixed(F, q), "fixed-point count");
    }
    // battery: coboundary invariance, count agreement, integrality
    std::size_t orbits = 0;
    for (const auto& b : battery()) {
        const auto base_hp = hp_dimensions(b.datum);
        const auto base_k = ktheory_ranks(b.datum);
        const auto n = b.datum.order();
        for (const auto& cls : base_hp.breakdown) c.expect(cls.even >= 0 && cls.odd >= 0, "nonnegative class counts");
        std::vector<Rotation> f(n);
        for (std::size_t i = 1; i < n; ++i) f[i] = random_rotation(rng, 4);
        const auto d = with_cocycle(b.datum, b.datum.cocycle + coboundary(b.datum.cocycle.group_ptr(), f));
        const auto hp = hp_dimensions(d);
        const auto k = ktheory_ranks(d);
        c.expect(hp.even == base_hp.even && hp.odd == base_hp.odd, b.datum.name + ": hp under coboundary");
        c.expect(k.even == base_k.even && k.odd == base_k.odd, b.datum.name + ": K under coboundary");
        for (const auto& x : b.points) {
            const auto st = stabilizer_data(b.datum, x);
            const std::size_t regular = regular_classes(st.cocycle).size();
            const std::size_t labels = extended_quotient_fiber(b.datum, x).labels.size();
            c.expect(hh0_specialization(b.datum, x) == regular && labels == regular, b.datum.name + ": hh0 = fiber = regular");
            c.expect(extended_quotient_fiber(d, x).labels.size() == labels, b.datum.name + ": irr count under coboundary");
            ++orbits;
        }
    }
    c.summary = std::to_string(cocycles) + " cocycles, 500 SNF, " + std::to_string(maps) + " affine maps, " +
                std::to_string(orbits) + " battery orbits";
}

void criterion8(Check& c) {
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto r = hp_dimensions(trivial_group_datum(d));
        const long half = 1L << (d - 1);
        c.expect(r.even == half && r.odd == half, "HP of the " + std::to_string(d) + "-torus");
        const auto s = hh_summary(trivial_group_datum(d));
        long binom = 1;
        for (std::size_t n = 0; n <= d; ++n) {
            c.expect(s.generic_rank[n] == binom, "HKR rank in degree " + std::to_string(n));
            binom = binom * static_cast<long>(d - n) / static_cast<long>(n + 1);
        }
    }
    c.summary = "(2^(d-1), 2^(d-1)) and binomial ranks for d = 1..5";
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* title;
        double limit_ms;
        std::function<void(Check&)> run;
    };
    const std::vector<Item> items{
        {1, "SL2 Iwahori K-ranks", 1000, criterion1},
        {2, "HH shape of the Iwahori datum", 1000, criterion2},
        {3, "quaternion-type twisted group algebra", 1000, criterion3},
        {4, "rank-one graded Hecke classification", 5000, criterion4},
        {5, "tau^2 = 1 with symbolic parameters", 30000, criterion5},
        {6, "trace pairing nondegeneracy", 10000, criterion6},
        {7, "property suites", 120000, criterion7},
        {8, "trivial-group calibration", 1000, criterion8},
    };
    int failed = 0;
    for (const auto& item : items) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            item.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        c.expect(ms < item.limit_ms, "over the time limit");
        if (!c.ok) ++failed;
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << item.id << "  " << item.title << "  ("
                  << static_cast<long>(ms) << " ms, limit " << static_cast<long>(item.limit_ms) << " ms)  "
                  << (c.ok ? c.summary : c.first_failure) << '\n';
    }
    return failed == 0 ? 0 : 1;
}
