#include <random>

#include "doctest.h"
#include "twh/cyclotomic.hpp"
#include "twh/gauss.hpp"
#include "twh/poly.hpp"
#include "twh/rational.hpp"

using namespace twh;

namespace {

Cyc random_cyc(std::mt19937_64& rng, std::uint32_t n) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    std::vector<Rat> c(n);
    for (auto& x : c) x = Rat(coef(rng)) / Rat(den(rng));
    return Cyc::from_exponents(n, c);
}

Poly<Rat> random_poly(std::mt19937_64& rng, std::size_t nv, int terms, int maxdeg) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg);
    Poly<Rat> p(nv);
    for (int t = 0; t < terms; ++t) {
        Exponent e(nv);
        for (auto& v : e) v = deg(rng);
        p.add_term(e, Rat(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rationals and rotations") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-2") == Rat(-2));
    CHECK_THROWS_AS(parse_rat("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rat("a/2"), ValidationError);
    CHECK(Rotation(Rat(-1, 3)).value() == Rat(2, 3));
    CHECK(Rotation(Rat(7, 2)).value() == Rat(1, 2));
    CHECK((Rotation(1, 2) + Rotation(1, 2)).is_zero());
    CHECK(Rotation(3, 12).order() == 4);
    CHECK(frac_part(Rat(-5, 3)) == Rat(1, 3));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("cyc_promote examples") {
    Cyc z2 = Cyc::zeta(2);
    CHECK(z2 == Cyc(-1));
    CHECK(z2.promote(4) == Cyc::zeta(4) * Cyc::zeta(4));
    CHECK(Cyc(1).promote(12) == Cyc(1));
    Cyc z3 = Cyc::zeta(3);
    Cyc s = z3 + z3 * z3;
    CHECK(s.promote(6) == Cyc(-1));
    CHECK(s == Cyc(-1));
    CHECK_THROWS_AS(z3.promote(4), ConductorError);
    // round trip
    Cyc a = Cyc::zeta(5, 2) + Cyc(Rat(1, 3));
    CHECK(a.promote(15).demote(5).value() == a);
    CHECK(a.promote(15).minimized().conductor() == 5);
}

TEST_CASE("cyclotomic normalisation and printing") {
    CHECK(Cyc::zeta(6) == -Cyc::zeta(3, 2));
    CHECK(Cyc::zeta(4).str() == "E(4)");
    CHECK((Cyc(Rat(-1, 2)) + Cyc(Rat(1, 2)) * Cyc::zeta(4)).str() == "-1/2+1/2*E(4)");
    CHECK(Cyc::root_of_unity(Rat(1, 2)) == Cyc(-1));
    CHECK(Cyc::root_of_unity(Rat(5, 4)) == Cyc::zeta(4));
    CHECK((Cyc::zeta(8) * Cyc::zeta(8)) == Cyc::zeta(4));
    CHECK(Cyc::zeta(4).conj() == -Cyc::zeta(4));
    CHECK((Cyc::zeta(3) + Cyc::zeta(3).conj()) == Cyc(-1));
    auto v = (Cyc(2) + Cyc(3) * Cyc::zeta(4)).to_complex();
    CHECK(v.real() == doctest::Approx(2.0));
    CHECK(v.imag() == doctest::Approx(3.0));
}

TEST_CASE("field axioms on random cyclotomic samples") {
    std::mt19937_64 rng(7);
    for (std::uint32_t n : {3u, 4u, 5u, 8u, 12u, 15u}) {
        for (int t = 0; t < 20; ++t) {
            Cyc a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, 4);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(1));
            if (!b.is_zero()) CHECK((a / b) * b == a);
            CHECK(a.galois(-1).galois(-1) == a);
        }
    }
    CHECK_THROWS(Cyc(0).inverse());
}

TEST_CASE("gaussian rationals") {
    CHECK(GaussRat::parse("1+i") == GaussRat(1, 1));
    CHECK(GaussRat::parse("-i") == GaussRat(0, -1));
    CHECK(GaussRat::parse("3") == GaussRat(3));
    CHECK(GaussRat::parse("1/2-3/4i") == GaussRat(Rat(1, 2), Rat(-3, 4)));
    CHECK(GaussRat::parse("2i") == GaussRat(0, 2));
    CHECK_THROWS_AS(GaussRat::parse("x"), ValidationError);
    GaussRat g(Rat(2, 3), Rat(-1, 5));
    CHECK(GaussRat::from_cyc(g.to_cyc()) == g);
    CHECK(GaussRat::from_cyc(Cyc(4)) == GaussRat(4));
    CHECK(GaussRat(1, 1).str() == "1+i");
    CHECK(GaussRat(0, -1).str() == "-i");
}

TEST_CASE("poly_divide_linear examples") {
    auto x = Poly<Rat>::variable(2, 0), y = Poly<Rat>::variable(2, 1);
    CHECK((x * x - y * y).divide_linear(x - y) == x + y);
    CHECK(Poly<Rat>(2).divide_linear(x).is_zero());
    // f = x^3 - s(x^3) with s the swap
    auto f = x.pow(3) - y.pow(3);
    CHECK(f.divide_linear(x - y) == x * x + x * y + y * y);
    CHECK_THROWS_AS((x * x + y).divide_linear(x - y), DivisibilityError);
    CHECK_THROWS_AS(f.divide_linear(x * y), PreconditionError);
}

TEST_CASE("poly_divide_linear inverts multiplication on random inputs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 100; ++t) {
        auto q = random_poly(rng, 3, 5, 3);
        std::vector<Rat> a(3);
        do {
            for (auto& v : a) v = Rat(coef(rng));
        } while (a[0] == 0 && a[1] == 0 && a[2] == 0);
        auto alpha = Poly<Rat>::linear_form(a);
        CHECK((q * alpha).divide_linear(alpha) == q);
    }
}

TEST_CASE("polynomial evaluation and substitution") {
    auto x = Poly<Rat>::variable(2, 0), y = Poly<Rat>::variable(2, 1);
    auto f = x * x * Rat(3) + y - Poly<Rat>::constant(2, Rat(1));
    CHECK(f.evaluate(std::vector<Rat>{Rat(2), Rat(5)}) == Rat(16));
    CHECK(f.evaluate(std::vector<Cyc>{Cyc::zeta(4), Cyc(0)}) == Cyc(-4));
    CHECK(f.substitute({y, x}) == y * y * Rat(3) + x - Poly<Rat>::constant(2, Rat(1)));
    Poly<Rat> lz(1, true);
    lz.add_term({-1}, Rat(1));
    CHECK(lz.evaluate(std::vector<Rat>{Rat(4)}) == Rat(1, 4));
    CHECK_THROWS_AS(x.add_term({-1, 0}, Rat(1)), PreconditionError);
}

TEST_CASE("poly fractions compare by cross multiplication") {
    auto x = Poly<Rat>::variable(2, 0), y = Poly<Rat>::variable(2, 1);
    PolyFraction<Rat> a(x * y, y * x * x), b(Poly<Rat>::constant(2, Rat(1)), x);
    CHECK(a == b);
    PolyFraction<Rat> c(x, x + y);
    CHECK(c + PolyFraction<Rat>(y, x + y) == PolyFraction<Rat>(Poly<Rat>::constant(2, Rat(1))));
    CHECK(c * PolyFraction<Rat>(x + y, x) == PolyFraction<Rat>(Poly<Rat>::constant(2, Rat(1))));
    CHECK_THROWS_AS(PolyFraction<Rat>(x, Poly<Rat>(2)), DivisibilityError);
}
