#pragma once

#include <string>
#include <string_view>

#include "twh/cyclotomic.hpp"
#include "twh/rational.hpp"

namespace twh {

// a + b i with rational a, b.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(const Rat& a, const Rat& b = Rat(0)) : re(a), im(b) {}  // NOLINT(google-explicit-constructor)
    GaussRat(long a) : re(a) {}  // NOLINT(google-explicit-constructor)

    // Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with rational a, b ("1/2+3/4i").
    static GaussRat parse(std::string_view text);
    // Inverse of a Cyc lying in Q(i); throws if it does not.
    static GaussRat from_cyc(const Cyc& c);

    Cyc to_cyc() const;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    bool operator<(const GaussRat& o) const { return re != o.re ? re < o.re : im < o.im; }

    std::string str() const;
};

}  // namespace twh
