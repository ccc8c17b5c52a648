#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twh/rational.hpp"

namespace twh {

// Euler phi of a small positive integer.
std::uint32_t euler_phi(std::uint32_t n);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t n);

// An element of the cyclotomic field Q(zeta_n), held in the power basis
// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial.
// Binary operations between different conductors promote both operands to the lcm.
class Cyc {
public:
    Cyc() : n_(1), c_(1) {}
    Cyc(long v) : n_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
    Cyc(const Rat& r) : n_(1), c_{r} {}  // NOLINT(google-explicit-constructor)
    Cyc(const Int& z) : n_(1), c_{Rat(z)} {}  // NOLINT(google-explicit-constructor)

    // exp(2 pi i r)
    static Cyc root_of_unity(const Rat& r);
    static Cyc root_of_unity(const Rotation& r) { return root_of_unity(r.value()); }
    // zeta_n^k
    static Cyc zeta(std::uint32_t n, long k = 1);
    // Builds sum_e coeffs[e] * zeta_n^e for exponents e taken modulo n, then reduces.
    static Cyc from_exponents(std::uint32_t n, const std::vector<Rat>& coeffs);

    std::uint32_t conductor() const { return n_; }
    const std::vector<Rat>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Value when rational, throws otherwise.
    const Rat& rational() const;

    // Same element viewed in Q(zeta_m); m must be a multiple of the conductor.
    Cyc promote(std::uint32_t m) const;
    // Same element viewed in Q(zeta_m) for m dividing the conductor, if it lies there.
    std::optional<Cyc> demote(std::uint32_t m) const;
    // Representation in the smallest Q(zeta_m) containing the element (m | conductor).
    Cyc minimized() const;

    // zeta -> zeta^j, j coprime to the conductor.
    Cyc galois(long j) const;
    Cyc conj() const { return galois(-1); }
    Cyc real_part() const;
    Cyc inverse() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    // GAP-style text, e.g. "-1/2+1/2*E(4)"; rationals print as "p/q".
    std::string str() const;

private:
    Cyc(std::uint32_t n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    static Cyc reduce_full(std::uint32_t n, std::vector<Rat> full);

    std::uint32_t n_;
    std::vector<Rat> c_;
};

inline bool is_zero(const Cyc& a) { return a.is_zero(); }
inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_zero(const Int& a) { return a == 0; }
inline Cyc inverse(const Cyc& a) { return a.inverse(); }
inline Rat inverse(const Rat& a) { return 1 / a; }

}  // namespace twh
