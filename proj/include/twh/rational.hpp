#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace twh {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws ValidationError.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Int floor_rat(const Rat& r);
// r - floor(r), always in [0, 1).
Rat frac_part(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
// Converts a small nonnegative integer, throwing if it does not fit.
std::uint64_t to_u64(const Int& z);
long to_long(const Int& z);

// An element of Q/Z, standing for the root of unity exp(2 pi i r).
// Group law is written additively.
class Rotation {
public:
    Rotation() = default;
    explicit Rotation(const Rat& r) : value_(frac_part(r)) {}
    explicit Rotation(long num, long den = 1) : Rotation(Rat(num, den)) {}

    static Rotation parse(std::string_view text) { return Rotation(parse_rat(text)); }

    const Rat& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    // Multiplicative order of the root of unity.
    std::uint64_t order() const { return to_u64(value_.get_den()); }

    Rotation operator+(const Rotation& o) const { return Rotation(value_ + o.value_); }
    Rotation operator-(const Rotation& o) const { return Rotation(value_ - o.value_); }
    Rotation operator-() const { return Rotation(-value_); }
    Rotation& operator+=(const Rotation& o) { return *this = *this + o; }
    Rotation& operator-=(const Rotation& o) { return *this = *this - o; }
    Rotation operator*(long k) const { return Rotation(value_ * k); }

    bool operator==(const Rotation& o) const { return value_ == o.value_; }
    bool operator!=(const Rotation& o) const { return value_ != o.value_; }
    bool operator<(const Rotation& o) const { return value_ < o.value_; }

    std::string str() const { return to_string(value_); }

private:
    Rat value_{0};
};

}  // namespace twh
