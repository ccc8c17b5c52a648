#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twh/cyclotomic.hpp"

namespace twh {

// The prime field F_p with p = 1 mod N and a fixed element w of order exactly N.
// zeta_N -> w extends to a ring map from the Cyc elements whose denominators are prime to p.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t conductor);

    std::uint64_t prime() const { return p_; }
    std::uint32_t conductor() const { return n_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b >= p_ ? a + b - p_ : a + b; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

    // Image of c; nullopt when a denominator vanishes mod p or the conductor does not divide N.
    std::optional<std::uint64_t> map(const Cyc& c) const;

private:
    std::uint64_t p_ = 0, w_ = 0;
    std::uint32_t n_ = 1;
};

// Dimension of the unital algebra generated by n x n matrices over F_p (row-major entries).
std::size_t span_dimension_mod_p(const PrimeField& f, const std::vector<std::vector<std::uint64_t>>& gens, std::size_t n);

bool is_prime_u64(std::uint64_t n);

}  // namespace twh
