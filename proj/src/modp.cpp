#include "twh/modp.hpp"

#include <numeric>

#include "twh/errors.hpp"

namespace twh {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit integers
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t conductor) : n_(conductor == 0 ? 1 : conductor) {
    const std::uint64_t start = (std::uint64_t{1} << 61) / n_;
    for (std::uint64_t t = start;; ++t) {
        const std::uint64_t p = t * n_ + 1;
        if (is_prime_u64(p)) {
            p_ = p;
            break;
        }
    }
    const auto factors = prime_factors(n_);
    for (std::uint64_t g = 2;; ++g) {
        const std::uint64_t w = powmod(g, (p_ - 1) / n_, p_);
        bool exact = true;
        for (auto q : factors)
            if (powmod(w, n_ / q, p_) == 1) exact = false;
        if (exact) {
            w_ = w;
            break;
        }
    }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::optional<std::uint64_t> PrimeField::map(const Cyc& c) const {
    const std::uint32_t m = c.conductor();
    if (n_ % m != 0) return std::nullopt;
    const std::uint64_t zeta = powmod(w_, n_ / m, p_);
    std::uint64_t acc = 0, zp = 1;
    for (const auto& q : c.coefficients()) {
        if (q != 0) {
            mpz_class num = q.get_num() % mpz_class(std::to_string(p_));
            mpz_class den = q.get_den() % mpz_class(std::to_string(p_));
            if (num < 0) num += mpz_class(std::to_string(p_));
            if (den == 0) return std::nullopt;
            std::uint64_t a = std::stoull(num.get_str()), b = std::stoull(den.get_str());
            acc = add(acc, mulmod(mulmod(a, inv(b), p_), zp, p_));
        }
        zp = mulmod(zp, zeta, p_);
    }
    return acc;
}

std::size_t span_dimension_mod_p(const PrimeField& f, const std::vector<std::vector<std::uint64_t>>& gens, std::size_t n) {
    const std::size_t dim = n * n;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint64_t>> queue;
    auto insert = [&](std::vector<std::uint64_t> v) -> bool {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint64_t c = v[pivots[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (rows[r][j]) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
        }
        std::size_t p = 0;
        while (p < dim && v[p] == 0) ++p;
        if (p == dim) return false;
        const std::uint64_t inv = f.inv(v[p]);
        for (auto& x : v) x = f.mul(x, inv);
        for (auto& row : rows) {
            const std::uint64_t c = row[p];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (v[j]) row[j] = f.sub(row[j], f.mul(c, v[j]));
        }
        rows.push_back(v);
        pivots.push_back(p);
        return true;
    };
    std::vector<std::uint64_t> id(dim, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    insert(id);
    queue.push_back(id);
    for (std::size_t q = 0; q < queue.size() && rows.size() < dim; ++q) {
        for (const auto& g : gens) {
            // g * queue[q]
            std::vector<std::uint64_t> prod(dim, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    const std::uint64_t a = g[i * n + k];
                    if (!a) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        if (queue[q][k * n + j]) prod[i * n + j] = f.add(prod[i * n + j], f.mul(a, queue[q][k * n + j]));
                }
            if (insert(prod)) queue.push_back(std::move(prod));
            if (rows.size() == dim) break;
        }
    }
    return rows.size();
}

}  // namespace twh
