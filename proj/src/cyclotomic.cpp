#include "twh/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "twh/errors.hpp"

namespace twh {

namespace {

using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
void divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat lead_inv = 1 / b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        Rat f = a.back() * lead_inv;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Solves M x = rhs over Q (M given by columns); returns nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& rhs) {
    const std::size_t rows = rhs.size(), ncols = cols.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
        m[i][ncols] = rhs[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][ncols] != 0) return std::nullopt;
    std::vector<Rat> x(ncols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][ncols];
    return x;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n, m = n;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    if (n == 0) throw Error("cyclotomic polynomial of order 0");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& f = cyclotomic_polynomial(d);
        const std::size_t df = f.size() - 1;
        std::vector<long> q(p.size() - df, 0);
        for (std::size_t i = p.size() - 1; i + 1 >= f.size() && i < p.size(); --i) {
            long c = p[i];
            q[i - df] = c;
            for (std::size_t j = 0; j <= df; ++j) p[i - df + j] -= c * f[j];
            if (i == df) break;
        }
        p = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

Cyc Cyc::reduce_full(std::uint32_t n, std::vector<Rat> full) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const std::size_t phi = phi_poly.size() - 1;
    for (std::size_t i = full.size(); i-- > phi;) {
        if (full[i] == 0) continue;
        Rat c = full[i];
        for (std::size_t j = 0; j <= phi; ++j)
            if (phi_poly[j] != 0) full[i - phi + j] -= c * phi_poly[j];
    }
    full.resize(phi);
    if (phi == 1) return Cyc(full[0]);
    return Cyc(n, std::move(full));
}

Cyc Cyc::from_exponents(std::uint32_t n, const std::vector<Rat>& coeffs) {
    if (n == 0) throw ConductorError("conductor must be positive");
    std::vector<Rat> full(n, Rat(0));
    for (std::size_t e = 0; e < coeffs.size(); ++e) full[e % n] += coeffs[e];
    return reduce_full(n, std::move(full));
}

Cyc Cyc::zeta(std::uint32_t n, long k) {
    if (n == 0) throw ConductorError("conductor must be positive");
    long e = ((k % static_cast<long>(n)) + n) % n;
    return root_of_unity(Rat(e, n));
}

Cyc Cyc::root_of_unity(const Rat& r) {
    Rat f = frac_part(r);
    std::uint32_t q = static_cast<std::uint32_t>(to_u64(f.get_den()));
    long p = to_long(f.get_num());
    Rat sign = 1;
    // Q(zeta_q) = Q(zeta_{q/2}) when q = 2 mod 4.
    if (q % 4 == 2) {
        if (p % 2) sign = -1;
        std::uint32_t h = q / 2;
        p = static_cast<long>((static_cast<std::uint64_t>(p) * ((1 + h) / 2)) % h);
        q = h;
    }
    if (q == 1) return Cyc(sign);
    std::vector<Rat> full(q, Rat(0));
    full[p] = sign;
    return reduce_full(q, std::move(full));
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rat& Cyc::rational() const {
    if (!is_rational()) throw Error("cyclotomic number " + str() + " is not rational");
    return c_[0];
}

Cyc Cyc::promote(std::uint32_t m) const {
    if (m == 0 || m % n_ != 0)
        throw ConductorError("cannot promote conductor " + std::to_string(n_) + " to " + std::to_string(m));
    if (m == n_) return *this;
    if (n_ == 1) {
        std::vector<Rat> v(euler_phi(m), Rat(0));
        v[0] = c_[0];
        if (v.size() == 1) return Cyc(v[0]);
        return Cyc(m, std::move(v));
    }
    const std::uint32_t step = m / n_;
    std::vector<Rat> full(m, Rat(0));
    for (std::size_t e = 0; e < c_.size(); ++e) full[e * step] = c_[e];
    return reduce_full(m, std::move(full));
}

std::optional<Cyc> Cyc::demote(std::uint32_t m) const {
    if (m == 0 || n_ % m != 0)
        throw ConductorError("cannot demote conductor " + std::to_string(n_) + " to " + std::to_string(m));
    if (m == n_) return *this;
    if (is_rational()) return Cyc(c_[0]);
    const std::uint32_t phi_m = euler_phi(m);
    std::vector<std::vector<Rat>> cols;
    cols.reserve(phi_m);
    for (std::uint32_t j = 0; j < phi_m; ++j) {
        std::vector<Rat> full(m, Rat(0));
        full[j] = 1;
        Cyc basis = reduce_full(m, std::move(full)).promote(n_);
        cols.push_back(basis.c_.size() == c_.size() ? basis.c_ : std::vector<Rat>(c_.size(), Rat(0)));
        if (basis.n_ == 1) cols.back()[0] = basis.c_[0];
    }
    auto x = solve_columns(cols, c_);
    if (!x) return std::nullopt;
    std::vector<Rat> full(m, Rat(0));
    for (std::uint32_t j = 0; j < phi_m; ++j) full[j] = (*x)[j];
    return reduce_full(m, std::move(full));
}

Cyc Cyc::minimized() const {
    if (n_ == 1 || is_rational()) return Cyc(c_[0]);
    for (std::uint32_t m = 3; m < n_; ++m) {
        if (n_ % m || m % 4 == 2) continue;
        if (auto d = demote(m)) return *d;
    }
    return *this;
}

Cyc Cyc::galois(long j) const {
    if (n_ == 1) return *this;
    const long n = static_cast<long>(n_);
    long jj = ((j % n) + n) % n;
    if (std::gcd(jj, n) != 1) throw ConductorError("galois exponent not coprime to conductor");
    std::vector<Rat> full(n_, Rat(0));
    for (std::size_t e = 0; e < c_.size(); ++e) full[(static_cast<long>(e) * jj) % n] += c_[e];
    return reduce_full(n_, std::move(full));
}

Cyc Cyc::real_part() const {
    Cyc s = *this + conj();
    return s * Cyc(Rat(1, 2));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw Error("division by zero in cyclotomic field");
    if (is_rational()) return Cyc(Rat(1 / c_[0]));
    const auto& phi_poly = cyclotomic_polynomial(n_);
    RatPoly r0(phi_poly.begin(), phi_poly.end());
    RatPoly r1 = c_;
    trim(r1);
    RatPoly s0, s1{Rat(1)};
    while (!r1.empty()) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        RatPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant; s0 * a == r0 modulo Phi_n.
    Rat c = 1 / r0[0];
    std::vector<Rat> full(n_, Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) full[i % n_] += s0[i] * c;
    return reduce_full(n_, std::move(full));
}

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        Rat r = c_[0];
        *this = o;
        c_[0] += r;
        return *this;
    }
    if (n_ != o.n_) {
        std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(n_, o.n_));
        *this = promote(m);
        return *this += o.promote(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
    if (o.is_rational()) {
        const Rat f = o.c_[0];
        for (auto& c : c_) c *= f;
        return *this;
    }
    if (is_rational()) {
        const Rat f = c_[0];
        *this = o;
        for (auto& c : c_) c *= f;
        return *this;
    }
    if (n_ != o.n_) {
        std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(n_, o.n_));
        *this = promote(m);
        return *this *= o.promote(m);
    }
    std::vector<Rat> full(n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            full[(i + j) % n_] += c_[i] * o.c_[j];
        }
    }
    *this = reduce_full(n_, std::move(full));
    return *this;
}

bool Cyc::operator==(const Cyc& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
    std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(n_, o.n_));
    return promote(m).c_ == o.promote(m).c_;
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 2 * std::acos(-1.0);
    for (std::size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0) z += c_[e].get_d() * std::polar(1.0, two_pi * static_cast<double>(e) / n_);
    return z;
}

std::string Cyc::str() const {
    Cyc m = minimized();
    if (m.n_ == 1) return to_string(m.c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < m.c_.size(); ++e) {
        const Rat& c = m.c_[e];
        if (c == 0) continue;
        std::string coeff = to_string(c);
        if (!first && c > 0) os << '+';
        if (e == 0) {
            os << coeff;
        } else {
            if (c == -1)
                os << '-';
            else if (c != 1)
                os << coeff << '*';
            os << "E(" << m.n_ << ')';
            if (e > 1) os << '^' << e;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace twh
