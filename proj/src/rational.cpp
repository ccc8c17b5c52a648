#include "twh/rational.hpp"

#include <cctype>
#include <limits>

#include "twh/errors.hpp"

namespace twh {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!valid_integer(num) || !valid_integer(den))
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    Int n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat frac_part(const Rat& r) {
    if (r.get_den() == 1) return Rat(0);
    Int rem;
    mpz_fdiv_r(rem.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rat out(rem, r.get_den());
    out.canonicalize();
    return out;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return to_u64(lcm(Int(std::to_string(a)), Int(std::to_string(b))));
}

std::uint64_t to_u64(const Int& z) {
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 63) throw Error("integer out of range: " + z.get_str());
    return std::stoull(z.get_str());
}

long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw Error("integer out of range: " + z.get_str());
    return z.get_si();
}

}  // namespace twh
