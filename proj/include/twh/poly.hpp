#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "twh/cyclotomic.hpp"
#include "twh/errors.hpp"
#include "twh/rational.hpp"

namespace twh {

using Exponent = std::vector<int>;

template <class K>
K power(K base, long e) {
    if (e < 0) {
        base = inverse(base);
        e = -e;
    }
    K out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

// Sparse multivariate (Laurent) polynomial. Terms are keyed by exponent vectors
// in lexicographic order; zero coefficients are never stored.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars, bool laurent = false) : nvars_(nvars), laurent_(laurent) {}

    static Poly constant(std::size_t nvars, const K& c, bool laurent = false) {
        Poly p(nvars, laurent);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i, bool laurent = false) {
        Exponent e(nvars, 0);
        e.at(i) = 1;
        return monomial(std::move(e), K(1), laurent);
    }
    static Poly monomial(Exponent e, const K& c, bool laurent = false) {
        Poly p(e.size(), laurent);
        p.add_term(std::move(e), c);
        return p;
    }
    // sum_i coeffs[i] x_i
    static Poly linear_form(const std::vector<K>& coeffs) {
        Poly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponent e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(std::move(e), coeffs[i]);
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool laurent() const { return laurent_; }
    const std::map<Exponent, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_origin(terms_.begin()->first));
    }
    K constant_term() const {
        auto it = terms_.find(Exponent(nvars_, 0));
        return it == terms_.end() ? K(0) : it->second;
    }
    K coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }
    int total_degree() const {
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            best = std::max(best, s);
        }
        return best;
    }
    // Nonzero and every term of total degree one.
    bool is_linear_form() const {
        if (terms_.empty()) return false;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) {
                if (v < 0) return false;
                s += v;
            }
            if (s != 1) return false;
        }
        return true;
    }

    void add_term(Exponent e, const K& c) {
        if (e.size() != nvars_) throw PreconditionError("exponent length mismatch");
        if (!laurent_)
            for (int v : e)
                if (v < 0) throw PreconditionError("negative exponent in a non-Laurent polynomial");
        if (is_zero_scalar(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (is_zero_scalar(it->second)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    Poly& operator+=(const Poly& o) {
        check(o);
        laurent_ = laurent_ || o.laurent_;
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const K& s) {
        if (is_zero_scalar(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly out(a.nvars_, a.laurent_ || b.laurent_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const {
        Poly out = constant(nvars_, K(1), laurent_);
        for (unsigned i = 0; i < e; ++i) out *= *this;
        return out;
    }

    // Value at a point; coefficients are converted into the target scalar type.
    template <class L>
    L evaluate(const std::vector<L>& point) const {
        if (point.size() != nvars_) throw PreconditionError("evaluation point has wrong length");
        L out(0);
        for (const auto& [e, c] : terms_) {
            L t(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) t *= power(point[i], e[i]);
            out += t;
        }
        return out;
    }

    // Replaces x_i by images[i] (polynomial exponents only unless images are invertible monomials).
    Poly substitute(const std::vector<Poly>& images) const {
        if (images.size() != nvars_) throw PreconditionError("substitution has wrong length");
        std::size_t m = images.empty() ? nvars_ : images[0].nvars_;
        Poly out(m, laurent_);
        for (const auto& [e, c] : terms_) {
            Poly t = constant(m, c, laurent_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] < 0) throw PreconditionError("substitution into a negative exponent");
                if (e[i] > 0) t *= images[i].pow(static_cast<unsigned>(e[i]));
            }
            out += t;
        }
        return out;
    }

    // Exact quotient by d; throws DivisibilityError when d does not divide *this.
    Poly divide_exact(const Poly& d) const {
        check(d);
        if (d.is_zero()) throw DivisibilityError("division by the zero polynomial");
        if (laurent_ || d.laurent_) throw PreconditionError("exact division is defined for polynomials only");
        const auto& [dlead_e, dlead_c] = *d.terms_.rbegin();
        const K dlead_inv = inverse(dlead_c);
        Poly rem = *this;
        Poly quot(nvars_);
        Exponent qe(nvars_);
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            for (std::size_t i = 0; i < nvars_; ++i) {
                qe[i] = re[i] - dlead_e[i];
                if (qe[i] < 0) throw DivisibilityError("polynomial is not divisible");
            }
            K qc = rc * dlead_inv;
            Poly step = monomial(qe, qc);
            quot += step;
            rem -= step * d;
        }
        return quot;
    }

    // Division by a nonzero homogeneous linear form.
    Poly divide_linear(const Poly& alpha) const {
        if (!alpha.is_linear_form()) throw PreconditionError("divisor is not a nonzero linear form");
        return divide_exact(alpha);
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = scalar_str(c);
            bool unit_mono = is_origin(e);
            if (!first) os << " + ";
            first = false;
            if (unit_mono) {
                os << cs;
                continue;
            }
            if (cs != "1") os << (cs.find_first_of("+-", 1) != std::string::npos ? "(" + cs + ")" : cs) << '*';
            bool first_var = true;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << '*';
                first_var = false;
                os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
                if (e[i] != 1) os << '^' << e[i];
            }
        }
        return os.str();
    }

private:
    static bool is_origin(const Exponent& e) {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }
    static bool is_zero_scalar(const K& c) { return twh::is_zero(c); }
    static std::string scalar_str(const K& c) {
        if constexpr (std::is_same_v<K, Rat>)
            return to_string(c);
        else
            return c.str();
    }
    void check(const Poly& o) const {
        if (o.nvars_ != nvars_) throw PreconditionError("polynomials over different variable sets");
    }

    std::size_t nvars_ = 0;
    bool laurent_ = false;
    std::map<Exponent, K> terms_;
};

// Rational function num/den. Equality by cross-multiplication.
template <class K>
class PolyFraction {
public:
    PolyFraction() = default;
    PolyFraction(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(num_.nvars(), K(1))) {}  // NOLINT
    PolyFraction(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisibilityError("zero denominator");
        normalize();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    PolyFraction operator-() const { return PolyFraction(-num_, den_, raw_tag{}); }
    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
        if (a.den_ == b.den_) return PolyFraction(a.num_ + b.num_, a.den_);
        return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) { return a + (-b); }
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    PolyFraction& operator+=(const PolyFraction& o) { return *this = *this + o; }
    PolyFraction& operator*=(const PolyFraction& o) { return *this = *this * o; }

    bool operator==(const PolyFraction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const PolyFraction& o) const { return !(*this == o); }

    PolyFraction substitute(const std::vector<Poly<K>>& images) const {
        return PolyFraction(num_.substitute(images), den_.substitute(images));
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den_.is_constant()) return num_.str(names);
        return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    }

private:
    struct raw_tag {};
    PolyFraction(Poly<K> n, Poly<K> d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    // Makes the leading coefficient of the denominator 1 and cancels an exact quotient.
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(num_.nvars(), K(1));
            return;
        }
        K lead_inv = inverse(den_.terms().rbegin()->second);
        num_ *= lead_inv;
        den_ *= lead_inv;
        if (den_.is_constant()) return;
        try {
            num_ = num_.divide_exact(den_);
            den_ = Poly<K>::constant(num_.nvars(), K(1));
        } catch (const DivisibilityError&) {
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

}  // namespace twh
