#include "twh/gauss.hpp"

#include <cctype>

#include "twh/errors.hpp"

namespace twh {

namespace {

Rat parse_coeff(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return Rat(1);
    if (s == "-") return Rat(-1);
    try {
        return parse_rat(s);
    } catch (const ValidationError&) {
        throw ValidationError("malformed complex number '" + std::string(whole) + "'");
    }
}

}  // namespace

GaussRat GaussRat::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("empty complex number");
    if (s.back() != 'i') return GaussRat(parse_coeff(s, text));
    s.pop_back();
    // split before the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return GaussRat(Rat(0), parse_coeff(s, text));
    return GaussRat(parse_coeff(std::string_view(s).substr(0, split), text),
                    parse_coeff(std::string_view(s).substr(split), text));
}

GaussRat GaussRat::from_cyc(const Cyc& c) {
    if (c.is_rational()) return GaussRat(c.rational());
    auto d = c.demote(4);
    if (c.conductor() % 4 != 0 || !d) throw Error("value " + c.str() + " is not a Gaussian rational");
    const auto& v = d->coefficients();
    if (v.size() == 1) return GaussRat(v[0]);
    return GaussRat(v[0], v[1]);
}

Cyc GaussRat::to_cyc() const {
    if (im == 0) return Cyc(re);
    return Cyc(re) + Cyc(im) * Cyc::zeta(4);
}

std::string GaussRat::str() const {
    if (im == 0) return to_string(re);
    std::string imag = im == 1 ? "" : im == -1 ? "-" : to_string(im);
    if (re == 0) return imag + "i";
    return to_string(re) + (im > 0 ? "+" : "") + imag + "i";
}

}  // namespace twh
