#include "twh/crossed_product.hpp"

#include <sstream>

#include "twh/errors.hpp"

namespace twh {

namespace {

std::string tname(std::uint32_t g) { return "T" + std::to_string(g); }

void check_element(const BernsteinDatum& d, const CrossedElement& a) {
    for (const auto& [g, f] : a.terms) {
        if (g >= d.order()) throw PreconditionError("crossed element refers to group element " + std::to_string(g) +
                                                    " outside the datum");
        if (f.nvars() != d.rank()) throw PreconditionError("crossed element has coefficients in " +
                                                           std::to_string(f.nvars()) + " variables, datum rank " +
                                                           std::to_string(d.rank()));
    }
}

void add_into(CrossedElement& a, std::uint32_t g, const LaurentPoly& f) {
    if (f.is_zero()) return;
    auto it = a.terms.find(g);
    if (it == a.terms.end()) {
        a.terms.emplace(g, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) a.terms.erase(it);
}

}  // namespace

std::string CrossedElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, f] : terms) {
        if (!first) os << " + ";
        first = false;
        os << '(' << f.str({}) << ")*T" << g;
    }
    return os.str();
}

LaurentPoly laurent_constant(std::size_t d, const Cyc& c) { return LaurentPoly::constant(d, c, true); }

LaurentPoly laurent_monomial(const Exponent& e, const Cyc& c) { return LaurentPoly::monomial(e, c, true); }

LaurentPoly act(const AffineLatticeMap& g, const LaurentPoly& f) {
    const AffineLatticeMap inv = g.inverse();
    const std::size_t d = g.rank();
    LaurentPoly out(d, true);
    for (const auto& [m, c] : f.terms()) {
        Exponent image(d, 0);
        Rat phase = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (m[j] == 0) continue;
            for (std::size_t k = 0; k < d; ++k) image[k] += m[j] * static_cast<int>(inv.matrix[j][k]);
            phase += inv.translation[j].value() * m[j];
        }
        out.add_term(std::move(image), c * Cyc::root_of_unity(phase));
    }
    return out;
}

Cyc evaluate_at(const LaurentPoly& f, const TorusPoint& y) {
    if (y.size() != f.nvars()) throw PreconditionError("point dimension does not match the polynomial");
    Cyc out;
    for (const auto& [m, c] : f.terms()) {
        Rat phase = 0;
        for (std::size_t j = 0; j < y.size(); ++j) phase += y[j].value() * m[j];
        out += c * Cyc::root_of_unity(phase);
    }
    return out;
}

CrossedElement crossed_element(const BernsteinDatum& d, std::uint32_t g, const LaurentPoly& f) {
    CrossedElement a;
    add_into(a, g, f);
    check_element(d, a);
    return a;
}

CrossedElement crossed_function(const BernsteinDatum& d, const LaurentPoly& f) { return crossed_element(d, 0, f); }

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
    CrossedElement out = a;
    for (const auto& [g, f] : b.terms) add_into(out, g, f);
    return out;
}

CrossedElement multiply(const BernsteinDatum& d, const CrossedElement& a, const CrossedElement& b) {
    check_element(d, a);
    check_element(d, b);
    const FiniteGroup& G = d.abstract_group();
    CrossedElement out;
    for (const auto& [g, f] : a.terms)
        for (const auto& [k, h] : b.terms) {
            LaurentPoly t = f * act(d.group.elements[g], h);
            t *= Cyc::root_of_unity(d.cocycle(g, k));
            add_into(out, G.mul(g, k), t);
        }
    return out;
}

bool is_central(const BernsteinDatum& d, const CrossedElement& a) {
    check_element(d, a);
    const std::size_t r = d.rank();
    std::vector<CrossedElement> gens;
    for (std::size_t j = 0; j < r; ++j) gens.push_back(crossed_function(d, LaurentPoly::variable(r, j, true)));
    for (std::uint32_t g = 0; g < d.order(); ++g) gens.push_back(crossed_element(d, g, laurent_constant(r, 1)));
    for (const auto& u : gens)
        if (multiply(d, a, u) != multiply(d, u, a)) return false;
    return true;
}

LaurentPoly symmetrize(const BernsteinDatum& d, const LaurentPoly& f) {
    LaurentPoly out(d.rank(), true);
    for (const auto& g : d.group.elements) out += act(g, f);
    return out;
}

FiniteModule induced_module(const BernsteinDatum& d, const TorusPoint& x, const FiniteModule& rho, bool certify) {
    const StabilizerData st = stabilizer_data(d, x);
    if (!twisted_relation_check(st.cocycle, rho))
        throw ValidationError("inducing data is not a module of the twisted group algebra of the stabilizer");
    const FiniteGroup& G = d.abstract_group();
    const std::size_t m = st.orbit.points.size(), k = rho.dim, n = m * k, r = d.rank();
    std::map<TorusPoint, std::size_t> where;
    for (std::size_t i = 0; i < m; ++i) where.emplace(st.orbit.points[i], i);
    const auto& reps = st.orbit.transversal;

    FiniteModule out(n);
    for (std::size_t j = 0; j < r; ++j) {
        CMatrix z(n, n);
        for (std::size_t i = 0; i < m; ++i) {
            const Cyc v = Cyc::root_of_unity(st.orbit.points[i][j]);
            for (std::size_t a = 0; a < k; ++a) z(i * k + a, i * k + a) = v;
        }
        out.add("z" + std::to_string(j + 1), std::move(z));
    }
    // T_g T_{r_i} = c(g, r_i) T_{r_i'} T_h / c(r_i', h) where g r_i = r_i' h, h in G_x
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        CMatrix t(n, n);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t ip = where.at(d.group.elements[g].apply(st.orbit.points[i]));
            const std::uint32_t h = G.mul(G.inv(reps[ip]), G.mul(g, reps[i]));
            const auto local = st.subgroup.from_parent.find(h);
            if (local == st.subgroup.from_parent.end()) throw InvariantViolation("coset decomposition left the stabilizer");
            const Cyc scale = Cyc::root_of_unity(d.cocycle(g, reps[i]) - d.cocycle(reps[ip], h));
            const CMatrix& block = rho.image(tname(local->second));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    if (!block(a, b).is_zero()) t(ip * k + a, i * k + b) = scale * block(a, b);
        }
        out.add(tname(g), std::move(t));
    }
    if (certify) {
        if (!crossed_relation_check(d, out)) throw InvariantViolation("induced module violates the crossed-product relations");
        if (burnside_irreducible(rho) && !burnside_irreducible(out))
            throw InvariantViolation("induced module of an irreducible is reducible");
    }
    return out;
}

ExtendedQuotientFiber extended_quotient_fiber(const BernsteinDatum& d, const TorusPoint& x, bool certify) {
    const StabilizerData st = stabilizer_data(d, x);
    ExtendedQuotientFiber fiber;
    fiber.orbit = st.orbit;
    fiber.stabilizer = st.orbit.stabilizer;
    const auto regular = regular_classes(st.cocycle);
    fiber.regular_class_count = regular.size();
    for (const auto& cl : regular) fiber.regular_class_representatives.push_back(cl.representative);

    const auto irreps = decompose_twisted_group_algebra(st.cocycle);
    const std::size_t index = st.orbit.points.size();
    std::size_t squares = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        FiberLabel l;
        l.index = i;
        l.rho = irreps[i].module;
        l.rho_dimension = l.rho.dim;
        l.module = induced_module(d, x, l.rho, certify);
        l.dimension = l.module.dim;
        squares += l.dimension * l.dimension;
        fiber.labels.push_back(std::move(l));
    }
    if (fiber.labels.size() != fiber.regular_class_count)
        throw InvariantViolation("fiber has " + std::to_string(fiber.labels.size()) + " labels but " +
                                 std::to_string(fiber.regular_class_count) + " regular classes");
    if (squares != index * d.order())
        throw InvariantViolation("fiber dimensions square-sum to " + std::to_string(squares) + ", expected " +
                                 std::to_string(index * d.order()));
    if (certify) {
        FiniteAlgebra A = finite_quotient_algebra(d, x);
        verify_associativity(A);
        std::vector<FiniteModule> images;
        for (const auto& l : fiber.labels) images.push_back(quotient_images(d, x, l.module));
        fiber.certificate = completeness_certificate(A, images);
        if (!fiber.certificate.ok) {
            std::string msg = "oracle decomposition incomplete:";
            for (const auto& f : fiber.certificate.failures) msg += " " + f + ";";
            throw ComputationError(msg);
        }
    }
    return fiber;
}

BernsteinDatum opposite_datum(const BernsteinDatum& d) {
    BernsteinDatum o = d;
    o.cocycle = -d.cocycle;
    if (!d.name.empty()) o.name = d.name + "-opposite";
    return o;
}

FiniteModule opposite_transport(const BernsteinDatum& d, const FiniteModule& m) {
    FiniteModule out(m.dim);
    for (std::size_t j = 0; j < d.rank(); ++j) {
        const std::string name = "z" + std::to_string(j + 1);
        out.add(name, m.image(name).transpose());
    }
    for (std::uint32_t g = 0; g < d.order(); ++g) out.add(tname(g), m.image(tname(g)).inverse_matrix().transpose());
    if (!crossed_relation_check(opposite_datum(d), out))
        throw InvariantViolation("transported module violates the relations of the opposite datum");
    return out;
}

}  // namespace twh
