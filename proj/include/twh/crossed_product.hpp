#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twh/datum.hpp"
#include "twh/module.hpp"
#include "twh/oracle.hpp"
#include "twh/poly.hpp"

namespace twh {

using LaurentPoly = Poly<Cyc>;

// sum_g f_g T_g in O(X) x| C[G, c]; f_g are Laurent polynomials in z_1..z_d.
struct CrossedElement {
    std::map<std::uint32_t, LaurentPoly> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const CrossedElement& o) const { return terms == o.terms; }
    bool operator!=(const CrossedElement& o) const { return !(*this == o); }
    std::string str() const;
};

LaurentPoly laurent_constant(std::size_t d, const Cyc& c);
LaurentPoly laurent_monomial(const Exponent& e, const Cyc& c = Cyc(1));

// g(f)(y) = f(g^-1 y); on monomials g(z^m) = e(m . t) z^{A'^T m} where g^-1 y = A' y + t.
LaurentPoly act(const AffineLatticeMap& g, const LaurentPoly& f);

// Value of f at a torsion point: z_j -> exp(2 pi i y_j).
Cyc evaluate_at(const LaurentPoly& f, const TorusPoint& y);

CrossedElement crossed_element(const BernsteinDatum& d, std::uint32_t g, const LaurentPoly& f);
CrossedElement crossed_function(const BernsteinDatum& d, const LaurentPoly& f);
CrossedElement operator+(const CrossedElement& a, const CrossedElement& b);

// (f T_g)(h T_k) = f g(h) c(g,k) T_gk. Throws PreconditionError on elements not over d.
CrossedElement multiply(const BernsteinDatum& d, const CrossedElement& a, const CrossedElement& b);

// Commutes with every coordinate z_j and every T_g.
bool is_central(const BernsteinDatum& d, const CrossedElement& a);

// sum_g g(f), an invariant function.
LaurentPoly symmetrize(const BernsteinDatum& d, const LaurentPoly& f);

// Induction of x (x) rho from O(X) x| C[G_x, c] to the whole crossed product. rho has images
// "T<i>" indexed by the stabilizer's own element numbering. Basis: T_{r_i} (x) v_a for coset
// representatives r_i of least group index, ordered by orbit point, then a.
// The result has images "z1".."zd" and "T<g>" for every group element.
// Throws ValidationError if rho is not a module, InvariantViolation if relations or the
// irreducibility certificate fail.
FiniteModule induced_module(const BernsteinDatum& d, const TorusPoint& x, const FiniteModule& rho, bool certify = true);

struct FiberLabel {
    std::size_t index = 0;
    std::size_t rho_dimension = 0;
    std::size_t dimension = 0;  // [G : G_x] * rho_dimension
    FiniteModule rho;
    FiniteModule module;
};

// Irreducible modules of the crossed product with central character the orbit of x.
struct ExtendedQuotientFiber {
    Orbit orbit;
    std::vector<std::uint32_t> stabilizer;
    std::size_t regular_class_count = 0;
    std::vector<std::uint32_t> regular_class_representatives;  // stabilizer-local indices
    std::vector<FiberLabel> labels;
    CertificateReport certificate;
};

// Decomposes C[G_x, c] and induces each irreducible. With certify set, the oracle checks the
// result against B / I B; a failed certificate raises ComputationError.
ExtendedQuotientFiber extended_quotient_fiber(const BernsteinDatum& d, const TorusPoint& x, bool certify = true);

// The datum with cocycle -c, whose crossed product is the opposite algebra.
BernsteinDatum opposite_datum(const BernsteinDatum& d);

// A left module m becomes a right module on the dual space; read as a left module over the
// opposite datum through T_g -> T_g^-1: z_j -> Z_j^T and T_g -> (T_g^-1)^T.
FiniteModule opposite_transport(const BernsteinDatum& d, const FiniteModule& m);

}  // namespace twh
