#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twh/datum.hpp"
#include "twh/module.hpp"

namespace twh {

// Finite-dimensional algebra given by structure constants on a named basis.
struct FiniteAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    // products[i * dim + j] = b_i b_j as a sparse combination of basis elements
    std::vector<std::vector<std::pair<std::size_t, Cyc>>> products;
    std::vector<Cyc> unit;
    // Elements generating the algebra (dense coordinate vectors); empty means the whole basis.
    std::vector<std::vector<Cyc>> generators;

    // Filled by verify_associativity.
    bool associativity_exhaustive = false;
    std::size_t associativity_triples = 0;
    std::uint64_t associativity_seed = 0;

    const std::vector<std::pair<std::size_t, Cyc>>& product(std::size_t i, std::size_t j) const {
        return products[i * dim + j];
    }
    std::vector<Cyc> multiply(const std::vector<Cyc>& a, const std::vector<Cyc>& b) const;
};

// All basis triples up to dimension 64, otherwise 1000 triples drawn with the given seed.
// Also checks the unit. Throws InvariantViolation naming the failing triple.
void verify_associativity(FiniteAlgebra& a, std::uint64_t seed = 20240901);

std::size_t center_dimension(const FiniteAlgebra& a);

// C[G, c] on the basis T_g.
FiniteAlgebra twisted_group_algebra(const Cocycle& c);

// B / I B for the ideal of the orbit of x: basis 1_y T_g for y in the orbit, g in the group.
FiniteAlgebra finite_quotient_algebra(const BernsteinDatum& d, const TorusPoint& x);

// An irreducible module of a twisted group algebra, with generators "T<g>" for every element g.
struct TwistedIrrep {
    FiniteModule module;
    std::vector<Cyc> character;
};

// Irreducible modules of C[G, c]. For a subgroup H and a one-dimensional module l of C[H, c]
// with idempotent e_l, the left ideal A (1 - E) e_l (E: central idempotents of the modules found
// so far) is irreducible exactly when l occurs once among the missing modules; such ideals are
// taken as new modules until the squared dimensions sum to |G|.
// Ordered by discovery; the order is deterministic but carries no intrinsic meaning.
// Throws ComputationError if the search ends before the sum of squared dimensions reaches |G|.
std::vector<TwistedIrrep> decompose_twisted_group_algebra(const Cocycle& c);

// Result of a certificate check; failures name each counterexample.
struct CertificateReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t center_dimension = 0;
    std::size_t module_count = 0;
    std::size_t sum_of_squares = 0;
    std::size_t algebra_dimension = 0;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

// Each module carries an image for every basis name of the algebra. Checks that each is a module,
// Burnside-irreducible, that characters are pairwise distinct, that the module count equals the
// centre dimension and that the squared dimensions sum to dim A.
CertificateReport completeness_certificate(const FiniteAlgebra& a, const std::vector<FiniteModule>& modules);

// Every defining relation of C[G, c] holds for images "T<g>".
bool twisted_relation_check(const Cocycle& c, const FiniteModule& m);

// Relations of the crossed product for images "z1".."zd" (coordinate functions) and "T<g>":
// the z_i commute and are invertible, T_g T_h = c(g,h) T_gh, T_e = 1 and T_g z^m T_g^-1 = g(z^m).
bool crossed_relation_check(const BernsteinDatum& d, const FiniteModule& m);

// Images of the basis of finite_quotient_algebra(d, x) in a crossed-product module whose
// central character is the orbit of x. The idempotents 1_y are built from the coordinate images
// by interpolation at the orbit points.
FiniteModule quotient_images(const BernsteinDatum& d, const TorusPoint& x, const FiniteModule& m);

}  // namespace twh
