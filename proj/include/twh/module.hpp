#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twh/cyclotomic.hpp"
#include "twh/matrix.hpp"

namespace twh {

// A finite-dimensional module given by exact matrices for named algebra generators.
struct FiniteModule {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<CMatrix> images;

    FiniteModule() = default;
    explicit FiniteModule(std::size_t n) : dim(n) {}

    // Throws PreconditionError on a shape mismatch or a duplicate name.
    void add(std::string name, CMatrix m);
    bool has(std::string_view name) const;
    const CMatrix& image(std::string_view name) const;
    // lcm of the conductors of all entries
    std::uint32_t conductor() const;
};

// Dimension of the unital algebra generated by the matrices, computed exactly.
std::size_t algebra_span_dimension(const std::vector<CMatrix>& gens, std::size_t n);

struct BurnsideCertificate {
    bool irreducible = false;
    std::size_t span_dimension = 0;
    // true when the full span was certified by reduction modulo a prime
    bool modular = false;
};

// Span of all products of generator images; full span n^2 iff irreducible (over C).
// Tries a reduction modulo a large prime first; a full span there is a proof.
// Otherwise the span dimension is recomputed exactly.
BurnsideCertificate burnside_certificate(const FiniteModule& m);
bool burnside_irreducible(const FiniteModule& m);

// Smallest invariant subspace containing the vectors, as reduced echelon rows.
EchelonBasis<Cyc> invariant_span(const FiniteModule& m, const std::vector<std::vector<Cyc>>& vectors);

// Is span(vectors) invariant under every generator image?
bool submodule_test(const FiniteModule& m, const std::vector<std::vector<Cyc>>& vectors);

// The module structure on an invariant subspace, in the coordinates of its echelon rows.
FiniteModule restrict_to(const FiniteModule& m, const EchelonBasis<Cyc>& subspace);

// Characters of two modules agree on the listed names.
bool same_traces(const FiniteModule& a, const FiniteModule& b, const std::vector<std::string>& names);

}  // namespace twh
