#pragma once

#include <memory>
#include <string>

#include "twh/finite_group.hpp"
#include "twh/lattice.hpp"

namespace twh {

// A torus of rank d, a finite group of affine maps on it, and a 2-cocycle on that group.
struct BernsteinDatum {
    std::string name;
    ActionGroup group;
    Cocycle cocycle;
    // "algebraic" for (C^x)^d, "smooth-compact" for (S^1)^d; only report labels differ.
    std::string variant = "algebraic";

    std::size_t rank() const { return group.rank; }
    std::size_t order() const { return group.order(); }
    const FiniteGroup& abstract_group() const { return cocycle.group(); }
};

// Datum with the trivial cocycle.
BernsteinDatum make_datum(std::size_t rank, const std::vector<AffineLatticeMap>& generators,
                          std::size_t max_order = 10000);

// Same group, cocycle replaced (the group of c must be the datum's abstract group).
BernsteinDatum with_cocycle(BernsteinDatum d, Cocycle c);

// Stabilizer of x with the restricted cocycle.
struct StabilizerData {
    Orbit orbit;
    Subgroup subgroup;
    Cocycle cocycle;
};
StabilizerData stabilizer_data(const BernsteinDatum& d, const TorusPoint& x);

}  // namespace twh
