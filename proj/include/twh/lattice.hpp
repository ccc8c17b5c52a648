#pragma once

#include <cstdint>
#include <vector>

#include "twh/finite_group.hpp"
#include "twh/rational.hpp"

namespace twh {

using ZMat = std::vector<std::vector<Int>>;

ZMat zmat_from(const IntMat& m);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_identity(std::size_t n);
Int zmat_det(const ZMat& m);

// U M V = S with U, V unimodular, S diagonal with s_1 | s_2 | ... and s_i >= 0.
struct SmithForm {
    ZMat U, S, V, V_inverse;
    std::vector<Int> diagonal;  // min(rows, cols) entries
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const ZMat& m);

using TorusPoint = std::vector<Rotation>;

// Fixed locus of an affine torus map: a union of cosets of one saturated subtorus.
struct FixedPointSet {
    bool empty = false;
    std::size_t ambient_rank = 0;
    // Integer vectors spanning the tangent lattice of every component.
    std::vector<std::vector<long>> subtorus_basis;
    std::vector<TorusPoint> component_reps;

    // Coordinates of the Smith form, used for membership tests.
    ZMat V_inverse;
    std::size_t smith_rank = 0;

    std::size_t dimension() const { return subtorus_basis.size(); }
    std::size_t component_count() const { return component_reps.size(); }
    // Index of the component containing q, or -1.
    long component_of(const TorusPoint& q) const;
};

FixedPointSet fixed_point_set(const AffineLatticeMap& phi);

struct ComponentAction {
    std::vector<std::size_t> permutation;  // component i -> permutation[i]
    std::vector<std::vector<long>> linear_part;  // action on subtorus_basis coordinates
};

// Action of z, commuting with phi, on the fixed locus F of phi.
ComponentAction component_action(const AffineLatticeMap& z, const FixedPointSet& F, const AffineLatticeMap& phi);

// Trace on degree-n cohomology: (#components fixed by the permutation) * tr Lambda^n(L).
long cohomology_trace(const ComponentAction& act, int n);

// Sum of principal n x n minors, i.e. the trace of the n-th exterior power.
Int exterior_power_trace(const std::vector<std::vector<long>>& m, int n);

struct Orbit {
    std::vector<TorusPoint> points;
    std::vector<std::uint32_t> stabilizer;
    // representative[i] is the smallest group index mapping the base point to points[i]
    std::vector<std::uint32_t> transversal;
};

Orbit orbit_of_point(const ActionGroup& g, const TorusPoint& x);

}  // namespace twh
