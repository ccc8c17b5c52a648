#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twh/cyclotomic.hpp"
#include "twh/datum.hpp"
#include "twh/hecke.hpp"
#include "twh/matrix.hpp"

namespace twh {

// Contribution of one conjugacy class gamma to (+)_gamma (Omega^n(X^gamma) (x) c^gamma)^{Z(gamma)}.
struct ClassHomology {
    std::uint32_t representative = 0;
    std::size_t class_size = 0;
    std::size_t centralizer_order = 0;
    bool empty = false;            // X^gamma is empty
    std::size_t fixed_dimension = 0;
    std::size_t component_count = 0;
    std::size_t component_orbits = 0;  // orbits of Z(gamma) on the components
    bool twist_trivial = true;          // c^gamma is trivial on Z(gamma)
    // Indexed by degree 0..d.
    std::vector<long> form_rank;              // rank of Omega^n(X^gamma) over O(X^gamma)
    std::vector<long> generic_rank;           // rank of the invariants over the invariant functions
    std::vector<long> invariant_cohomology;   // dim (H^n(X^gamma) (x) c^gamma)^{Z(gamma)}
};

struct HomologySummary {
    std::string variant;  // "algebraic", "smooth-compact" or "affine" (graded Hecke)
    std::size_t rank = 0;
    std::vector<ClassHomology> classes;
    std::vector<long> generic_rank;          // totals per degree
    std::vector<long> invariant_cohomology;  // totals per degree
};

// Per-class data of HH_*(O(X) x| C[G, c]); the class of the identity comes first.
HomologySummary hh_summary(const BernsteinDatum& d);

struct ClassRanks {
    std::uint32_t representative = 0;
    long even = 0;
    long odd = 0;
};

struct RanksReport {
    long even = 0;  // HP_0, or rank K_0 (x) C
    long odd = 0;   // HP_1, or rank K_1 (x) C
    std::vector<ClassRanks> breakdown;
};

// dim in degree n: sum over classes of (1/|Z|) sum_{z in Z} c^gamma(z) tr(z | H^n(X^gamma)), certified to be
// a nonnegative integer.
RanksReport hp_dimensions(const BernsteinDatum& d);
// The same numbers read as ranks of K_0 (x) C and K_1 (x) C of the compact crossed product.
RanksReport ktheory_ranks(const BernsteinDatum& d);

// Number of regular classes of the stabilizer of x with the restricted cocycle. With cross_check
// set it must equal the label count of the extended quotient fiber (InvariantViolation otherwise).
std::size_t hh0_specialization(const BernsteinDatum& d, const TorusPoint& x, bool cross_check = true);

// Rows: regular classes of G_x (parent representatives); columns: fiber labels. Entry: trace of
// 1_x T_g on pi(x, rho).
struct TracePairing {
    std::vector<std::uint32_t> classes;
    CMatrix matrix;
    Cyc determinant;
};
// Throws InvariantViolation when the matrix is singular.
TracePairing trace_pairing_matrix(const BernsteinDatum& d, const TorusPoint& x);

// HH of the graded Hecke algebra through its k = 0 member: the linear action of W Gamma on t
// (one component per class, of dimension dim t^w). Valid for every real k.
HomologySummary hecke_hh_dimensions(const HeckeAlgebra& h);

}  // namespace twh
