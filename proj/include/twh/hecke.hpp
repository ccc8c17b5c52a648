#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twh/finite_group.hpp"
#include "twh/gauss.hpp"
#include "twh/matrix.hpp"
#include "twh/module.hpp"
#include "twh/poly.hpp"

namespace twh {

// Input data of a twisted graded Hecke algebra H(t, W Gamma, k, c).
// simple_roots[i] is a linear form on t = C^d in the coordinates x_1..x_d; coroots[i] is a vector of t.
struct RootDatum {
    std::string name;
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> simple_roots;
    std::vector<std::vector<Rat>> coroots;
    std::vector<Rat> k;
    // Linear maps of t permuting the simple roots and preserving k; the group they generate is Gamma.
    std::vector<QMatrix> gamma_generators;
    // Cocycle on Gamma as a table indexed by the element numbering of the generated group; empty is trivial.
    std::vector<Rotation> gamma_cocycle;
};

struct HeckeOptions {
    // One polynomial variable per class of simple roots under W Gamma conjugacy instead of the
    // numeric k.
    bool symbolic_k = false;
    // Keep r as a polynomial variable instead of r = 1.
    bool formal_r = false;
    std::size_t max_group_order = 10000;
};

using HPoly = Poly<Cyc>;
using HFraction = PolyFraction<Cyc>;

// Basis element N_w T_gamma, as (index in W, index in Gamma).
using WGamma = std::pair<std::uint32_t, std::uint32_t>;

template <class C>
struct HeckeTerms {
    std::map<WGamma, C> terms;  // sum f_{w,gamma} N_w T_gamma, coefficients on the left

    bool operator==(const HeckeTerms& o) const;
    bool operator!=(const HeckeTerms& o) const { return !(*this == o); }
};

using HeckeElement = HeckeTerms<HPoly>;
using LocalizedHeckeElement = HeckeTerms<HFraction>;

// The algebra built from a RootDatum: W, Gamma, reduced words and the coefficient ring
// C[x_1..x_d, parameters, r].
class HeckeAlgebra {
public:
    HeckeAlgebra(RootDatum datum, HeckeOptions options = {});

    const RootDatum& datum() const { return datum_; }
    const HeckeOptions& options() const { return options_; }
    std::size_t rank() const { return datum_.rank; }
    std::size_t simple_count() const { return datum_.simple_roots.size(); }
    std::size_t nvars() const { return nvars_; }
    std::vector<std::string> variable_names() const;
    bool is_numeric() const { return !options_.symbolic_k && !options_.formal_r; }

    const Closure<QMatrix>& weyl() const { return weyl_; }
    const Closure<QMatrix>& gamma() const { return gamma_; }
    const Cocycle& cocycle() const { return cocycle_; }
    std::size_t order() const { return weyl_.elements.size() * gamma_.elements.size(); }
    // W index of the reflection in the i-th simple root
    std::uint32_t simple_reflection(std::size_t i) const { return simple_[i]; }
    // Reduced word (simple root indices) of w, shortlex least in the simple root order.
    const std::vector<std::size_t>& reduced_word(std::uint32_t w) const { return words_[w]; }
    std::size_t length(std::uint32_t w) const { return words_[w].size(); }
    // gamma w gamma^-1
    std::uint32_t conj(std::uint32_t gamma, std::uint32_t w) const { return conj_[gamma * weyl_.elements.size() + w]; }
    // index of the simple root gamma(alpha_i)
    std::size_t permute_simple(std::uint32_t gamma, std::size_t i) const;

    // Parameter k and the product k r for a simple root, as polynomials.
    HPoly k_poly(std::size_t i) const { return k_[i]; }
    HPoly kr_poly(std::size_t i) const { return kr_[i]; }
    HPoly coordinate(std::size_t i) const { return HPoly::variable(nvars_, i); }
    HPoly constant(const Cyc& c) const { return HPoly::constant(nvars_, c); }
    HPoly alpha(std::size_t i) const { return alpha_[i]; }

    // f -> f o m^-1 for a linear map m of t; parameters are fixed.
    HPoly act(const QMatrix& m, const HPoly& f) const;
    HFraction act(const QMatrix& m, const HFraction& f) const;
    HPoly act_weyl(std::uint32_t w, const HPoly& f) const { return act(weyl_.elements[w], f); }
    HPoly act_gamma(std::uint32_t g, const HPoly& f) const { return act(gamma_.elements[g], f); }

    // (f - s_i f) / alpha_i
    HPoly divided_difference(std::size_t i, const HPoly& f) const;
    HFraction divided_difference(std::size_t i, const HFraction& f) const;

    // Number of W Gamma classes of simple roots, i.e. of parameter variables in symbolic mode.
    std::size_t parameter_count() const { return parameter_count_; }

private:
    RootDatum datum_;
    HeckeOptions options_;
    std::size_t nvars_ = 0;
    std::size_t parameter_count_ = 0;
    Closure<QMatrix> weyl_;
    Closure<QMatrix> gamma_;
    Cocycle cocycle_;
    std::vector<QMatrix> weyl_inverse_, gamma_inverse_;
    std::vector<std::uint32_t> simple_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<std::uint32_t> conj_;
    std::vector<std::size_t> gamma_perm_;  // gamma * simple_count + i
    std::vector<HPoly> k_, kr_, alpha_;
};

HeckeElement hecke_polynomial(const HeckeAlgebra& h, const HPoly& f);
HeckeElement hecke_basis(const HeckeAlgebra& h, std::uint32_t w, std::uint32_t gamma, const HPoly& f);
// N_{s_i}
HeckeElement hecke_reflection(const HeckeAlgebra& h, std::size_t i);

template <class C>
HeckeTerms<C> operator+(const HeckeTerms<C>& a, const HeckeTerms<C>& b);

// Normal form of a b, rewriting N_s f = s(f) N_s + k r (f - s(f)) / alpha and T_gamma f = gamma(f) T_gamma.
HeckeElement hecke_multiply(const HeckeAlgebra& h, const HeckeElement& a, const HeckeElement& b);
LocalizedHeckeElement hecke_multiply(const HeckeAlgebra& h, const LocalizedHeckeElement& a,
                                     const LocalizedHeckeElement& b);

std::string hecke_str(const HeckeAlgebra& h, const HeckeElement& a);

// Filtration degree: x_i and r in degree 2, parameters and group elements in degree 0.
int hecke_degree(const HeckeAlgebra& h, const HeckeElement& a);

// f is W Gamma invariant and commutes with every generator. Throws InvariantViolation when the two
// tests disagree although Gamma acts faithfully.
bool center_check(const HeckeAlgebra& h, const HPoly& f);

using Weight = std::vector<GaussRat>;

// I(lambda) on the basis N_w T_gamma (x) 1, index w * |Gamma| + gamma. Images "x1".."xd",
// "N1".."Nr" for the simple reflections and "T<gamma>" for every element of Gamma.
FiniteModule induced_module_I(const HeckeAlgebra& h, const Weight& lambda);

// W Gamma lambda, sorted and without repetition.
std::vector<Weight> weight_orbit(const HeckeAlgebra& h, const Weight& lambda);

struct WeightReport {
    std::vector<Weight> weights;
    std::vector<std::size_t> multiplicities;
};

// Generalized O(t)-weight spaces among the candidates; throws CoverageError when they do not
// exhaust the module.
WeightReport weights(const HeckeAlgebra& h, const FiniteModule& m, const std::vector<Weight>& candidates);

// Re(lambda) = sum_i c_i coroot_i, or nothing when Re(lambda) is outside the span of the coroots.
std::optional<std::vector<Rat>> coroot_coordinates(const HeckeAlgebra& h, const Weight& lambda);
// Every weight has coordinates c_i <= 0.
bool is_tempered(const HeckeAlgebra& h, const WeightReport& w);
// Every weight has coordinates c_i < 0.
bool is_discrete_series_weights(const HeckeAlgebra& h, const WeightReport& w);

// All defining relations: x_i commute, N_s^2 = 1 and the braid relations, the cross relation
// x N_s - N_s s(x) = k x(coroot), the twisted relations of Gamma and the Gamma conjugation rules.
bool hecke_relation_check(const HeckeAlgebra& h, const FiniteModule& m);

// Summary of I(lambda). The symmetrizer lines are spanned by sum_w N_w (trivial) and
// sum_w (-1)^l(w) N_w (sign) with T_gamma = 1; they are only tested when Gamma is trivial.
struct WeightClassification {
    Weight lambda;
    std::size_t dimension = 0;
    WeightReport weights;
    bool tempered = false;
    bool discrete_series = false;
    bool irreducible = false;
    bool trivial_line_invariant = false;
    bool sign_line_invariant = false;
};
WeightClassification classify_weight(const HeckeAlgebra& h, const Weight& lambda);

// tau_i = (1 + N_{s_i}) alpha_i / (alpha_i + k_i r) - 1 in the localized algebra.
LocalizedHeckeElement tau_element(const HeckeAlgebra& h, std::size_t i);
bool tau_square_check(const HeckeAlgebra& h, std::size_t i);

// One-dimensional modules with N_s -> +-1 (Gamma must be trivial). The x_i values solve
// alpha_i(lambda) = eps_i k_i; only characters with a unique solution are returned.
std::vector<FiniteModule> one_dimensional_modules(const HeckeAlgebra& h);

// Rank-one datum with alpha = x and coroot 2.
RootDatum rank_one_root_datum(const Rat& k);
// Type A2 on its coroot coordinates, equal parameters.
RootDatum a2_root_datum(const Rat& k);
// Type B2 on C^2 with roots x1 - x2 (parameter k_long) and x2 (parameter k_short).
RootDatum b2_root_datum(const Rat& k_long, const Rat& k_short);

}  // namespace twh
