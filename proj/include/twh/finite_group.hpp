#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twh/cyclotomic.hpp"
#include "twh/errors.hpp"
#include "twh/rational.hpp"

namespace twh {

using IntMat = std::vector<std::vector<long>>;

IntMat int_identity(std::size_t d);
IntMat int_mul(const IntMat& a, const IntMat& b);
long int_det(const IntMat& a);
// Inverse of a unimodular integer matrix; throws ValidationError otherwise.
IntMat int_inverse(const IntMat& a);
IntMat int_transpose(const IntMat& a);

// x -> A x + b on (R/Z)^d. The optional tag is a permutation of a finite set that
// composes alongside; it distinguishes group elements acting identically on the torus.
struct AffineLatticeMap {
    IntMat matrix;
    std::vector<Rotation> translation;
    std::vector<int> tag;

    static AffineLatticeMap identity(std::size_t d, std::size_t tag_size = 0);
    std::size_t rank() const { return translation.size(); }

    // (this o o)(x) = this(o(x))
    AffineLatticeMap compose(const AffineLatticeMap& o) const;
    AffineLatticeMap inverse() const;
    std::vector<Rotation> apply(const std::vector<Rotation>& x) const;
    bool is_identity() const;
    // Serialized form; used for ordering and lookup.
    std::string key() const;
    bool operator==(const AffineLatticeMap& o) const {
        return matrix == o.matrix && translation == o.translation && tag == o.tag;
    }
};

// Checks shape, unimodularity and tag validity; throws ValidationError.
void validate_map(const AffineLatticeMap& m, std::size_t d);

// Abstract finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::size_t n, std::vector<std::uint32_t> table);

    std::size_t order() const { return n_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    // h g h^-1
    std::uint32_t conj(std::uint32_t g, std::uint32_t h) const { return mul(mul(h, g), inv_[h]); }
    std::uint32_t element_order(std::uint32_t g) const;
    std::uint32_t exponent() const;
    bool commute(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;
    std::vector<std::uint32_t> centralizer(std::uint32_t g) const;
    // Closure of the given elements, sorted.
    std::vector<std::uint32_t> generated_subgroup(const std::vector<std::uint32_t>& gens) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_;
};

// A subgroup realised as its own FiniteGroup; sub element i is parent element to_parent[i].
struct Subgroup {
    FiniteGroup group;
    std::vector<std::uint32_t> to_parent;
    std::unordered_map<std::uint32_t, std::uint32_t> from_parent;
};

// members must be closed under multiplication and contain the identity.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::uint32_t> members);

// Finite group of affine maps of a rank-d torus.
struct ActionGroup {
    std::size_t rank = 0;
    std::vector<AffineLatticeMap> generators;  // as given; they determine the element numbering
    std::vector<AffineLatticeMap> elements;
    FiniteGroup group;
    std::unordered_map<std::string, std::uint32_t> index;

    std::size_t order() const { return elements.size(); }
    std::uint32_t index_of(const AffineLatticeMap& m) const;
};

// Breadth-first closure from the identity, each layer sorted by key. Throws ValidationError when
// the order exceeds max_order.
ActionGroup generate_group(std::size_t rank, const std::vector<AffineLatticeMap>& generators,
                           std::size_t max_order = 10000);

// Generic closure used for groups of other kinds of elements (e.g. rational matrices).
template <class T>
struct Closure {
    std::vector<T> elements;
    FiniteGroup group;
};

template <class T>
Closure<T> generate_closure(const T& identity, const std::vector<T>& gens,
                            const std::function<T(const T&, const T&)>& compose,
                            const std::function<std::string(const T&)>& key, std::size_t max_order) {
    Closure<T> out;
    std::unordered_map<std::string, std::uint32_t> index;
    out.elements.push_back(identity);
    index.emplace(key(identity), 0);
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::pair<std::string, T>> layer;
        std::unordered_set<std::string> in_layer;
        for (auto f : frontier)
            for (const auto& g : gens) {
                T x = compose(out.elements[f], g);
                std::string k = key(x);
                if (index.count(k) || in_layer.count(k)) continue;
                in_layer.insert(k);
                layer.emplace_back(std::move(k), std::move(x));
            }
        std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        frontier.clear();
        for (auto& [k, x] : layer) {
            if (out.elements.size() >= max_order)
                throw ValidationError("group order exceeds the cap of " + std::to_string(max_order) +
                                      " (generators do not generate a small finite group)");
            index.emplace(k, static_cast<std::uint32_t>(out.elements.size()));
            frontier.push_back(static_cast<std::uint32_t>(out.elements.size()));
            out.elements.push_back(std::move(x));
        }
    }
    const std::size_t n = out.elements.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(key(compose(out.elements[a], out.elements[b])));
            if (it == index.end()) throw InvariantViolation("closure is not closed under composition");
            table[a * n + b] = it->second;
        }
    out.group = FiniteGroup(n, std::move(table));
    return out;
}

struct ConjugacyClass {
    std::uint32_t representative;
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> centralizer;
};

// Classes ordered by representative, the smallest index in each class.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

// A normalized 2-cocycle with values in Q/Z (written additively).
class Cocycle {
public:
    Cocycle() = default;
    // Trivial cocycle.
    explicit Cocycle(std::shared_ptr<const FiniteGroup> g);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const Rotation& operator()(std::uint32_t a, std::uint32_t b) const { return table_[a * group_->order() + b]; }
    const std::vector<Rotation>& table() const { return table_; }
    bool is_trivial() const;
    // Least common multiple of the orders of all values.
    std::uint64_t value_order() const;

    Cocycle operator+(const Cocycle& o) const;
    Cocycle operator-() const;
    Cocycle restrict(const Subgroup& s) const;

private:
    friend Cocycle validate_cocycle(std::shared_ptr<const FiniteGroup>, std::vector<Rotation>, bool);
    Cocycle(std::shared_ptr<const FiniteGroup> g, std::vector<Rotation> t) : group_(std::move(g)), table_(std::move(t)) {}

    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Rotation> table_;
};

// Verifies the cocycle identity on all triples. When the table is not normalized
// (value at (e,e) nonzero) it is rescaled by the forced coboundary, or rejected when strict.
Cocycle validate_cocycle(std::shared_ptr<const FiniteGroup> g, std::vector<Rotation> table, bool strict = false);

// b(f)(g,h) = f(g) + f(h) - f(gh); f(e) must be 0.
Cocycle coboundary(std::shared_ptr<const FiniteGroup> g, const std::vector<Rotation>& f);

// Cocycle (a, a') -> a^T B a' / m on an elementary abelian group, with elements identified with
// exponent vectors through the products gens[0]^a0 ... gens[r-1]^a(r-1).
Cocycle bilinear_cocycle(std::shared_ptr<const FiniteGroup> g, const std::vector<std::uint32_t>& gens,
                         const std::vector<std::vector<long>>& b, long m);

// gamma -> the scalar in T_gamma T_g T_gamma^-1 = value * T_{gamma g gamma^-1}, for every gamma.
std::vector<Rotation> conjugation_scalars(const Cocycle& c, std::uint32_t g);

// The character of the centralizer of g; key = centralizer element. Throws InvariantViolation
// if the restriction is not a homomorphism.
std::map<std::uint32_t, Rotation> natural_character(const Cocycle& c, std::uint32_t g);

std::vector<ConjugacyClass> regular_classes(const Cocycle& c);

// One trace per regular class C with representative g: value 1 at T_g and, on
// T_{hgh^-1}, the root of unity forced by traciality (1 when the table is class-normalized).
struct TraceFunctional {
    std::uint32_t representative;
    std::vector<std::uint32_t> support;
    std::vector<Rotation> weights;
};
std::vector<TraceFunctional> trace_basis(const Cocycle& c);

// Element sum_g a_g T_g of the twisted group algebra.
using TwistedElement = std::vector<Cyc>;

TwistedElement twisted_basis(const Cocycle& c, std::uint32_t g, const Cyc& coeff = Cyc(1));
TwistedElement twisted_multiply(const Cocycle& c, const TwistedElement& a, const TwistedElement& b);
// Value of a trace functional.
Cyc apply_trace(const TraceFunctional& f, const TwistedElement& a);

}  // namespace twh
