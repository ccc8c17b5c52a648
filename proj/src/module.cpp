#include "twh/module.hpp"

#include <algorithm>

#include "twh/errors.hpp"
#include "twh/modp.hpp"

namespace twh {

void FiniteModule::add(std::string name, CMatrix m) {
    if (m.rows() != dim || m.cols() != dim)
        throw PreconditionError("image of " + name + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (has(name)) throw PreconditionError("duplicate generator " + name);
    names.push_back(std::move(name));
    images.push_back(std::move(m));
}

bool FiniteModule::has(std::string_view name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

const CMatrix& FiniteModule::image(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw PreconditionError("module has no generator " + std::string(name));
    return images[static_cast<std::size_t>(it - names.begin())];
}

std::uint32_t FiniteModule::conductor() const {
    std::uint64_t n = 1;
    for (const auto& m : images)
        for (const auto& x : m.data()) n = lcm_u64(n, x.conductor());
    return static_cast<std::uint32_t>(n);
}

namespace {

std::vector<Cyc> flatten(const CMatrix& m) { return m.data(); }

std::optional<std::size_t> modular_span(const std::vector<CMatrix>& gens, std::size_t n, std::uint32_t conductor) {
    PrimeField f(conductor);
    std::vector<std::vector<std::uint64_t>> reduced;
    for (const auto& g : gens) {
        std::vector<std::uint64_t> r;
        r.reserve(n * n);
        for (const auto& x : g.data()) {
            auto v = f.map(x);
            if (!v) return std::nullopt;
            r.push_back(*v);
        }
        reduced.push_back(std::move(r));
    }
    return span_dimension_mod_p(f, reduced, n);
}

}  // namespace

std::size_t algebra_span_dimension(const std::vector<CMatrix>& gens, std::size_t n) {
    EchelonBasis<Cyc> basis(n * n);
    std::vector<CMatrix> queue{CMatrix::identity(n)};
    basis.insert(flatten(queue[0]));
    for (std::size_t q = 0; q < queue.size() && basis.size() < n * n; ++q)
        for (const auto& g : gens) {
            CMatrix p = g * queue[q];
            if (basis.insert(flatten(p))) queue.push_back(std::move(p));
            if (basis.size() == n * n) break;
        }
    return basis.size();
}

BurnsideCertificate burnside_certificate(const FiniteModule& m) {
    BurnsideCertificate c;
    const std::size_t n = m.dim;
    if (n == 0) return c;
    if (n == 1) return {true, 1, false};
    if (auto d = modular_span(m.images, n, m.conductor()); d && *d == n * n) return {true, n * n, true};
    c.span_dimension = algebra_span_dimension(m.images, n);
    c.irreducible = c.span_dimension == n * n;
    return c;
}

bool burnside_irreducible(const FiniteModule& m) { return burnside_certificate(m).irreducible; }

EchelonBasis<Cyc> invariant_span(const FiniteModule& m, const std::vector<std::vector<Cyc>>& vectors) {
    EchelonBasis<Cyc> basis(m.dim);
    std::vector<std::vector<Cyc>> queue;
    for (const auto& v : vectors) {
        if (v.size() != m.dim) throw PreconditionError("vector length does not match the module dimension");
        if (basis.insert(v)) queue.push_back(v);
    }
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : m.images) {
            auto w = g.apply(queue[q]);
            if (basis.insert(w)) queue.push_back(std::move(w));
        }
    return basis;
}

bool submodule_test(const FiniteModule& m, const std::vector<std::vector<Cyc>>& vectors) {
    EchelonBasis<Cyc> span(m.dim);
    for (const auto& v : vectors) {
        if (v.size() != m.dim) throw PreconditionError("vector length does not match the module dimension");
        span.insert(v);
    }
    for (const auto& g : m.images)
        for (const auto& row : span.rows())
            if (!span.contains(g.apply(row))) return false;
    return true;
}

FiniteModule restrict_to(const FiniteModule& m, const EchelonBasis<Cyc>& subspace) {
    const std::size_t k = subspace.size();
    FiniteModule out(k);
    for (std::size_t g = 0; g < m.images.size(); ++g) {
        CMatrix img(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            auto w = m.images[g].apply(subspace.rows()[j]);
            if (!subspace.contains(w)) throw PreconditionError("subspace is not invariant under " + m.names[g]);
            auto c = subspace.coordinates(w);
            for (std::size_t i = 0; i < k; ++i) img(i, j) = c[i];
        }
        out.add(m.names[g], std::move(img));
    }
    return out;
}

bool same_traces(const FiniteModule& a, const FiniteModule& b, const std::vector<std::string>& names) {
    for (const auto& n : names)
        if (a.image(n).trace() != b.image(n).trace()) return false;
    return true;
}

}  // namespace twh
