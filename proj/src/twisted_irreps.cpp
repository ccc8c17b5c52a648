#include <algorithm>
#include <set>

#include "twh/errors.hpp"
#include "twh/oracle.hpp"

namespace twh {

namespace {

// Every subgroup, largest first, ties by member list.
std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<std::uint32_t>> seen{{0}};
    std::vector<std::vector<std::uint32_t>> out{{0}};
    for (std::size_t q = 0; q < out.size() && out.size() < 4096; ++q) {
        const auto S = out[q];
        for (std::uint32_t g = 0; g < G.order(); ++g) {
            if (std::binary_search(S.begin(), S.end(), g)) continue;
            auto gens = S;
            gens.push_back(g);
            auto T = G.generated_subgroup(gens);
            if (seen.insert(T).second) out.push_back(std::move(T));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    return out;
}

// One-dimensional modules of C[H, c]: maps l with l(a) + l(b) = c(a,b) + l(ab).
std::vector<std::vector<Rotation>> linear_characters(const Cocycle& c, const std::vector<std::uint32_t>& H) {
    const FiniteGroup& G = c.group();
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> span{0};
    for (auto h : H)
        if (!std::binary_search(span.begin(), span.end(), h)) {
            gens.push_back(h);
            span = G.generated_subgroup(gens);
        }
    // T_h^ord = sigma T_e, so l(h) is one of the ord-th roots of sigma
    std::vector<std::vector<Rotation>> choices;
    for (auto h : gens) {
        const std::uint32_t ord = G.element_order(h);
        Rotation sigma;
        std::uint32_t p = h;
        for (std::uint32_t k = 1; k < ord; ++k) {
            sigma += c(p, h);
            p = G.mul(p, h);
        }
        std::vector<Rotation> roots;
        for (std::uint32_t j = 0; j < ord; ++j) roots.emplace_back((sigma.value() + j) / ord);
        choices.push_back(std::move(roots));
    }
    std::vector<std::vector<Rotation>> out;
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<std::optional<Rotation>> l(G.order());
        l[0] = Rotation();
        std::vector<std::uint32_t> queue{0};
        bool ok = true;
        for (std::size_t q = 0; q < queue.size() && ok; ++q)
            for (std::size_t i = 0; i < gens.size() && ok; ++i) {
                const std::uint32_t a = queue[q], b = G.mul(a, gens[i]);
                Rotation v = *l[a] + choices[i][pick[i]] - c(a, gens[i]);
                if (!l[b]) {
                    l[b] = v;
                    queue.push_back(b);
                } else if (*l[b] != v) {
                    ok = false;
                }
            }
        if (ok) {
            std::vector<Rotation> values;
            for (auto h : H) values.push_back(*l[h]);
            out.push_back(std::move(values));
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

struct Workspace {
    const Cocycle& c;
    const FiniteGroup& G;
    std::vector<Cyc> roots;  // e(c(g,h)) by g * n + h

    explicit Workspace(const Cocycle& cc) : c(cc), G(cc.group()) {
        const std::size_t n = G.order();
        roots.reserve(n * n);
        for (std::uint32_t g = 0; g < n; ++g)
            for (std::uint32_t h = 0; h < n; ++h) roots.push_back(Cyc::root_of_unity(c(g, h)));
    }

    // T_g v
    TwistedElement left(std::uint32_t g, const TwistedElement& v) const {
        const std::size_t n = G.order();
        TwistedElement out(n);
        for (std::uint32_t h = 0; h < n; ++h)
            if (!v[h].is_zero()) out[G.mul(g, h)] += roots[g * n + h] * v[h];
        return out;
    }

    TwistedElement mul(const TwistedElement& a, const TwistedElement& b) const {
        const std::size_t n = G.order();
        TwistedElement out(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            if (a[x].is_zero()) continue;
            for (std::uint32_t y = 0; y < n; ++y)
                if (!b[y].is_zero()) out[G.mul(x, y)] += a[x] * b[y] * roots[x * n + y];
        }
        return out;
    }
};

bool is_zero_element(const TwistedElement& a) {
    return std::all_of(a.begin(), a.end(), [](const Cyc& x) { return x.is_zero(); });
}

}  // namespace

std::vector<TwistedIrrep> decompose_twisted_group_algebra(const Cocycle& c) {
    const Workspace w(c);
    const FiniteGroup& G = c.group();
    const std::size_t n = G.order();
    std::vector<TwistedIrrep> found;
    std::size_t found_squares = 0;
    TwistedElement E(n);  // sum of central idempotents of the modules found so far
    TwistedElement one = twisted_basis(c, 0);

    // e_l = (1/|H|) sum_h l(h)^-1 T_h for each subgroup H and linear character l of C[H, c]
    std::vector<TwistedElement> candidates;
    for (const auto& H : all_subgroups(G))
        for (const auto& l : linear_characters(c, H)) {
            TwistedElement e_l(n);
            for (std::size_t i = 0; i < H.size(); ++i)
                e_l[H[i]] = Cyc::root_of_unity(-l[i]) * Cyc(Rat(1, static_cast<long>(H.size())));
            candidates.push_back(std::move(e_l));
        }
    std::vector<bool> spent(candidates.size(), false);
    bool progress = true;
    while (progress && found_squares < n) {
        progress = false;
        for (std::size_t ci = 0; ci < candidates.size() && found_squares < n; ++ci) {
            if (spent[ci]) continue;
            const TwistedElement& e_l = candidates[ci];
            TwistedElement rest = one;
            for (std::size_t g = 0; g < n; ++g) rest[g] -= E[g];
            const TwistedElement u = w.mul(rest, e_l);
            if (is_zero_element(u)) {
                spent[ci] = true;
                continue;
            }
            // A u is a sum of the missing modules, each with multiplicity dim(e_l rho); it is
            // irreducible when e_l A u is a line
            EchelonBasis<Cyc> weight_space(n);
            for (std::uint32_t g = 0; g < n && weight_space.size() < 2; ++g) weight_space.insert(w.mul(e_l, w.left(g, u)));
            if (weight_space.size() != 1) continue;
            spent[ci] = true;
            progress = true;

            EchelonBasis<Cyc> span(n);
            for (std::uint32_t g = 0; g < n; ++g) span.insert(w.left(g, u));
            const std::size_t d = span.size();
            FiniteModule m(d);
            std::vector<Cyc> chi(n);
            for (std::uint32_t g = 0; g < n; ++g) {
                CMatrix img(d, d);
                for (std::size_t j = 0; j < d; ++j) {
                    auto coords = span.coordinates(w.left(g, span.rows()[j]));
                    for (std::size_t i = 0; i < d; ++i) img(i, j) = coords[i];
                }
                chi[g] = img.trace();
                m.add("T" + std::to_string(g), std::move(img));
            }
            // e_rho = (d / n) sum_g chi(T_g^-1) T_g with T_g^-1 = e(-c(g, g^-1)) T_{g^-1}
            TwistedElement e_rho(n);
            const Cyc scale(Rat(static_cast<long>(d)) / Rat(static_cast<long>(n)));
            for (std::uint32_t g = 0; g < n; ++g)
                e_rho[g] = scale * Cyc::root_of_unity(-c(g, G.inv(g))) * chi[G.inv(g)];
            if (w.mul(e_rho, e_rho) != e_rho) throw InvariantViolation("central character element is not idempotent");
            for (std::size_t g = 0; g < n; ++g) E[g] += e_rho[g];
            found_squares += d * d;
            found.push_back({std::move(m), std::move(chi)});
        }
    }
    if (found_squares != n)
        throw ComputationError("twisted group algebra decomposition incomplete: squared dimensions sum to " +
                               std::to_string(found_squares) + " of " + std::to_string(n));
    const std::size_t regular = regular_classes(c).size();
    if (found.size() != regular)
        throw InvariantViolation("decomposition found " + std::to_string(found.size()) + " irreducibles but there are " +
                                 std::to_string(regular) + " regular classes");
    return found;
}

}  // namespace twh
