#include "twh/homology.hpp"

#include <numeric>

#include "twh/crossed_product.hpp"
#include "twh/errors.hpp"
#include "twh/lattice.hpp"
#include "twh/oracle.hpp"

namespace twh {

namespace {

long binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<long>(n - k + i) / static_cast<long>(i);
    return out;
}

long certified_count(const Cyc& sum, std::size_t order, const std::string& what) {
    const Cyc avg = sum / Cyc(Rat(static_cast<long>(order)));
    if (!avg.is_rational() || avg.rational().get_den() != 1 || avg.rational() < 0)
        throw InvariantViolation(what + " is " + avg.str() + ", not a nonnegative integer");
    return avg.rational().get_num().get_si();
}

bool is_identity(const std::vector<std::vector<long>>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

void add_totals(HomologySummary& s) {
    s.generic_rank.assign(s.rank + 1, 0);
    s.invariant_cohomology.assign(s.rank + 1, 0);
    for (const auto& c : s.classes)
        for (std::size_t n = 0; n <= s.rank; ++n) {
            s.generic_rank[n] += c.generic_rank[n];
            s.invariant_cohomology[n] += c.invariant_cohomology[n];
        }
}

RanksReport ranks_from(const HomologySummary& s) {
    RanksReport r;
    for (const auto& c : s.classes) {
        ClassRanks cr{c.representative, 0, 0};
        for (std::size_t n = 0; n < c.invariant_cohomology.size(); ++n) (n % 2 == 0 ? cr.even : cr.odd) += c.invariant_cohomology[n];
        r.even += cr.even;
        r.odd += cr.odd;
        r.breakdown.push_back(cr);
    }
    return r;
}

}  // namespace

HomologySummary hh_summary(const BernsteinDatum& d) {
    const FiniteGroup& G = d.abstract_group();
    const std::size_t rank = d.rank();
    HomologySummary s;
    s.variant = d.variant;
    s.rank = rank;
    for (const auto& cls : conjugacy_classes(G)) {
        const std::uint32_t g = cls.representative;
        const AffineLatticeMap& phi = d.group.elements[g];
        ClassHomology ch;
        ch.representative = g;
        ch.class_size = cls.members.size();
        ch.centralizer_order = cls.centralizer.size();
        ch.form_rank.assign(rank + 1, 0);
        ch.generic_rank.assign(rank + 1, 0);
        ch.invariant_cohomology.assign(rank + 1, 0);
        const auto twist = natural_character(d.cocycle, g);
        for (const auto& [z, v] : twist)
            if (v != Rotation()) ch.twist_trivial = false;
        const FixedPointSet F = fixed_point_set(phi);
        if (F.empty || F.component_count() == 0) {
            ch.empty = true;
            s.classes.push_back(std::move(ch));
            continue;
        }
        ch.fixed_dimension = F.dimension();
        ch.component_count = F.component_count();
        const std::size_t r = F.dimension();
        for (std::size_t n = 0; n <= r; ++n) ch.form_rank[n] = binomial(r, n) * static_cast<long>(ch.component_count);

        std::vector<ComponentAction> actions;
        for (auto z : cls.centralizer) actions.push_back(component_action(d.group.elements[z], F, phi));

        // dimension of the twisted invariants in cohomology
        for (std::size_t n = 0; n <= r; ++n) {
            Cyc sum(0);
            for (std::size_t i = 0; i < cls.centralizer.size(); ++i) {
                const long tr = cohomology_trace(actions[i], static_cast<int>(n));
                if (tr != 0) sum += Cyc::root_of_unity(twist.at(cls.centralizer[i])) * Cyc(tr);
            }
            ch.invariant_cohomology[n] =
                certified_count(sum, cls.centralizer.size(), "twisted invariant count of class " + std::to_string(g));
        }

        // generic ranks: one term per orbit of components, from the subgroup acting trivially on it
        std::vector<bool> seen(ch.component_count, false);
        for (std::size_t c = 0; c < ch.component_count; ++c) {
            if (seen[c]) continue;
            ++ch.component_orbits;
            for (const auto& a : actions) seen[a.permutation[c]] = true;
            bool twist_trivial_on_kernel = true;
            for (std::size_t i = 0; i < cls.centralizer.size(); ++i) {
                const auto& a = actions[i];
                const AffineLatticeMap& zmap = d.group.elements[cls.centralizer[i]];
                const bool trivial_on_component = a.permutation[c] == c && is_identity(a.linear_part) &&
                                                  zmap.apply(F.component_reps[c]) == F.component_reps[c];
                if (trivial_on_component && twist.at(cls.centralizer[i]) != Rotation()) twist_trivial_on_kernel = false;
            }
            if (twist_trivial_on_kernel)
                for (std::size_t n = 0; n <= r; ++n) ch.generic_rank[n] += binomial(r, n);
        }
        s.classes.push_back(std::move(ch));
    }
    add_totals(s);
    return s;
}

RanksReport hp_dimensions(const BernsteinDatum& d) { return ranks_from(hh_summary(d)); }

RanksReport ktheory_ranks(const BernsteinDatum& d) { return ranks_from(hh_summary(d)); }

std::size_t hh0_specialization(const BernsteinDatum& d, const TorusPoint& x, bool cross_check) {
    const auto st = stabilizer_data(d, x);
    const std::size_t count = regular_classes(st.cocycle).size();
    if (cross_check) {
        const std::size_t labels = extended_quotient_fiber(d, x).labels.size();
        if (labels != count)
            throw InvariantViolation("HH_0 specialization " + std::to_string(count) + " differs from the fiber count " +
                                     std::to_string(labels));
    }
    return count;
}

TracePairing trace_pairing_matrix(const BernsteinDatum& d, const TorusPoint& x) {
    const auto st = stabilizer_data(d, x);
    const auto fiber = extended_quotient_fiber(d, x);
    TracePairing out;
    for (const auto& cls : regular_classes(st.cocycle)) out.classes.push_back(st.subgroup.to_parent[cls.representative]);
    const std::size_t rows = out.classes.size(), cols = fiber.labels.size();
    out.matrix = CMatrix(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        // x is the first orbit point, so 1_x is the idempotent "1_y0"
        const FiniteModule q = quotient_images(d, x, fiber.labels[j].module);
        for (std::size_t i = 0; i < rows; ++i)
            out.matrix(i, j) = q.image("1_y0*T" + std::to_string(out.classes[i])).trace();
    }
    if (rows != cols) throw InvariantViolation("trace pairing matrix is not square");
    out.determinant = out.matrix.det();
    if (out.determinant.is_zero()) throw InvariantViolation("trace pairing is degenerate");
    return out;
}

HomologySummary hecke_hh_dimensions(const HeckeAlgebra& h) {
    const std::size_t nw = h.weyl().elements.size(), ng = h.gamma().elements.size(), n = nw * ng;
    const std::size_t rank = h.rank();
    const FiniteGroup& W = h.weyl().group;
    const FiniteGroup& Gm = h.gamma().group;
    // W Gamma as pairs (w, gamma) with (w, g)(w', g') = (w g w' g^-1, g g'), index w * |Gamma| + g
    std::vector<std::uint32_t> table(n * n);
    std::vector<QMatrix> mats(n);
    for (std::uint32_t w = 0; w < nw; ++w)
        for (std::uint32_t g = 0; g < ng; ++g) {
            mats[w * ng + g] = h.weyl().elements[w] * h.gamma().elements[g];
            for (std::uint32_t w2 = 0; w2 < nw; ++w2)
                for (std::uint32_t g2 = 0; g2 < ng; ++g2)
                    table[(w * ng + g) * n + w2 * ng + g2] = W.mul(w, h.conj(g, w2)) * ng + Gm.mul(g, g2);
        }
    auto group = std::make_shared<const FiniteGroup>(n, std::move(table));
    std::vector<Rotation> pulled(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) pulled[a * n + b] = h.cocycle()(a % ng, b % ng);
    const Cocycle c = validate_cocycle(group, std::move(pulled), true);

    HomologySummary s;
    s.variant = "affine";
    s.rank = rank;
    for (const auto& cls : conjugacy_classes(*group)) {
        const std::uint32_t g = cls.representative;
        ClassHomology ch;
        ch.representative = g;
        ch.class_size = cls.members.size();
        ch.centralizer_order = cls.centralizer.size();
        ch.form_rank.assign(rank + 1, 0);
        ch.generic_rank.assign(rank + 1, 0);
        ch.invariant_cohomology.assign(rank + 1, 0);
        const auto twist = natural_character(c, g);
        for (const auto& [z, v] : twist)
            if (v != Rotation()) ch.twist_trivial = false;
        const auto fixed = (mats[g] - QMatrix::identity(rank)).kernel();
        const std::size_t r = fixed.size();
        ch.fixed_dimension = r;
        ch.component_count = 1;
        ch.component_orbits = 1;
        for (std::size_t k = 0; k <= r; ++k) ch.form_rank[k] = binomial(r, k);
        bool twist_trivial_on_kernel = true;
        Cyc degree_zero(0);
        for (auto z : cls.centralizer) {
            bool trivial = true;
            for (const auto& v : fixed) trivial = trivial && mats[z].apply(v) == v;
            if (trivial && twist.at(z) != Rotation()) twist_trivial_on_kernel = false;
            degree_zero += Cyc::root_of_unity(twist.at(z));
        }
        if (twist_trivial_on_kernel)
            for (std::size_t k = 0; k <= r; ++k) ch.generic_rank[k] = binomial(r, k);
        // t^w is contractible: cohomology in degree 0 only
        ch.invariant_cohomology[0] = certified_count(degree_zero, cls.centralizer.size(), "twisted invariant count");
        s.classes.push_back(std::move(ch));
    }
    add_totals(s);
    return s;
}

}  // namespace twh
