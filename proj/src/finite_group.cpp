#include "twh/finite_group.hpp"

#include <numeric>
#include <sstream>

#include "twh/matrix.hpp"

namespace twh {

IntMat int_identity(std::size_t d) {
    IntMat m(d, std::vector<long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat out(n, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

IntMat int_transpose(const IntMat& a) {
    const std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    IntMat t(m, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

namespace {

QMatrix to_q(const IntMat& a) {
    QMatrix q(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) q(i, j) = Rat(a[i][j]);
    return q;
}

}  // namespace

long int_det(const IntMat& a) {
    if (a.empty()) return 1;
    return to_long(to_q(a).det().get_num());
}

IntMat int_inverse(const IntMat& a) {
    if (a.empty()) return {};
    QMatrix inv;
    try {
        inv = to_q(a).inverse_matrix();
    } catch (const PreconditionError&) {
        throw ValidationError("lattice matrix is singular");
    }
    IntMat out(a.size(), std::vector<long>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (inv(i, j).get_den() != 1) throw ValidationError("lattice matrix is not unimodular");
            out[i][j] = to_long(inv(i, j).get_num());
        }
    return out;
}

AffineLatticeMap AffineLatticeMap::identity(std::size_t d, std::size_t tag_size) {
    AffineLatticeMap m;
    m.matrix = int_identity(d);
    m.translation.assign(d, Rotation());
    m.tag.resize(tag_size);
    std::iota(m.tag.begin(), m.tag.end(), 0);
    return m;
}

AffineLatticeMap AffineLatticeMap::compose(const AffineLatticeMap& o) const {
    if (o.rank() != rank() || o.tag.size() != tag.size()) throw PreconditionError("composing maps of different shape");
    AffineLatticeMap out;
    out.matrix = int_mul(matrix, o.matrix);
    out.translation = apply(o.translation);
    out.tag.resize(tag.size());
    for (std::size_t i = 0; i < tag.size(); ++i) out.tag[i] = tag[o.tag[i]];
    return out;
}

AffineLatticeMap AffineLatticeMap::inverse() const {
    AffineLatticeMap out;
    out.matrix = int_inverse(matrix);
    const std::size_t d = rank();
    out.translation.assign(d, Rotation());
    for (std::size_t i = 0; i < d; ++i) {
        Rotation s;
        for (std::size_t j = 0; j < d; ++j) s += translation[j] * out.matrix[i][j];
        out.translation[i] = -s;
    }
    out.tag.resize(tag.size());
    for (std::size_t i = 0; i < tag.size(); ++i) out.tag[tag[i]] = static_cast<int>(i);
    return out;
}

std::vector<Rotation> AffineLatticeMap::apply(const std::vector<Rotation>& x) const {
    const std::size_t d = rank();
    if (x.size() != d) throw PreconditionError("point has the wrong dimension");
    std::vector<Rotation> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rotation s = translation[i];
        for (std::size_t j = 0; j < d; ++j)
            if (matrix[i][j] != 0) s += x[j] * matrix[i][j];
        out[i] = s;
    }
    return out;
}

bool AffineLatticeMap::is_identity() const {
    for (std::size_t i = 0; i < tag.size(); ++i)
        if (tag[i] != static_cast<int>(i)) return false;
    for (const auto& t : translation)
        if (!t.is_zero()) return false;
    return matrix == int_identity(rank());
}

std::string AffineLatticeMap::key() const {
    std::ostringstream os;
    for (const auto& row : matrix)
        for (long v : row) os << v << ',';
    os << '|';
    for (const auto& t : translation) os << t.str() << ',';
    os << '|';
    for (int t : tag) os << t << ',';
    return os.str();
}

void validate_map(const AffineLatticeMap& m, std::size_t d) {
    if (m.matrix.size() != d || m.translation.size() != d)
        throw ValidationError("affine map does not match the torus rank " + std::to_string(d));
    for (const auto& row : m.matrix)
        if (row.size() != d) throw ValidationError("affine map matrix is not square");
    long det = int_det(m.matrix);
    if (det != 1 && det != -1) throw ValidationError("affine map matrix has determinant " + std::to_string(det));
    std::vector<int> sorted = m.tag;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) throw ValidationError("tag is not a permutation");
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)), inv_(n) {
    if (table_.size() != n * n) throw PreconditionError("multiplication table has the wrong size");
    for (std::uint32_t a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw InvariantViolation("element 0 is not the identity");
        bool found = false;
        for (std::uint32_t b = 0; b < n && !found; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                found = true;
            }
        if (!found) throw InvariantViolation("element without inverse");
    }
}

std::uint32_t FiniteGroup::element_order(std::uint32_t g) const {
    std::uint32_t k = 1;
    for (std::uint32_t x = g; x != 0; x = mul(x, g)) ++k;
    return k;
}

std::uint32_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (std::uint32_t g = 0; g < n_; ++g) e = std::lcm(e, static_cast<std::uint64_t>(element_order(g)));
    return static_cast<std::uint32_t>(e);
}

bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = a + 1; b < n_; ++b)
            if (!commute(a, b)) return false;
    return true;
}

std::vector<std::uint32_t> FiniteGroup::centralizer(std::uint32_t g) const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t h = 0; h < n_; ++h)
        if (commute(g, h)) z.push_back(h);
    return z;
}

std::vector<std::uint32_t> FiniteGroup::generated_subgroup(const std::vector<std::uint32_t>& gens) const {
    std::vector<bool> in(n_, false);
    std::vector<std::uint32_t> members{0}, stack{0};
    in[0] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto g : gens) {
            auto y = mul(x, g);
            if (in[y]) continue;
            in[y] = true;
            members.push_back(y);
            stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0) throw PreconditionError("subgroup must contain the identity");
    Subgroup s;
    s.to_parent = members;
    for (std::uint32_t i = 0; i < members.size(); ++i) s.from_parent.emplace(members[i], i);
    const std::size_t n = members.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = s.from_parent.find(g.mul(members[a], members[b]));
            if (it == s.from_parent.end()) throw PreconditionError("subset is not closed under multiplication");
            table[a * n + b] = it->second;
        }
    s.group = FiniteGroup(n, std::move(table));
    return s;
}

std::uint32_t ActionGroup::index_of(const AffineLatticeMap& m) const {
    auto it = index.find(m.key());
    if (it == index.end()) throw PreconditionError("map is not an element of the group");
    return it->second;
}

ActionGroup generate_group(std::size_t rank, const std::vector<AffineLatticeMap>& generators, std::size_t max_order) {
    const std::size_t tag_size = generators.empty() ? 0 : generators[0].tag.size();
    for (const auto& g : generators) {
        validate_map(g, rank);
        if (g.tag.size() != tag_size) throw ValidationError("generators carry tags of different sizes");
    }
    auto closure = generate_closure<AffineLatticeMap>(
        AffineLatticeMap::identity(rank, tag_size), generators,
        [](const AffineLatticeMap& a, const AffineLatticeMap& b) { return a.compose(b); },
        [](const AffineLatticeMap& a) { return a.key(); }, max_order);
    ActionGroup out;
    out.rank = rank;
    out.generators = generators;
    out.elements = std::move(closure.elements);
    out.group = std::move(closure.group);
    for (std::uint32_t i = 0; i < out.elements.size(); ++i) out.index.emplace(out.elements[i].key(), i);
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClass> out;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ConjugacyClass c;
        c.representative = x;
        for (std::uint32_t h = 0; h < n; ++h) {
            auto y = g.conj(x, h);
            if (!seen[y]) {
                seen[y] = true;
                c.members.push_back(y);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.centralizer = g.centralizer(x);
        if (c.members.size() * c.centralizer.size() != n)
            throw InvariantViolation("class size times centralizer order differs from the group order");
        out.push_back(std::move(c));
    }
    return out;
}

Cocycle::Cocycle(std::shared_ptr<const FiniteGroup> g)
    : group_(std::move(g)), table_(group_->order() * group_->order()) {}

bool Cocycle::is_trivial() const {
    for (const auto& r : table_)
        if (!r.is_zero()) return false;
    return true;
}

std::uint64_t Cocycle::value_order() const {
    std::uint64_t m = 1;
    for (const auto& r : table_) m = std::lcm(m, r.order());
    return m;
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
    if (o.group_->order() != group_->order()) throw PreconditionError("cocycles on different groups");
    std::vector<Rotation> t(table_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = table_[i] + o.table_[i];
    return Cocycle(group_, std::move(t));
}

Cocycle Cocycle::operator-() const {
    std::vector<Rotation> t(table_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = -table_[i];
    return Cocycle(group_, std::move(t));
}

Cocycle Cocycle::restrict(const Subgroup& s) const {
    const std::size_t n = s.to_parent.size();
    std::vector<Rotation> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (*this)(s.to_parent[a], s.to_parent[b]);
    return Cocycle(std::make_shared<const FiniteGroup>(s.group), std::move(t));
}

Cocycle validate_cocycle(std::shared_ptr<const FiniteGroup> gp, std::vector<Rotation> table, bool strict) {
    const FiniteGroup& g = *gp;
    const std::size_t n = g.order();
    if (table.size() != n * n) throw ValidationError("cocycle table must have |G|^2 entries");
    auto at = [&](std::uint32_t a, std::uint32_t b) -> const Rotation& { return table[a * n + b]; };
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            const std::uint32_t ab = g.mul(a, b);
            for (std::uint32_t c = 0; c < n; ++c) {
                if (at(ab, c) + at(a, b) != at(a, g.mul(b, c)) + at(b, c))
                    throw ValidationError("cocycle identity fails on the triple (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    const Rotation unit = at(0, 0);
    if (!unit.is_zero()) {
        if (strict) throw ValidationError("cocycle is not normalized: value at (e,e) is " + unit.str());
        // multiply by b(f) with f(e) = -c(e,e) and f = 0 elsewhere
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                Rotation f;
                if (a == 0) f -= unit;
                if (b == 0) f -= unit;
                if (g.mul(a, b) == 0) f += unit;
                table[a * n + b] += f;
            }
    }
    return Cocycle(std::move(gp), std::move(table));
}

Cocycle coboundary(std::shared_ptr<const FiniteGroup> gp, const std::vector<Rotation>& f) {
    const FiniteGroup& g = *gp;
    const std::size_t n = g.order();
    if (f.size() != n) throw PreconditionError("coboundary function must be defined on every element");
    if (!f[0].is_zero()) throw PreconditionError("coboundary function must vanish at the identity");
    std::vector<Rotation> t(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = f[a] + f[b] - f[g.mul(a, b)];
    return validate_cocycle(std::move(gp), std::move(t), true);
}

Cocycle bilinear_cocycle(std::shared_ptr<const FiniteGroup> gp, const std::vector<std::uint32_t>& gens,
                         const std::vector<std::vector<long>>& b, long m) {
    const FiniteGroup& g = *gp;
    const std::size_t r = gens.size(), n = g.order();
    if (m <= 0) throw ValidationError("bilinear cocycle modulus must be positive");
    if (b.size() != r) throw ValidationError("bilinear matrix size does not match the number of generators");
    for (const auto& row : b)
        if (row.size() != r) throw ValidationError("bilinear matrix is not square");
    if (!g.is_abelian()) throw ValidationError("bilinear cocycle requires an abelian group");
    std::vector<std::vector<long>> coords(n);
    std::vector<bool> hit(n, false);
    std::vector<long> a(r, 0);
    std::size_t count = 0;
    while (true) {
        std::uint32_t x = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (long k = 0; k < a[i]; ++k) x = g.mul(x, gens[i]);
        if (hit[x]) throw ValidationError("generators do not identify the group with (Z/m)^r");
        hit[x] = true;
        coords[x] = a;
        ++count;
        std::size_t i = 0;
        while (i < r && ++a[i] == m) a[i++] = 0;
        if (i == r) break;
    }
    if (count != n) throw ValidationError("generators do not identify the group with (Z/m)^r");
    for (auto gen : gens)
        if (g.element_order(gen) != static_cast<std::uint32_t>(m) && g.element_order(gen) != 1)
            throw ValidationError("generator order does not equal the bilinear modulus");
    std::vector<Rotation> t(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            long s = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) s += coords[x][i] * b[i][j] * coords[y][j];
            t[x * n + y] = Rotation(s, m);
        }
    return validate_cocycle(std::move(gp), std::move(t), true);
}

std::vector<Rotation> conjugation_scalars(const Cocycle& c, std::uint32_t g) {
    const FiniteGroup& G = c.group();
    std::vector<Rotation> out(G.order());
    for (std::uint32_t h = 0; h < G.order(); ++h) {
        // T_h T_g = c(h,g) T_hg;  T_h^-1 = -c(h,h^-1) T_{h^-1};  T_hg T_{h^-1} = c(hg,h^-1) T_{hgh^-1}
        const std::uint32_t hi = G.inv(h);
        out[h] = c(h, g) + c(G.mul(h, g), hi) - c(h, hi);
    }
    return out;
}

std::map<std::uint32_t, Rotation> natural_character(const Cocycle& c, std::uint32_t g) {
    const FiniteGroup& G = c.group();
    auto all = conjugation_scalars(c, g);
    std::map<std::uint32_t, Rotation> chi;
    for (auto z : G.centralizer(g)) chi.emplace(z, all[z]);
    for (const auto& [z1, v1] : chi)
        for (const auto& [z2, v2] : chi)
            if (chi.at(G.mul(z1, z2)) != v1 + v2)
                throw InvariantViolation("conjugation character of element " + std::to_string(g) +
                                         " is not a homomorphism on its centralizer");
    return chi;
}

std::vector<ConjugacyClass> regular_classes(const Cocycle& c) {
    std::vector<ConjugacyClass> out;
    for (auto& cls : conjugacy_classes(c.group())) {
        bool regular = true;
        for (const auto& [z, v] : natural_character(c, cls.representative))
            if (!v.is_zero()) {
                regular = false;
                break;
            }
        if (regular) out.push_back(std::move(cls));
    }
    return out;
}

std::vector<TraceFunctional> trace_basis(const Cocycle& c) {
    const FiniteGroup& G = c.group();
    const std::size_t n = G.order();
    std::vector<TraceFunctional> out;
    for (const auto& cls : regular_classes(c)) {
        const auto scal = conjugation_scalars(c, cls.representative);
        std::vector<bool> in(n, false), set(n, false);
        std::vector<Rotation> w(n);
        for (std::uint32_t h = 0; h < n; ++h) {
            const auto x = G.conj(cls.representative, h);
            in[x] = true;
            if (set[x] && w[x] != -scal[h]) throw InvariantViolation("trace weights are not well defined");
            set[x] = true;
            w[x] = -scal[h];
        }
        // nu(T_a T_b) = c(a,b) nu(T_ab) must equal nu(T_b T_a) = c(b,a) nu(T_ba)
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                const auto ab = G.mul(a, b), ba = G.mul(b, a);
                if (in[ab] != in[ba] || (in[ab] && c(a, b) + w[ab] != c(b, a) + w[ba]))
                    throw InvariantViolation("trace functional of class " + std::to_string(cls.representative) +
                                             " is not tracial");
            }
        TraceFunctional f{cls.representative, cls.members, {}};
        for (auto m : cls.members) f.weights.push_back(w[m]);
        out.push_back(std::move(f));
    }
    return out;
}

TwistedElement twisted_basis(const Cocycle& c, std::uint32_t g, const Cyc& coeff) {
    TwistedElement e(c.group().order());
    e.at(g) = coeff;
    return e;
}

TwistedElement twisted_multiply(const Cocycle& c, const TwistedElement& a, const TwistedElement& b) {
    const FiniteGroup& G = c.group();
    TwistedElement out(G.order());
    for (std::uint32_t x = 0; x < G.order(); ++x) {
        if (a[x].is_zero()) continue;
        for (std::uint32_t y = 0; y < G.order(); ++y) {
            if (b[y].is_zero()) continue;
            out[G.mul(x, y)] += a[x] * b[y] * Cyc::root_of_unity(c(x, y));
        }
    }
    return out;
}

Cyc apply_trace(const TraceFunctional& f, const TwistedElement& a) {
    Cyc s;
    for (std::size_t i = 0; i < f.support.size(); ++i)
        if (!a.at(f.support[i]).is_zero()) s += a[f.support[i]] * Cyc::root_of_unity(f.weights[i]);
    return s;
}

}  // namespace twh
