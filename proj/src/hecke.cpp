#include "twh/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twh/errors.hpp"
#include "twh/oracle.hpp"

namespace twh {

namespace {

std::string qkey(const QMatrix& m) {
    std::string out;
    for (const auto& x : m.data()) {
        out += to_string(x);
        out += ',';
    }
    return out;
}

QMatrix reflection_matrix(const std::vector<Rat>& alpha, const std::vector<Rat>& coroot) {
    const std::size_t d = alpha.size();
    QMatrix m = QMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) -= coroot[i] * alpha[j];
    return m;
}

Rat pairing(const std::vector<Rat>& form, const std::vector<Rat>& v) {
    Rat out(0);
    for (std::size_t i = 0; i < form.size(); ++i) out += form[i] * v[i];
    return out;
}

// row vector a -> a m
std::vector<Rat> row_times(const std::vector<Rat>& a, const QMatrix& m) {
    std::vector<Rat> out(m.cols(), Rat(0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < a.size(); ++i) out[j] += a[i] * m(i, j);
    return out;
}

std::vector<Rat> times_column(const QMatrix& m, const std::vector<Rat>& v) { return m.apply(v); }

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

template <class C>
void accumulate(std::map<std::uint32_t, C>& m, std::uint32_t key, const C& value) {
    if (value.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) m.erase(it);
}

template <class C>
void accumulate(std::map<WGamma, C>& m, const WGamma& key, const C& value) {
    if (value.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) m.erase(it);
}

template <class C>
C lift(const HeckeAlgebra& h, const HPoly& p) {
    (void)h;
    return C(p);
}

// N_w c = sum_v h_v N_v
template <class C>
std::map<std::uint32_t, C> push_left(const HeckeAlgebra& h, std::uint32_t w, const C& c) {
    std::map<std::uint32_t, C> cur;
    accumulate(cur, 0u, c);
    const auto& word = h.reduced_word(w);
    const FiniteGroup& W = h.weyl().group;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::size_t i = *it;
        const std::uint32_t s = h.simple_reflection(i);
        const C kr = lift<C>(h, h.kr_poly(i));
        std::map<std::uint32_t, C> next;
        for (const auto& [v, hv] : cur) {
            accumulate(next, W.mul(s, v), h.act(h.weyl().elements[s], hv));
            accumulate(next, v, kr * h.divided_difference(i, hv));
        }
        cur = std::move(next);
    }
    return cur;
}

// c N_w = sum_v N_v h_v
template <class C>
std::map<std::uint32_t, C> push_right(const HeckeAlgebra& h, const C& c, std::uint32_t w) {
    std::map<std::uint32_t, C> cur;
    accumulate(cur, 0u, c);
    const FiniteGroup& W = h.weyl().group;
    for (const std::size_t i : h.reduced_word(w)) {
        const std::uint32_t s = h.simple_reflection(i);
        const C kr = lift<C>(h, h.kr_poly(i));
        std::map<std::uint32_t, C> next;
        for (const auto& [v, hv] : cur) {
            accumulate(next, W.mul(v, s), h.act(h.weyl().elements[s], hv));
            accumulate(next, v, kr * h.divided_difference(i, hv));
        }
        cur = std::move(next);
    }
    return cur;
}

template <class C>
HeckeTerms<C> multiply_impl(const HeckeAlgebra& h, const HeckeTerms<C>& a, const HeckeTerms<C>& b) {
    const FiniteGroup& W = h.weyl().group;
    const FiniteGroup& G = h.gamma().group;
    HeckeTerms<C> out;
    for (const auto& [ka, fa] : a.terms)
        for (const auto& [kb, fb] : b.terms) {
            const auto [w, g] = ka;
            const auto [w2, g2] = kb;
            const C moved = h.act(h.gamma().elements[g], fb);
            const std::uint32_t w2c = h.conj(g, w2);
            const C scalar = lift<C>(h, h.constant(Cyc::root_of_unity(h.cocycle()(g, g2))));
            for (const auto& [v, hv] : push_left(h, w, moved))
                accumulate(out.terms, WGamma{W.mul(v, w2c), G.mul(g, g2)}, fa * hv * scalar);
        }
    return out;
}

std::uint32_t lookup(const std::unordered_map<std::string, std::uint32_t>& index, const QMatrix& m,
                     const char* what) {
    auto it = index.find(qkey(m));
    if (it == index.end()) throw ValidationError(what);
    return it->second;
}

std::string xname(std::size_t i) { return "x" + std::to_string(i + 1); }
std::string nname(std::size_t i) { return "N" + std::to_string(i + 1); }
std::string tname(std::uint32_t g) { return "T" + std::to_string(g); }

// Image of a polynomial in x_1..x_d under commuting matrices.
CMatrix poly_image(const HeckeAlgebra& h, const HPoly& f, const std::vector<CMatrix>& X, std::size_t n) {
    CMatrix out(n, n);
    for (const auto& [e, c] : f.terms()) {
        CMatrix t = CMatrix::identity(n) * c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (j >= h.rank() || e[j] < 0) throw PreconditionError("module image of a non-polynomial or a parameter");
            for (int p = 0; p < e[j]; ++p) t = t * X[j];
        }
        out += t;
    }
    return out;
}

std::vector<Cyc> evaluation_point(const HeckeAlgebra& h, const Weight& lambda) {
    if (lambda.size() != h.rank()) throw PreconditionError("weight has the wrong number of coordinates");
    std::vector<Cyc> p;
    for (const auto& x : lambda) p.push_back(x.to_cyc());
    return p;
}

void require_numeric(const HeckeAlgebra& h, const char* what) {
    if (!h.is_numeric()) throw PreconditionError(std::string(what) + " needs numeric k and r = 1");
}

}  // namespace

template <class C>
bool HeckeTerms<C>::operator==(const HeckeTerms& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (const auto& [k, v] : terms) {
        if (it->first != k || !(it->second == v)) return false;
        ++it;
    }
    return true;
}

template struct HeckeTerms<HPoly>;
template struct HeckeTerms<HFraction>;

template <class C>
HeckeTerms<C> operator+(const HeckeTerms<C>& a, const HeckeTerms<C>& b) {
    HeckeTerms<C> out = a;
    for (const auto& [k, v] : b.terms) accumulate(out.terms, k, v);
    return out;
}

template HeckeElement operator+(const HeckeElement&, const HeckeElement&);
template LocalizedHeckeElement operator+(const LocalizedHeckeElement&, const LocalizedHeckeElement&);

HeckeAlgebra::HeckeAlgebra(RootDatum datum, HeckeOptions options) : datum_(std::move(datum)), options_(options) {
    const std::size_t d = datum_.rank, r = datum_.simple_roots.size();
    if (datum_.coroots.size() != r || datum_.k.size() != r)
        throw ValidationError("root datum needs one coroot and one parameter per simple root");
    for (std::size_t i = 0; i < r; ++i) {
        if (datum_.simple_roots[i].size() != d || datum_.coroots[i].size() != d)
            throw ValidationError("root or coroot " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t j = 0; j < r; ++j) {
            const Rat a = pairing(datum_.simple_roots[i], datum_.coroots[j]);
            const Rat b = pairing(datum_.simple_roots[j], datum_.coroots[i]);
            if (i == j && a != 2) throw ValidationError("root " + std::to_string(i + 1) + " does not pair to 2 with its coroot");
            if (i != j && (a.get_den() != 1 || a > 0 || ((a == 0) != (b == 0))))
                throw ValidationError("pairing matrix is not a generalized Cartan matrix");
        }
    }

    std::vector<QMatrix> reflections;
    for (std::size_t i = 0; i < r; ++i) reflections.push_back(reflection_matrix(datum_.simple_roots[i], datum_.coroots[i]));
    const std::function<QMatrix(const QMatrix&, const QMatrix&)> compose = [](const QMatrix& a, const QMatrix& b) {
        return a * b;
    };
    const std::function<std::string(const QMatrix&)> key = qkey;
    weyl_ = generate_closure<QMatrix>(QMatrix::identity(d), reflections, compose, key, options_.max_group_order);
    for (const auto& g : datum_.gamma_generators)
        if (g.rows() != d || g.cols() != d || g.det() == 0) throw ValidationError("Gamma generator is not an invertible map of t");
    gamma_ = generate_closure<QMatrix>(QMatrix::identity(d), datum_.gamma_generators, compose, key, options_.max_group_order);

    std::unordered_map<std::string, std::uint32_t> windex;
    for (std::uint32_t w = 0; w < weyl_.elements.size(); ++w) windex.emplace(qkey(weyl_.elements[w]), w);
    for (const auto& m : reflections) simple_.push_back(lookup(windex, m, "simple reflection missing from W"));
    for (const auto& m : weyl_.elements) weyl_inverse_.push_back(m.inverse_matrix());
    for (const auto& m : gamma_.elements) gamma_inverse_.push_back(m.inverse_matrix());

    // breadth-first over right multiplication by simple reflections gives reduced words
    const std::size_t nw = weyl_.elements.size();
    words_.assign(nw, {});
    std::vector<bool> seen(nw, false);
    seen[0] = true;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint32_t v = weyl_.group.mul(queue[q], simple_[i]);
            if (seen[v]) continue;
            seen[v] = true;
            words_[v] = words_[queue[q]];
            words_[v].push_back(i);
            queue.push_back(v);
        }

    const std::size_t ng = gamma_.elements.size();
    conj_.resize(ng * nw);
    gamma_perm_.resize(ng * r);
    for (std::uint32_t g = 0; g < ng; ++g) {
        for (std::uint32_t w = 0; w < nw; ++w)
            conj_[g * nw + w] = lookup(windex, gamma_.elements[g] * weyl_.elements[w] * gamma_inverse_[g],
                                       "Gamma does not normalize W");
        for (std::size_t i = 0; i < r; ++i) {
            const auto root = row_times(datum_.simple_roots[i], gamma_inverse_[g]);
            const auto coroot = times_column(gamma_.elements[g], datum_.coroots[i]);
            std::size_t j = 0;
            while (j < r && (datum_.simple_roots[j] != root || datum_.coroots[j] != coroot)) ++j;
            if (j == r) throw ValidationError("Gamma does not permute the simple roots and coroots");
            if (datum_.k[j] != datum_.k[i]) throw ValidationError("Gamma does not preserve k");
            gamma_perm_[g * r + i] = j;
        }
    }

    if (datum_.gamma_cocycle.empty()) {
        cocycle_ = Cocycle(std::make_shared<const FiniteGroup>(gamma_.group));
    } else {
        if (datum_.gamma_cocycle.size() != ng * ng) throw ValidationError("Gamma cocycle table has the wrong size");
        cocycle_ = validate_cocycle(std::make_shared<const FiniteGroup>(gamma_.group), datum_.gamma_cocycle);
    }

    // classes of simple roots under conjugacy by W Gamma; k must be constant on them
    UnionFind uf(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            for (std::uint32_t w = 0; w < nw; ++w)
                if (weyl_.group.conj(simple_[i], w) == simple_[j]) uf.join(i, j);
        for (std::uint32_t g = 0; g < ng; ++g) uf.join(i, gamma_perm_[g * r + i]);
    }
    std::vector<std::size_t> class_of(r), class_index(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t root = uf.find(i);
        if (datum_.k[i] != datum_.k[root]) throw ValidationError("k is not W-invariant");
        if (class_index[root] == r) class_index[root] = parameter_count_++;
        class_of[i] = class_index[root];
    }

    nvars_ = d + (options_.symbolic_k ? parameter_count_ : 0) + (options_.formal_r ? 1 : 0);
    const HPoly rpoly = options_.formal_r ? HPoly::variable(nvars_, nvars_ - 1) : HPoly::constant(nvars_, Cyc(1));
    for (std::size_t i = 0; i < r; ++i) {
        k_.push_back(options_.symbolic_k ? HPoly::variable(nvars_, d + class_of[i]) : HPoly::constant(nvars_, Cyc(datum_.k[i])));
        kr_.push_back(k_.back() * rpoly);
        std::vector<Cyc> coeffs(nvars_, Cyc(0));
        for (std::size_t j = 0; j < d; ++j) coeffs[j] = Cyc(datum_.simple_roots[i][j]);
        alpha_.push_back(HPoly::linear_form(coeffs));
    }
}

std::vector<std::string> HeckeAlgebra::variable_names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(xname(i));
    if (options_.symbolic_k)
        for (std::size_t i = 0; i < parameter_count_; ++i) out.push_back("k" + std::to_string(i + 1));
    if (options_.formal_r) out.push_back("r");
    return out;
}

std::size_t HeckeAlgebra::permute_simple(std::uint32_t gamma, std::size_t i) const {
    return gamma_perm_[gamma * simple_count() + i];
}

HPoly HeckeAlgebra::act(const QMatrix& m, const HPoly& f) const {
    const QMatrix inv = m.inverse_matrix();
    std::vector<HPoly> images;
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (i >= rank()) {
            images.push_back(HPoly::variable(nvars_, i));
            continue;
        }
        std::vector<Cyc> coeffs(nvars_, Cyc(0));
        for (std::size_t j = 0; j < rank(); ++j) coeffs[j] = Cyc(inv(i, j));
        images.push_back(HPoly::linear_form(coeffs));
    }
    return f.substitute(images);
}

HFraction HeckeAlgebra::act(const QMatrix& m, const HFraction& f) const {
    return HFraction(act(m, f.num()), act(m, f.den()));
}

HPoly HeckeAlgebra::divided_difference(std::size_t i, const HPoly& f) const {
    const HPoly diff = f - act_weyl(simple_[i], f);
    if (diff.is_zero()) return diff;
    return diff.divide_linear(alpha_[i]);
}

HFraction HeckeAlgebra::divided_difference(std::size_t i, const HFraction& f) const {
    const QMatrix& s = weyl_.elements[simple_[i]];
    const HPoly sn = act(s, f.num()), sd = act(s, f.den());
    const HPoly num = f.num() * sd - sn * f.den();
    if (num.is_zero()) return HFraction(num);
    return HFraction(num.divide_linear(alpha_[i]), f.den() * sd);
}

HeckeElement hecke_polynomial(const HeckeAlgebra& h, const HPoly& f) { return hecke_basis(h, 0, 0, f); }

HeckeElement hecke_basis(const HeckeAlgebra& h, std::uint32_t w, std::uint32_t gamma, const HPoly& f) {
    if (f.nvars() != h.nvars()) throw PreconditionError("polynomial over the wrong variables");
    if (w >= h.weyl().elements.size() || gamma >= h.gamma().elements.size())
        throw PreconditionError("group element out of range");
    HeckeElement out;
    accumulate(out.terms, WGamma{w, gamma}, f);
    return out;
}

HeckeElement hecke_reflection(const HeckeAlgebra& h, std::size_t i) {
    return hecke_basis(h, h.simple_reflection(i), 0, h.constant(Cyc(1)));
}

HeckeElement hecke_multiply(const HeckeAlgebra& h, const HeckeElement& a, const HeckeElement& b) {
    return multiply_impl(h, a, b);
}

LocalizedHeckeElement hecke_multiply(const HeckeAlgebra& h, const LocalizedHeckeElement& a,
                                     const LocalizedHeckeElement& b) {
    return multiply_impl(h, a, b);
}

std::string hecke_str(const HeckeAlgebra& h, const HeckeElement& a) {
    if (a.terms.empty()) return "0";
    const auto names = h.variable_names();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << '(' << f.str(names) << ')';
        if (k.first != 0) {
            os << "*N[";
            for (auto i : h.reduced_word(k.first)) os << 's' << i + 1;
            os << ']';
        }
        if (k.second != 0) os << "*T" << k.second;
    }
    return os.str();
}

int hecke_degree(const HeckeAlgebra& h, const HeckeElement& a) {
    int best = -1;
    const bool has_r = h.options().formal_r;
    for (const auto& [k, f] : a.terms)
        for (const auto& [e, c] : f.terms()) {
            int deg = 0;
            for (std::size_t i = 0; i < h.rank(); ++i) deg += 2 * e[i];
            if (has_r) deg += 2 * e.back();
            best = std::max(best, deg);
        }
    return best;
}

bool center_check(const HeckeAlgebra& h, const HPoly& f) {
    bool invariant = true;
    for (std::uint32_t w = 0; w < h.weyl().elements.size() && invariant; ++w) invariant = h.act_weyl(w, f) == f;
    for (std::uint32_t g = 0; g < h.gamma().elements.size() && invariant; ++g) invariant = h.act_gamma(g, f) == f;

    const HeckeElement F = hecke_polynomial(h, f);
    std::vector<HeckeElement> gens;
    for (std::size_t i = 0; i < h.rank(); ++i) gens.push_back(hecke_polynomial(h, h.coordinate(i)));
    for (std::size_t i = 0; i < h.simple_count(); ++i) gens.push_back(hecke_reflection(h, i));
    for (std::uint32_t g = 1; g < h.gamma().elements.size(); ++g) gens.push_back(hecke_basis(h, 0, g, h.constant(Cyc(1))));
    bool commutes = true;
    for (const auto& g : gens)
        if (hecke_multiply(h, F, g) != hecke_multiply(h, g, F)) {
            commutes = false;
            break;
        }

    if (invariant != commutes) {
        // W Gamma acts faithfully unless some gamma acts on t as an element of W
        bool faithful = true;
        for (std::uint32_t g = 1; g < h.gamma().elements.size(); ++g)
            for (const auto& w : h.weyl().elements)
                if (w == h.gamma().elements[g]) faithful = false;
        if (faithful) throw InvariantViolation("invariance and commutation disagree for a central candidate");
    }
    return invariant && commutes;
}

FiniteModule induced_module_I(const HeckeAlgebra& h, const Weight& lambda) {
    require_numeric(h, "induced_module_I");
    const auto point = evaluation_point(h, lambda);
    const std::size_t nw = h.weyl().elements.size(), ng = h.gamma().elements.size(), n = nw * ng;
    const FiniteGroup& W = h.weyl().group;
    const FiniteGroup& G = h.gamma().group;
    auto index = [ng](std::uint32_t w, std::uint32_t g) { return w * ng + g; };
    FiniteModule m(n);
    for (std::size_t i = 0; i < h.rank(); ++i) {
        CMatrix X(n, n);
        for (std::uint32_t v = 0; v < nw; ++v) {
            const auto pushed = push_right(h, h.coordinate(i), v);
            for (std::uint32_t g = 0; g < ng; ++g)
                for (const auto& [u, hu] : pushed) {
                    // h T_g = T_g (g^-1 h)
                    const Cyc value = h.act_gamma(G.inv(g), hu).evaluate(point);
                    X(index(u, g), index(v, g)) += value;
                }
        }
        m.add(xname(i), std::move(X));
    }
    for (std::size_t i = 0; i < h.simple_count(); ++i) {
        CMatrix N(n, n);
        for (std::uint32_t v = 0; v < nw; ++v)
            for (std::uint32_t g = 0; g < ng; ++g) N(index(W.mul(h.simple_reflection(i), v), g), index(v, g)) = Cyc(1);
        m.add(nname(i), std::move(N));
    }
    for (std::uint32_t d = 0; d < ng; ++d) {
        CMatrix T(n, n);
        for (std::uint32_t v = 0; v < nw; ++v)
            for (std::uint32_t g = 0; g < ng; ++g)
                T(index(h.conj(d, v), G.mul(d, g)), index(v, g)) = Cyc::root_of_unity(h.cocycle()(d, g));
        m.add(tname(d), std::move(T));
    }
    return m;
}

std::vector<Weight> weight_orbit(const HeckeAlgebra& h, const Weight& lambda) {
    if (lambda.size() != h.rank()) throw PreconditionError("weight has the wrong number of coordinates");
    std::vector<Weight> out;
    for (const auto& w : h.weyl().elements)
        for (const auto& g : h.gamma().elements) {
            const QMatrix m = w * g;
            Weight mu(h.rank());
            for (std::size_t i = 0; i < h.rank(); ++i)
                for (std::size_t j = 0; j < h.rank(); ++j) mu[i] = mu[i] + GaussRat(m(i, j)) * lambda[j];
            out.push_back(std::move(mu));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WeightReport weights(const HeckeAlgebra& h, const FiniteModule& m, const std::vector<Weight>& candidates) {
    std::vector<Weight> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t n = m.dim, d = h.rank();
    std::vector<CMatrix> X;
    for (std::size_t i = 0; i < d; ++i) X.push_back(m.image(xname(i)));
    WeightReport out;
    std::size_t total = 0;
    for (const auto& lambda : sorted) {
        const auto point = evaluation_point(h, lambda);
        CMatrix stacked(d * n, n);
        for (std::size_t i = 0; i < d; ++i) {
            const CMatrix shifted = X[i] - CMatrix::identity(n) * point[i];
            CMatrix p = CMatrix::identity(n);
            for (std::size_t k = 0; k < n; ++k) p = p * shifted;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) stacked(i * n + a, b) = p(a, b);
        }
        const std::size_t mult = d == 0 ? n : stacked.kernel().size();
        if (mult == 0) continue;
        out.weights.push_back(lambda);
        out.multiplicities.push_back(mult);
        total += mult;
    }
    if (total != n)
        throw CoverageError("candidate weights cover " + std::to_string(total) + " of " + std::to_string(n) + " dimensions");
    return out;
}

std::optional<std::vector<Rat>> coroot_coordinates(const HeckeAlgebra& h, const Weight& lambda) {
    const std::size_t d = h.rank(), r = h.simple_count();
    QMatrix C(d, r);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < r; ++j) C(i, j) = h.datum().coroots[j][i];
    std::vector<Rat> re;
    for (const auto& x : lambda) re.push_back(x.re);
    return C.solve(re);
}

bool is_tempered(const HeckeAlgebra& h, const WeightReport& w) {
    for (const auto& lambda : w.weights) {
        const auto c = coroot_coordinates(h, lambda);
        if (!c) return false;
        for (const auto& x : *c)
            if (x > 0) return false;
    }
    return true;
}

bool is_discrete_series_weights(const HeckeAlgebra& h, const WeightReport& w) {
    for (const auto& lambda : w.weights) {
        const auto c = coroot_coordinates(h, lambda);
        if (!c) return false;
        for (const auto& x : *c)
            if (x >= 0) return false;
    }
    return true;
}

WeightClassification classify_weight(const HeckeAlgebra& h, const Weight& lambda) {
    WeightClassification out;
    out.lambda = lambda;
    const FiniteModule I = induced_module_I(h, lambda);
    out.dimension = I.dim;
    out.weights = weights(h, I, weight_orbit(h, lambda));
    out.tempered = is_tempered(h, out.weights);
    out.discrete_series = is_discrete_series_weights(h, out.weights);
    out.irreducible = burnside_irreducible(I);
    if (h.gamma().elements.size() == 1) {
        std::vector<Cyc> trivial(I.dim, Cyc(1)), sign(I.dim, Cyc(1));
        for (std::uint32_t w = 0; w < I.dim; ++w)
            if (h.length(w) % 2 == 1) sign[w] = Cyc(-1);
        out.trivial_line_invariant = submodule_test(I, {trivial});
        out.sign_line_invariant = submodule_test(I, {sign});
    }
    return out;
}

bool hecke_relation_check(const HeckeAlgebra& h, const FiniteModule& m) {
    require_numeric(h, "hecke_relation_check");
    const std::size_t n = m.dim, d = h.rank(), r = h.simple_count();
    std::vector<CMatrix> X, N;
    for (std::size_t i = 0; i < d; ++i) {
        if (!m.has(xname(i))) return false;
        X.push_back(m.image(xname(i)));
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (!m.has(nname(i))) return false;
        N.push_back(m.image(nname(i)));
    }
    const CMatrix I = CMatrix::identity(n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (X[i] * X[j] != X[j] * X[i]) return false;
    const FiniteGroup& W = h.weyl().group;
    for (std::size_t i = 0; i < r; ++i) {
        if (N[i] * N[i] != I) return false;
        for (std::size_t j = i + 1; j < r; ++j) {
            const std::uint32_t order = W.element_order(W.mul(h.simple_reflection(i), h.simple_reflection(j)));
            CMatrix p = I;
            for (std::uint32_t t = 0; t < order; ++t) p = p * N[i] * N[j];
            if (p != I) return false;
        }
        for (std::size_t j = 0; j < d; ++j) {
            const HPoly sx = h.act_weyl(h.simple_reflection(i), h.coordinate(j));
            const Cyc rhs = h.k_poly(i).constant_term() * Cyc(h.datum().coroots[i][j]);
            if (X[j] * N[i] - N[i] * poly_image(h, sx, X, n) != I * rhs) return false;
        }
    }
    if (!twisted_relation_check(h.cocycle(), m)) return false;
    for (std::uint32_t g = 0; g < h.gamma().elements.size(); ++g) {
        const CMatrix& T = m.image(tname(g));
        for (std::size_t j = 0; j < d; ++j)
            if (T * X[j] != poly_image(h, h.act_gamma(g, h.coordinate(j)), X, n) * T) return false;
        for (std::size_t i = 0; i < r; ++i)
            if (T * N[i] != N[h.permute_simple(g, i)] * T) return false;
    }
    return true;
}

LocalizedHeckeElement tau_element(const HeckeAlgebra& h, std::size_t i) {
    const HPoly one = h.constant(Cyc(1));
    LocalizedHeckeElement a, g, minus_one;
    accumulate(a.terms, WGamma{0, 0}, HFraction(one));
    accumulate(a.terms, WGamma{h.simple_reflection(i), 0}, HFraction(one));
    accumulate(g.terms, WGamma{0, 0}, HFraction(h.alpha(i), h.alpha(i) + h.kr_poly(i)));
    accumulate(minus_one.terms, WGamma{0, 0}, HFraction(-one));
    return hecke_multiply(h, a, g) + minus_one;
}

bool tau_square_check(const HeckeAlgebra& h, std::size_t i) {
    const auto tau = tau_element(h, i);
    LocalizedHeckeElement one;
    accumulate(one.terms, WGamma{0, 0}, HFraction(h.constant(Cyc(1))));
    return hecke_multiply(h, tau, tau) == one;
}

std::vector<FiniteModule> one_dimensional_modules(const HeckeAlgebra& h) {
    require_numeric(h, "one_dimensional_modules");
    if (h.gamma().elements.size() != 1) throw PreconditionError("one-dimensional module search needs trivial Gamma");
    const std::size_t d = h.rank(), r = h.simple_count();
    QMatrix A(r, d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < d; ++j) A(i, j) = h.datum().simple_roots[i][j];
    std::vector<FiniteModule> out;
    if (A.rank() != d) return out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<Rat> rhs(r);
        for (std::size_t i = 0; i < r; ++i) rhs[i] = ((mask >> i) & 1 ? Rat(-1) : Rat(1)) * h.datum().k[i];
        const auto lambda = A.solve(rhs);
        if (!lambda) continue;
        FiniteModule m(1);
        for (std::size_t j = 0; j < d; ++j) m.add(xname(j), CMatrix::identity(1) * Cyc((*lambda)[j]));
        for (std::size_t i = 0; i < r; ++i) m.add(nname(i), CMatrix::identity(1) * Cyc((mask >> i) & 1 ? -1 : 1));
        m.add(tname(0), CMatrix::identity(1));
        if (hecke_relation_check(h, m)) out.push_back(std::move(m));
    }
    return out;
}

RootDatum rank_one_root_datum(const Rat& k) {
    RootDatum d;
    d.name = "rank1";
    d.rank = 1;
    d.simple_roots = {{Rat(1)}};
    d.coroots = {{Rat(2)}};
    d.k = {k};
    return d;
}

RootDatum a2_root_datum(const Rat& k) {
    RootDatum d;
    d.name = "A2";
    d.rank = 2;
    d.simple_roots = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    d.coroots = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    d.k = {k, k};
    return d;
}

RootDatum b2_root_datum(const Rat& k_long, const Rat& k_short) {
    RootDatum d;
    d.name = "B2";
    d.rank = 2;
    d.simple_roots = {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}};
    d.coroots = {{Rat(1), Rat(-1)}, {Rat(0), Rat(2)}};
    d.k = {k_long, k_short};
    return d;
}

}  // namespace twh
