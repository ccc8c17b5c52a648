#include "twh/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "twh/errors.hpp"

namespace twh {

namespace {

using Sparse = std::map<std::size_t, Cyc>;

void accumulate(Sparse& out, const std::vector<std::pair<std::size_t, Cyc>>& terms, const Cyc& scale) {
    for (const auto& [k, v] : terms) {
        auto& slot = out[k];
        slot += scale * v;
        if (slot.is_zero()) out.erase(k);
    }
}

// (b_i b_j) b_l and b_i (b_j b_l)
Sparse left_assoc(const FiniteAlgebra& a, std::size_t i, std::size_t j, std::size_t l) {
    Sparse out;
    for (const auto& [k, v] : a.product(i, j)) accumulate(out, a.product(k, l), v);
    return out;
}
Sparse right_assoc(const FiniteAlgebra& a, std::size_t i, std::size_t j, std::size_t l) {
    Sparse out;
    for (const auto& [k, v] : a.product(j, l)) accumulate(out, a.product(i, k), v);
    return out;
}

std::vector<std::uint32_t> generating_set(const FiniteGroup& G) {
    std::vector<std::uint32_t> gens, span{0};
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (!std::binary_search(span.begin(), span.end(), g)) {
            gens.push_back(g);
            span = G.generated_subgroup(gens);
        }
    return gens;
}

std::vector<std::vector<Cyc>> effective_generators(const FiniteAlgebra& a) {
    if (!a.generators.empty()) return a.generators;
    std::vector<std::vector<Cyc>> gens(a.dim, std::vector<Cyc>(a.dim));
    for (std::size_t i = 0; i < a.dim; ++i) gens[i][i] = 1;
    return gens;
}

std::string tname(std::uint32_t g) { return "T" + std::to_string(g); }

CMatrix matrix_power(const CMatrix& m, long e) {
    CMatrix base = e < 0 ? m.inverse_matrix() : m;
    CMatrix out = CMatrix::identity(m.rows());
    for (long k = 0; k < (e < 0 ? -e : e); ++k) out = out * base;
    return out;
}

}  // namespace

std::vector<Cyc> FiniteAlgebra::multiply(const std::vector<Cyc>& a, const std::vector<Cyc>& b) const {
    std::vector<Cyc> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            const Cyc s = a[i] * b[j];
            for (const auto& [k, v] : product(i, j)) out[k] += s * v;
        }
    }
    return out;
}

void verify_associativity(FiniteAlgebra& a, std::uint64_t seed) {
    auto check = [&](std::size_t i, std::size_t j, std::size_t l) {
        if (left_assoc(a, i, j, l) != right_assoc(a, i, j, l))
            throw InvariantViolation("associativity fails on basis triple (" + a.basis_names[i] + ", " +
                                     a.basis_names[j] + ", " + a.basis_names[l] + ")");
    };
    a.associativity_seed = seed;
    if (a.dim <= 64) {
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t l = 0; l < a.dim; ++l) check(i, j, l);
        a.associativity_exhaustive = true;
        a.associativity_triples = a.dim * a.dim * a.dim;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, a.dim - 1);
        for (int t = 0; t < 1000; ++t) check(pick(rng), pick(rng), pick(rng));
        a.associativity_exhaustive = false;
        a.associativity_triples = 1000;
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        std::vector<Cyc> b(a.dim);
        b[i] = 1;
        if (a.multiply(a.unit, b) != b || a.multiply(b, a.unit) != b)
            throw InvariantViolation("unit fails on basis element " + a.basis_names[i]);
    }
}

std::size_t center_dimension(const FiniteAlgebra& a) {
    const std::vector<std::vector<Cyc>> gens = effective_generators(a);
    // unknown z = sum_b z_b b; equations: coefficient k of (b u - u b), summed against z_b
    EchelonBasis<Cyc> equations(a.dim);
    for (const auto& u : gens) {
        std::vector<std::vector<Cyc>> rows(a.dim, std::vector<Cyc>(a.dim));
        for (std::size_t b = 0; b < a.dim; ++b)
            for (std::size_t j = 0; j < a.dim; ++j) {
                if (u[j].is_zero()) continue;
                for (const auto& [k, v] : a.product(b, j)) rows[k][b] += u[j] * v;
                for (const auto& [k, v] : a.product(j, b)) rows[k][b] -= u[j] * v;
            }
        for (auto& r : rows) {
            equations.insert(r);
            if (equations.size() == a.dim) return 0;
        }
    }
    return a.dim - equations.size();
}

FiniteAlgebra twisted_group_algebra(const Cocycle& c) {
    const FiniteGroup& G = c.group();
    FiniteAlgebra a;
    a.dim = G.order();
    for (std::uint32_t g = 0; g < a.dim; ++g) a.basis_names.push_back(tname(g));
    a.products.resize(a.dim * a.dim);
    for (std::uint32_t g = 0; g < a.dim; ++g)
        for (std::uint32_t h = 0; h < a.dim; ++h)
            a.products[g * a.dim + h] = {{G.mul(g, h), Cyc::root_of_unity(c(g, h))}};
    a.unit.assign(a.dim, Cyc());
    a.unit[0] = 1;
    for (auto g : generating_set(G)) {
        a.generators.emplace_back(a.dim);
        a.generators.back()[g] = 1;
    }
    return a;
}

FiniteAlgebra finite_quotient_algebra(const BernsteinDatum& d, const TorusPoint& x) {
    const Orbit orbit = orbit_of_point(d.group, x);
    const FiniteGroup& G = d.abstract_group();
    const std::size_t m = orbit.points.size(), n = G.order();
    std::map<TorusPoint, std::size_t> where;
    for (std::size_t i = 0; i < m; ++i) where.emplace(orbit.points[i], i);
    // moved[g * m + j] = index of g y_j
    std::vector<std::size_t> moved(n * m);
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::size_t j = 0; j < m; ++j) moved[g * m + j] = where.at(d.group.elements[g].apply(orbit.points[j]));

    FiniteAlgebra a;
    a.dim = m * n;
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t g = 0; g < n; ++g) a.basis_names.push_back("1_y" + std::to_string(i) + "*" + tname(g));
    a.products.resize(a.dim * a.dim);
    // (1_{y_i} T_g)(1_{y_j} T_h) = 1_{y_i} 1_{g y_j} c(g,h) T_gh
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t g = 0; g < n; ++g)
            for (std::size_t j = 0; j < m; ++j) {
                if (moved[g * m + j] != i) continue;
                for (std::uint32_t h = 0; h < n; ++h)
                    a.products[(i * n + g) * a.dim + (j * n + h)] = {
                        {i * n + G.mul(g, h), Cyc::root_of_unity(d.cocycle(g, h))}};
            }
    a.unit.assign(a.dim, Cyc());
    for (std::size_t i = 0; i < m; ++i) a.unit[i * n] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        a.generators.emplace_back(a.dim);
        a.generators.back()[i * n] = 1;
    }
    for (auto g : generating_set(G)) {
        a.generators.emplace_back(a.dim);
        for (std::size_t i = 0; i < m; ++i) a.generators.back()[i * n + g] = 1;
    }
    return a;
}

CertificateReport completeness_certificate(const FiniteAlgebra& a, const std::vector<FiniteModule>& modules) {
    CertificateReport r;
    r.algebra_dimension = a.dim;
    r.center_dimension = center_dimension(a);
    r.module_count = modules.size();
    const std::vector<std::vector<Cyc>> gens = effective_generators(a);
    std::vector<std::vector<Cyc>> characters;
    for (std::size_t k = 0; k < modules.size(); ++k) {
        const FiniteModule& m = modules[k];
        const std::string label = "module " + std::to_string(k);
        r.sum_of_squares += m.dim * m.dim;
        std::vector<const CMatrix*> img;
        bool complete = true;
        for (const auto& name : a.basis_names) {
            if (!m.has(name)) {
                r.fail(label + " has no image for " + name);
                complete = false;
                break;
            }
            img.push_back(&m.image(name));
        }
        if (!complete) continue;
        auto image_of = [&](const std::vector<Cyc>& v) {
            CMatrix out(m.dim, m.dim);
            for (std::size_t i = 0; i < a.dim; ++i)
                if (!v[i].is_zero()) out += v[i] * *img[i];
            return out;
        };
        if (!image_of(a.unit).is_identity()) r.fail(label + " does not send the unit to the identity");
        // rho(b_i) rho(u) = rho(b_i u) for generators u; by linearity and induction on words
        // this gives multiplicativity on the whole algebra
        std::vector<CMatrix> gen_images;
        for (const auto& u : gens) gen_images.push_back(image_of(u));
        bool relations = true;
        for (std::size_t i = 0; i < a.dim && relations; ++i) {
            std::vector<Cyc> bi(a.dim);
            bi[i] = 1;
            for (std::size_t g = 0; g < gens.size() && relations; ++g)
                if (*img[i] * gen_images[g] != image_of(a.multiply(bi, gens[g]))) {
                    r.fail(label + " violates a product relation at " + a.basis_names[i]);
                    relations = false;
                }
        }
        FiniteModule generated(m.dim);
        for (std::size_t g = 0; g < gen_images.size(); ++g) generated.add("g" + std::to_string(g), gen_images[g]);
        auto cert = burnside_certificate(generated);
        if (!cert.irreducible)
            r.fail(label + " is reducible (span " + std::to_string(cert.span_dimension) + " < " +
                   std::to_string(m.dim * m.dim) + ")");
        std::vector<Cyc> chi;
        for (auto* p : img) chi.push_back(p->trace());
        for (std::size_t o = 0; o < characters.size(); ++o)
            if (characters[o] == chi) r.fail("modules " + std::to_string(o) + " and " + std::to_string(k) + " have equal characters");
        characters.push_back(std::move(chi));
    }
    if (r.module_count != r.center_dimension)
        r.fail("module count " + std::to_string(r.module_count) + " ≠ centre dimension " +
               std::to_string(r.center_dimension));
    if (r.sum_of_squares != a.dim)
        r.fail("sum of squares " + std::to_string(r.sum_of_squares) + " ≠ " + std::to_string(a.dim));
    return r;
}

bool twisted_relation_check(const Cocycle& c, const FiniteModule& m) {
    const FiniteGroup& G = c.group();
    std::vector<const CMatrix*> T;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        if (!m.has(tname(g))) return false;
        T.push_back(&m.image(tname(g)));
    }
    if (!T[0]->is_identity()) return false;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        for (std::uint32_t h = 0; h < G.order(); ++h)
            if (*T[g] * *T[h] != Cyc::root_of_unity(c(g, h)) * *T[G.mul(g, h)]) return false;
    return true;
}

bool crossed_relation_check(const BernsteinDatum& d, const FiniteModule& m) {
    if (!twisted_relation_check(d.cocycle, m)) return false;
    const std::size_t r = d.rank();
    std::vector<CMatrix> Z;
    for (std::size_t j = 0; j < r; ++j) {
        const std::string name = "z" + std::to_string(j + 1);
        if (!m.has(name)) return false;
        Z.push_back(m.image(name));
        if (Z.back().det().is_zero()) return false;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (Z[i] * Z[j] != Z[j] * Z[i]) return false;
    // g(z_j)(y) = z_j(g^-1 y) = e(t_j) prod_k z_k^{(A^-1)_jk} with g^-1 y = A^-1 y + t
    for (std::uint32_t g = 0; g < d.order(); ++g) {
        const AffineLatticeMap ginv = d.group.elements[g].inverse();
        const CMatrix& T = m.image(tname(g));
        for (std::size_t j = 0; j < r; ++j) {
            CMatrix image = Cyc::root_of_unity(ginv.translation[j]) * CMatrix::identity(m.dim);
            for (std::size_t k = 0; k < r; ++k) image = image * matrix_power(Z[k], ginv.matrix[j][k]);
            if (T * Z[j] != image * T) return false;
        }
    }
    return true;
}

FiniteModule quotient_images(const BernsteinDatum& d, const TorusPoint& x, const FiniteModule& m) {
    const Orbit orbit = orbit_of_point(d.group, x);
    const std::size_t count = orbit.points.size(), n = d.order(), r = d.rank();
    std::vector<CMatrix> Z;
    for (std::size_t j = 0; j < r; ++j) Z.push_back(m.image("z" + std::to_string(j + 1)));
    std::vector<CMatrix> P;
    CMatrix total(m.dim, m.dim);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& yi = orbit.points[i];
        CMatrix p = CMatrix::identity(m.dim);
        for (std::size_t l = 0; l < count; ++l) {
            if (l == i) continue;
            const auto& yl = orbit.points[l];
            std::size_t j = 0;
            while (yi[j] == yl[j]) ++j;  // distinct orbit points differ in some coordinate
            const Cyc a = Cyc::root_of_unity(yi[j]), b = Cyc::root_of_unity(yl[j]);
            p = p * ((Z[j] - b * CMatrix::identity(m.dim)) * (a - b).inverse());
        }
        for (std::size_t j = 0; j < r; ++j)
            if (p * Z[j] != Cyc::root_of_unity(yi[j]) * p)
                throw PreconditionError("module is not supported on the orbit of the given point");
        total += p;
        P.push_back(std::move(p));
    }
    if (!total.is_identity()) throw PreconditionError("module is not supported on the orbit of the given point");
    FiniteModule out(m.dim);
    for (std::size_t i = 0; i < count; ++i)
        for (std::uint32_t g = 0; g < n; ++g)
            out.add("1_y" + std::to_string(i) + "*" + tname(g), P[i] * m.image(tname(g)));
    return out;
}

}  // namespace twh
