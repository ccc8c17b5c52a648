#include "twh/lattice.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "twh/matrix.hpp"

namespace twh {

ZMat zmat_from(const IntMat& m) {
    ZMat z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long v : m[i]) z[i].emplace_back(v);
    return z;
}

ZMat zmat_identity(std::size_t n) {
    ZMat z(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) z[i][i] = 1;
    return z;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat out(n, std::vector<Int>(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Int zmat_det(const ZMat& m) {
    if (m.empty()) return 1;
    QMatrix q(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) q(i, j) = Rat(m[i][j]);
    return q.det().get_num();
}

namespace {

class SmithWorker {
public:
    explicit SmithWorker(const ZMat& m)
        : n_(m.size()), m_(m.empty() ? 0 : m[0].size()), M(m), U(zmat_identity(n_)), V(zmat_identity(m_)),
          Vi(zmat_identity(m_)) {}

    void run() {
        const std::size_t lim = std::min(n_, m_);
        for (std::size_t t = 0; t < lim; ++t) {
            while (true) {
                if (!move_min_pivot(t)) return;
                bool clean = true;
                for (std::size_t i = t + 1; i < n_; ++i) {
                    if (M[i][t] == 0) continue;
                    Int q = M[i][t] / M[t][t];
                    row_add(i, t, -q);
                    if (M[i][t] != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < m_; ++j) {
                    if (M[t][j] == 0) continue;
                    Int q = M[t][j] / M[t][t];
                    col_add(j, t, -q);
                    if (M[t][j] != 0) clean = false;
                }
                if (!clean) continue;
                bool divisible = true;
                for (std::size_t i = t + 1; i < n_ && divisible; ++i)
                    for (std::size_t j = t + 1; j < m_; ++j)
                        if (M[i][j] % M[t][t] != 0) {
                            row_add(t, i, Int(1));
                            divisible = false;
                            break;
                        }
                if (divisible) break;
            }
            if (M[t][t] < 0) {
                for (std::size_t j = 0; j < m_; ++j) M[t][j] = -M[t][j];
                for (std::size_t j = 0; j < n_; ++j) U[t][j] = -U[t][j];
            }
        }
    }

    std::size_t n_, m_;
    ZMat M, U, V, Vi;

private:
    bool move_min_pivot(std::size_t t) {
        std::size_t bi = n_, bj = m_;
        Int best;
        for (std::size_t i = t; i < n_; ++i)
            for (std::size_t j = t; j < m_; ++j) {
                if (M[i][j] == 0) continue;
                Int a = abs(M[i][j]);
                if (bi == n_ || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == n_) return false;
        if (bi != t) {
            std::swap(M[bi], M[t]);
            std::swap(U[bi], U[t]);
        }
        if (bj != t) {
            for (auto& row : M) std::swap(row[bj], row[t]);
            for (auto& row : V) std::swap(row[bj], row[t]);
            std::swap(Vi[bj], Vi[t]);
        }
        return true;
    }
    // row_i += q row_j
    void row_add(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < m_; ++c) M[i][c] += q * M[j][c];
        for (std::size_t c = 0; c < n_; ++c) U[i][c] += q * U[j][c];
    }
    // col_i += q col_j; the inverse transform is row_j -= q row_i on V^-1
    void col_add(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < n_; ++r) M[r][i] += q * M[r][j];
        for (std::size_t r = 0; r < m_; ++r) V[r][i] += q * V[r][j];
        for (std::size_t c = 0; c < m_; ++c) Vi[j][c] -= q * Vi[i][c];
    }
};

}  // namespace

SmithForm smith_normal_form(const ZMat& m) {
    SmithWorker w(m);
    w.run();
    SmithForm out;
    out.diagonal.resize(std::min(w.n_, w.m_));
    for (std::size_t i = 0; i < out.diagonal.size(); ++i) {
        out.diagonal[i] = w.M[i][i];
        if (out.diagonal[i] != 0) ++out.rank;
    }
    out.U = std::move(w.U);
    out.S = std::move(w.M);
    out.V = std::move(w.V);
    out.V_inverse = std::move(w.Vi);
    return out;
}

long FixedPointSet::component_of(const TorusPoint& q) const {
    if (empty) return -1;
    const std::size_t d = ambient_rank;
    for (std::size_t c = 0; c < component_reps.size(); ++c) {
        bool match = true;
        for (std::size_t i = 0; i < smith_rank && match; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < d; ++j) s += Rat(V_inverse[i][j]) * (q[j].value() - component_reps[c][j].value());
            if (s.get_den() != 1) match = false;
        }
        if (match) return static_cast<long>(c);
    }
    return -1;
}

FixedPointSet fixed_point_set(const AffineLatticeMap& phi) {
    const std::size_t d = phi.rank();
    ZMat m = zmat_from(phi.matrix);
    for (std::size_t i = 0; i < d; ++i) m[i][i] -= 1;
    SmithForm sf = smith_normal_form(m);
    FixedPointSet F;
    F.ambient_rank = d;
    F.smith_rank = sf.rank;
    F.V_inverse = sf.V_inverse;
    // c = -U b ; S y = c mod 1 ; x = V y
    std::vector<Rat> c(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c[i] -= Rat(sf.U[i][j]) * phi.translation[j].value();
    for (std::size_t i = sf.rank; i < d; ++i)
        if (c[i].get_den() != 1) {
            F.empty = true;
            return F;
        }
    for (std::size_t i = sf.rank; i < d; ++i) {
        std::vector<long> col(d);
        for (std::size_t r = 0; r < d; ++r) col[r] = to_long(sf.V[r][i]);
        F.subtorus_basis.push_back(std::move(col));
    }
    std::vector<long> bound(sf.rank);
    for (std::size_t i = 0; i < sf.rank; ++i) bound[i] = to_long(sf.diagonal[i]);
    std::vector<long> k(sf.rank, 0);
    while (true) {
        std::vector<Rat> y(d, Rat(0));
        for (std::size_t i = 0; i < sf.rank; ++i) y[i] = (c[i] + k[i]) / Rat(bound[i]);
        TorusPoint x(d);
        for (std::size_t r = 0; r < d; ++r) {
            Rat s = 0;
            for (std::size_t i = 0; i < sf.rank; ++i) s += Rat(sf.V[r][i]) * y[i];
            x[r] = Rotation(s);
        }
        F.component_reps.push_back(std::move(x));
        // lexicographic increment, last coordinate fastest
        bool carry = true;
        for (std::size_t i = sf.rank; i > 0 && carry;) {
            --i;
            if (++k[i] < bound[i])
                carry = false;
            else
                k[i] = 0;
        }
        if (carry) break;
    }
    return F;
}

ComponentAction component_action(const AffineLatticeMap& z, const FixedPointSet& F, const AffineLatticeMap& phi) {
    if (z.compose(phi).key() != phi.compose(z).key()) throw PreconditionError("map does not commute with the element");
    ComponentAction act;
    if (F.empty) return act;
    for (const auto& rep : F.component_reps) {
        long c = F.component_of(z.apply(rep));
        if (c < 0) throw InvariantViolation("image of a fixed component representative is not fixed");
        act.permutation.push_back(static_cast<std::size_t>(c));
    }
    const std::size_t d = F.ambient_rank, r = F.dimension();
    act.linear_part.assign(r, std::vector<long>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> img(d, Int(0));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) img[a] += Int(z.matrix[a][b] * F.subtorus_basis[j][b]);
        for (std::size_t i = 0; i < d; ++i) {
            Int coord = 0;
            for (std::size_t a = 0; a < d; ++a) coord += F.V_inverse[i][a] * img[a];
            if (i < F.smith_rank) {
                if (coord != 0) throw InvariantViolation("map does not preserve the fixed subtorus");
            } else {
                act.linear_part[i - F.smith_rank][j] = to_long(coord);
            }
        }
    }
    return act;
}

Int exterior_power_trace(const std::vector<std::vector<long>>& m, int n) {
    const int r = static_cast<int>(m.size());
    if (n < 0 || n > r) return 0;
    if (n == 0) return 1;
    Int total = 0;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        QMatrix minor(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) minor(a, b) = Rat(m[idx[a]][idx[b]]);
        total += minor.det().get_num();
        int i = n - 1;
        while (i >= 0 && idx[i] == r - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return total;
}

long cohomology_trace(const ComponentAction& act, int n) {
    if (n < 0 || n > static_cast<int>(act.linear_part.size())) return 0;
    long fixed = 0;
    for (std::size_t i = 0; i < act.permutation.size(); ++i)
        if (act.permutation[i] == i) ++fixed;
    if (fixed == 0) return 0;
    return fixed * to_long(exterior_power_trace(act.linear_part, n));
}

Orbit orbit_of_point(const ActionGroup& g, const TorusPoint& x) {
    if (x.size() != g.rank) throw PreconditionError("point has the wrong dimension");
    Orbit o;
    std::map<std::string, std::size_t> seen;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        TorusPoint y = g.elements[i].apply(x);
        std::string key;
        for (const auto& r : y) key += r.str() + ",";
        if (y == x) o.stabilizer.push_back(i);
        if (seen.count(key)) continue;
        seen.emplace(key, o.points.size());
        o.points.push_back(std::move(y));
        o.transversal.push_back(i);
    }
    if (o.points.size() * o.stabilizer.size() != g.order())
        throw InvariantViolation("orbit-stabilizer relation fails");
    return o;
}

}  // namespace twh
