#include "finicert/liealg.hpp"

#include <map>

#include "finicert/errors.hpp"

namespace finicert {

namespace {

// Single-entry matrix with 1-based indices, matching the usual E_ij notation.
QMatrix E(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m = q_zero(n, n);
    m.at(i - 1, j - 1) = Scalar(1);
    return m;
}

bool strictly_upper(const QMatrix& m) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!scalar_is_zero(m.at(i, j))) {
                if (i >= j) return false;
                any = true;
            }
        }
    return any;
}

bool strictly_lower(const QMatrix& m) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!scalar_is_zero(m.at(i, j))) {
                if (i <= j) return false;
                any = true;
            }
        }
    return any;
}

std::vector<std::string> sl_labels(std::size_t n) {
    if (n == 2) return {"e", "h", "f"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            names.push_back("x" + std::to_string(i) + std::to_string(j));
    for (std::size_t i = 1; i < n; ++i) names.push_back("h" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = j + 1; i <= n; ++i)
            names.push_back("y" + std::to_string(i) + std::to_string(j));
    return names;
}

std::vector<QMatrix> sl_basis(std::size_t n) {
    std::vector<QMatrix> basis;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            basis.push_back(E(n, i, j));
    for (std::size_t i = 1; i < n; ++i)
        basis.push_back(E(n, i, i) - E(n, i + 1, i + 1));
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = j + 1; i <= n; ++i)
            basis.push_back(E(n, i, j));
    return basis;
}

// so4 for the split form with antidiagonal Gram matrix J:
// X^T J + J X = 0, i.e. X_{ui} = -X_{5-i,5-u}.
std::vector<QMatrix> so4_basis() {
    return {
        E(4, 1, 2) - E(4, 3, 4), // u1
        E(4, 1, 3) - E(4, 2, 4), // u2
        E(4, 1, 1) - E(4, 4, 4), // h1
        E(4, 2, 2) - E(4, 3, 3), // h2
        E(4, 2, 1) - E(4, 4, 3), // l1
        E(4, 3, 1) - E(4, 4, 2), // l2
    };
}

// sp4 for the split form Omega = antidiag(1, 1, -1, -1).
std::vector<QMatrix> sp4_basis() {
    return {
        E(4, 1, 2) - E(4, 3, 4), // x12
        E(4, 1, 3) + E(4, 2, 4), // x13
        E(4, 1, 4),              // x14
        E(4, 2, 3),              // x23
        E(4, 1, 1) - E(4, 4, 4), // h1
        E(4, 2, 2) - E(4, 3, 3), // h2
        E(4, 2, 1) - E(4, 4, 3), // y21
        E(4, 3, 1) + E(4, 4, 2), // y31
        E(4, 4, 1),              // y41
        E(4, 3, 2),              // y32
    };
}

} // namespace

std::string algebra_to_string(AlgebraName name) {
    switch (name) {
        case AlgebraName::sl2: return "sl2";
        case AlgebraName::sl3: return "sl3";
        case AlgebraName::sl4: return "sl4";
        case AlgebraName::so4: return "so4";
        case AlgebraName::sp4: return "sp4";
    }
    throw InputError("unknown algebra tag");
}

std::optional<AlgebraName> algebra_from_string(const std::string& text) {
    for (AlgebraName name : all_algebras())
        if (algebra_to_string(name) == text) return name;
    return std::nullopt;
}

std::vector<AlgebraName> all_algebras() {
    return {AlgebraName::sl2, AlgebraName::sl3, AlgebraName::sl4, AlgebraName::so4,
            AlgebraName::sp4};
}

LieAlgebraSpec::LieAlgebraSpec(AlgebraName name, std::vector<std::string> labels,
                               std::vector<QMatrix> basis)
    : name_(name), labels_(std::move(labels)), basis_(std::move(basis)), ring_(labels_) {
    const std::size_t dim = basis_.size();
    if (labels_.size() != dim) throw DimensionMismatch("label count != basis size");
    table_.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(0))));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const QMatrix c = basis_[i] * basis_[j] - basis_[j] * basis_[i];
            // element_from_matrix doubles as the closure audit here.
            std::vector<Scalar> coords = element_from_matrix(c);
            for (std::size_t m = 0; m < dim; ++m) table_[j][i][m] = -coords[m];
            table_[i][j] = std::move(coords);
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (strictly_upper(basis_[i])) upper_.push_back(i);
        if (strictly_lower(basis_[i])) lower_.push_back(i);
    }
}

const LieAlgebraSpec& LieAlgebraSpec::get(AlgebraName name) {
    switch (name) {
        case AlgebraName::sl2: {
            static const LieAlgebraSpec g(name, sl_labels(2), sl_basis(2));
            return g;
        }
        case AlgebraName::sl3: {
            static const LieAlgebraSpec g(name, sl_labels(3), sl_basis(3));
            return g;
        }
        case AlgebraName::sl4: {
            static const LieAlgebraSpec g(name, sl_labels(4), sl_basis(4));
            return g;
        }
        case AlgebraName::so4: {
            static const LieAlgebraSpec g(name, {"u1", "u2", "h1", "h2", "l1", "l2"}, so4_basis());
            return g;
        }
        case AlgebraName::sp4: {
            static const LieAlgebraSpec g(
                name, {"x12", "x13", "x14", "x23", "h1", "h2", "y21", "y31", "y41", "y32"},
                sp4_basis());
            return g;
        }
    }
    throw InputError("unknown algebra tag");
}

const QMatrix& LieAlgebraSpec::basis_matrix(std::size_t i) const {
    if (i >= basis_.size()) throw IndexOutOfRange("basis index out of range");
    return basis_[i];
}

const std::vector<Scalar>& LieAlgebraSpec::structure(std::size_t i, std::size_t j) const {
    if (i >= dimension() || j >= dimension()) throw IndexOutOfRange("basis index out of range");
    return table_[i][j];
}

std::vector<Scalar> LieAlgebraSpec::bracket(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
    const std::size_t dim = dimension();
    if (x.size() != dim || y.size() != dim)
        throw DimensionMismatch("coordinate vector length != algebra dimension");
    std::vector<Scalar> z(dim, Scalar(0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (scalar_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (scalar_is_zero(y[j])) continue;
            const Scalar f = x[i] * y[j];
            for (std::size_t m = 0; m < dim; ++m) {
                if (!scalar_is_zero(table_[i][j][m])) z[m] = z[m] + f * table_[i][j][m];
            }
        }
    }
    return z;
}

std::vector<Polynomial> LieAlgebraSpec::bracket(const std::vector<Polynomial>& x,
                                                const std::vector<Polynomial>& y) const {
    const std::size_t dim = dimension();
    if (x.size() != dim || y.size() != dim)
        throw DimensionMismatch("coordinate vector length != algebra dimension");
    const std::size_t arity = x.front().arity();
    std::vector<Polynomial> z(dim, Polynomial::zero(arity));
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            const Polynomial f = x[i] * y[j];
            for (std::size_t m = 0; m < dim; ++m) {
                if (!scalar_is_zero(table_[i][j][m])) z[m] = z[m] + f * table_[i][j][m];
            }
        }
    }
    return z;
}

QMatrix LieAlgebraSpec::ad_matrix(const std::vector<Scalar>& x) const {
    const std::size_t dim = dimension();
    if (x.size() != dim) throw DimensionMismatch("coordinate vector length != algebra dimension");
    QMatrix ad = q_zero(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (scalar_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t m = 0; m < dim; ++m)
                if (!scalar_is_zero(table_[i][j][m]))
                    ad.at(m, j) = ad.at(m, j) + x[i] * table_[i][j][m];
    }
    return ad;
}

PolyMatrix LieAlgebraSpec::ad_matrix(const std::vector<Polynomial>& x) const {
    const std::size_t dim = dimension();
    if (x.size() != dim) throw DimensionMismatch("coordinate vector length != algebra dimension");
    const std::size_t arity = x.front().arity();
    PolyMatrix ad = poly_zero(dim, dim, arity);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t m = 0; m < dim; ++m)
                if (!scalar_is_zero(table_[i][j][m]))
                    ad.at(m, j) = ad.at(m, j) + x[i] * table_[i][j][m];
    }
    return ad;
}

PolyMatrix LieAlgebraSpec::ad_symbolic() const {
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < dimension(); ++i) coords.push_back(ring_.var(i));
    return ad_matrix(coords);
}

QMatrix LieAlgebraSpec::element_matrix(const std::vector<Scalar>& x) const {
    const std::size_t dim = dimension();
    if (x.size() != dim) throw DimensionMismatch("coordinate vector length != algebra dimension");
    QMatrix m = q_zero(matrix_size(), matrix_size());
    for (std::size_t i = 0; i < dim; ++i)
        if (!scalar_is_zero(x[i])) m = m + basis_[i].scale(x[i]);
    return m;
}

PolyMatrix LieAlgebraSpec::element_matrix(const std::vector<Polynomial>& x) const {
    const std::size_t dim = dimension();
    if (x.size() != dim) throw DimensionMismatch("coordinate vector length != algebra dimension");
    const std::size_t arity = x.front().arity();
    PolyMatrix m = poly_zero(matrix_size(), matrix_size(), arity);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t r = 0; r < matrix_size(); ++r)
            for (std::size_t c = 0; c < matrix_size(); ++c)
                if (!scalar_is_zero(basis_[i].at(r, c)))
                    m.at(r, c) = m.at(r, c) + x[i] * basis_[i].at(r, c);
    }
    return m;
}

std::vector<Scalar> LieAlgebraSpec::element_from_matrix(const QMatrix& m) const {
    const std::size_t n = matrix_size();
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("matrix size != defining representation size");
    QMatrix v = q_zero(n * n, dimension());
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v.at(r * n + c, i) = basis_[i].at(r, c);
    std::vector<Scalar> b(n * n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) b[r * n + c] = m.at(r, c);
    auto sol = solve(std::move(v), std::move(b));
    if (!sol) throw InputError("matrix does not lie in the algebra");
    return *sol;
}

const QMatrix& LieAlgebraSpec::killing_form() const {
    if (!killing_) {
        const std::size_t dim = dimension();
        std::vector<QMatrix> ads;
        ads.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Scalar> unit(dim, Scalar(0));
            unit[i] = Scalar(1);
            ads.push_back(ad_matrix(unit));
        }
        QMatrix b = q_zero(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i; j < dim; ++j) {
                Scalar acc(0);
                for (std::size_t u = 0; u < dim; ++u)
                    for (std::size_t v = 0; v < dim; ++v)
                        acc = acc + ads[i].at(u, v) * ads[j].at(v, u);
                b.at(i, j) = acc;
                b.at(j, i) = std::move(acc);
            }
        }
        killing_ = std::move(b);
    }
    return *killing_;
}

QMatrix matrix_exp_nilpotent(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("exp of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix acc = q_identity(n);
    QMatrix term = q_identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = (term * m).scale(Scalar(1) / Scalar(static_cast<long>(k)));
        if (term.is_zero()) return acc;
        acc = acc + term;
    }
    // An n x n nilpotent has index at most n, so the loop must have returned.
    throw InputError("exp requires a nilpotent matrix");
}

Polynomial trace_invariant(const LieAlgebraSpec& g, unsigned k) {
    if (k == 0) throw InputError("trace invariant needs k >= 1");
    const PolyMatrix a = g.ad_symbolic();
    if (k == 1) return a.trace();
    const unsigned lo = k / 2;
    const PolyMatrix p = a.pow(lo);
    const PolyMatrix q = (k - lo == lo) ? p : p * a;
    Polynomial acc = Polynomial::zero(g.dimension());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            acc = acc + p.at(i, j) * q.at(j, i);
    return acc;
}

Scalar trace_power(const QMatrix& a, unsigned k) {
    if (k == 0) throw InputError("trace power needs k >= 1");
    return a.pow(k).trace();
}

RingContext traceless_matrix_ring(std::size_t n) {
    if (n < 2) throw InputError("traceless matrix ring needs n >= 2");
    if (n == 2) return RingContext({"a", "b", "c"});
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (!(i == n && j == n))
                names.push_back("a" + std::to_string(i) + std::to_string(j));
    return RingContext(std::move(names));
}

PolyMatrix symbolic_traceless_matrix(std::size_t n) {
    const RingContext ring = traceless_matrix_ring(n);
    PolyMatrix m = poly_zero(n, n, ring.arity());
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(i == n - 1 && j == n - 1)) m.at(i, j) = ring.var(next++);
    Polynomial corner = Polynomial::zero(ring.arity());
    for (std::size_t i = 0; i + 1 < n; ++i) corner = corner - m.at(i, i);
    m.at(n - 1, n - 1) = std::move(corner);
    return m;
}

std::vector<Polynomial> char_poly_invariants(const PolyMatrix& x) {
    if (x.rows() != x.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const std::size_t n = x.rows();
    if (n < 2) throw InputError("char poly invariants need n >= 2");
    if (!x.trace().is_zero()) throw InputError("char poly invariants need a trace-free matrix");
    const std::size_t arity = x.at(0, 0).arity();
    std::vector<Polynomial> out;
    PolyMatrix m = x;
    Polynomial c = -m.trace(); // c_1, zero by the trace-free requirement
    for (std::size_t k = 2; k <= n; ++k) {
        m = x * (m + poly_identity(n, arity).scale(c));
        c = m.trace() * Scalar(-1, static_cast<long>(k));
        out.push_back(c);
    }
    return out;
}

NilpotencyVerdict is_nilpotent(const LieAlgebraSpec& g, const std::vector<Scalar>& x) {
    const std::size_t dim = g.dimension();
    const QMatrix ad = g.ad_matrix(x);
    const bool route_a = ad.pow(static_cast<unsigned>(dim)).is_zero();
    bool route_b = true;
    QMatrix power = ad;
    for (std::size_t k = 1; k <= dim; ++k) {
        if (k > 1) power = power * ad;
        if (!scalar_is_zero(power.trace())) {
            route_b = false;
            break;
        }
    }
    if (route_a != route_b)
        throw RouteDisagreement("nilpotency routes disagree on " + algebra_to_string(g.name()));
    return {route_a, route_a, route_b};
}

ParabolicSpec standard_parabolic(const LieAlgebraSpec& g, std::size_t block) {
    const AlgebraName name = g.name();
    if (name != AlgebraName::sl2 && name != AlgebraName::sl3 && name != AlgebraName::sl4)
        throw InputError("block parabolics are provided for the special linear tables only");
    const std::size_t n = g.matrix_size();
    if (block == 0 || block >= n) throw InputError("parabolic block size must satisfy 1 <= a < n");
    ParabolicSpec spec;
    spec.block = block;
    for (std::size_t b = 0; b < g.dimension(); ++b) {
        const QMatrix& m = g.basis_matrix(b);
        bool lower_left = false, upper_right = false, elsewhere = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (scalar_is_zero(m.at(i, j))) continue;
                if (i >= block && j < block) lower_left = true;
                else if (i < block && j >= block) upper_right = true;
                else elsewhere = true;
            }
        if (lower_left && (upper_right || elsewhere))
            throw Error("basis element straddles the parabolic split");
        if (lower_left) {
            spec.complement_indices.push_back(b);
        } else {
            spec.p_indices.push_back(b);
            if (upper_right && !elsewhere) spec.nilradical_indices.push_back(b);
        }
    }
    return spec;
}

std::vector<std::vector<Scalar>> parabolic_perp(const LieAlgebraSpec& g, const ParabolicSpec& p) {
    const std::size_t dim = g.dimension();
    const QMatrix& b = g.killing_form();
    QMatrix rows = q_zero(p.p_indices.size(), dim);
    for (std::size_t u = 0; u < p.p_indices.size(); ++u)
        for (std::size_t j = 0; j < dim; ++j) rows.at(u, j) = b.at(p.p_indices[u], j);
    const auto null_basis = nullspace(rows);

    // Audit: the nullspace must be exactly the span of the strict
    // upper-block elementary matrices in the basis.
    const std::size_t nil = p.nilradical_indices.size();
    bool ok = null_basis.size() == nil && p.complement_indices.size() == nil;
    if (ok) {
        QMatrix stacked = q_zero(null_basis.size() + nil, dim);
        for (std::size_t r = 0; r < null_basis.size(); ++r)
            for (std::size_t j = 0; j < dim; ++j) stacked.at(r, j) = null_basis[r][j];
        for (std::size_t r = 0; r < nil; ++r)
            stacked.at(null_basis.size() + r, p.nilradical_indices[r]) = Scalar(1);
        ok = rank(std::move(stacked)) == nil;
    }
    if (!ok) throw Error("parabolic orthogonal-complement audit failed");

    std::vector<std::vector<Scalar>> out;
    for (std::size_t idx : p.nilradical_indices) {
        std::vector<Scalar> v(dim, Scalar(0));
        v[idx] = Scalar(1);
        out.push_back(std::move(v));
    }
    return out;
}

bool pairing_nondegenerate(const LieAlgebraSpec& g,
                           const std::vector<std::vector<Scalar>>& left,
                           const std::vector<std::vector<Scalar>>& right) {
    if (left.empty() || left.size() != right.size()) return false;
    const std::size_t dim = g.dimension();
    const QMatrix& b = g.killing_form();
    QMatrix pairing = q_zero(left.size(), right.size());
    for (std::size_t u = 0; u < left.size(); ++u) {
        if (left[u].size() != dim) throw DimensionMismatch("pairing vector length mismatch");
        for (std::size_t v = 0; v < right.size(); ++v) {
            if (right[v].size() != dim) throw DimensionMismatch("pairing vector length mismatch");
            Scalar acc(0);
            for (std::size_t s = 0; s < dim; ++s) {
                if (scalar_is_zero(left[u][s])) continue;
                for (std::size_t t = 0; t < dim; ++t)
                    if (!scalar_is_zero(right[v][t]))
                        acc = acc + left[u][s] * b.at(s, t) * right[v][t];
            }
            pairing.at(u, v) = std::move(acc);
        }
    }
    return !scalar_is_zero(determinant(std::move(pairing)));
}

bool isotropy_duality_check(const LieAlgebraSpec& g, const ParabolicSpec& p) {
    const auto perp = parabolic_perp(g, p);
    std::vector<std::vector<Scalar>> complement;
    for (std::size_t idx : p.complement_indices) {
        std::vector<Scalar> v(g.dimension(), Scalar(0));
        v[idx] = Scalar(1);
        complement.push_back(std::move(v));
    }
    return pairing_nondegenerate(g, complement, perp);
}

QMatrix nilpotent_from_flag(const Scalar& nu) {
    QMatrix m = q_zero(2, 2);
    m.at(0, 1) = nu;
    return m;
}

std::vector<Scalar> random_element(const LieAlgebraSpec& g, SplitMix64& rng) {
    std::vector<Scalar> x;
    x.reserve(g.dimension());
    for (std::size_t i = 0; i < g.dimension(); ++i)
        x.push_back(Scalar(static_cast<long>(rng.below(7)) - 3));
    return x;
}

std::vector<Scalar> random_nilpotent(const LieAlgebraSpec& g, SplitMix64& rng) {
    const std::size_t n = g.matrix_size();
    QMatrix nil = q_zero(n, n);
    for (std::size_t idx : g.strictly_upper_basis()) {
        const long c = static_cast<long>(rng.below(7)) - 3;
        if (c != 0) nil = nil + g.basis_matrix(idx).scale(Scalar(c));
    }
    QMatrix z = q_zero(n, n);
    for (std::size_t idx : g.strictly_lower_basis()) {
        const long c = static_cast<long>(rng.below(7)) - 3;
        if (c != 0) z = z + g.basis_matrix(idx).scale(Scalar(c));
    }
    const QMatrix conj = matrix_exp_nilpotent(z) * nil * matrix_exp_nilpotent(z.scale(Scalar(-1)));
    return g.element_from_matrix(conj);
}

std::vector<NamedInvariant> production_invariants(AlgebraName name) {
    static std::map<AlgebraName, std::vector<NamedInvariant>> cache;
    if (const auto hit = cache.find(name); hit != cache.end()) return hit->second;
    const LieAlgebraSpec& g = LieAlgebraSpec::get(name);
    std::vector<unsigned> trace_ks;
    switch (name) {
        case AlgebraName::sl2: trace_ks = {2, 3}; break;
        case AlgebraName::sl3: trace_ks = {2, 3, 4, 5, 6}; break;
        case AlgebraName::sl4: trace_ks = {2, 3, 4}; break;
        case AlgebraName::so4: trace_ks = {2, 4, 6}; break;
        case AlgebraName::sp4: trace_ks = {2, 4}; break;
    }
    std::vector<NamedInvariant> out;
    const std::string tag = algebra_to_string(name);
    for (unsigned k : trace_ks)
        out.push_back({tag + ":tr-ad^" + std::to_string(k), static_cast<long>(k),
                       trace_invariant(g, k)});
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < g.dimension(); ++i) coords.push_back(g.coordinate_ring().var(i));
    const auto cs = char_poly_invariants(g.element_matrix(coords));
    for (std::size_t j = 0; j < cs.size(); ++j)
        out.push_back({tag + ":charpoly-c" + std::to_string(j + 2), static_cast<long>(j + 2),
                       cs[j]});
    return cache.emplace(name, std::move(out)).first->second;
}

std::vector<AuditResult> run_algebra_audit(AlgebraName name, std::uint64_t seed) {
    const LieAlgebraSpec& g = LieAlgebraSpec::get(name);
    const std::size_t dim = g.dimension();
    SplitMix64 rng(seed);
    std::vector<AuditResult> results;
    const auto push = [&](const std::string& property, bool pass) {
        results.push_back({property, pass});
    };

    bool anti = true;
    for (std::size_t i = 0; i < dim && anti; ++i)
        for (std::size_t j = 0; j < dim && anti; ++j)
            for (std::size_t m = 0; m < dim && anti; ++m)
                anti = scalar_is_zero(g.structure(i, j)[m] + g.structure(j, i)[m]);
    push("bracket-antisymmetry", anti);

    bool jacobi = true;
    std::vector<std::vector<Scalar>> units(dim, std::vector<Scalar>(dim, Scalar(0)));
    for (std::size_t i = 0; i < dim; ++i) units[i][i] = Scalar(1);
    for (std::size_t i = 0; i < dim && jacobi; ++i)
        for (std::size_t j = 0; j < dim && jacobi; ++j)
            for (std::size_t k = 0; k < dim && jacobi; ++k) {
                const auto a = g.bracket(units[i], g.structure(j, k));
                const auto b = g.bracket(units[j], g.structure(k, i));
                const auto c = g.bracket(units[k], g.structure(i, j));
                for (std::size_t m = 0; m < dim; ++m)
                    if (!scalar_is_zero(a[m] + b[m] + c[m])) {
                        jacobi = false;
                        break;
                    }
            }
    push("jacobi-identity", jacobi);

    const QMatrix& b = g.killing_form();
    push("killing-symmetric", b == b.transpose());
    push("killing-nondegenerate", !scalar_is_zero(determinant(b)));

    const auto killing_of = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        Scalar acc(0);
        for (std::size_t s = 0; s < dim; ++s) {
            if (scalar_is_zero(x[s])) continue;
            for (std::size_t t = 0; t < dim; ++t)
                if (!scalar_is_zero(y[t])) acc = acc + x[s] * b.at(s, t) * y[t];
        }
        return acc;
    };
    bool invariant = true;
    for (int rep = 0; rep < 100 && invariant; ++rep) {
        const auto x = random_element(g, rng);
        const auto y = random_element(g, rng);
        const auto z = random_element(g, rng);
        invariant = scalar_is_zero(killing_of(g.bracket(x, y), z) + killing_of(y, g.bracket(x, z)));
    }
    push("killing-ad-invariant", invariant);

    // B should be a single rational multiple of the defining-rep trace form.
    QMatrix trace_form = q_zero(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            trace_form.at(i, j) = (g.basis_matrix(i) * g.basis_matrix(j)).trace();
    std::optional<Scalar> lambda;
    bool proportional = true;
    for (std::size_t i = 0; i < dim && !lambda; ++i)
        for (std::size_t j = 0; j < dim && !lambda; ++j)
            if (!scalar_is_zero(trace_form.at(i, j))) lambda = b.at(i, j) / trace_form.at(i, j);
    proportional = lambda && b == trace_form.scale(*lambda);
    push("killing-proportional-to-trace-form", proportional);

    bool graded = true;
    for (const auto& inv : production_invariants(name))
        graded = graded && grading_check(inv.poly, inv.degree);
    push("production-invariants-graded", graded);

    bool pointwise = true;
    for (const auto& inv : production_invariants(name)) {
        if (inv.name.find("tr-ad^") == std::string::npos) continue;
        const unsigned k = static_cast<unsigned>(inv.degree);
        for (int rep = 0; rep < 5 && pointwise; ++rep) {
            const auto x = random_element(g, rng);
            pointwise = inv.poly.evaluate(x) == trace_power(g.ad_matrix(x), k);
        }
    }
    push("trace-invariants-match-pointwise", pointwise);

    // Independent derivation of the quadratic char-poly coefficient:
    // for trace-free m, c_2 = -Tr(m^2)/2.
    {
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < dim; ++i) coords.push_back(g.coordinate_ring().var(i));
        const PolyMatrix m = g.element_matrix(coords);
        const auto cs = char_poly_invariants(m);
        Polynomial tr2 = Polynomial::zero(dim);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) tr2 = tr2 + m.at(i, j) * m.at(j, i);
        push("charpoly-c2-newton", cs.front() == tr2 * Scalar(-1, 2));
    }

    bool routes = true;
    try {
        for (int rep = 0; rep < 50 && routes; ++rep) is_nilpotent(g, random_element(g, rng));
        for (int rep = 0; rep < 20 && routes; ++rep)
            routes = is_nilpotent(g, random_nilpotent(g, rng)).nilpotent;
    } catch (const RouteDisagreement&) {
        routes = false;
    }
    push("nilpotency-route-agreement", routes);

    if (name == AlgebraName::sl2 || name == AlgebraName::sl3 || name == AlgebraName::sl4) {
        bool duality = true;
        const std::size_t n = g.matrix_size();
        for (std::size_t a = 1; a < n && duality; ++a) {
            const ParabolicSpec p = standard_parabolic(g, a);
            try {
                duality = parabolic_perp(g, p).size() == a * (n - a) && isotropy_duality_check(g, p);
            } catch (const Error&) {
                duality = false;
            }
        }
        push("parabolic-killing-duality", duality);
    }

    return results;
}

} // namespace finicert
