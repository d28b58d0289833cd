#include "finicert/certifier.hpp"

#include <algorithm>

namespace finicert {

SquareSystem::SquareSystem(RingContext ring, std::vector<Polynomial> polys)
    : ring_(std::move(ring)), polys_(std::move(polys)) {
    const std::size_t n = ring_.arity();
    if (polys_.size() != n)
        throw DimensionMismatch("a square system needs exactly one polynomial per variable");
    for (const auto& p : polys_) {
        if (p.arity() != n) throw ArityMismatch("system polynomial arity mismatch");
        const auto d = p.is_homogeneous();
        if (!d) throw InputError("system polynomials must be homogeneous");
        if (!d->finite() || d->value() < 1)
            throw InputError("system polynomials must have degree at least 1");
        degrees_.push_back(d->value());
    }
}

std::size_t GeneratorSet::size() const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (c > 0 && total > std::size_t{1} << 24)
            throw InputError("generator set too large to enumerate");
        total *= static_cast<std::size_t>(c);
    }
    return total;
}

bool GeneratorSet::contains(const Monomial& m) const {
    if (m.arity() != n) throw ArityMismatch("monomial arity mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (static_cast<long>(m.exponent(i)) >= c) return false;
    return true;
}

std::vector<Monomial> GeneratorSet::monomials() const {
    size(); // bounds check
    std::vector<Monomial> out;
    std::vector<unsigned> cur(n, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t v = 0;
        while (v < n) {
            if (static_cast<long>(cur[v]) + 1 < c) {
                ++cur[v];
                break;
            }
            cur[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

namespace {

std::vector<Polynomial> chart_system(const SquareSystem& sys, std::size_t k) {
    std::vector<Polynomial> out;
    out.reserve(sys.size());
    for (const auto& p : sys.polys()) out.push_back(p.dehomogenize_chart(k));
    return out;
}

ChartCertificate make_chart_certificate(std::size_t k, std::vector<Polynomial> cofactors) {
    ChartCertificate cc;
    cc.chart = k;
    for (const auto& u : cofactors) cc.degrees.push_back(u.degree());
    cc.cofactors = std::move(cofactors);
    return cc;
}

} // namespace

Verdict check_origin_only_zero(const SquareSystem& sys, const MonomialOrder& order,
                               std::uint64_t budget) {
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const GroebnerBasis gb = buchberger(chart_system(sys, k), order, budget);
        if (!contains_one(gb))
            return Verdict{Status::RejectedPositiveDimensional,
                           RejectionWitness{k, gb.basis}};
    }
    return Verdict{Status::CertifiedFinite, std::nullopt};
}

FinitenessCertificate finiteness_certificate(const SquareSystem& sys,
                                             const MonomialOrder& order,
                                             std::uint64_t budget) {
    const std::size_t n = sys.size();
    FinitenessCertificate cert;

    for (std::size_t k = 0; k < n; ++k) {
        const GroebnerBasis gb = buchberger(chart_system(sys, k), order, budget);
        auto u = contains_one(gb);
        if (!u) throw NotFinite(RejectionWitness{k, gb.basis});
        cert.charts.push_back(make_chart_certificate(k, std::move(*u)));
    }

    // The smallest admissible exponent: strictly bigger than every
    // d_i + e_ik that actually occurs.
    long bound = 0;
    for (const auto& cc : cert.charts)
        for (std::size_t i = 0; i < n; ++i)
            if (cc.degrees[i].finite())
                bound = std::max(bound, sys.degrees()[i] + cc.degrees[i].value());
    cert.c = bound + 1;

    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial& u = cert.charts[k].cofactors[i];
            // The degree-(c - d_i) homogenization with X_k restored; its
            // chart restriction is U_i^k again.
            row.push_back(u.is_zero() ? Polynomial::zero(n)
                                      : u.homogenize(k, cert.c - sys.degrees()[i]));
        }
        cert.lifted.push_back(std::move(row));
    }

    if (!verify_certificate(sys, cert))
        throw CertificateInvalid("constructed certificate failed re-verification");
    return cert;
}

bool verify_certificate(const SquareSystem& sys, const FinitenessCertificate& cert) {
    const std::size_t n = sys.size();
    if (cert.c < 1) return false;
    if (cert.charts.size() != n || cert.lifted.size() != n) return false;

    for (std::size_t k = 0; k < n; ++k) {
        const ChartCertificate& cc = cert.charts[k];
        if (cc.chart != k) return false;
        if (cc.cofactors.size() != n || cc.degrees.size() != n) return false;
        if (cert.lifted[k].size() != n) return false;

        // Degree bookkeeping: stored e_ik is the true degree and the
        // bound c > d_i + e_ik holds wherever e_ik is finite.
        for (std::size_t i = 0; i < n; ++i) {
            if (cc.cofactors[i].arity() != n - 1) return false;
            if (cc.degrees[i] != cc.cofactors[i].degree()) return false;
            if (cc.degrees[i].finite() &&
                cert.c <= sys.degrees()[i] + cc.degrees[i].value())
                return false;
        }

        // Chart identity: sum_i U_i^k * P_i^k = 1 in the chart variables.
        Polynomial chartSum = Polynomial::zero(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            chartSum = chartSum + cc.cofactors[i] * sys.polys()[i].dehomogenize_chart(k);
        if (chartSum != Polynomial::constant(n - 1, make_scalar(1))) return false;

        // Lifted cofactors: homogeneous of degree c - d_i (zero allowed),
        // and X_k^c = sum_i lifted[k][i] * P_i exactly.
        Polynomial liftSum = Polynomial::zero(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial& t = cert.lifted[k][i];
            if (t.arity() != n) return false;
            if (!t.is_zero()) {
                const auto d = t.is_homogeneous();
                if (!d || *d != cert.c - sys.degrees()[i]) return false;
            }
            liftSum = liftSum + t * sys.polys()[i];
        }
        const Polynomial xkc = Polynomial::monomial(
            make_scalar(1),
            Monomial::unit_var(n, k, static_cast<unsigned>(cert.c)));
        if (liftSum != xkc) return false;
    }
    return true;
}

GeneratorSet generator_set(const SquareSystem& sys, const FinitenessCertificate& cert) {
    return GeneratorSet{cert.c, sys.size()};
}

namespace {

using RewriteTerms = std::map<Monomial, Polynomial, GrevlexLess>;

class Rewriter {
public:
    Rewriter(const SquareSystem& sys, const FinitenessCertificate& cert)
        : cert_(cert), n_(sys.size()) {}

    const RewriteTerms& go(const Monomial& alpha) {
        auto it = memo_.find(alpha);
        if (it != memo_.end()) return it->second;

        RewriteTerms acc;
        std::size_t k = n_;
        for (std::size_t v = 0; v < n_; ++v)
            if (static_cast<long>(alpha.exponent(v)) >= cert_.c) {
                k = v;
                break;
            }

        if (k == n_) {
            // Already inside S.
            acc.emplace(alpha, Polynomial::constant(n_, make_scalar(1)));
        } else {
            // X^alpha = X^beta * X_k^c = sum_i (X^beta * lifted[k][i]) * P_i.
            std::vector<unsigned> b = alpha.exponents();
            b[k] -= static_cast<unsigned>(cert_.c);
            const Monomial beta(std::move(b));
            for (std::size_t i = 0; i < n_; ++i) {
                const Polynomial expanded =
                    cert_.lifted[k][i].mul_term(make_scalar(1), beta);
                const Polynomial pi = Polynomial::variable(n_, i);
                for (const auto& term : expanded.terms()) {
                    // Each monomial drops total degree by d_i >= 1.
                    const RewriteTerms& sub = go(term.mono);
                    for (const auto& [s, a] : sub) {
                        const Polynomial contribution = a * pi * term.coeff;
                        auto [slot, fresh] = acc.emplace(s, contribution);
                        if (!fresh) slot->second = slot->second + contribution;
                    }
                }
            }
            // Drop coefficients that cancelled to zero.
            for (auto itr = acc.begin(); itr != acc.end();)
                itr = itr->second.is_zero() ? acc.erase(itr) : std::next(itr);
        }
        return memo_.emplace(alpha, std::move(acc)).first->second;
    }

private:
    const FinitenessCertificate& cert_;
    std::size_t n_;
    std::map<Monomial, RewriteTerms, GrevlexLess> memo_;
};

} // namespace

RewriteResult rewrite_monomial(const SquareSystem& sys, const FinitenessCertificate& cert,
                               const Monomial& alpha) {
    if (alpha.arity() != sys.size()) throw ArityMismatch("monomial arity mismatch");
    if (!verify_certificate(sys, cert))
        throw CertificateInvalid("certificate does not verify against this system");

    Rewriter rw(sys, cert);
    RewriteResult out;
    out.target = alpha;
    out.terms = rw.go(alpha);

    // Substitution check: replacing each formal symbol by its system
    // polynomial must reproduce the target exactly.
    const std::size_t n = sys.size();
    Polynomial expanded = Polynomial::zero(n);
    for (const auto& [s, a] : out.terms)
        expanded = expanded + a.compose(sys.polys()).mul_term(make_scalar(1), s);
    if (expanded != Polynomial::monomial(make_scalar(1), alpha))
        throw CertificateInvalid("rewrite expansion mismatch");
    return out;
}

RingContext chart_ring(const RingContext& ring, std::size_t k) {
    if (k >= ring.arity()) throw IndexOutOfRange("chart index out of range");
    if (ring.arity() < 2) throw InputError("a one-variable chart has no variables left");
    std::vector<std::string> names;
    for (std::size_t j = 0; j < ring.arity(); ++j)
        if (j != k) names.push_back("t" + std::to_string(j + 1));
    return RingContext(std::move(names));
}

std::optional<std::size_t> fiber_dimension(const SquareSystem& sys,
                                           const std::vector<Scalar>& target,
                                           const MonomialOrder& order,
                                           std::uint64_t budget) {
    const std::size_t n = sys.size();
    if (target.size() != n) throw DimensionMismatch("target length must match system size");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(sys.polys()[i] - Polynomial::constant(n, target[i]));
    const GroebnerBasis gb = buchberger(gens, order, budget);
    const auto standard = quotient_basis(gb);
    if (!standard) return std::nullopt;
    return standard->size();
}

} // namespace finicert
