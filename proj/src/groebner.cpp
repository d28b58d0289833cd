#include "finicert/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "finicert/errors.hpp"

namespace finicert {

namespace {

void check_permutation(const std::vector<std::size_t>& perm, std::size_t arity) {
    if (perm.empty()) return;
    if (perm.size() != arity) throw InputError("variable permutation size mismatch");
    std::vector<bool> seen(arity, false);
    for (std::size_t v : perm) {
        if (v >= arity || seen[v]) throw InputError("invalid variable permutation");
        seen[v] = true;
    }
}

Monomial permuted(const Monomial& m, const std::vector<std::size_t>& perm) {
    std::vector<unsigned> e(m.arity());
    for (std::size_t k = 0; k < perm.size(); ++k) e[k] = m.exponent(perm[k]);
    return Monomial(std::move(e));
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
    check_permutation(permutation, a.arity());
    if (permutation.empty())
        return kind == Kind::Grevlex ? grevlex_compare(a, b) : lex_compare(a, b);
    const Monomial pa = permuted(a, permutation);
    const Monomial pb = permuted(b, permutation);
    return kind == Kind::Grevlex ? grevlex_compare(pa, pb) : lex_compare(pa, pb);
}

const Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw InputError("the zero polynomial has no leading term");
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (order.compare(ts[i].mono, ts[best].mono) > 0) best = i;
    return ts[best];
}

namespace {

struct StepCounter {
    std::uint64_t used = 0;
    std::uint64_t budget;

    explicit StepCounter(std::uint64_t b) : budget(b) {}

    void tick() {
        if (++used > budget)
            throw ResourceBudgetExceeded("step budget exhausted after " +
                                         std::to_string(budget) + " steps");
    }
};

NormalFormResult divide(const Polynomial& p, const std::vector<Polynomial>& basis,
                        const MonomialOrder& order, StepCounter& steps) {
    const std::size_t arity = p.arity();
    for (const auto& b : basis)
        if (b.arity() != arity) throw ArityMismatch("basis arity mismatch");

    NormalFormResult out;
    out.remainder = Polynomial::zero(arity);
    out.quotients.assign(basis.size(), Polynomial::zero(arity));

    Polynomial h = p;
    while (!h.is_zero()) {
        steps.tick();
        const Term lt = leading_term(h, order);
        bool reduced = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j].is_zero()) continue;
            const Term& bt = leading_term(basis[j], order);
            if (!bt.mono.divides(lt.mono)) continue;
            const Monomial q = lt.mono / bt.mono;
            const Scalar c = lt.coeff / bt.coeff;
            h = h - basis[j].mul_term(c, q);
            out.quotients[j] = out.quotients[j] + Polynomial::monomial(c, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            const Polynomial term = Polynomial::monomial(lt.coeff, lt.mono);
            out.remainder = out.remainder + term;
            h = h - term;
        }
    }
    return out;
}

struct WorkItem {
    Polynomial poly;
    std::vector<Polynomial> row; // over the original generators
};

std::vector<Polynomial> combine_rows(const std::vector<Polynomial>& a, const Scalar& ca,
                                     const Monomial& ma, const std::vector<Polynomial>& b,
                                     const Scalar& cb, const Monomial& mb) {
    std::vector<Polynomial> out(a.size(), Polynomial::zero(ma.arity()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i].mul_term(ca, ma) - b[i].mul_term(cb, mb);
    return out;
}

} // namespace

NormalFormResult reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                        const MonomialOrder& order) {
    StepCounter unlimited(~std::uint64_t{0});
    return divide(p, basis, order, unlimited);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::uint64_t budget) {
    if (gens.empty()) throw InputError("buchberger needs at least one generator");
    const std::size_t arity = gens.front().arity();
    for (const auto& g : gens)
        if (g.arity() != arity) throw ArityMismatch("generator arity mismatch");
    check_permutation(order.permutation, arity);

    StepCounter steps(budget);

    std::vector<WorkItem> G;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<Polynomial> row(gens.size(), Polynomial::zero(arity));
        row[i] = Polynomial::constant(arity, make_scalar(1));
        G.push_back(WorkItem{gens[i], std::move(row)});
    }

    auto polys_of = [&G]() {
        std::vector<Polynomial> ps;
        ps.reserve(G.size());
        for (const auto& w : G) ps.push_back(w.poly);
        return ps;
    };

    // Pair queue under the normal strategy: (lcm degree, i, j).
    std::set<std::tuple<long, std::size_t, std::size_t>> queue;
    auto push_pairs_with = [&](std::size_t m) {
        for (std::size_t i = 0; i < m; ++i) {
            const Monomial l = mono_lcm(leading_term(G[i].poly, order).mono,
                                        leading_term(G[m].poly, order).mono);
            queue.emplace(l.total_degree(), i, m);
        }
    };
    for (std::size_t m = 0; m < G.size(); ++m) push_pairs_with(m);

    while (!queue.empty()) {
        const auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        (void)deg;

        const Term li = leading_term(G[i].poly, order);
        const Term lj = leading_term(G[j].poly, order);
        if (mono_coprime(li.mono, lj.mono)) continue; // product criterion

        steps.tick();
        const Monomial l = mono_lcm(li.mono, lj.mono);
        const Monomial mi = l / li.mono;
        const Monomial mj = l / lj.mono;
        const Scalar ci = make_scalar(1) / li.coeff;
        const Scalar cj = make_scalar(1) / lj.coeff;
        const Polynomial s = G[i].poly.mul_term(ci, mi) - G[j].poly.mul_term(cj, mj);
        std::vector<Polynomial> srow = combine_rows(G[i].row, ci, mi, G[j].row, cj, mj);

        const auto basis = polys_of();
        NormalFormResult nf = divide(s, basis, order, steps);
        if (nf.remainder.is_zero()) continue;

        for (std::size_t k = 0; k < G.size(); ++k)
            for (std::size_t g = 0; g < srow.size(); ++g)
                srow[g] = srow[g] - nf.quotients[k] * G[k].row[g];
        G.push_back(WorkItem{nf.remainder, std::move(srow)});
        push_pairs_with(G.size() - 1);
    }

    // Minimalize: drop every element whose leading monomial is divisible by
    // another kept element's (ties broken toward the earlier element).
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial& mi = leading_term(G[i].poly, order).mono;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mj = leading_term(G[j].poly, order).mono;
            if (mj.divides(mi) && (mj != mi || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<WorkItem> M;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) M.push_back(std::move(G[i]));

    // Inter-reduce tails. Leading monomials are untouched (no other leading
    // monomial divides them), so one full pass leaves every element in
    // normal form with respect to the rest.
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j == i) continue;
            others.push_back(M[j].poly);
            idx.push_back(j);
        }
        NormalFormResult nf = divide(M[i].poly, others, order, steps);
        M[i].poly = nf.remainder;
        for (std::size_t k = 0; k < others.size(); ++k)
            for (std::size_t g = 0; g < M[i].row.size(); ++g)
                M[i].row[g] = M[i].row[g] - nf.quotients[k] * M[idx[k]].row[g];
    }

    // Monic normalization, then a deterministic order: descending leads.
    for (auto& w : M) {
        const Scalar inv = make_scalar(1) / leading_term(w.poly, order).coeff;
        w.poly = w.poly * inv;
        for (auto& r : w.row) r = r * inv;
    }
    std::stable_sort(M.begin(), M.end(), [&](const WorkItem& a, const WorkItem& b) {
        return order.compare(leading_term(a.poly, order).mono,
                             leading_term(b.poly, order).mono) > 0;
    });

    GroebnerBasis out;
    out.generators = gens;
    out.order = order;
    for (auto& w : M) {
        out.basis.push_back(std::move(w.poly));
        out.cofactors.push_back(std::move(w.row));
    }
    return out;
}

std::optional<std::vector<Polynomial>> contains_one(const GroebnerBasis& gb) {
    if (gb.basis.size() != 1) return std::nullopt;
    const Polynomial& b = gb.basis.front();
    if (b != Polynomial::constant(b.arity(), make_scalar(1))) return std::nullopt;
    return gb.cofactors.front();
}

std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb) {
    if (gb.generators.empty()) return std::nullopt;
    const std::size_t arity = gb.generators.front().arity();

    std::vector<Monomial> leads;
    for (const auto& b : gb.basis) leads.push_back(leading_term(b, gb.order).mono);

    // Finite iff every variable has a pure power among the leads; the
    // minimal such exponents bound the staircase box.
    std::vector<unsigned> bound(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
        bool found = false;
        for (const auto& m : leads) {
            if (m.exponent(v) == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; w < arity; ++w)
                if (w != v && m.exponent(w) != 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], m.exponent(v)) : m.exponent(v);
                found = true;
            }
        }
        if (!found) {
            // A constant in the basis still kills everything.
            bool hasUnit = false;
            for (const auto& m : leads)
                if (m.is_unit()) hasUnit = true;
            if (!hasUnit) return std::nullopt;
            bound[v] = 0;
        }
    }

    std::vector<Monomial> standard;
    std::vector<unsigned> cur(arity, 0);
    while (true) {
        Monomial m(cur);
        bool divisible = false;
        for (const auto& l : leads)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) standard.push_back(m);

        // Odometer over the box [0, bound).
        std::size_t v = 0;
        while (v < arity) {
            if (bound[v] != 0 && cur[v] + 1 < bound[v]) {
                ++cur[v];
                break;
            }
            cur[v] = 0;
            ++v;
        }
        if (v == arity) break;
    }

    std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order.compare(a, b) < 0;
    });
    return standard;
}

bool spoly_audit(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
            const Term& li = leading_term(gb.basis[i], gb.order);
            const Term& lj = leading_term(gb.basis[j], gb.order);
            const Monomial l = mono_lcm(li.mono, lj.mono);
            const Polynomial s =
                gb.basis[i].mul_term(make_scalar(1) / li.coeff, l / li.mono) -
                gb.basis[j].mul_term(make_scalar(1) / lj.coeff, l / lj.mono);
            if (!reduce(s, gb.basis, gb.order).remainder.is_zero()) return false;
        }
    }
    return true;
}

bool cofactor_audit(const GroebnerBasis& gb) {
    if (gb.cofactors.size() != gb.basis.size()) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
        if (gb.cofactors[j].size() != gb.generators.size()) return false;
        Polynomial acc = Polynomial::zero(gb.basis[j].arity());
        for (std::size_t i = 0; i < gb.generators.size(); ++i)
            acc = acc + gb.cofactors[j][i] * gb.generators[i];
        if (acc != gb.basis[j]) return false;
    }
    return true;
}

} // namespace finicert
