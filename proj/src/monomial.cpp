#include "finicert/monomial.hpp"

#include <algorithm>

namespace finicert {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
    std::vector<unsigned> e(a.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exponent(i) != 0 && b.exponent(i) != 0) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: scan from the last variable; at the first difference the
    // monomial with the SMALLER exponent is the larger one.
    for (std::size_t i = a.arity(); i-- > 0;) {
        const unsigned ea = a.exponent(i);
        const unsigned eb = b.exponent(i);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
    for (std::size_t i = 0; i < a.arity(); ++i) {
        const unsigned ea = a.exponent(i);
        const unsigned eb = b.exponent(i);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

namespace {

void enumerate(std::size_t arity, std::size_t pos, long remaining,
               std::vector<unsigned>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == arity) {
        cur[pos] = static_cast<unsigned>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (long e = remaining; e >= 0; --e) {
        cur[pos] = static_cast<unsigned>(e);
        enumerate(arity, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, long degree) {
    if (degree < 0) throw InputError("monomial degree must be nonnegative");
    std::vector<Monomial> out;
    if (arity == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<unsigned> cur(arity, 0);
    enumerate(arity, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

} // namespace finicert
