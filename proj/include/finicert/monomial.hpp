#pragma once

#include <cstddef>
#include <vector>

#include "finicert/errors.hpp"

namespace finicert {

/// Exponent vector of fixed length (the ring arity). The empty vector is
/// the unit monomial of the constant ring (arity 0), which chart work on
/// one-variable systems produces.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    /// The unit monomial (all exponents zero) of the given arity. A named
    /// factory instead of a size_t constructor, so Monomial({2}) can never
    /// silently mean "arity 2".
    static Monomial unit(std::size_t arity) { return Monomial(std::vector<unsigned>(arity, 0)); }

    static Monomial unit_var(std::size_t arity, std::size_t var, unsigned e = 1) {
        if (var >= arity) throw IndexOutOfRange("variable index out of range");
        Monomial m = unit(arity);
        m.exps_[var] = e;
        return m;
    }

    std::size_t arity() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<unsigned>& exponents() const { return exps_; }

    long total_degree() const {
        long d = 0;
        for (unsigned e : exps_) d += static_cast<long>(e);
        return d;
    }

    bool is_unit() const {
        for (unsigned e : exps_)
            if (e != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_arity(o);
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    /// True iff this monomial divides m.
    bool divides(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    /// this / d. Precondition: d.divides(*this).
    Monomial operator/(const Monomial& d) const {
        check_arity(d);
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (d.exps_[i] > exps_[i]) throw InputError("monomial division is not exact");
            r.exps_[i] -= d.exps_[i];
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;

private:
    void check_arity(const Monomial& o) const {
        if (exps_.size() != o.exps_.size()) throw ArityMismatch("monomial arity mismatch");
    }

    std::vector<unsigned> exps_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison with the identity variable
/// order. Returns <0, 0, >0 for a < b, a == b, a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Lexicographic comparison, identity variable order.
int lex_compare(const Monomial& a, const Monomial& b);

/// Strict comparator "a > b" in grevlex; the canonical storage order of
/// polynomial terms (leading term first).
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) > 0;
    }
};

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) < 0;
    }
};

/// All monomials of the given total degree, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t arity, long degree);

} // namespace finicert
