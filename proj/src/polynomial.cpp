#include "finicert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace finicert {

Polynomial Polynomial::constant(std::size_t arity, const Scalar& c) {
    if (scalar_is_zero(c)) return zero(arity);
    return Polynomial(arity, {Term{c, Monomial::unit(arity)}});
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i) {
    return Polynomial(arity, {Term{make_scalar(1), Monomial::unit_var(arity, i)}});
}

Polynomial Polynomial::monomial(const Scalar& c, const Monomial& m) {
    if (scalar_is_zero(c)) return zero(m.arity());
    return Polynomial(m.arity(), {Term{c, m}});
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
    std::map<Monomial, Scalar, GrevlexGreater> acc;
    for (auto& t : terms) {
        if (t.mono.arity() != arity) throw ArityMismatch("term arity mismatch");
        auto [it, fresh] = acc.emplace(t.mono, t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!scalar_is_zero(c)) out.push_back(Term{c, m});
    return Polynomial(arity, std::move(out));
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return Degree::of(d);
}

std::optional<Degree> Polynomial::is_homogeneous() const {
    if (terms_.empty()) return Degree::neg_infinity();
    const long d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return std::nullopt;
    return Degree::of(d);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("polynomial arity mismatch");
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int cmp = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
        if (cmp > 0) {
            out.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!scalar_is_zero(c)) out.push_back(Term{std::move(c), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(arity_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("polynomial arity mismatch");
    std::map<Monomial, Scalar, GrevlexGreater> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coeff * b.coeff;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!scalar_is_zero(c)) out.push_back(Term{c, m});
    return Polynomial(arity_, std::move(out));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (scalar_is_zero(c)) return zero(arity_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial result = constant(arity_, make_scalar(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
    if (m.arity() != arity_) throw ArityMismatch("polynomial arity mismatch");
    if (scalar_is_zero(c)) return zero(arity_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.coeff *= c;
        t.mono = t.mono * m;
    }
    return r; // multiplying all monomials by a fixed one preserves grevlex order
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != arity_) throw ArityMismatch("evaluation point arity mismatch");
    Scalar total = make_scalar(0);
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < arity_; ++i) {
            const unsigned e = t.mono.exponent(i);
            if (e != 0) v *= scalar_pow(point[i], e);
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != arity_) throw ArityMismatch("composition needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().arity();
    for (const auto& q : images)
        if (q.arity() != target) throw ArityMismatch("composition images disagree on arity");
    Polynomial total = zero(target);
    for (const auto& t : terms_) {
        Polynomial v = constant(target, t.coeff);
        for (std::size_t i = 0; i < arity_; ++i) {
            const unsigned e = t.mono.exponent(i);
            if (e != 0) v = v * images[i].pow(e);
        }
        total = total + v;
    }
    return total;
}

Polynomial Polynomial::dehomogenize_chart(std::size_t k) const {
    if (k >= arity_) throw IndexOutOfRange("chart variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<unsigned> e;
        e.reserve(arity_ - 1);
        for (std::size_t i = 0; i < arity_; ++i)
            if (i != k) e.push_back(t.mono.exponent(i));
        out.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return from_terms(arity_ - 1, std::move(out));
}

Polynomial Polynomial::homogenize(std::size_t k, long target) const {
    if (k > arity_) throw IndexOutOfRange("insertion index out of range");
    if (target < 0) throw TargetTooSmall("homogenization target must be nonnegative");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const long d = t.mono.total_degree();
        if (d > target) throw TargetTooSmall("homogenization target below term degree");
        std::vector<unsigned> e;
        e.reserve(arity_ + 1);
        for (std::size_t i = 0; i < k; ++i) e.push_back(t.mono.exponent(i));
        e.push_back(static_cast<unsigned>(target - d));
        for (std::size_t i = k; i < arity_; ++i) e.push_back(t.mono.exponent(i));
        out.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return from_terms(arity_ + 1, std::move(out));
}

bool grading_check(const Polynomial& p, long d) {
    if (d < 0) throw InputError("grading degree must be nonnegative");
    const std::size_t n = p.arity();
    // Extend the ring by a scaling variable l (last index). Substituting
    // x_i -> l*x_i multiplies each term's monomial by l^(term degree), so
    // the identity p(l*x) = l^d * p(x) can be compared term by term.
    std::vector<Term> scaled, reference;
    for (const auto& t : p.terms()) {
        std::vector<unsigned> e = t.mono.exponents();
        e.push_back(static_cast<unsigned>(t.mono.total_degree()));
        scaled.push_back(Term{t.coeff, Monomial(std::move(e))});

        std::vector<unsigned> r = t.mono.exponents();
        r.push_back(static_cast<unsigned>(d));
        reference.push_back(Term{t.coeff, Monomial(std::move(r))});
    }
    return Polynomial::from_terms(n + 1, std::move(scaled)) ==
           Polynomial::from_terms(n + 1, std::move(reference));
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw InputError("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second) throw InputError("duplicate variable name: '" + n + "'");
    }
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

} // namespace finicert
