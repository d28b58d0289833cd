#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finicert/degree.hpp"
#include "finicert/monomial.hpp"
#include "finicert/scalar.hpp"

namespace finicert {

struct Term {
    Scalar coeff;
    Monomial mono;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in a
/// canonical form: grevlex-descending, no zero coefficients, every
/// coefficient in lowest terms. Two polynomials are equal iff their term
/// vectors are equal.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(std::size_t arity) { return Polynomial(arity, {}); }
    static Polynomial constant(std::size_t arity, const Scalar& c);
    static Polynomial variable(std::size_t arity, std::size_t i);
    static Polynomial monomial(const Scalar& c, const Monomial& m);

    /// Builds from an arbitrary term list: sorts, merges duplicates, drops
    /// zero coefficients.
    static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; NEG_INFINITY for the zero polynomial.
    Degree degree() const;

    /// Common degree of all terms if every term has the same total degree
    /// (NEG_INFINITY for zero); nullopt otherwise.
    std::optional<Degree> is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    bool operator==(const Polynomial&) const = default;

    Polynomial pow(unsigned long e) const;

    /// this * (c * m), a single-term product.
    Polynomial mul_term(const Scalar& c, const Monomial& m) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Substitutes images[i] for variable i. All images must share one
    /// arity, which becomes the arity of the result.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /// Sets variable k to 1 and drops it; the remaining variables keep
    /// their relative order. Result arity is arity() - 1.
    Polynomial dehomogenize_chart(std::size_t k) const;

    /// Inserts a new variable at index k carrying exponent
    /// target - (term degree) on each term, so the result is homogeneous
    /// of degree `target`. Throws TargetTooSmall if any term already
    /// exceeds the target degree.
    Polynomial homogenize(std::size_t k, long target) const;

private:
    Polynomial(std::size_t arity, std::vector<Term> terms)
        : arity_(arity), terms_(std::move(terms)) {}

    std::size_t arity_ = 0;
    std::vector<Term> terms_; // canonical: grevlex-descending, nonzero coeffs
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

/// Checks the scaling law p(l*x) = l^d * p(x) as a polynomial identity by
/// extending the ring with a fresh scaling variable. d must be >= 0.
bool grading_check(const Polynomial& p, long d);

/// Names the variables of a polynomial ring. Arity is always >= 1 and the
/// names are distinct identifiers ([A-Za-z_][A-Za-z0-9_]*).
class RingContext {
public:
    explicit RingContext(std::vector<std::string> names);

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    /// Index of a variable name; nullopt if unknown.
    std::optional<std::size_t> index_of(const std::string& name) const;

    Polynomial var(std::size_t i) const { return Polynomial::variable(arity(), i); }

private:
    std::vector<std::string> names_;
};

} // namespace finicert
