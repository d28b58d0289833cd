#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "finicert/degree.hpp"
#include "finicert/groebner.hpp"
#include "finicert/polynomial.hpp"

namespace finicert {

/// A square system: n homogeneous polynomials in n variables, each of
/// degree >= 1. The zero fiber of such a map always contains the origin;
/// this module decides whether it contains anything else.
class SquareSystem {
public:
    SquareSystem(RingContext ring, std::vector<Polynomial> polys);

    const RingContext& ring() const { return ring_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    std::size_t size() const { return polys_.size(); } // n
    const std::vector<long>& degrees() const { return degrees_; }

private:
    RingContext ring_;
    std::vector<Polynomial> polys_;
    std::vector<long> degrees_;
};

/// Chart data: on the affine chart X_k = 1 the system dehomogenizes to
/// P_i^k, and the cofactors witness sum_i U_i^k * P_i^k = 1.
struct ChartCertificate {
    std::size_t chart;                 // 0-based variable index k
    std::vector<Polynomial> cofactors; // U_i^k, in the n-1 chart variables
    std::vector<Degree> degrees;       // e_ik = deg U_i^k (NEG_INFINITY for 0)
};

/// The finiteness certificate: one exponent c with, per chart k, lifted
/// homogeneous cofactors satisfying X_k^c = sum_i lifted[k][i] * P_i.
/// Every X_k^c lies in the ideal, so the common zero set is the origin
/// alone, and monomials with any exponent >= c can be rewritten downward.
struct FinitenessCertificate {
    long c = 0;
    std::vector<ChartCertificate> charts;        // indexed by chart, 0..n-1
    std::vector<std::vector<Polynomial>> lifted; // lifted[k][i], arity n
};

/// S = all monomials with every exponent < c: the c^n generators of the
/// coordinate ring as a module over the subring generated by the system.
struct GeneratorSet {
    long c = 0;
    std::size_t n = 0;

    std::size_t size() const;
    bool contains(const Monomial& m) const;
    /// Enumerated ascending under grevlex.
    std::vector<Monomial> monomials() const;
};

/// Rewriting output: target = sum over s in S of a_s(P_1..P_n) * s, where
/// each coefficient a_s is a polynomial in n formal symbols (one per
/// system polynomial).
struct RewriteResult {
    Monomial target;
    std::map<Monomial, Polynomial, GrevlexLess> terms;
};

enum class Status { CertifiedFinite, RejectedPositiveDimensional, InputError };

/// Evidence of a positive-dimensional zero set: the chart whose
/// dehomogenized system generates a proper ideal, plus that ideal's
/// reduced basis. (A rational point on the fiber may not exist, so the
/// witness is the basis, not a point.)
struct RejectionWitness {
    std::size_t chart; // 0-based
    std::vector<Polynomial> reduced_basis;
};

struct Verdict {
    Status status;
    std::optional<RejectionWitness> witness; // present iff rejected
};

/// Thrown when a certificate is requested for a system whose zero set is
/// bigger than the origin.
class NotFinite : public Error {
public:
    explicit NotFinite(RejectionWitness w)
        : Error("system zero set is positive-dimensional (chart " +
                std::to_string(w.chart + 1) + ")"),
          witness_(std::move(w)) {}

    const RejectionWitness& witness() const { return witness_; }

private:
    RejectionWitness witness_;
};

/// Decides f^{-1}(0) = {0}. A nonzero common zero scales into some chart
/// X_k = 1 (homogeneity), so the condition is equivalent to: for every k
/// the dehomogenized system generates the unit ideal. Charts are checked
/// in index order and the first proper one is the witness.
Verdict check_origin_only_zero(const SquareSystem& sys,
                               const MonomialOrder& order = MonomialOrder::grevlex(),
                               std::uint64_t budget = kDefaultStepBudget);

/// Builds the certificate: per-chart cofactors from the unit-ideal
/// computation, c = 1 + max(d_i + e_ik) (the smallest admissible choice),
/// and the degree-(c - d_i) homogenizations as lifted cofactors. All
/// invariants are re-checked by exact expansion before returning.
/// Throws NotFinite when the system is rejected.
FinitenessCertificate finiteness_certificate(const SquareSystem& sys,
                                             const MonomialOrder& order = MonomialOrder::grevlex(),
                                             std::uint64_t budget = kDefaultStepBudget);

/// Independent re-verification: structure, degree bookkeeping, the bound
/// c > d_i + e_ik, chart identities sum U_i^k P_i^k = 1, homogeneity of
/// the lifted cofactors, and the lifted identities X_k^c = sum lifted*P_i,
/// all by direct expansion. Never throws; any defect returns false.
bool verify_certificate(const SquareSystem& sys, const FinitenessCertificate& cert);

/// The inductive rewriting: expresses X^alpha over the generator set S
/// with coefficients in the system polynomials. Recursion replaces
/// X_k^c via the certificate whenever some exponent reaches c; the total
/// degree drops by d_i >= 1 each step, so it terminates. Verified by
/// substitution-expansion before returning. Throws CertificateInvalid if
/// the certificate does not verify against the system.
RewriteResult rewrite_monomial(const SquareSystem& sys, const FinitenessCertificate& cert,
                               const Monomial& alpha);

GeneratorSet generator_set(const SquareSystem& sys, const FinitenessCertificate& cert);

/// Vector-space dimension of the quotient by <P_i - target_i> (the fiber
/// length, multiplicities included); nullopt when the fiber is
/// positive-dimensional. Counts length, not distinct points.
/// Names for the n-1 variables of the chart X_k = 1: t<j> with j the
/// 1-based index of the surviving variable, so chart 2 of (x, y, z) reads
/// (t1, t3) with t_j = X_j / X_k.
RingContext chart_ring(const RingContext& ring, std::size_t k);

std::optional<std::size_t> fiber_dimension(const SquareSystem& sys,
                                           const std::vector<Scalar>& target,
                                           const MonomialOrder& order = MonomialOrder::grevlex(),
                                           std::uint64_t budget = kDefaultStepBudget);

} // namespace finicert
