#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finicert/matrix.hpp"
#include "finicert/polynomial.hpp"
#include "finicert/prng.hpp"

namespace finicert {

enum class AlgebraName { sl2, sl3, sl4, so4, sp4 };

std::string algebra_to_string(AlgebraName name);
std::optional<AlgebraName> algebra_from_string(const std::string& text);
std::vector<AlgebraName> all_algebras();

/// A Lie algebra presented by structure constants on a fixed ordered basis.
/// Every shipped table is derived at construction from an explicit matrix
/// realization: the bracket of two basis matrices is the commutator,
/// re-expressed in the basis (which also audits closure). The orthogonal
/// and symplectic algebras use split bilinear forms (antidiagonal Gram
/// matrices) so that strictly triangular nilpotents exist over the
/// rationals.
class LieAlgebraSpec {
public:
    static const LieAlgebraSpec& get(AlgebraName name);

    AlgebraName name() const { return name_; }
    std::size_t dimension() const { return basis_.size(); }
    std::size_t matrix_size() const { return basis_.front().rows(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const QMatrix& basis_matrix(std::size_t i) const;

    /// Coordinates of [b_i, b_j] in the basis.
    const std::vector<Scalar>& structure(std::size_t i, std::size_t j) const;

    /// Polynomial ring on the coordinates, one variable per basis label.
    const RingContext& coordinate_ring() const { return ring_; }

    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    std::vector<Polynomial> bracket(const std::vector<Polynomial>& x,
                                    const std::vector<Polynomial>& y) const;

    /// Matrix of ad(x) = [x, -] on the basis coordinates.
    QMatrix ad_matrix(const std::vector<Scalar>& x) const;
    PolyMatrix ad_matrix(const std::vector<Polynomial>& x) const;
    /// ad of the generic element whose coordinates are the ring variables;
    /// entries are linear forms.
    PolyMatrix ad_symbolic() const;

    /// Defining-representation matrix of a coordinate vector.
    QMatrix element_matrix(const std::vector<Scalar>& x) const;
    PolyMatrix element_matrix(const std::vector<Polynomial>& x) const;
    /// Inverse of element_matrix; throws InputError when the matrix does
    /// not lie in the span of the basis.
    std::vector<Scalar> element_from_matrix(const QMatrix& m) const;

    /// Killing form B_ij = Tr(ad b_i · ad b_j) on the basis (cached).
    const QMatrix& killing_form() const;

    /// Basis indices whose defining matrices are strictly upper (resp.
    /// lower) triangular; used to build guaranteed-nilpotent samples.
    const std::vector<std::size_t>& strictly_upper_basis() const { return upper_; }
    const std::vector<std::size_t>& strictly_lower_basis() const { return lower_; }

private:
    LieAlgebraSpec(AlgebraName name, std::vector<std::string> labels, std::vector<QMatrix> basis);

    AlgebraName name_;
    std::vector<std::string> labels_;
    std::vector<QMatrix> basis_;
    RingContext ring_;
    std::vector<std::vector<std::vector<Scalar>>> table_; // table_[i][j] = coords of [b_i,b_j]
    std::vector<std::size_t> upper_;
    std::vector<std::size_t> lower_;
    mutable std::optional<QMatrix> killing_;
};

/// exp of a nilpotent rational matrix (finite sum); throws InputError if
/// the input is not nilpotent.
QMatrix matrix_exp_nilpotent(const QMatrix& m);

/// Tr(ad(x)^k) as a polynomial in the coordinates, computed with a
/// balanced power split: Tr(A^k) = sum_ij (A^a)_ij (A^b)_ji with
/// a = floor(k/2), b = k - a, so no entry ever exceeds degree b.
Polynomial trace_invariant(const LieAlgebraSpec& g, unsigned k);

/// Tr(a^k) of a rational matrix (pointwise counterpart).
Scalar trace_power(const QMatrix& a, unsigned k);

/// Ring for a generic trace-free n x n matrix: (a, b, c) for n = 2
/// (matrix [[a, b], [c, -a]]), row-major entry names a11, a12, ... with
/// the last diagonal entry eliminated for n >= 3.
RingContext traceless_matrix_ring(std::size_t n);
PolyMatrix symbolic_traceless_matrix(std::size_t n);

/// Coefficients [c_2, ..., c_n] of char(t) = t^n + c_2 t^(n-2) + ... + c_n
/// for a trace-free square polynomial matrix, by the Faddeev-LeVerrier
/// recurrence (divisions are by integers only, so everything stays exact).
/// c_j is homogeneous of degree j in the matrix entries.
std::vector<Polynomial> char_poly_invariants(const PolyMatrix& x);

struct NilpotencyVerdict {
    bool nilpotent;
    bool route_a; // ad(x)^dim == 0
    bool route_b; // Tr(ad(x)^k) == 0 for k = 1..dim
};

/// Decides nilpotency of ad(x) two independent ways and insists they
/// agree (RouteDisagreement otherwise).
NilpotencyVerdict is_nilpotent(const LieAlgebraSpec& g, const std::vector<Scalar>& x);

/// Standard parabolic of sl_n given by an upper block split (a, n - a).
/// Only defined for the special linear algebras, whose shipped bases are
/// elementary matrices plus diagonal differences.
struct ParabolicSpec {
    std::size_t block; // a, with 1 <= a < n
    std::vector<std::size_t> p_indices;          // basis of p
    std::vector<std::size_t> complement_indices; // basis of a complement of p
    std::vector<std::size_t> nilradical_indices; // E_ij with i <= a < j
};

ParabolicSpec standard_parabolic(const LieAlgebraSpec& g, std::size_t block);

/// Killing-orthogonal complement of p, returned as coordinate vectors.
/// Computes the nullspace of the Killing rows of p and audits that it
/// equals the span of the strict upper-block nilradical before returning
/// that canonical basis; throws Error if the audit fails.
std::vector<std::vector<Scalar>> parabolic_perp(const LieAlgebraSpec& g, const ParabolicSpec& p);

/// Whether the Killing pairing matrix B(left_u, right_v) is square and
/// invertible.
bool pairing_nondegenerate(const LieAlgebraSpec& g,
                           const std::vector<std::vector<Scalar>>& left,
                           const std::vector<std::vector<Scalar>>& right);

/// Whether the Killing pairing between a complement of p (representing
/// g/p) and parabolic_perp(g, p) is perfect.
bool isotropy_duality_check(const LieAlgebraSpec& g, const ParabolicSpec& p);

/// The rank-one nilpotent [[0, nu], [0, 0]] attached to a line map.
QMatrix nilpotent_from_flag(const Scalar& nu);

/// Random coordinate vector with integer entries in [-3, 3].
std::vector<Scalar> random_element(const LieAlgebraSpec& g, SplitMix64& rng);

/// Random conjugate exp(z) N exp(-z) of a strictly upper-triangular
/// element N, with z strictly lower-triangular; nilpotent by construction.
std::vector<Scalar> random_nilpotent(const LieAlgebraSpec& g, SplitMix64& rng);

struct NamedInvariant {
    std::string name;
    long degree;
    Polynomial poly; // over coordinate_ring() of the algebra
};

/// The invariants this toolkit ships for the given algebra: even (and for
/// sl_n all) power traces of ad up to a per-algebra cap, plus the
/// characteristic-polynomial coefficients of the generic defining-
/// representation element.
std::vector<NamedInvariant> production_invariants(AlgebraName name);

struct AuditResult {
    std::string property;
    bool pass;
};

/// Self-contained property audit of one algebra table (bracket axioms,
/// Killing facts, grading of production invariants, nilpotency route
/// agreement, parabolic duality for sl_n).
std::vector<AuditResult> run_algebra_audit(AlgebraName name, std::uint64_t seed);

} // namespace finicert
