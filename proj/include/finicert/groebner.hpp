#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "finicert/polynomial.hpp"

namespace finicert {

/// Total, multiplicative, well-founded order on monomials. The optional
/// permutation reorders variables before comparison: permutation[0] is the
/// most significant variable. Empty means identity.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex };

    Kind kind = Kind::Grevlex;
    std::vector<std::size_t> permutation;

    static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
    static MonomialOrder lex() { return {Kind::Lex, {}}; }

    /// <0, 0, >0 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder&) const = default;
};

/// Leading term of a nonzero polynomial under the given order.
const Term& leading_term(const Polynomial& p, const MonomialOrder& order);

struct NormalFormResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // one per basis element

    /// p = sum quotients[j]*basis[j] + remainder, and no term of the
    /// remainder is divisible by any basis leading term.
};

/// Multivariate division of p by the basis sequence. Deterministic: each
/// step reduces the current leading term by the first basis element whose
/// leading monomial divides it. Zero basis entries are skipped.
NormalFormResult reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                        const MonomialOrder& order);

struct GroebnerBasis {
    std::vector<Polynomial> generators; // the input, kept verbatim
    std::vector<Polynomial> basis;      // reduced: monic, inter-reduced
    MonomialOrder order;
    // basis[j] = sum_i cofactors[j][i] * generators[i], exactly.
    std::vector<std::vector<Polynomial>> cofactors;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1000000;

/// Buchberger's algorithm with cofactor tracking. Pair selection is the
/// normal strategy (smallest lcm degree first); pairs with coprime leading
/// monomials are skipped. The result is the reduced basis, every element
/// carrying an exact cofactor row over the original generators.
///
/// Every elementary step (one S-pair formed, one term reduced) counts
/// against the budget; ResourceBudgetExceeded is thrown when it runs out.
/// Cofactor degrees have no a-priori bound, so the budget is the only
/// guard against runaway inputs.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::uint64_t budget = kDefaultStepBudget);

/// When the basis is {1}, returns U with sum U[i]*generators[i] = 1,
/// read off the cofactor matrix. Absent when the ideal is proper.
std::optional<std::vector<Polynomial>> contains_one(const GroebnerBasis& gb);

/// The standard monomials: all monomials divisible by no basis leading
/// term. Returned sorted ascending under gb.order when finite; absent when
/// the quotient is infinite-dimensional (some variable has no pure power
/// among the leading terms).
std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb);

/// Post-hoc audit: every S-polynomial of the basis reduces to zero. Runs
/// without the coprime shortcut.
bool spoly_audit(const GroebnerBasis& gb);

/// Post-hoc audit: the cofactor identity holds exactly for every basis
/// element.
bool cofactor_audit(const GroebnerBasis& gb);

} // namespace finicert
