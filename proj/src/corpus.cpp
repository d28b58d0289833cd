#include "finicert/corpus.hpp"

#include "finicert/errors.hpp"
#include "finicert/expr.hpp"
#include "finicert/liealg.hpp"
#include "finicert/prng.hpp"

namespace finicert {

namespace {

RingContext standard_ring(std::size_t n) {
    if (n == 0) throw InputError("systems need at least one variable");
    if (n == 1) return RingContext({"x"});
    if (n == 2) return RingContext({"x", "y"});
    if (n == 3) return RingContext({"x", "y", "z"});
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return RingContext(std::move(names));
}

} // namespace

SquareSystem newton_system(std::size_t n) {
    const RingContext ring = standard_ring(n);
    std::vector<Polynomial> polys;
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial p = Polynomial::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            p = p + Polynomial::monomial(Scalar(1), Monomial::unit_var(n, i, static_cast<unsigned>(k)));
        polys.push_back(std::move(p));
    }
    return SquareSystem(ring, std::move(polys));
}

SquareSystem elementary_symmetric_system(std::size_t n) {
    const RingContext ring = standard_ring(n);
    // e_k collected by one pass of the recurrence prod_i (1 + x_i t).
    std::vector<Polynomial> e(n + 1, Polynomial::zero(n));
    e[0] = Polynomial::constant(n, Scalar(1));
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial xi = Polynomial::variable(n, i);
        for (std::size_t k = std::min(i + 1, n); k >= 1; --k) e[k] = e[k] + e[k - 1] * xi;
    }
    return SquareSystem(ring, std::vector<Polynomial>(e.begin() + 1, e.end()));
}

std::vector<CorpusEntry> rejection_suite() {
    const RingContext ring = standard_ring(2);
    const auto parse = [&](const std::string& text) { return parse_polynomial(text, ring); };
    std::vector<CorpusEntry> out;
    out.push_back({"reject-axes", ring, {parse("x^2"), parse("x*y")},
                   ExpectedOutcome::PositiveDimensional,
                   "both vanish on the whole line x = 0"});
    out.push_back({"reject-diagonal", ring, {parse("x^2 - y^2"), parse("x^2 - x*y")},
                   ExpectedOutcome::PositiveDimensional,
                   "both vanish on the whole line x = y"});
    out.push_back({"reject-repeated", ring, {parse("x + y"), parse("x^2 + 2*x*y + y^2")},
                   ExpectedOutcome::PositiveDimensional,
                   "the square of a form adds no zero-set constraint"});
    out.push_back({"reject-rank", ring, {parse("x*y"), parse("x*y")},
                   ExpectedOutcome::PositiveDimensional,
                   "a repeated polynomial vanishes on both axes"});
    return out;
}

CorpusEntry sl2_det_demo() {
    const RingContext ring = traceless_matrix_ring(2);
    const auto invariants = char_poly_invariants(symbolic_traceless_matrix(2));
    return {"sl2-det", ring, {invariants.front()}, ExpectedOutcome::NonSquareDemo,
            "determinant -a^2 - b*c of [[a, b], [c, -a]]; vanishes exactly on "
            "the nilpotent cone, e.g. at (0, 1, 0)"};
}

SquareSystem random_system(std::size_t n, const std::vector<long>& degrees, std::uint64_t seed) {
    if (n == 0 || n > 3) throw InputError("random systems are provided for 1 <= n <= 3");
    if (degrees.size() != n) throw InputError("need one degree per variable");
    for (long d : degrees)
        if (d < 1 || d > 3) throw InputError("random system degrees must lie in 1..3");
    const RingContext ring = standard_ring(n);
    SplitMix64 rng(seed);
    static const long kCoeffs[6] = {1, 2, 3, -1, -2, -3};
    std::vector<Polynomial> polys;
    for (long d : degrees) {
        std::vector<Term> terms;
        for (const Monomial& m : monomials_of_degree(n, d))
            terms.push_back({Scalar(kCoeffs[rng.below(6)]), m});
        polys.push_back(Polynomial::from_terms(n, std::move(terms)));
    }
    return SquareSystem(ring, std::move(polys));
}

std::vector<CorpusEntry> full_corpus() {
    std::vector<CorpusEntry> out;
    for (std::size_t n = 1; n <= 3; ++n) {
        const SquareSystem newton = newton_system(n);
        out.push_back({"newton" + std::to_string(n), newton.ring(), newton.polys(),
                       ExpectedOutcome::CertifiedFinite,
                       "power sums 1.." + std::to_string(n)});
        const SquareSystem elem = elementary_symmetric_system(n);
        out.push_back({"elementary" + std::to_string(n), elem.ring(), elem.polys(),
                       ExpectedOutcome::CertifiedFinite,
                       "elementary symmetric polynomials 1.." + std::to_string(n)});
    }
    for (CorpusEntry& e : rejection_suite()) out.push_back(std::move(e));
    out.push_back(sl2_det_demo());
    return out;
}

} // namespace finicert
