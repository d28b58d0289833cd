#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finicert/certifier.hpp"
#include "finicert/polynomial.hpp"

namespace finicert {

enum class ExpectedOutcome { CertifiedFinite, PositiveDimensional, NonSquareDemo };

struct CorpusEntry {
    std::string name;
    RingContext ring;
    std::vector<Polynomial> polys;
    ExpectedOutcome expected;
    std::string note;
};

/// Power sums (x^k summed over the variables), k = 1..n.
SquareSystem newton_system(std::size_t n);

/// Elementary symmetric polynomials e_1..e_n.
SquareSystem elementary_symmetric_system(std::size_t n);

/// Square systems whose zero set is bigger than the origin, with notes
/// naming the positive-dimensional component.
std::vector<CorpusEntry> rejection_suite();

/// The determinant of a generic trace-free 2x2 matrix [[a, b], [c, -a]]:
/// one cubic-cone demo entry (not a square system), vanishing exactly on
/// the nilpotent matrices.
CorpusEntry sl2_det_demo();

/// Dense random homogeneous system: every monomial of the target degree
/// appears, with coefficient drawn from {1, 2, 3, -1, -2, -3} by a
/// SplitMix64 stream. Restricted to n <= 3 and degrees <= 3.
SquareSystem random_system(std::size_t n, const std::vector<long>& degrees, std::uint64_t seed);

/// Every named entry: the symmetric families for n = 1, 2, 3, the
/// rejection suite, and the trace-free determinant demo.
std::vector<CorpusEntry> full_corpus();

} // namespace finicert
