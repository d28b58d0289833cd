#include "finicert/scalar.hpp"

#include "finicert/errors.hpp"

#include <cctype>

namespace finicert {

Scalar make_scalar(long num, long den) {
    if (den == 0) throw InputError("scalar denominator must be nonzero");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

Scalar make_scalar(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw InputError("scalar denominator must be nonzero");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

Scalar parse_scalar(const std::string& text) {
    std::size_t pos = 0;
    auto read_integer = [&](bool allow_sign) -> Integer {
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start)
            throw InputError("invalid rational literal: '" + text + "'");
        Integer v(text.substr(digits_start, pos - digits_start));
        return negative ? Integer(-v) : v;
    };

    Integer num = read_integer(true);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_integer(false);
    }
    if (pos != text.size())
        throw InputError("invalid rational literal: '" + text + "'");
    return make_scalar(num, den);
}

std::string scalar_to_string(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar scalar_pow(const Scalar& base, unsigned long exponent) {
    if (exponent == 0) return Scalar(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    // Powers of a canonical fraction are canonical.
    Scalar out;
    out.get_num() = num;
    out.get_den() = den;
    return out;
}

} // namespace finicert
