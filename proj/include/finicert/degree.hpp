#pragma once

#include <compare>
#include <string>

#include "finicert/errors.hpp"

namespace finicert {

/// Total degree with a distinguished NEG_INFINITY for the zero polynomial.
/// NEG_INFINITY compares smaller than every finite degree.
class Degree {
public:
    static Degree neg_infinity() { return Degree(false, 0); }
    static Degree of(long v) { return Degree(true, v); }

    bool finite() const { return finite_; }

    long value() const {
        if (!finite_) throw IndexOutOfRange("NEG_INFINITY degree has no finite value");
        return value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

    bool operator==(const Degree&) const = default;

    std::strong_ordering operator<=>(const Degree& other) const {
        if (finite_ != other.finite_)
            return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!finite_) return std::strong_ordering::equal;
        return value_ <=> other.value_;
    }

    bool operator==(long v) const { return finite_ && value_ == v; }
    std::strong_ordering operator<=>(long v) const { return *this <=> Degree::of(v); }

private:
    Degree(bool finite, long value) : finite_(finite), value_(value) {}

    bool finite_;
    long value_;
};

} // namespace finicert
