#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "finicert/certifier.hpp"
#include "finicert/polynomial.hpp"

namespace finicert {

/// A parsed system file: a variable header plus one polynomial per line.
struct SystemFile {
    RingContext ring;
    std::vector<Polynomial> polys;
};

/// Text format:
///   # comment lines and trailing # comments are stripped
///   variables: x y
///   x + y
///   x^2 + y^2
/// The first nonempty line must be the `variables:` header; every later
/// nonempty line is one expression. Parse errors carry the file's
/// 1-based line number.
SystemFile parse_system_text(const std::string& text);
SystemFile load_system_file(const std::string& path);

/// Canonical text rendering (header + one canonical expression per
/// line, terms in descending graded order). This is also the exact byte
/// stream that system_hash digests.
std::string system_to_text(const RingContext& ring, const std::vector<Polynomial>& polys);

/// FNV-1a, 64-bit: offset 0xcbf29ce484222325, prime 0x100000001b3.
std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:" + 16 lowercase hex digits over system_to_text.
std::string system_hash(const RingContext& ring, const std::vector<Polynomial>& polys);

/// Certificate serialization. JSON with a fixed key order, so writing
/// the parse of a file reproduces it byte for byte. Polynomials are term
/// lists [[exponents...], "coefficient"], coefficients as exact
/// rational strings; chart indices are 1-based in the file.
std::string certificate_to_json_text(const SquareSystem& sys, const FinitenessCertificate& cert);

struct LoadedCertificate {
    std::string version;
    std::string system_hash;
    std::vector<std::string> variables;
    std::vector<long> degrees;
    FinitenessCertificate cert;
};

/// Parses and structurally validates certificate JSON (key presence,
/// types, arities, exponent ranges). Mathematical validity is
/// verify_certificate's job, not this one's. Throws InputError on any
/// malformed input.
LoadedCertificate certificate_from_json_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace finicert
