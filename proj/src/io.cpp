#include "finicert/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "finicert/errors.hpp"
#include "finicert/expr.hpp"

namespace finicert {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Message of a ParseError with its own "line:col: " prefix removed, so
/// it can be re-positioned at a file line.
std::string position_stripped(const ParseError& e) {
    const std::string whole = e.what();
    const auto first = whole.find(':');
    if (first == std::string::npos) return whole;
    const auto second = whole.find(':', first + 1);
    if (second == std::string::npos || second + 2 > whole.size()) return whole;
    return whole.substr(second + 2);
}

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char ch : name)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

} // namespace

SystemFile parse_system_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::string> names;
    std::vector<std::string> exprs;
    std::vector<std::size_t> expr_lines;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (!have_header) {
            const std::string prefix = "variables:";
            if (line.rfind(prefix, 0) != 0)
                throw ParseError(line_no, 1, "expected a 'variables:' header line");
            std::istringstream vars(line.substr(prefix.size()));
            std::string name;
            while (vars >> name) {
                if (!valid_identifier(name))
                    throw ParseError(line_no, 1, "bad variable name '" + name + "'");
                names.push_back(name);
            }
            if (names.empty()) throw ParseError(line_no, 1, "no variables declared");
            have_header = true;
            continue;
        }
        exprs.push_back(line);
        expr_lines.push_back(line_no);
    }
    if (!have_header) throw InputError("system text has no 'variables:' header");
    if (exprs.empty()) throw InputError("system text declares no polynomials");
    RingContext ring(names);
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < exprs.size(); ++i) {
        try {
            polys.push_back(parse_polynomial(exprs[i], ring));
        } catch (const ParseError& e) {
            throw ParseError(expr_lines[i], e.column(), position_stripped(e));
        }
    }
    return {std::move(ring), std::move(polys)};
}

SystemFile load_system_file(const std::string& path) { return parse_system_text(read_text_file(path)); }

std::string system_to_text(const RingContext& ring, const std::vector<Polynomial>& polys) {
    std::string out = "variables:";
    for (std::size_t i = 0; i < ring.arity(); ++i) out += " " + ring.name(i);
    out += "\n";
    for (const Polynomial& p : polys) out += polynomial_to_string(p, ring) + "\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string system_hash(const RingContext& ring, const std::vector<Polynomial>& polys) {
    const std::uint64_t h = fnv1a64(system_to_text(ring, polys));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace {

ordered_json poly_to_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const Term& t : p.terms()) {
        ordered_json exps = ordered_json::array();
        for (std::size_t v = 0; v < t.mono.arity(); ++v) exps.push_back(t.mono.exponent(v));
        terms.push_back(ordered_json::array({exps, scalar_to_string(t.coeff)}));
    }
    return terms;
}

Polynomial poly_from_json(const ordered_json& j, std::size_t arity) {
    if (!j.is_array()) throw InputError("polynomial must be a term array");
    std::vector<Term> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_array() || !item[1].is_string())
            throw InputError("term must be [[exponents...], \"coefficient\"]");
        if (item[0].size() != arity) throw InputError("term exponent arity mismatch");
        std::vector<unsigned> exps;
        for (const auto& e : item[0]) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                throw InputError("exponents must be nonnegative integers");
            exps.push_back(static_cast<unsigned>(e.get<long long>()));
        }
        terms.push_back({parse_scalar(item[1].get<std::string>()), Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(arity, std::move(terms));
}

ordered_json degree_to_json(const Degree& d) {
    if (!d.finite()) return "-inf";
    return d.value();
}

Degree degree_from_json(const ordered_json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "-inf") throw InputError("bad degree string");
        return Degree::neg_infinity();
    }
    if (!j.is_number_integer()) throw InputError("degree must be an integer or \"-inf\"");
    return Degree::of(j.get<long>());
}

} // namespace

std::string certificate_to_json_text(const SquareSystem& sys, const FinitenessCertificate& cert) {
    const std::size_t n = sys.size();
    ordered_json root;
    root["format"] = "finiteness-certificate";
    root["version"] = "0.1.0";
    root["system_hash"] = system_hash(sys.ring(), sys.polys());
    ordered_json vars = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) vars.push_back(sys.ring().name(i));
    root["variables"] = vars;
    root["degrees"] = sys.degrees();
    root["c"] = cert.c;
    ordered_json charts = ordered_json::array();
    for (std::size_t k = 0; k < cert.charts.size(); ++k) {
        const ChartCertificate& cc = cert.charts[k];
        ordered_json entry;
        entry["chart"] = cc.chart + 1; // 1-based on disk
        ordered_json degs = ordered_json::array();
        for (const Degree& d : cc.degrees) degs.push_back(degree_to_json(d));
        entry["cofactor_degrees"] = degs;
        ordered_json cof = ordered_json::array();
        for (const Polynomial& u : cc.cofactors) cof.push_back(poly_to_json(u));
        entry["cofactors"] = cof;
        ordered_json lifted = ordered_json::array();
        for (const Polynomial& u : cert.lifted[k]) lifted.push_back(poly_to_json(u));
        entry["lifted"] = lifted;
        charts.push_back(std::move(entry));
    }
    root["charts"] = std::move(charts);
    return root.dump(2) + "\n";
}

LoadedCertificate certificate_from_json_text(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        LoadedCertificate out;
        if (root.at("format").get<std::string>() != "finiteness-certificate")
            throw InputError("unrecognized certificate format tag");
        out.version = root.at("version").get<std::string>();
        if (out.version != "0.1.0") throw InputError("unsupported certificate version " + out.version);
        out.system_hash = root.at("system_hash").get<std::string>();
        out.variables = root.at("variables").get<std::vector<std::string>>();
        out.degrees = root.at("degrees").get<std::vector<long>>();
        const std::size_t n = out.variables.size();
        if (n == 0 || out.degrees.size() != n)
            throw InputError("variables/degrees lists are inconsistent");
        out.cert.c = root.at("c").get<long>();
        const auto& charts = root.at("charts");
        if (!charts.is_array() || charts.size() != n)
            throw InputError("certificate must carry one chart per variable");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& entry = charts.at(k);
            ChartCertificate cc;
            const long chart_1 = entry.at("chart").get<long>();
            if (chart_1 < 1 || static_cast<std::size_t>(chart_1) > n)
                throw InputError("chart index out of range");
            cc.chart = static_cast<std::size_t>(chart_1) - 1;
            for (const auto& d : entry.at("cofactor_degrees")) cc.degrees.push_back(degree_from_json(d));
            for (const auto& u : entry.at("cofactors")) cc.cofactors.push_back(poly_from_json(u, n - 1));
            if (cc.degrees.size() != n || cc.cofactors.size() != n)
                throw InputError("chart must carry one cofactor and one degree per polynomial");
            std::vector<Polynomial> lifted;
            for (const auto& u : entry.at("lifted")) lifted.push_back(poly_from_json(u, n));
            if (lifted.size() != n) throw InputError("chart must carry one lifted cofactor per polynomial");
            out.cert.charts.push_back(std::move(cc));
            out.cert.lifted.push_back(std::move(lifted));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw InputError("failed writing " + path);
}

} // namespace finicert
