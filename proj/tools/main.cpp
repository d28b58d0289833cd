#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finicert/certifier.hpp"
#include "finicert/corpus.hpp"
#include "finicert/errors.hpp"
#include "finicert/expr.hpp"
#include "finicert/io.hpp"
#include "finicert/liealg.hpp"

namespace {

using namespace finicert;

// Exit codes: 0 success, 1 mathematical rejection or failed verification,
// 2 malformed input, 3 step budget exhausted.
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    return MonomialOrder::grevlex();
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

std::vector<Scalar> parse_point(const std::string& text) {
    std::vector<Scalar> out;
    for (const std::string& tok : split_commas(text)) out.push_back(parse_scalar(tok));
    return out;
}

Monomial parse_exponents(const std::string& text) {
    std::vector<unsigned> exps;
    for (const std::string& tok : split_commas(text)) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw InputError("bad exponent '" + tok + "'");
        }
        if (used != tok.size() || v > 1u << 20) throw InputError("bad exponent '" + tok + "'");
        exps.push_back(static_cast<unsigned>(v));
    }
    return Monomial(std::move(exps));
}

SquareSystem load_square_system(const std::string& path) {
    SystemFile f = load_system_file(path);
    return SquareSystem(std::move(f.ring), std::move(f.polys));
}

void print_witness(const RingContext& ring, const RejectionWitness& w) {
    std::cout << "rejected: chart " << (w.chart + 1) << " (" << ring.name(w.chart)
              << " = 1) has a positive-dimensional zero set\n";
    const RingContext cr = chart_ring(ring, w.chart);
    std::cout << "reduced chart basis:\n";
    for (const Polynomial& p : w.reduced_basis)
        std::cout << "  " << polynomial_to_string(p, cr) << "\n";
}

int cmd_check(const std::string& path, const std::string& order, std::uint64_t budget) {
    const SquareSystem sys = load_square_system(path);
    const Verdict v = check_origin_only_zero(sys, order_from_name(order), budget);
    if (v.status == Status::CertifiedFinite) {
        std::cout << "certified: the zero fiber is exactly the origin\n";
        return 0;
    }
    print_witness(sys.ring(), *v.witness);
    return kExitRejected;
}

int cmd_certify(const std::string& path, const std::string& order, std::uint64_t budget,
                const std::string& out_path) {
    const SquareSystem sys = load_square_system(path);
    FinitenessCertificate cert;
    try {
        cert = finiteness_certificate(sys, order_from_name(order), budget);
    } catch (const NotFinite& e) {
        print_witness(sys.ring(), e.witness());
        return kExitRejected;
    }
    std::cout << "certified with c = " << cert.c << "\n"
              << "system hash: " << system_hash(sys.ring(), sys.polys()) << "\n";
    const std::string text = certificate_to_json_text(sys, cert);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& sys_path, const std::string& cert_path) {
    const SquareSystem sys = load_square_system(sys_path);
    const LoadedCertificate loaded = certificate_from_json_text(read_text_file(cert_path));
    if (loaded.system_hash != system_hash(sys.ring(), sys.polys())) {
        std::cout << "verification failed: certificate was issued for a different system "
                  << "(hash mismatch)\n";
        return kExitRejected;
    }
    if (loaded.variables != sys.ring().names() || loaded.degrees != sys.degrees()) {
        std::cout << "verification failed: certificate metadata disagrees with the system\n";
        return kExitRejected;
    }
    if (!verify_certificate(sys, loaded.cert)) {
        std::cout << "verification failed: certificate identities do not hold\n";
        return kExitRejected;
    }
    std::cout << "verified: certificate matches the system (c = " << loaded.cert.c << ")\n";
    return 0;
}

int cmd_rewrite(const std::string& sys_path, const std::string& cert_path,
                const std::string& exponents) {
    const SquareSystem sys = load_square_system(sys_path);
    const LoadedCertificate loaded = certificate_from_json_text(read_text_file(cert_path));
    const Monomial alpha = parse_exponents(exponents);
    if (alpha.arity() != sys.size())
        throw InputError("need one exponent per variable");
    const RewriteResult rr = rewrite_monomial(sys, loaded.cert, alpha);

    std::vector<std::string> symbols;
    for (std::size_t i = 1; i <= sys.size(); ++i) symbols.push_back("p" + std::to_string(i));
    const RingContext prings(symbols);
    std::cout << polynomial_to_string(Polynomial::monomial(Scalar(1), alpha), sys.ring())
              << " rewrites over " << rr.terms.size() << " generator(s):\n";
    for (const auto& [s, a] : rr.terms)
        std::cout << "  " << polynomial_to_string(Polynomial::monomial(Scalar(1), s), sys.ring())
                  << " : " << polynomial_to_string(a, prings) << "\n";
    std::cout << "self-check: expansion reproduces the monomial\n";
    return 0;
}

int cmd_fiber(const std::string& sys_path, const std::string& point, const std::string& order,
              std::uint64_t budget) {
    const SquareSystem sys = load_square_system(sys_path);
    const std::vector<Scalar> target = parse_point(point);
    const auto dim = fiber_dimension(sys, target, order_from_name(order), budget);
    if (!dim) {
        std::cout << "POSITIVE_DIMENSIONAL: the fiber over this target is infinite\n";
        return kExitRejected;
    }
    std::cout << "fiber length: " << *dim << "\n";
    return 0;
}

int cmd_corpus(const std::string& out_dir, std::uint64_t seed) {
    std::vector<CorpusEntry> entries = full_corpus();
    // Two seeded random systems, labeled with the outcome they actually have.
    const auto add_random = [&](std::size_t n, const std::vector<long>& degs,
                                const std::string& shape) {
        const SquareSystem sys = random_system(n, degs, seed);
        const bool finite = check_origin_only_zero(sys).status == Status::CertifiedFinite;
        entries.push_back({"random-" + shape + "-seed" + std::to_string(seed), sys.ring(),
                           sys.polys(),
                           finite ? ExpectedOutcome::CertifiedFinite
                                  : ExpectedOutcome::PositiveDimensional,
                           std::string("dense random system; ") +
                               (finite ? "certifies as finite" : "rejected as positive-dimensional")});
    };
    add_random(2, {2, 2}, "2x22");
    add_random(3, {1, 2, 2}, "3x122");

    if (out_dir.empty()) {
        for (const CorpusEntry& e : entries) {
            std::cout << "# " << e.name << ": " << e.note << "\n"
                      << system_to_text(e.ring, e.polys) << "\n";
        }
        return 0;
    }
    std::filesystem::create_directories(out_dir);
    for (const CorpusEntry& e : entries) {
        const std::string path = (std::filesystem::path(out_dir) / (e.name + ".system")).string();
        write_text_file(path, "# " + e.name + ": " + e.note + "\n" + system_to_text(e.ring, e.polys));
    }
    std::cout << "wrote " << entries.size() << " system files to " << out_dir << "\n";
    return 0;
}

int cmd_nilpotent(const std::string& algebra, const std::string& coords) {
    const auto name = algebra_from_string(algebra);
    if (!name) throw InputError("unknown algebra '" + algebra + "'");
    const LieAlgebraSpec& g = LieAlgebraSpec::get(*name);
    const std::vector<Scalar> x = parse_point(coords);
    const NilpotencyVerdict v = is_nilpotent(g, x);
    std::cout << "nilpotent: " << (v.nilpotent ? "yes" : "no") << " (both routes agree)\n";
    return 0;
}

int cmd_liealg_audit(const std::string& algebra, std::uint64_t seed) {
    std::vector<AlgebraName> names;
    if (algebra.empty()) {
        names = all_algebras();
    } else {
        const auto name = algebra_from_string(algebra);
        if (!name) throw InputError("unknown algebra '" + algebra + "'");
        names.push_back(*name);
    }
    bool all_pass = true;
    for (AlgebraName name : names) {
        for (const AuditResult& r : run_algebra_audit(name, seed)) {
            std::cout << algebra_to_string(name) << " " << r.property << ": "
                      << (r.pass ? "ok" : "FAIL") << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : kExitRejected;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finiteness certificates for square homogeneous polynomial maps"};
    app.require_subcommand(1);

    std::string sys_path, cert_path, out_path, out_dir, order = "grevlex";
    std::string point, exponents, algebra, coords;
    std::uint64_t budget = kDefaultStepBudget;
    std::uint64_t seed = 0;

    const auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", order, "monomial order (default grevlex)")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--budget", budget, "work-step budget for basis computations");
    };

    CLI::App* check = app.add_subcommand("check", "decide whether the zero fiber is only the origin");
    check->add_option("system", sys_path, "system file")->required();
    add_order(check);

    CLI::App* certify = app.add_subcommand("certify", "emit a finiteness certificate");
    certify->add_option("system", sys_path, "system file")->required();
    certify->add_option("--out", out_path, "certificate output path (stdout when omitted)");
    add_order(certify);

    CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate against a system");
    verify->add_option("system", sys_path, "system file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    CLI::App* rewrite = app.add_subcommand("rewrite", "rewrite a monomial over the generator set");
    rewrite->add_option("system", sys_path, "system file")->required();
    rewrite->add_option("certificate", cert_path, "certificate file")->required();
    rewrite->add_option("exponents", exponents, "comma-separated exponent vector")->required();

    CLI::App* fiber = app.add_subcommand("fiber", "exact length of the fiber over a rational target");
    fiber->add_option("system", sys_path, "system file")->required();
    fiber->add_option("point", point, "comma-separated rational target")->required();
    add_order(fiber);

    CLI::App* corpus = app.add_subcommand("corpus", "emit the example corpus as system files");
    corpus->add_option("--out", out_dir, "directory for one file per entry (stdout when omitted)");
    corpus->add_option("--seed", seed, "seed for the random entries (default 0)");

    CLI::App* nilpotent = app.add_subcommand("nilpotent", "two-route nilpotency decision");
    nilpotent->add_option("algebra", algebra, "one of sl2, sl3, sl4, so4, sp4")->required();
    nilpotent->add_option("coords", coords, "comma-separated basis coordinates")->required();

    CLI::App* audit = app.add_subcommand("liealg-audit", "run the structure-table property audit");
    audit->add_option("--algebra", algebra, "audit one algebra (default: all)");
    audit->add_option("--seed", seed, "seed for randomized properties (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*check) return cmd_check(sys_path, order, budget);
        if (*certify) return cmd_certify(sys_path, order, budget, out_path);
        if (*verify) return cmd_verify(sys_path, cert_path);
        if (*rewrite) return cmd_rewrite(sys_path, cert_path, exponents);
        if (*fiber) return cmd_fiber(sys_path, point, order, budget);
        if (*corpus) return cmd_corpus(out_dir, seed);
        if (*nilpotent) return cmd_nilpotent(algebra, coords);
        if (*audit) return cmd_liealg_audit(algebra, seed);
    } catch (const ResourceBudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NotFinite& e) {
        std::cerr << e.what() << "\n";
        return kExitRejected;
    } catch (const CertificateInvalid& e) {
        std::cerr << "certificate rejected: " << e.what() << "\n";
        return kExitRejected;
    } catch (const RouteDisagreement& e) {
        std::cerr << "internal cross-check failed: " << e.what() << "\n";
        return kExitRejected;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
