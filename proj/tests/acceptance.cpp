// Acceptance gate: nine numbered end-to-end checks, one printed line each.
// Exits with the number of failed checks. Built without a test framework so
// the pass/fail lines and the exit code are the whole interface; every
// assertion is active in every build type.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "finicert/certifier.hpp"
#include "finicert/corpus.hpp"
#include "finicert/errors.hpp"
#include "finicert/expr.hpp"
#include "finicert/groebner.hpp"
#include "finicert/io.hpp"
#include "finicert/liealg.hpp"
#include "finicert/prng.hpp"

using namespace finicert;

namespace {

struct Checker {
    int failures = 0;
    void require(bool ok, const std::string& detail) {
        if (!ok) {
            ++failures;
            std::cout << "       detail: " << detail << "\n";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Polynomial parse(const std::string& text, const RingContext& ring) {
    return parse_polynomial(text, ring);
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned max_total) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(n, 0);
    const std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            for (unsigned e = 0; e <= left; ++e) {
                exps[i] = e;
                out.push_back(Monomial(exps));
            }
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, max_total);
    return out;
}

// ---- 1. positive direction of the certification pipeline ------------------

bool check_positive_pipeline() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;

    for (std::size_t n = 1; n <= 3; ++n) {
        for (const bool newton : {true, false}) {
            const SquareSystem sys =
                newton ? newton_system(n) : elementary_symmetric_system(n);
            FinitenessCertificate cert;
            try {
                cert = finiteness_certificate(sys);
            } catch (const Error& e) {
                c.require(false, "certification failed for n=" + std::to_string(n) +
                                     ": " + e.what());
                continue;
            }
            c.require(verify_certificate(sys, cert),
                      "verifier rejected a fresh certificate, n=" + std::to_string(n));
            // Independent path: serialize, reparse, verify the parse.
            const LoadedCertificate loaded =
                certificate_from_json_text(certificate_to_json_text(sys, cert));
            c.require(verify_certificate(sys, loaded.cert),
                      "verifier rejected the reparsed certificate, n=" + std::to_string(n));
            if (n == 2)
                c.require(cert.c == 3, "n=2 bound expected 3, got " + std::to_string(cert.c));
        }
    }

    // Exact expansion identities behind the n=2 bound, one per family.
    const RingContext rxy({"x", "y"});
    const Polynomial x3 = parse("x^3", rxy);
    c.require(parse("1/2*x^2 - 1/2*x*y", rxy) * parse("x + y", rxy) +
                      parse("1/2*x", rxy) * parse("x^2 + y^2", rxy) ==
                  x3,
              "power-sum expansion identity failed");
    c.require(parse("x^2", rxy) * parse("x + y", rxy) -
                      parse("x", rxy) * parse("x*y", rxy) ==
                  x3,
              "elementary-symmetric expansion identity failed");

    const double dt = seconds_since(t0);
    c.require(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
    return c.failures == 0;
}

// ---- 2. negative direction: rejections carry a proper witness -------------

bool check_rejections() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;

    for (const CorpusEntry& entry : rejection_suite()) {
        const SquareSystem sys(entry.ring, entry.polys);
        const Verdict v = check_origin_only_zero(sys);
        if (v.status != Status::RejectedPositiveDimensional || !v.witness) {
            c.require(false, entry.name + ": expected rejection with witness");
            continue;
        }
        // Re-run the witness chart from scratch and audit it.
        const std::size_t k = v.witness->chart;
        std::vector<Polynomial> dehom;
        for (const Polynomial& p : sys.polys()) dehom.push_back(p.dehomogenize_chart(k));
        const GroebnerBasis gb = buchberger(dehom, MonomialOrder::grevlex());
        c.require(!contains_one(gb).has_value(), entry.name + ": witness chart ideal is unit");
        c.require(gb.basis == v.witness->reduced_basis,
                  entry.name + ": witness basis does not match recomputation");
        c.require(spoly_audit(gb), entry.name + ": witness basis fails s-polynomial audit");
        c.require(cofactor_audit(gb), entry.name + ": witness basis fails cofactor audit");
        const Polynomial one = Polynomial::constant(gb.basis.front().arity(), Scalar(1));
        c.require(!reduce(one, gb.basis, gb.order).remainder.is_zero(),
                  entry.name + ": unit reduced to zero over a supposedly proper ideal");
    }

    const double dt = seconds_since(t0);
    c.require(dt < 5.0, "runtime " + std::to_string(dt) + "s exceeds 5s");
    return c.failures == 0;
}

// ---- 3. rewriting passes its expansion self-check on a dense sweep --------

bool check_rewrite_sweep() {
    Checker c;

    const auto sweep = [&](const SquareSystem& sys, unsigned max_deg, std::size_t min_count,
                           const std::string& label) {
        const FinitenessCertificate cert = finiteness_certificate(sys);
        const GeneratorSet gens = generator_set(sys, cert);
        const std::vector<Monomial> all = monomials_up_to(sys.size(), max_deg);
        c.require(all.size() >= min_count,
                  label + ": sweep too small, " + std::to_string(all.size()));
        for (const Monomial& m : all) {
            RewriteResult rr;
            try {
                rr = rewrite_monomial(sys, cert, m); // throws if its self-check fails
            } catch (const Error& e) {
                c.require(false, label + ": rewrite failed: " + std::string(e.what()));
                continue;
            }
            // Independent re-expansion of the result.
            Polynomial expanded = Polynomial::zero(sys.size());
            bool inside = true;
            for (const auto& [s, a] : rr.terms) {
                inside = inside && gens.contains(s);
                expanded = expanded + a.compose(sys.polys()) * Polynomial::monomial(Scalar(1), s);
            }
            c.require(inside, label + ": a rewrite term escapes the generator set");
            if (expanded != Polynomial::monomial(Scalar(1), m)) {
                c.require(false, label + ": expansion mismatch at a swept monomial");
                break;
            }
        }
    };

    sweep(newton_system(2), 12, 90, "power-sums n=2");
    sweep(elementary_symmetric_system(2), 12, 90, "elementary n=2");
    sweep(newton_system(3), 8, 90, "power-sums n=3");
    sweep(elementary_symmetric_system(3), 8, 90, "elementary n=3");
    return c.failures == 0;
}

// ---- 4. fiber length is constant and equals the degree product ------------

bool check_fiber_lengths() {
    Checker c;
    SplitMix64 rng(0x51BE4);

    for (const CorpusEntry& entry : full_corpus()) {
        if (entry.expected != ExpectedOutcome::CertifiedFinite) continue;
        const SquareSystem sys(entry.ring, entry.polys);
        std::size_t want = 1;
        for (long d : sys.degrees()) want *= static_cast<std::size_t>(d);

        const auto at = [&](const std::vector<Scalar>& target, const std::string& where) {
            const auto got = fiber_dimension(sys, target);
            c.require(got.has_value() && *got == want,
                      entry.name + ": fiber length at " + where + " is " +
                          (got ? std::to_string(*got) : std::string("infinite")) +
                          ", expected " + std::to_string(want));
        };

        at(std::vector<Scalar>(sys.size(), Scalar(0)), "origin");
        for (int t = 0; t < 20; ++t) {
            std::vector<Scalar> target;
            for (std::size_t i = 0; i < sys.size(); ++i) {
                const long num = static_cast<long>(rng.below(9)) - 4;
                const long den = 1 + static_cast<long>(rng.below(3));
                target.push_back(Scalar(num) / Scalar(den));
            }
            at(target, "seeded target " + std::to_string(t));
        }
    }
    return c.failures == 0;
}

// ---- 5. both nilpotency routes agree on random and constructed elements ---

bool check_nilpotency_routes() {
    Checker c;

    for (const AlgebraName name : {AlgebraName::sl2, AlgebraName::sl3}) {
        const LieAlgebraSpec& g = LieAlgebraSpec::get(name);
        SplitMix64 rng(0xA11CE + static_cast<std::uint64_t>(name));
        try {
            for (int t = 0; t < 1000; ++t)
                (void)is_nilpotent(g, random_element(g, rng)); // throws on disagreement
            for (int t = 0; t < 100; ++t) {
                const NilpotencyVerdict v = is_nilpotent(g, random_nilpotent(g, rng));
                c.require(v.nilpotent,
                          algebra_to_string(name) + ": constructed nilpotent not recognized");
            }
        } catch (const RouteDisagreement& e) {
            c.require(false, algebra_to_string(name) + ": routes disagreed: " + e.what());
        }
    }
    return c.failures == 0;
}

// ---- 6. parabolic orthogonals equal nilradicals, pairing nondegenerate ----

bool check_parabolic_duality() {
    Checker c;

    const auto probe = [&](AlgebraName name, std::size_t block) {
        const LieAlgebraSpec& g = LieAlgebraSpec::get(name);
        const std::string label = algebra_to_string(name) + " block " + std::to_string(block);
        const ParabolicSpec p = standard_parabolic(g, block);
        std::vector<std::vector<Scalar>> perp;
        try {
            perp = parabolic_perp(g, p); // audits perp == nilradical span internally
        } catch (const Error& e) {
            c.require(false, label + ": " + e.what());
            return;
        }
        // The returned basis must be exactly the nilradical unit vectors.
        c.require(perp.size() == p.nilradical_indices.size(), label + ": perp dimension");
        std::set<std::size_t> seen;
        for (const auto& v : perp) {
            std::size_t hot = g.dimension();
            bool unit = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == Scalar(0)) continue;
                unit = unit && (v[i] == Scalar(1)) && hot == g.dimension();
                hot = i;
            }
            c.require(unit && hot < g.dimension(), label + ": perp vector is not a unit vector");
            if (hot < g.dimension()) seen.insert(hot);
        }
        c.require(seen == std::set<std::size_t>(p.nilradical_indices.begin(),
                                                p.nilradical_indices.end()),
                  label + ": perp support differs from the nilradical");
        c.require(isotropy_duality_check(g, p), label + ": quotient pairing is degenerate");
    };

    probe(AlgebraName::sl2, 1); // the Borel
    probe(AlgebraName::sl3, 1);
    probe(AlgebraName::sl3, 2);
    return c.failures == 0;
}

// ---- 7. every shipped polynomial obeys its scaling grading ----------------

bool check_gradings() {
    Checker c;

    for (const AlgebraName name : all_algebras())
        for (const NamedInvariant& inv : production_invariants(name))
            c.require(grading_check(inv.poly, inv.degree),
                      algebra_to_string(name) + " " + inv.name + ": grading check failed");

    for (const CorpusEntry& entry : full_corpus())
        for (const Polynomial& p : entry.polys) {
            const Degree d = p.degree();
            c.require(d.finite(), entry.name + ": zero polynomial in corpus");
            if (d.finite())
                c.require(grading_check(p, d.value()), entry.name + ": grading check failed");
        }
    return c.failures == 0;
}

// ---- 8. basis engine audits on seeded random systems -----------------------

bool check_basis_engine() {
    Checker c;
    SplitMix64 seeds(0xB0B5);

    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + seeds.below(3);
        std::vector<long> degs;
        for (std::size_t i = 0; i < n; ++i) degs.push_back(1 + static_cast<long>(seeds.below(3)));
        const SquareSystem sys = random_system(n, degs, seeds.next());
        const std::string label = "seeded system " + std::to_string(t);

        GroebnerBasis gb;
        try {
            gb = buchberger(sys.polys(), MonomialOrder::grevlex());
        } catch (const Error& e) {
            c.require(false, label + ": " + e.what());
            continue;
        }
        c.require(spoly_audit(gb), label + ": s-polynomial audit failed");
        c.require(cofactor_audit(gb), label + ": cofactor audit failed");

        // Division identity and idempotence of reduce on a nontrivial probe.
        Polynomial probe = Polynomial::constant(n, Scalar(1));
        for (const Polynomial& p : sys.polys()) probe = probe + p;
        probe = probe + sys.polys().front() * sys.polys().back();
        const NormalFormResult nf = reduce(probe, gb.basis, gb.order);
        Polynomial recombined = nf.remainder;
        for (std::size_t j = 0; j < gb.basis.size(); ++j)
            recombined = recombined + nf.quotients[j] * gb.basis[j];
        c.require(recombined == probe, label + ": division identity failed");
        c.require(reduce(nf.remainder, gb.basis, gb.order).remainder == nf.remainder,
                  label + ": reduce is not idempotent on its remainder");
    }
    return c.failures == 0;
}

// ---- 9. any single-field certificate mutation is caught by the CLI --------

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FINICERT_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool check_tamper_detection() {
    Checker c;
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("finicert-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    // Two certified systems of different shapes share the 50-mutation sweep.
    struct Target {
        std::string sys_path;
        nlohmann::ordered_json cert;
    };
    std::vector<Target> targets;
    for (const std::size_t n : {2, 3}) {
        const SquareSystem sys = newton_system(n);
        const std::string sys_path = (dir / ("sys" + std::to_string(n) + ".system")).string();
        write_text_file(sys_path, system_to_text(sys.ring(), sys.polys()));
        const std::string cert_text =
            certificate_to_json_text(sys, finiteness_certificate(sys));
        const std::string cert_path = (dir / ("cert" + std::to_string(n) + ".json")).string();
        write_text_file(cert_path, cert_text);
        c.require(run_cli("verify " + sys_path + " " + cert_path).exit_code == 0,
                  "pristine certificate must verify before mutation");
        targets.push_back({sys_path, nlohmann::ordered_json::parse(cert_text)});
    }

    // Mutation slots: every coefficient string, the bound c, and every
    // finite cofactor-degree entry.
    using Mutator = std::function<void(nlohmann::ordered_json&)>;
    const auto slots_of = [](const nlohmann::ordered_json& doc) {
        std::vector<Mutator> slots;
        slots.push_back([](nlohmann::ordered_json& j) { j["c"] = j["c"].get<long>() + 1; });
        slots.push_back([](nlohmann::ordered_json& j) { j["c"] = j["c"].get<long>() - 1; });
        for (std::size_t k = 0; k < doc["charts"].size(); ++k) {
            const auto& chart = doc["charts"][k];
            for (std::size_t i = 0; i < chart["cofactor_degrees"].size(); ++i)
                if (chart["cofactor_degrees"][i].is_number())
                    slots.push_back([k, i](nlohmann::ordered_json& j) {
                        auto& d = j["charts"][k]["cofactor_degrees"][i];
                        d = d.get<long>() + 1;
                    });
            const auto poly_slots = [&](const char* field) {
                for (std::size_t i = 0; i < chart[field].size(); ++i)
                    for (std::size_t t = 0; t < chart[field][i].size(); ++t)
                        slots.push_back([k, i, t, field](nlohmann::ordered_json& j) {
                            auto& coef = j["charts"][k][field][i][t][1];
                            const Scalar bumped =
                                parse_scalar(coef.get<std::string>()) + Scalar(1);
                            std::ostringstream s;
                            s << bumped;
                            coef = s.str();
                        });
            };
            poly_slots("cofactors");
            poly_slots("lifted");
        }
        return slots;
    };

    SplitMix64 rng(0x7A39E4);
    int mutations = 0;
    for (int round = 0; round < 50; ++round) {
        const Target& target = targets[round % targets.size()];
        const std::vector<Mutator> slots = slots_of(target.cert);
        nlohmann::ordered_json mutated = target.cert;
        slots[rng.below(slots.size())](mutated);
        if (mutated == target.cert) {
            c.require(false, "mutation round " + std::to_string(round) + " was a no-op");
            continue;
        }
        const std::string path =
            (dir / ("mutated" + std::to_string(round) + ".json")).string();
        write_text_file(path, mutated.dump(2) + "\n");
        const CliResult r = run_cli("verify " + target.sys_path + " " + path);
        c.require(r.exit_code != 0,
                  "mutation round " + std::to_string(round) + " was accepted by verify");
        ++mutations;
    }
    c.require(mutations == 50, "expected 50 mutation rounds");
    return c.failures == 0;
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"1. symmetric families certified, n=2 bound is 3, expansion identities hold",
         check_positive_pipeline},
        {"2. rejection suite refused with proper, audited witness charts", check_rejections},
        {"3. rewrite self-check clean on dense monomial sweeps", check_rewrite_sweep},
        {"4. fiber length equals the degree product at origin and 20 seeded targets",
         check_fiber_lengths},
        {"5. nilpotency routes agree on 1000 random + 100 constructed elements",
         check_nilpotency_routes},
        {"6. parabolic orthogonal equals nilradical with nondegenerate pairing",
         check_parabolic_duality},
        {"7. production invariants and corpus polynomials pass grading checks",
         check_gradings},
        {"8. basis engine audits pass on 100 seeded systems; reduce idempotent",
         check_basis_engine},
        {"9. all 50 seeded single-field certificate mutations rejected",
         check_tamper_detection},
    };

    int failed = 0;
    for (const Criterion& cr : criteria) {
        bool ok = false;
        try {
            ok = cr.run();
        } catch (const std::exception& e) {
            std::cout << "       detail: unexpected exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.label << "\n";
        if (!ok) ++failed;
    }
    if (failed == 0)
        std::cout << "all acceptance checks passed\n";
    else
        std::cout << failed << " acceptance check(s) failed\n";
    return failed;
}
