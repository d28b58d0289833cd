// End-to-end tests driving the installed binary through a shell, checking
// exit codes and printed output. FINICERT_BIN_PATH is injected by CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FINICERT_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("finicert-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kFiniteSystem = "variables: x y\nx^2 + x*y\ny^2\n";
const std::string kRejectedSystem = "variables: x y\nx^2\nx*y\n";

} // namespace

TEST_CASE("check certifies a finite system and rejects an infinite one") {
    const std::string fin = write_file("fin.system", kFiniteSystem);
    const std::string rej = write_file("rej.system", kRejectedSystem);

    RunResult r = run_cli("check " + fin);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "certified: the zero fiber is exactly the origin"));

    r = run_cli("check " + rej);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "rejected: chart 2 (y = 1)"));
    // Chart variables are named t<j> by surviving 1-based index.
    CHECK(contains(r.output, "t1"));
}

TEST_CASE("certify writes a certificate that verify accepts") {
    const std::string fin = write_file("roundtrip.system", kFiniteSystem);
    const std::string cert = (scratch_dir() / "roundtrip.cert.json").string();

    RunResult r = run_cli("certify " + fin + " --out " + cert);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "certified with c = 4"));
    CHECK(contains(r.output, "system hash: fnv1a64:"));

    r = run_cli("verify " + fin + " " + cert);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verified: certificate matches the system (c = 4)"));
}

TEST_CASE("certify without --out prints the certificate JSON") {
    const std::string fin = write_file("stdout.system", kFiniteSystem);
    const RunResult r = run_cli("certify " + fin);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"format\": \"finiteness-certificate\""));
    CHECK(contains(r.output, "\"version\": \"0.1.0\""));
}

TEST_CASE("certify on a rejected system explains the witness and exits 1") {
    const std::string rej = write_file("rejcert.system", kRejectedSystem);
    const RunResult r = run_cli("certify " + rej);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "positive-dimensional"));
    CHECK(contains(r.output, "reduced chart basis"));
}

TEST_CASE("verify detects tampering, wrong systems, and edited metadata") {
    const std::string fin = write_file("tamper.system", kFiniteSystem);
    const std::string cert = (scratch_dir() / "tamper.cert.json").string();
    REQUIRE(run_cli("certify " + fin + " --out " + cert).exit_code == 0);
    const std::string original = read_file(cert);

    SUBCASE("bumping c breaks the lift identities") {
        std::string text = original;
        const auto pos = text.find("\"c\": 4");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 6, "\"c\": 5");
        const std::string bad = write_file("tamper-c.cert.json", text);
        const RunResult r = run_cli("verify " + fin + " " + bad);
        CHECK(r.exit_code == 1);
        CHECK(contains(r.output, "identities do not hold"));
    }

    SUBCASE("a different system fails the hash comparison") {
        const std::string other =
            write_file("tamper-other.system", "variables: x y\nx^2 + x*y\nx*y + y^2\n");
        const RunResult r = run_cli("verify " + other + " " + cert);
        CHECK(r.exit_code == 1);
        CHECK(contains(r.output, "hash mismatch"));
    }

    SUBCASE("renaming a variable inside the certificate is caught") {
        std::string text = original;
        const auto pos = text.find("\"x\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 3, "\"z\"");
        const std::string bad = write_file("tamper-var.cert.json", text);
        const RunResult r = run_cli("verify " + fin + " " + bad);
        CHECK(r.exit_code == 1);
        CHECK(contains(r.output, "metadata disagrees"));
    }

    SUBCASE("truncated JSON is an input error") {
        const std::string bad =
            write_file("tamper-trunc.cert.json", original.substr(0, original.size() / 2));
        const RunResult r = run_cli("verify " + fin + " " + bad);
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("rewrite prints the generator decomposition") {
    const std::string fin = write_file("rewrite.system", kFiniteSystem);
    const std::string cert = (scratch_dir() / "rewrite.cert.json").string();
    REQUIRE(run_cli("certify " + fin + " --out " + cert).exit_code == 0);

    const RunResult r = run_cli("rewrite " + fin + " " + cert + " 4,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "x^4 rewrites over 2 generator(s):"));
    CHECK(contains(r.output, "  x*y : -p1\n"));
    CHECK(contains(r.output, "  x^2 : p1 + p2\n"));
    CHECK(contains(r.output, "self-check: expansion reproduces the monomial"));

    // A generator rewrites as itself.
    const RunResult small = run_cli("rewrite " + fin + " " + cert + " 1,2");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "  x*y^2 : 1\n"));

    // Wrong exponent count is an input error.
    CHECK(run_cli("rewrite " + fin + " " + cert + " 4,0,0").exit_code == 2);
    CHECK(run_cli("rewrite " + fin + " " + cert + " 4,x").exit_code == 2);
}

TEST_CASE("fiber reports exact lengths and positive-dimensional targets") {
    const std::string fin = write_file("fiber.system", kFiniteSystem);
    RunResult r = run_cli("fiber " + fin + " 1,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fiber length: 4"));

    r = run_cli("fiber " + fin + " 0,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fiber length: 4"));

    const std::string rej = write_file("fiber-rej.system", kRejectedSystem);
    r = run_cli("fiber " + rej + " 0,0");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "POSITIVE_DIMENSIONAL"));

    // Malformed rational target.
    CHECK(run_cli("fiber " + fin + " 1,oops").exit_code == 2);
}

TEST_CASE("nilpotent answers for both outcomes and rejects bad input") {
    RunResult r = run_cli("nilpotent sl2 0,0,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "nilpotent: yes (both routes agree)"));

    r = run_cli("nilpotent sl2 0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "nilpotent: no (both routes agree)"));

    r = run_cli("nilpotent so4 1/2,0,0,0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(both routes agree)"));

    CHECK(run_cli("nilpotent sl2 0,0").exit_code == 2);     // wrong coordinate count
    CHECK(run_cli("nilpotent g2 0,0,1").exit_code == 2);    // unknown algebra
    CHECK(run_cli("nilpotent sl2 0,0,a").exit_code == 2);   // bad rational
}

TEST_CASE("corpus emits the named entries plus two seeded random systems") {
    const fs::path dir = scratch_dir() / "corpus-out";
    RunResult r = run_cli("corpus --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "wrote 13 system files"));

    std::size_t count = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) ++count;
    CHECK(count == 13);
    CHECK(fs::exists(dir / "newton2.system"));
    CHECK(fs::exists(dir / "reject-axes.system"));
    CHECK(fs::exists(dir / "random-2x22-seed0.system"));
    CHECK(fs::exists(dir / "random-3x122-seed0.system"));

    // Each emitted file is loadable: spot-check one through `check`.
    const RunResult chk = run_cli("check " + (dir / "newton2.system").string());
    CHECK(chk.exit_code == 0);

    // The seed names the random entries.
    const fs::path dir5 = scratch_dir() / "corpus-out5";
    r = run_cli("corpus --seed 5 --out " + dir5.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir5 / "random-2x22-seed5.system"));

    // Without --out the corpus goes to stdout with note headers.
    r = run_cli("corpus");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "# newton2:"));
    CHECK(contains(r.output, "variables: x y"));
}

TEST_CASE("liealg-audit passes everywhere and supports filtering") {
    RunResult r = run_cli("liealg-audit --algebra sl2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "sl2 jacobi-identity: ok"));
    CHECK(!contains(r.output, "FAIL"));
    CHECK(!contains(r.output, "sl3"));

    r = run_cli("liealg-audit --algebra sp4 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "sp4 nilpotency-route-agreement: ok"));

    CHECK(run_cli("liealg-audit --algebra e8").exit_code == 2);
}

TEST_CASE("resource budget exhaustion is its own exit code") {
    const std::string fin = write_file("budget.system", kFiniteSystem);
    const RunResult r = run_cli("certify " + fin + " --budget 3");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "budget exhausted"));
}

TEST_CASE("malformed inputs and bad usage exit 2") {
    const std::string mal = write_file("mal.system", "variables: x y\nx^2 + oops\n");
    RunResult r = run_cli("check " + mal);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "2:")); // file line in the message

    CHECK(run_cli("check /nonexistent/no.system").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2); // missing required argument
    CHECK(run_cli("check x --order weird").exit_code == 2);

    // Help succeeds.
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("check --help").exit_code == 0);
}

TEST_CASE("lex order is accepted end to end") {
    const std::string fin = write_file("lex.system", kFiniteSystem);
    const std::string cert = (scratch_dir() / "lex.cert.json").string();
    RunResult r = run_cli("certify " + fin + " --order lex --out " + cert);
    CHECK(r.exit_code == 0);
    CHECK(run_cli("verify " + fin + " " + cert).exit_code == 0);
}

TEST_CASE("certify then verify succeeds across every finite named corpus entry") {
    const fs::path dir = scratch_dir() / "corpus-roundtrip";
    REQUIRE(run_cli("corpus --out " + dir.string()).exit_code == 0);
    const char* finite[] = {"newton1", "newton2", "newton3",
                            "elementary1", "elementary2", "elementary3"};
    for (const std::string name : finite) {
        const std::string sys = (dir / (name + ".system")).string();
        const std::string cert = (dir / (name + ".cert.json")).string();
        RunResult r = run_cli("certify " + sys + " --out " + cert);
        CHECK(r.exit_code == 0);
        r = run_cli("verify " + sys + " " + cert);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "verified"));
    }
    // A rejected entry certifies to exit 1 and writes nothing.
    const std::string rej = (dir / "reject-axes.system").string();
    const std::string rejcert = (dir / "reject-axes.cert.json").string();
    CHECK(run_cli("certify " + rej + " --out " + rejcert).exit_code == 1);
    CHECK(!fs::exists(rejcert));
}
