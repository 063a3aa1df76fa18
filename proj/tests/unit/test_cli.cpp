#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "gwa/cli/job.hpp"

#include <algorithm>

using namespace gwa;
using namespace gwa::cli;
using gwa::testing::Engine;

namespace {

// Random symmetrizable GCM: symmetric B with diagonal 2 d_i and off-diagonal
// entries in {0, -2, -4}, then a_ij = b_ij / d_i with d_i in {1, 2}.
std::pair<IntMatrix, std::vector<int>> random_gcm(Engine& rng, int n)
{
    std::vector<int> d(static_cast<std::size_t>(n));
    for (auto& x : d) {
        x = gwa::testing::small_int(rng, 1, 2);
    }
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2;
        for (int j = i + 1; j < n; ++j) {
            const int b = -2 * gwa::testing::small_int(rng, 0, 2);
            a(i, j) = b / d[static_cast<std::size_t>(i)];
            a(j, i) = b / d[static_cast<std::size_t>(j)];
        }
    }
    return {a, d};
}

std::string inline_text(const IntMatrix& a, char sep)
{
    std::string s;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (i) {
            s += sep;
            s += ' ';
        }
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            s += (j ? " " : "") + std::to_string(a(i, j));
        }
    }
    return s;
}

template <class F>
InputError input_error(F&& f)
{
    try {
        f();
    } catch (const InputError& e) {
        return e;
    }
    FAIL("no InputError raised");
    return InputError(0, 0, "");
}

JobSpec job_for(const std::string& catalog, const std::string& mode, std::vector<std::string> checks)
{
    JobSpec j;
    j.matrix = catalog;
    j.mode = mode;
    j.checks = std::move(checks);
    return j;
}

const Section& section(const Report& r, const std::string& check, const std::string& mode)
{
    const auto it = std::find_if(r.sections.begin(), r.sections.end(),
                                 [&](const Section& s) { return s.check == check && s.mode == mode; });
    REQUIRE(it != r.sections.end());
    return *it;
}

const CheckEntry* entry(const Section& s, const std::string& id)
{
    for (const auto& e : s.body.entries) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

}

TEST_CASE("inline matrices")
{
    const auto a2 = parse_matrix("2 -1; -1 2");
    CHECK(a2.matrix.entries() == catalog_matrix("A2"));
    CHECK_FALSE(a2.d.has_value());

    CHECK(parse_matrix("2 -1\n-1 2\n").matrix.entries() == catalog_matrix("A2"));
    CHECK(parse_matrix("  2 -2 ;\n -2 2 ").matrix.entries() == catalog_matrix("A1_1"));

    const auto b2 = parse_matrix("2 -2; -1 2; d: 1 2");
    REQUIRE(b2.d.has_value());
    CHECK(*b2.d == std::vector<int>{1, 2});
}

TEST_CASE("inline round trip over random symmetrizable matrices")
{
    Engine rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [a, d] = random_gcm(rng, gwa::testing::small_int(rng, 1, 4));
        const char sep = trial % 2 ? ';' : '\n';
        CHECK(parse_matrix(inline_text(a, sep)).matrix.entries() == a);
        std::string file = std::to_string(a.rows()) + "\n" + inline_text(a, '\n') + "\n";
        CHECK(parse_matrix_file(file).matrix.entries() == a);
        // the generator's d is a valid (not necessarily minimal) symmetrizer
        std::string with_d = file + "d:";
        for (int x : d) {
            with_d += " " + std::to_string(x);
        }
        const auto parsed = parse_matrix_file(with_d + "\n");
        REQUIRE(parsed.d.has_value());
        CHECK(*parsed.d == d);
    }
}

TEST_CASE("parse errors carry line and column")
{
    auto e = input_error([] { parse_matrix("2 -1; -1 x"); });
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);

    e = input_error([] { parse_matrix("2 -1\n-1 2 7"); });
    CHECK(e.line() == 2);

    // validation failures point at the offending entry
    e = input_error([] { parse_matrix("2 -1; 0 2"); });
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);

    e = input_error([] { parse_matrix("2 -1\n1 2"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);

    e = input_error([] { parse_matrix(""); });
    CHECK(e.line() == 1);
}

TEST_CASE("file layout")
{
    const auto g2 = parse_matrix_file("2\n2 -1\n-3 2\nd: 3 1\n");
    CHECK(g2.matrix.entries() == catalog_matrix("G2"));
    CHECK(*g2.d == std::vector<int>{3, 1});

    auto e = input_error([] { parse_matrix_file("2\n2 -1\n-3 2\nd: 1 2\n"); });
    CHECK(e.line() == 4);

    e = input_error([] { parse_matrix_file("3\n2 -1\n-1 2\n"); });
    CHECK(e.line() >= 3);

    e = input_error([] { parse_matrix_file("2 -1\n-1 2\n"); });
    CHECK(e.line() == 1);

    e = input_error([] { parse_matrix_file("2\n2 -1\n-1 2\n-1 2\n"); });
    CHECK(e.line() == 4);
}

TEST_CASE("job validation")
{
    auto j = job_for("A1", "both", {"biproduct"});
    j.degree_bound = 1;
    CHECK_THROWS_AS(j.validate(), std::invalid_argument);
    j.checks = {"datum"};
    CHECK_NOTHROW(j.validate());

    CHECK_THROWS_AS(job_for("A1", "both", {"borel"}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(job_for("A1", "affine", {"datum"}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(job_for("A1", "both", {}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(job_for("", "both", {"datum"}).validate(), std::invalid_argument);

    auto w = job_for("A1", "both", {});
    w.command = "rewrite";
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    w.word = "F1 E1";
    CHECK_NOTHROW(w.validate());
}

TEST_CASE("structured report round trip and determinism")
{
    for (const auto* name : {"A1", "A2", "B2", "A1_1"}) {
        CAPTURE(name);
        const auto job = job_for(name, "both", all_checks());
        const auto r = run(job);
        const auto text = emit_structured(r);
        CHECK(parse_structured(text) == r);
        CHECK(emit_structured(parse_structured(text)) == text);
        CHECK(canonical_structured(run(job)) == canonical_structured(r));
    }

    auto rw = job_for("A2", "both", {});
    rw.command = "rewrite";
    rw.word = "F2 F1 E1 E2";
    const auto r = run(rw);
    REQUIRE(r.rewrites.size() == 2);
    CHECK(parse_structured(emit_structured(r)) == r);
}

TEST_CASE("structured parser rejects foreign documents")
{
    const auto text = emit_structured(run(job_for("A1", "classical", {"datum"})));
    std::string other = text;
    other.replace(other.find("gwa-report/1"), 12, "gwa-report/9");
    CHECK_THROWS_AS(parse_structured(other), std::invalid_argument);
    CHECK_THROWS_AS(parse_structured("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_structured("{\"schema\": \"gwa-report/1\"}"), std::invalid_argument);
}

TEST_CASE("sections follow canonical order and mode")
{
    const auto r = run(job_for("A1", "quantum", {"biproduct", "datum", "weyl-embedding"}));
    REQUIRE(r.sections.size() == 3);
    CHECK(r.sections[0].check == "datum");
    CHECK(r.sections[1].check == "weyl-embedding");
    CHECK(r.sections[1].status == "skipped");
    CHECK(r.sections[2].check == "biproduct");
    for (const auto& s : r.sections) {
        CHECK(s.mode == "quantum");
    }
    CHECK(exit_status(r) == 0);
}

TEST_CASE("exit status is zero iff every selected check passes")
{
    CHECK(exit_status(run(job_for("A1", "both", all_checks()))) == 0);
    CHECK(exit_status(run(job_for("A1xA1", "both", all_checks()))) == 0);
    CHECK(exit_status(run(job_for("A2", "both", {"datum", "weyl-embedding", "biproduct"}))) == 0);
    // Serre relations in the Borel images do not hold for A2
    CHECK(exit_status(run(job_for("A2", "classical", {"borel-upper"}))) == 1);

    for (const auto* name : {"A1", "A2", "A3", "B2", "G2", "A1_1"}) {
        const auto r = run(job_for(name, "both", all_checks()));
        const bool all = std::all_of(r.sections.begin(), r.sections.end(),
                                     [](const Section& s) { return s.status != "fail"; });
        CHECK(r.passed == all);
        CHECK(exit_status(r) == (all ? 0 : 1));
    }
}

TEST_CASE("corrupted beta is caught")
{
    auto job = job_for("A2", "classical", {"datum", "borel-upper"});
    job.corrupt_beta = true;
    const auto r = run(job);
    CHECK(exit_status(r) == 1);
    const auto& datum = section(r, "datum", "classical");
    CHECK(datum.status == "fail");
    const auto* cs1 = entry(datum, "CS1(1,2)");
    REQUIRE(cs1 != nullptr);
    CHECK_FALSE(cs1->holds);

    const auto clean = run(job_for("A2", "classical", {"datum"}));
    CHECK(section(clean, "datum", "classical").status == "pass");
}

TEST_CASE("affine input through the whole pipeline")
{
    auto job = job_for("2 -2; -2 2", "classical", {"datum", "weyl-embedding", "biproduct"});
    job.source = JobSpec::Source::Inline;
    const auto r = run(job);
    CHECK(r.matrix.corank == 1);
    CHECK(r.matrix.complement.size() == 1);
    CHECK(r.job.source == "inline");
    CHECK(section(r, "weyl-embedding", "classical").status == "pass");
    CHECK(exit_status(r) == 0);
}

TEST_CASE("rewrite output")
{
    auto job = job_for("A1", "both", {});
    job.command = "rewrite";
    job.word = "F1 E1";
    const auto r = run(job);
    REQUIRE(r.rewrites.size() == 2);
    CHECK(r.rewrites[0].mode == "classical");
    CHECK(r.rewrites[0].normal_form == "E1*F1 - H1");
    CHECK(r.rewrites[1].normal_form.find("E1*F1") == 0);
    CHECK(r.sections.empty());
    CHECK(exit_status(r) == 0);

    job.word = "E3";
    CHECK_THROWS(run(job));
}
