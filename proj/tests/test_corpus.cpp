#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lndlab/corpus.hpp"

using namespace lndlab;

namespace {

CorpusDoc parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in, "<test>");
}

}  // namespace

TEST_CASE("corpus files parse into algebra, tables and checks") {
    CorpusDoc doc = parse_text(R"corpus(# triangular surface
name: demo
vars: x, y, z
order: lex
relations: x*z - y^2 - 1
derivation D1: y -> x, z -> 2*y
note: standard triangular derivation
check lnd D1 bound 16 expect certified
check apply D1 "z" expect equals:"2*y"
)corpus");
    REQUIRE(doc.name == "demo");
    REQUIRE(doc.algebra->relations().size() == 1);
    REQUIRE(doc.tables.count("D1") == 1);
    REQUIRE(doc.notes.size() == 1);
    REQUIRE(doc.checks.size() == 2);
    REQUIRE(doc.checks[0].expected == "certified");
    REQUIRE(doc.checks[1].tokens == std::vector<std::string>{"apply", "D1", "z"});
}

TEST_CASE("schema errors carry path and line") {
    REQUIRE_THROWS_AS(parse_text("vars: x\nbogus line\n"), SchemaError);
    REQUIRE_THROWS_AS(parse_text("check lnd D1 expect certified\n"), SchemaError);
    REQUIRE_THROWS_AS(parse_text("vars: x\ncheck lnd D1 certified\n"), SchemaError);
    REQUIRE_THROWS_AS(parse_text("name: empty\n"), SchemaError);
    try {
        parse_text("vars: x\nrelations: x*q\n");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        REQUIRE(e.path == "<test>");
    }
}

TEST_CASE("runner executes checks and aggregates statuses") {
    CorpusDoc doc = parse_text(R"corpus(vars: x, y, z
order: lex
relations: x*z - y^2 - 1
derivation D1: y -> x, z -> 2*y
derivation bad: y -> z, z -> y
check lnd D1 expect certified
check lnd bad expect well-definedness-error
check apply D1 "z" expect equals:"2*y"
check deg D1 "z" bound 16 expect nat:2
check deg D1 "0" expect neg-infinity
check in-kernel D1 "x" expect true
check in-kernel D1 "y" expect false
check nf "x*z" expect equals:"y^2 + 1"
check in-ideal "x*z - y^2 - 1" expect true
check in-ideal "x*y + z^2" expect false
check kernel D1 degree 2 expect basis:"1; x; x^2"
check kernel-dim D1 degree 2 expect nat:3
check irreducible "y^2 + 1" expect equals:"irreducible"
check irreducible "y^2 - 1" expect equals:"reducible: y - 1"
check ext-gcd "x^2" "x + 1" expect equals:"1"
check lattice-span "(2,-6,0);(0,-3,0);(0,-2,0);(0,0,-1)" expect equals:"(2,0,0);(0,1,0);(0,0,1)"
check lattice-proper "(2,-6,0);(0,-3,0);(0,-2,0);(0,0,-1)" in Z3 expect true
check lattice-proper "(1,0);(0,1)" in Z2 expect false
)corpus");
    CheckReport report = run_corpus(doc);
    for (const auto& r : report.results) {
        INFO(r.check << " -> " << r.actual);
        REQUIRE(r.status == "pass");
    }
    REQUIRE(report.all_pass());
    REQUIRE(report.passed == doc.checks.size());
}

TEST_CASE("runner reports failures and errors without stopping") {
    CorpusDoc doc = parse_text(R"corpus(vars: x, y
derivation ddx: x -> 1
check in-kernel ddx "y" expect true
check in-kernel ddx "x" expect true
check apply missing "x" expect equals:"0"
check deg ddx "x" expect nat:7
)corpus");
    CheckReport report = run_corpus(doc);
    REQUIRE(report.results.size() == 4);
    REQUIRE(report.results[0].status == "pass");
    REQUIRE(report.results[1].status == "fail");  // d/dx does not kill x
    REQUIRE(report.results[2].status == "error");
    REQUIRE(report.results[3].status == "fail");
    REQUIRE_FALSE(report.all_pass());
    REQUIRE(report.passed == 1);
    REQUIRE(report.failed == 2);
    REQUIRE(report.errored == 1);
}

TEST_CASE("catalog directive wires the standard tables") {
    CorpusDoc doc = parse_text(R"corpus(catalog: danielewski(n=1, p=y^2+1)
check lnd D1 expect certified
check lnd D2 expect certified
check ml D1,D2 degree 6 expect basis:"1"
check ml-dim D1,D2 degree 6 expect nat:1
check ml-contains D1,D2 degree 6 "1" expect true
check ml-contains D1,D2 degree 6 "x" expect false
check normalize expect equals:"y^2 + 1 | identity"
)corpus");
    CheckReport report = run_corpus(doc);
    for (const auto& r : report.results) {
        INFO(r.check << " -> " << r.actual);
        REQUIRE(r.status == "pass");
    }
}

TEST_CASE("grading and adjoin directives") {
    CorpusDoc doc = parse_text(R"corpus(catalog: kr(2,2,3)
check grade-deg G "-x^-2*(x + z^2 + w^3)" expect equals:"(2,-6,0)"
check grade-top G "-x^-2*(x + z^2 + w^3)" expect equals:"-x^-2*z^2 - x^-2*w^3"
check grade-homogeneous G "z^2 + w^3" expect true
check grade-homogeneous G "x + z^2" expect false
)corpus");
    CheckReport report = run_corpus(doc);
    for (const auto& r : report.results) {
        INFO(r.check << " -> " << r.actual);
        REQUIRE(r.status == "pass");
    }

    CorpusDoc doc2 = parse_text(R"corpus(vars: x, y, z
order: lex
relations: x*z - y^2 - 1
derivation D1: y -> x, z -> 2*y
adjoin: t
grading std: x -> (1), y -> (1), z -> (1), t -> (1)
check lnd D1 expect certified
check apply D1 "t" expect equals:"0"
check grade-deg-derivation D1 std expect equals:"(0)"
check grade-induced D1 std expect equals:"x -> 0, y -> x, z -> 2*y, t -> 0"
)corpus");
    CheckReport report2 = run_corpus(doc2);
    for (const auto& r : report2.results) {
        INFO(r.check << " -> " << r.actual);
        REQUIRE(r.status == "pass");
    }
}

TEST_CASE("search checks execute the declared grid") {
    CorpusDoc doc = parse_text(R"corpus(vars: x
check search image-degree 0 coeffs 0..1 bound 8 count expect nat:1
)corpus");
    CheckReport report = run_corpus(doc);
    REQUIRE(report.results[0].status == "pass");
}

TEST_CASE("empty check list passes with zero checks") {
    CorpusDoc doc = parse_text("vars: x, y\nnote: nothing to run\n");
    CheckReport report = run_corpus(doc);
    REQUIRE(report.results.empty());
    REQUIRE(report.all_pass());
}

TEST_CASE("polynomials inside json output re-parse to equal values") {
    CorpusDoc doc = parse_text(R"corpus(vars: x, y, z
order: lex
relations: x*z - y^2 - 1
check nf "x*z + 3/2*x" expect equals:"3/2*x + y^2 + 1"
)corpus");
    CheckReport report = run_corpus(doc);
    REQUIRE(report.all_pass());
    auto j = report_json(report);
    std::string actual = j["checks"][0]["actual"].get<std::string>();
    REQUIRE(actual.rfind("equals:\"", 0) == 0);
    std::string payload = actual.substr(8, actual.size() - 9);
    Polynomial round = parse_poly(payload, doc.algebra->ring());
    REQUIRE(round == doc.algebra->reduce(parse_poly("x*z + 3/2*x", doc.algebra->ring())));
}

TEST_CASE("check outcomes do not depend on execution order") {
    const char* text = R"corpus(catalog: danielewski(n=1, p=y^2+1)
check lnd D1 expect certified
check deg D1 "z" bound 16 expect nat:2
check kernel D1 degree 2 expect basis:"1; x; x^2"
check nf "x*z" expect equals:"y^2 + 1"
)corpus";
    CorpusDoc doc = parse_text(text);
    CorpusDoc reversed = parse_text(text);
    std::reverse(reversed.checks.begin(), reversed.checks.end());
    CheckReport a = run_corpus(doc);
    CheckReport b = run_corpus(reversed);
    REQUIRE(a.all_pass());
    REQUIRE(b.all_pass());
    std::map<std::string, std::string> outcomes_a, outcomes_b;
    for (const auto& r : a.results) outcomes_a[r.check] = r.actual;
    for (const auto& r : b.results) outcomes_b[r.check] = r.actual;
    REQUIRE(outcomes_a == outcomes_b);
}

TEST_CASE("json reports are deterministic and wall-time free") {
    CorpusDoc doc = parse_text(R"corpus(vars: x, y
derivation ddx: x -> 1
check lnd ddx expect certified
)corpus");
    CheckReport r1 = run_corpus(doc);
    CheckReport r2 = run_corpus(doc);
    REQUIRE(report_json(r1).dump() == report_json(r2).dump());
    REQUIRE(report_json(r1).dump().find("wall") == std::string::npos);
    REQUIRE(report_text(r1).find("1 passed") != std::string::npos);
}
