#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "json.hpp"

#include "orecheb/document.hpp"
#include "orecheb/parse.hpp"

using namespace orecheb;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the installed binary (path in ORECHEB_BIN) with stderr folded in
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ORECHEB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ORECHEB_BIN must point at the built binary");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// ops column of a bench table, for comparing runs without the timings
std::vector<std::string> bench_ops_column(const std::string& out) {
    std::istringstream in(out);
    std::string line;
    std::vector<std::string> ops;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, k, d, ms, o;
        if (ls >> a >> k >> d >> ms >> o && a != "algorithm" && a != "seed")
            ops.push_back(a + ":" + k + ":" + o);
    }
    return ops;
}

}  // namespace

TEST_CASE("operator parsing") {
    SUBCASE("worked examples") {
        DiffOp d = DiffOp::monomial(RatFunc(1), 1);
        DiffOp x(RatFunc(Poly::variable()));
        CHECK(parse_operator("Dx - 1") == d - DiffOp::one());
        CHECK(parse_operator("(x^2+1)*Dx^2 + 2*x*Dx") ==
              (x * x + DiffOp::one()) * d * d + DiffOp(RatFunc(BigRat(2))) * x * d);
        CHECK(parse_operator("2*(1-x^2)*Dx - x") ==
              DiffOp(RatFunc(BigRat(2))) * (DiffOp::one() - x * x) * d - x);
        CHECK(parse_operator("3/2 * x").coeff(0) == RatFunc(Poly{BigRat(0), BigRat(3, 2)}));
        CHECK(parse_operator(" - x ^ 2 ").coeff(0) ==
              RatFunc(Poly{BigRat(0), BigRat(0), BigRat(-1)}));
    }
    SUBCASE("products do not commute") {
        CHECK(parse_operator("Dx*x - (x*Dx + 1)").is_zero());
        CHECK(parse_operator("Dx*x") != parse_operator("x*Dx"));
    }
    SUBCASE("error positions") {
        try {
            parse_operator("x + ");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
        try {
            parse_operator("x^y");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position() == 2);
            CHECK(std::string(e.what()).find("exponent") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_operator("x + )"), ParseError);
        CHECK_THROWS_AS(parse_operator("(x"), ParseError);
        CHECK_THROWS_AS(parse_operator("1/0"), ParseError);
        CHECK_THROWS_AS(parse_operator("x x"), ParseError);
    }
}

TEST_CASE("equation text") {
    RecOp P = RecOp::term(RatFunc(Poly{BigRat(0), BigRat(1)}), 0) +
              RecOp::term(RatFunc(Poly{BigRat(4), BigRat(1)}), 4);
    CHECK(equation_text(P) == "(n)*c[n] + (n + 4)*c[n+4] = 0");
    CHECK(equation_text(P, -2) == "(n)*c[n-2] + (n + 4)*c[n+2] = 0");
}

TEST_CASE("document round trips") {
    RecurrenceResult r = paszkowski(parse_operator("(x^2+1)*Dx^2 + 2*x*Dx"));
    SUBCASE("coefficient table") {
        CHECK(operator_from_table(coefficient_table(r.op)) == r.op);
    }
    SUBCASE("json") {
        RecurrenceDocument d = make_document(r, "(x^2+1)*Dx^2 + 2*x*Dx", 1.5, 42);
        RecurrenceDocument back = document_from_json(to_json(d));
        CHECK(back.algorithm == d.algorithm);
        CHECK(back.input == d.input);
        CHECK(back.order == d.order);
        CHECK(back.support_offset == d.support_offset);
        CHECK(back.coefficients == d.coefficients);
        CHECK(back.has_denominator == d.has_denominator);
        CHECK(back.denominator == d.denominator);
        CHECK(back.disclaimer == d.disclaimer);
        CHECK(back.op_count == 42);
        CHECK(operator_from_table(back.coefficients) == r.op);
    }
    SUBCASE("large integers survive as strings") {
        mpz_class big("123456789012345678901234567890");
        nlohmann::json j = detail::int_to_json(big);
        CHECK(j.is_string());
        CHECK(detail::int_from_json(j) == big);
        nlohmann::json s = detail::int_to_json(mpz_class(-7));
        CHECK(s.is_number());
        CHECK(detail::int_from_json(s) == -7);
    }
    SUBCASE("non-normalized operators are rejected") {
        CHECK_THROWS_AS(coefficient_table(r.op.lshifted(1)), std::domain_error);
    }
}

TEST_CASE("binary: rec") {
    SUBCASE("json output carries the expected recurrence for exp") {
        RunResult r = run_cli("rec --op \"Dx - 1\" --algo dac --format json");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["algorithm"] == "dac");
        CHECK(j["order"] == 2);
        auto c = j["coefficients"];
        REQUIRE(c.size() == 3);
        CHECK(c[0] == nlohmann::json::array({-1}));
        CHECK(c[1] == nlohmann::json::array({2, 2}));
        CHECK(c[2] == nlohmann::json::array({1}));
    }
    SUBCASE("text output") {
        RunResult r = run_cli("rec --op \"Dx - 1\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("algorithm:      paszkowski") != std::string::npos);
        CHECK(r.out.find("(2*n + 2)*c[n+1]") != std::string::npos);
        CHECK(r.out.find(" = 0") != std::string::npos);
    }
    SUBCASE("centered indices") {
        RunResult r = run_cli("rec --op \"Dx - 1\" --centered");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("c[n-1]") != std::string::npos);
    }
    SUBCASE("--reduce lowers the order for the quartic-root example") {
        RunResult r = run_cli("rec --op \"2*(1-x^2)*Dx - x\" --reduce --format json");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["order"] == 2);
    }
    SUBCASE("all four algorithms agree on arctan") {
        std::string first;
        for (const char* a : {"lewanowicz", "paszkowski", "rebillard", "dac"}) {
            RunResult r = run_cli(std::string("rec --op \"(x^2+1)*Dx^2 + 2*x*Dx\" --algo ") + a +
                                  " --format json");
            REQUIRE(r.exit_code == 0);
            std::string c = nlohmann::json::parse(r.out)["coefficients"].dump();
            if (first.empty()) first = c;
            else CHECK(c == first);
        }
    }
    SUBCASE("exit codes for bad input") {
        CHECK(run_cli("rec --op \"x + \"").exit_code == 2);
        CHECK(run_cli("rec --op \"Dx\" --algo nosuch").exit_code == 2);
        CHECK(run_cli("rec --op \"0\"").exit_code == 2);
        CHECK(run_cli("rec").exit_code == 2);          // missing required option
        CHECK(run_cli("frobnicate").exit_code == 2);   // unknown subcommand
    }
}

TEST_CASE("binary: verify") {
    SUBCASE("catalog functions pass") {
        for (const char* f : {"exp", "arctanh", "arccos"}) {
            RunResult r = run_cli(std::string("verify --function ") + f + " --algo dac");
            INFO(r.out);
            CHECK(r.exit_code == 0);
            CHECK(r.out.find("PASS") != std::string::npos);
        }
    }
    SUBCASE("an impossible tolerance fails with exit code 3") {
        RunResult r = run_cli("verify --function exp --tol 1e-30");
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("FAIL") != std::string::npos);
    }
    SUBCASE("unknown function") {
        CHECK(run_cli("verify --function nosuch").exit_code == 2);
    }
}

TEST_CASE("binary: bench is reproducible per seed") {
    RunResult a = run_cli("bench --kmax 8 --seed 7");
    RunResult b = run_cli("bench --kmax 8 --seed 7");
    RunResult c = run_cli("bench --kmax 8 --seed 8");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto oa = bench_ops_column(a.out), ob = bench_ops_column(b.out), oc = bench_ops_column(c.out);
    CHECK(!oa.empty());
    CHECK(oa == ob);
    CHECK(oa != oc);
    CHECK(a.out.find("seed 7") != std::string::npos);
    // the environment override wins over the flag
    const char* bin = std::getenv("ORECHEB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("ORECHEB_SEED=8 ") + bin + " bench --kmax 8 --seed 7 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    CHECK(out.find("seed 8") != std::string::npos);
    CHECK(bench_ops_column(out) == oc);
}

TEST_CASE("binary: catalog") {
    RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    for (const char* f : {"exp", "arctan", "erf", "arctanh", "arccos", "invquartroot"})
        CHECK(r.out.find(f) != std::string::npos);
    CHECK(r.out.find("singular") != std::string::npos);
}
