// Command-line front end: compute, verify, and benchmark recurrences for
// Chebyshev-series coefficients of solutions of linear ODEs with
// polynomial coefficients.
//
// Exit codes: 0 success, 2 parse/usage error, 3 verification failure,
// 4 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "orecheb/bench.hpp"
#include "orecheb/document.hpp"
#include "orecheb/parse.hpp"
#include "orecheb/series.hpp"

namespace {

using namespace orecheb;

int cmd_rec(const std::string& expr, const std::string& algo, bool reduce,
            const std::string& format, bool centered) {
    DiffOp L = parse_operator(expr);
    if (L.is_zero()) {
        std::cerr << "error: the operator is identically zero\n";
        return 2;
    }
    opcount::reset();
    auto t0 = std::chrono::steady_clock::now();
    RecurrenceResult r = run_algorithm(algo, L);
    if (reduce) r = reduce_order(r, L.degree());
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    RecurrenceDocument doc = make_document(r, expr, ms, opcount::get());

    if (format == "json") {
        std::cout << to_json(doc).dump(2) << "\n";
        return 0;
    }
    std::cout << "algorithm:      " << doc.algorithm << "\n";
    std::cout << "input:          " << diff_str(L) << "\n";
    std::cout << "order:          " << doc.order << "\n";
    std::cout << "support offset: " << doc.support_offset << "\n";
    std::cout << "recurrence:     " << equation_text(r.op, centered ? r.support_offset : 0)
              << "\n";
    if (r.denominator)
        std::cout << "denominator:    " << r.denominator->str() << "\n";
    std::cout << "note:           " << doc.disclaimer << "\n";
    std::cout << "timing_ms:      " << ms << "\n";
    std::cout << "op_count:       " << doc.op_count << "\n";
    return 0;
}

int cmd_verify(const std::string& fname, const std::string& algo, long N, double tol) {
    const CatalogFunction& f = catalog_lookup(fname);
    DiffOp L = f.defining_operator;
    bool premultiplied = false;
    if (fname == "arccos") {
        // the raw image degenerates to a unit for this function; the
        // annihilating operator is derived from (1-x^2)*L instead
        DiffOp w(RatFunc(Poly{BigRat(1), BigRat(0), BigRat(-1)}));
        L = w * L;
        premultiplied = true;
    }
    RecurrenceResult r = run_algorithm(algo, L);
    CoeffSeq c = catalog_coeffs(f, N);
    VerifyReport rep = verify_annihilation(r.op, c, default_n_min(r.op, N), tol);
    std::cout << "function:  " << f.name << (premultiplied ? "  (operator (1-x^2)*L)" : "") << "\n";
    std::cout << "algorithm: " << algo << "  order " << r.order << "\n";
    std::cout << "window:    n in [" << rep.n_min << ", " << rep.n_max << "]\n";
    std::cout << "residual:  " << std::scientific << std::setprecision(3)
              << rep.max_rel_residual << "  (tol " << tol << ", worst n = " << rep.worst_n
              << ")\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 3;
}

int cmd_bench(int dmax, int kmax, std::uint64_t seed) {
    if (const char* env = std::getenv("ORECHEB_SEED")) seed = std::strtoull(env, nullptr, 10);
    auto rows = run_bench(dmax, kmax, seed);
    std::cout << "seed " << seed << "\n";
    std::cout << std::left << std::setw(12) << "algorithm" << std::right << std::setw(5) << "k"
              << std::setw(5) << "d" << std::setw(12) << "ms" << std::setw(14) << "ops" << "\n";
    for (const auto& r : rows)
        std::cout << std::left << std::setw(12) << r.algorithm << std::right << std::setw(5)
                  << r.k << std::setw(5) << r.d << std::setw(12) << std::fixed
                  << std::setprecision(2) << r.ms << std::setw(14) << r.ops << "\n";
    return 0;
}

int cmd_catalog() {
    for (const auto& f : catalog()) {
        std::cout << std::left << std::setw(14) << f.name << diff_str(f.defining_operator);
        if (f.endpoint_singular) std::cout << "   [singular at x = +-1]";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recurrences for Chebyshev-series coefficients of ODE solutions"};
    app.require_subcommand(1);

    std::string expr, algo = "paszkowski", format = "text", fname;
    bool reduce = false, centered = false;
    long N = 64;
    double tol = 1e-8;
    int dmax = 2, kmax = 16;
    std::uint64_t seed = 1;

    auto* rec = app.add_subcommand("rec", "compute a recurrence from an operator expression");
    rec->add_option("--op", expr, "operator expression, e.g. \"(x^2+1)*Dx^2 + 2*x*Dx\"")->required();
    rec->add_option("--algo", algo, "lewanowicz|paszkowski|rebillard|dac");
    rec->add_flag("--reduce", reduce, "left-divide by the gcld with the k-th integration power");
    rec->add_option("--format", format, "text|json");
    rec->add_flag("--centered", centered, "print indices centered at the original support");

    auto* verify = app.add_subcommand("verify", "verify a recurrence against catalog coefficients");
    verify->add_option("--function", fname, "catalog function name")->required();
    verify->add_option("--algo", algo, "lewanowicz|paszkowski|rebillard|dac");
    verify->add_option("--N", N, "number of coefficients");
    verify->add_option("--tol", tol, "relative residual tolerance");

    auto* bench = app.add_subcommand("bench", "time the algorithms on seeded random operators");
    bench->add_option("--dmax", dmax, "coefficient degree");
    bench->add_option("--kmax", kmax, "largest operator order (k doubles from 4)");
    bench->add_option("--seed", seed, "random seed (ORECHEB_SEED overrides)");

    auto* cat = app.add_subcommand("catalog", "list built-in functions and their operators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rec->parsed()) return cmd_rec(expr, algo, reduce, format, centered);
        if (verify->parsed()) return cmd_verify(fname, algo, N, tol);
        if (bench->parsed()) return cmd_bench(dmax, kmax, seed);
        if (cat->parsed()) return cmd_catalog();
    } catch (const orecheb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
