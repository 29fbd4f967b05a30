#ifndef ORECHEB_BENCH_HPP
#define ORECHEB_BENCH_HPP

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "orecheb/chebrec.hpp"

namespace orecheb {

/// Random differential operator of order exactly k, coefficient degree
/// <= d, small integer coefficients. Deterministic per seed/engine state.
inline DiffOp random_operator(std::mt19937_64& rng, int d, int k) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<RatFunc> p(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        std::vector<BigRat> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = BigRat(coef(rng));
        p[static_cast<size_t>(i)] = RatFunc(Poly(std::move(c)));
    }
    if (p[static_cast<size_t>(k)].is_zero()) p[static_cast<size_t>(k)] = RatFunc(1);
    return DiffOp(std::move(p));
}

struct BenchRow {
    std::string algorithm;
    int k = 0;
    int d = 0;
    double ms = 0;
    std::uint64_t ops = 0;  // exact-scalar multiplications/divisions
};

/// Times the algorithms on one seeded random operator per k in
/// {4, 8, 16, ... <= kmax}. Wall-clock and the portable operation counter
/// are both reported; the counter is what the complexity trend is judged
/// on.
inline std::vector<BenchRow> run_bench(int dmax, int kmax, std::uint64_t seed,
                                       const std::vector<std::string>& algos = {
                                           "lewanowicz", "paszkowski", "rebillard", "dac"}) {
    std::vector<BenchRow> rows;
    for (int k = 4; k <= kmax; k *= 2) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
        DiffOp L = random_operator(rng, dmax, k);
        for (const auto& name : algos) {
            opcount::reset();
            auto t0 = std::chrono::steady_clock::now();
            auto r = run_algorithm(name, L);
            auto t1 = std::chrono::steady_clock::now();
            (void)r;
            BenchRow row;
            row.algorithm = name;
            row.k = k;
            row.d = dmax;
            row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.ops = opcount::get();
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace orecheb

#endif  // ORECHEB_BENCH_HPP
