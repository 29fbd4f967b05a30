#ifndef ORECHEB_SERIES_HPP
#define ORECHEB_SERIES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "orecheb/chebrec.hpp"

namespace orecheb {

/// Chebyshev coefficient sequence c_0..c_N with the convention
/// f = c_0/2 + sum_{n>=1} c_n T_n and the symmetric extension c_{-n} = c_n.
using CoeffSeq = std::vector<double>;

// ---------------------------------------------------------------------------
// Catalog of built-in functions with their defining operators.
// ---------------------------------------------------------------------------

struct CatalogFunction {
    std::string name;
    std::function<double(double)> evaluator;        // on (-1, 1)
    std::function<double(long)> known_coeffs;       // closed form, may be null
    DiffOp defining_operator;
    bool endpoint_singular = false;  // derivative blows up at +-1; quadrature
                                     // of high-order coefficients degrades
    int order = 0;                   // order of the defining operator
};

namespace detail {

inline DiffOp make_diffop(std::vector<Poly> p) {
    std::vector<RatFunc> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = RatFunc(p[i]);
    return DiffOp(std::move(v));
}

}  // namespace detail

inline std::vector<CatalogFunction> catalog() {
    using detail::make_diffop;
    const double pi = 3.14159265358979323846;
    std::vector<CatalogFunction> fs;

    // exp: y' - y = 0; c_n = 2 I_n(1)
    fs.push_back({"exp", [](double x) { return std::exp(x); },
                  [](long n) { return 2.0 * std::cyl_bessel_i(double(n), 1.0); },
                  make_diffop({Poly{BigRat(-1)}, Poly::one()}), false, 1});

    // arctan: (x^2+1)y'' + 2x y' = 0; c_{2k+1} = (-1)^k 2(sqrt2-1)^{2k+1}/(2k+1)
    // (checked against quadrature: the signs alternate)
    fs.push_back({"arctan", [](double x) { return std::atan(x); },
                  [](long n) {
                      if (n % 2 == 0) return 0.0;
                      double v = 2.0 * std::pow(std::sqrt(2.0) - 1.0, double(n)) / double(n);
                      return ((n - 1) / 2) % 2 == 0 ? v : -v;
                  },
                  make_diffop({Poly(), Poly{BigRat(0), BigRat(2)}, Poly{BigRat(1), BigRat(0), BigRat(1)}}),
                  false, 2});

    // erf: y'' + 2x y' = 0;
    // c_{2k+1} = (-1)^k 2 (I_k(1/2)+I_{k+1}(1/2)) / ((2k+1) sqrt(e pi))
    // (argument and prefactor checked against quadrature)
    fs.push_back({"erf", [](double x) { return std::erf(x); },
                  [pi](long n) {
                      if (n % 2 == 0) return 0.0;
                      long k = (n - 1) / 2;
                      double v = 2.0 *
                                 (std::cyl_bessel_i(double(k), 0.5) + std::cyl_bessel_i(double(k + 1), 0.5)) /
                                 (double(n) * std::sqrt(std::exp(1.0) * pi));
                      return (k % 2 == 0) ? v : -v;
                  },
                  make_diffop({Poly(), Poly{BigRat(0), BigRat(2)}, Poly::one()}), false, 2});

    // arctanh: (x^2-1)y'' + 2x y' = 0; c_{2k+1} = 2/(2k+1)
    fs.push_back({"arctanh", [](double x) { return std::atanh(x); },
                  [](long n) { return n % 2 == 0 ? 0.0 : 2.0 / double(n); },
                  make_diffop({Poly(), Poly{BigRat(0), BigRat(2)}, Poly{BigRat(-1), BigRat(0), BigRat(1)}}),
                  true, 2});

    // arccos: (1-x^2)y'' - x y' = 0; c_0 = pi, c_n = -4/(n^2 pi) for odd n
    fs.push_back({"arccos", [](double x) { return std::acos(x); },
                  [pi](long n) {
                      if (n == 0) return pi;
                      if (n % 2 == 0) return 0.0;
                      return -4.0 / (double(n) * double(n) * pi);
                  },
                  make_diffop({Poly(), Poly{BigRat(0), BigRat(-1)}, Poly{BigRat(1), BigRat(0), BigRat(-1)}}),
                  true, 2});

    // (1-x^2)^(-1/4): 2(1-x^2)y' - x y = 0;
    // c_n = 2 Gamma(n/2+1/4) / (sqrt(pi) Gamma(n/2+3/4)) for even n
    fs.push_back({"invquartroot",
                  [](double x) { return std::pow(1.0 - x * x, -0.25); },
                  [pi](long n) {
                      if (n % 2 != 0) return 0.0;
                      return 2.0 * std::tgamma(n / 2.0 + 0.25) /
                             (std::sqrt(pi) * std::tgamma(n / 2.0 + 0.75));
                  },
                  make_diffop({Poly{BigRat(0), BigRat(-1)}, Poly{BigRat(2), BigRat(0), BigRat(-2)}}),
                  true, 1});

    return fs;
}

inline const CatalogFunction& catalog_lookup(const std::string& name) {
    static const std::vector<CatalogFunction> fs = catalog();
    for (const auto& f : fs)
        if (f.name == name) return f;
    throw std::invalid_argument("unknown catalog function: " + name);
}

// ---------------------------------------------------------------------------
// Quadrature: Gauss-Chebyshev at M interior nodes,
//   c_n ~= (2/M) sum_j f(cos theta_j) cos(n theta_j),  theta_j = (2j+1)pi/(2M).
// ---------------------------------------------------------------------------

inline CoeffSeq cheb_coeffs(const std::function<double(double)>& f, long N, long M) {
    if (N < 4) throw std::invalid_argument("cheb_coeffs: N must be >= 4");
    if (M < 2 * N) throw std::invalid_argument("cheb_coeffs: M must be >= 2N");
    const double pi = 3.14159265358979323846;
    std::vector<double> fv(static_cast<size_t>(M)), th(static_cast<size_t>(M));
    for (long j = 0; j < M; ++j) {
        th[static_cast<size_t>(j)] = (2.0 * double(j) + 1.0) * pi / (2.0 * double(M));
        double v = f(std::cos(th[static_cast<size_t>(j)]));
        if (!std::isfinite(v))
            throw std::domain_error("cheb_coeffs: non-finite value at node j = " + std::to_string(j));
        fv[static_cast<size_t>(j)] = v;
    }
    CoeffSeq c(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        double s = 0;
        for (long j = 0; j < M; ++j)
            s += fv[static_cast<size_t>(j)] * std::cos(double(n) * th[static_cast<size_t>(j)]);
        c[static_cast<size_t>(n)] = 2.0 * s / double(M);
    }
    return c;
}

inline CoeffSeq catalog_coeffs(const CatalogFunction& f, long N, long M = 0) {
    if (f.known_coeffs) {
        CoeffSeq c(static_cast<size_t>(N) + 1);
        for (long n = 0; n <= N; ++n) c[static_cast<size_t>(n)] = f.known_coeffs(n);
        return c;
    }
    if (M == 0) M = 4 * N;
    return cheb_coeffs(f.evaluator, N, M);
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

struct VerifyReport {
    bool pass = false;
    double max_rel_residual = 0;
    long worst_n = -1;
    long n_min = 0, n_max = 0;
    double tol = 0;
};

/// smallest n >= 1 with no coefficient pole anywhere in [n, n_max]
inline long default_n_min(const RecOp& P, long n_max) {
    long n_min = 1;
    for (long j = P.lo(); j <= P.hi(); ++j) {
        const RatFunc c = P.coeff(j);
        const Poly& den = c.den();
        if (den.degree() < 1) continue;
        for (long t = n_max; t >= 1; --t)
            if (den.eval(BigRat(t)).is_zero()) {
                n_min = std::max(n_min, t + 1);
                break;
            }
    }
    return n_min;
}

/// max over n of |sum_j r_j(n) c_{n+j}| / (max_j |r_j(n)| * max_m |c_m| + eps).
/// The denominator is the scale of the row, not the largest individual
/// term: past the point where the true coefficients decay below the
/// floating-point noise floor, every term of a row is pure noise and a
/// term-relative quotient would report O(1) for a correct operator.
inline VerifyReport verify_annihilation(const RecOp& P, const CoeffSeq& c, long n_min, double tol) {
    VerifyReport rep;
    rep.tol = tol;
    rep.n_min = n_min;
    rep.n_max = static_cast<long>(c.size()) - 1 - P.hi();
    if (rep.n_max < rep.n_min) throw std::invalid_argument("verify_annihilation: empty index window");
    const double eps = 1e-300;
    double cmax = 0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    for (long n = rep.n_min; n <= rep.n_max; ++n) {
        double num = 0, rmax = 0;
        for (long j = P.lo(); j <= P.hi(); ++j) {
            RatFunc r = P.coeff(j);
            if (r.is_zero()) continue;
            long idx = n + j;
            if (idx < 0) idx = -idx;
            double rv = r.eval(BigRat(n)).to_double();
            num += rv * c[static_cast<size_t>(idx)];
            rmax = std::max(rmax, std::abs(rv));
        }
        double rel = std::abs(num) / (rmax * cmax + eps);
        if (rel > rep.max_rel_residual) {
            rep.max_rel_residual = rel;
            rep.worst_n = n;
        }
    }
    rep.pass = rep.max_rel_residual <= tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Forward solving, generic over the numeric type (double for quick checks,
// exact rationals or big floats when forward recursion is unstable).
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
T from_rat(const BigRat& q) {
    if constexpr (std::is_same_v<T, BigRat>) {
        return q;
    } else if constexpr (std::is_same_v<T, double>) {
        return q.to_double();
    } else {
        return T(mpq_class(q.num(), q.den()));
    }
}

}  // namespace detail

struct SolveStats {
    double growth_ratio = 0;  // max |c_{n+1}| / |c_n| over nonzero steps
    bool possibly_unstable = false;
};

/// Iterates c_{n+m} = -(sum_{j<m} r_j(n) c_{n+j}) / r_m(n) for n starting at
/// n_start, from the m initial values c_{n_start}..c_{n_start+m-1} (preceded
/// in the output by zeros when n_start > 0). P must be normalized to
/// support [0, m].
template <class T>
std::vector<T> solve_forward(const RecOp& P, const std::vector<T>& initial, long N,
                             long n_start = 0, SolveStats* stats = nullptr) {
    if (P.lo() != 0) throw std::invalid_argument("solve_forward: operator not normalized to [0,m]");
    const long m = P.hi();
    if (static_cast<long>(initial.size()) != m)
        throw std::invalid_argument("solve_forward: expected " + std::to_string(m) + " initial values");
    std::vector<T> c(static_cast<size_t>(N) + 1, T{});
    for (long i = 0; i < m; ++i) c[static_cast<size_t>(n_start + i)] = initial[static_cast<size_t>(i)];
    double growth = 0;
    for (long n = n_start; n + m <= N; ++n) {
        RatFunc lead = P.coeff(m);
        BigRat lv;
        if (lead.has_pole_at(BigRat(n)))
            throw std::domain_error("solve_forward: coefficient pole at n = " + std::to_string(n));
        lv = lead.eval(BigRat(n));
        if (lv.is_zero())
            throw std::domain_error("solve_forward: leading coefficient vanishes at n = " +
                                    std::to_string(n));
        T acc{};
        for (long j = 0; j < m; ++j) {
            RatFunc r = P.coeff(j);
            if (r.is_zero()) continue;
            acc += detail::from_rat<T>(r.eval(BigRat(n))) * c[static_cast<size_t>(n + j)];
        }
        c[static_cast<size_t>(n + m)] = -acc / detail::from_rat<T>(lv);
        if constexpr (std::is_same_v<T, double>) {
            double prev = std::abs(c[static_cast<size_t>(n + m - 1)]);
            double cur = std::abs(c[static_cast<size_t>(n + m)]);
            if (prev > 0 && cur > 0) growth = std::max(growth, cur / prev);
        }
    }
    if (stats) {
        stats->growth_ratio = growth;
        stats->possibly_unstable = growth > 1.0;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Clenshaw evaluation of the truncated series, with the c_0/2 convention.
// ---------------------------------------------------------------------------

inline double truncated_eval(const CoeffSeq& c, double x) {
    if (x < -1.0 || x > 1.0) throw std::domain_error("truncated_eval: x outside [-1,1]");
    double b1 = 0, b2 = 0;
    for (size_t n = c.size(); n-- > 1;) {
        double b0 = 2.0 * x * b1 - b2 + c[n];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + 0.5 * c[0];
}

}  // namespace orecheb

#endif  // ORECHEB_SERIES_HPP
