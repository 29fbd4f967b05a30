#ifndef ORECHEB_CHEBREC_HPP
#define ORECHEB_CHEBREC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orecheb/fraction.hpp"

namespace orecheb {

// ---------------------------------------------------------------------------
// The basic symbols of the Chebyshev-coefficient calculus:
//   X = (S + S^{-1})/2           (multiplication by x)
//   D = (S^{-1} - S)^{-1} (2n)   (differentiation, a genuine fraction)
//   I = D^{-1} = (1/2n)(-S + S^{-1})   (integration, polynomial)
// ---------------------------------------------------------------------------

inline RecOp cheb_X() {
    return RecOp::term(RatFunc(BigRat(1, 2)), -1) + RecOp::term(RatFunc(BigRat(1, 2)), 1);
}

/// S^{-1} - S, the denominator of D
inline RecOp cheb_D_den() { return RecOp::shift(-1) - RecOp::shift(1); }

inline RecFrac cheb_D() {
    return RecFrac(cheb_D_den(), RecOp(RatFunc(Poly{BigRat(0), BigRat(2)})));
}

inline RecOp cheb_I() {
    RatFunc half_over_n(Poly{BigRat(1, 2)}, Poly::variable());
    return RecOp::term(half_over_n, -1) + RecOp::term(-half_over_n, 1);
}

/// p(X) evaluated by Horner's rule in the recurrence algebra.
inline RecOp phi_polynomial(const Poly& p) {
    RecOp x = cheb_X();
    RecOp r;
    for (int i = p.degree(); i >= 0; --i) r = r * x + RecOp(RatFunc(p.coeff(i)));
    return r;
}

/// The morphism applied to a whole operator, by Horner's rule over
/// fractions. Coefficients must be polynomials.
inline RecFrac phi(const DiffOp& L) {
    RecFrac d = cheb_D();
    RecFrac r;
    for (int i = L.degree(); i >= 0; --i) {
        r = frac_mul(r, d);
        r = frac_add(r, RecFrac(phi_polynomial(L.coeff(i).as_poly())));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Closed form for I^i.
// ---------------------------------------------------------------------------

namespace detail {

/// rising factorial (p)_m = p (p+1) ... (p+m-1) for a linear-in-n start
inline Poly poch(const Poly& p, int m) {
    Poly r = Poly::one();
    for (int j = 0; j < m; ++j) r *= p.shifted(BigRat(j));
    return r;
}

/// r(i) = 2^i n prod_{k=1}^{i-1} (n^2 - k^2)
inline Poly i_power_denominator(int i) {
    Poly r = Poly::monomial(BigRat(2).pow(static_cast<unsigned>(i)), 1);
    for (int k = 1; k < i; ++k)
        r *= Poly{BigRat(-static_cast<long>(k) * k), BigRat(0), BigRat(1)};
    return r;
}

inline BigRat binom(int i, int k) {
    BigRat r(1);
    for (int j = 0; j < k; ++j) r = r * BigRat(i - j) / BigRat(j + 1);
    return r;
}

}  // namespace detail

/// Closed form
///   I^i = (1/r(i)) sum_{k=0}^{i} s(k) S^{-i+2k},
///   s(k) = (-1)^k C(i,k) (n-i+2k) (n+k+1)_{i-1-k} (n-i+1)_{k-1},
/// with the conventions (a)_{-1} = 1/(a-1) at the two extreme terms (where
/// the (n-i+2k) factor cancels the division exactly). The formula is
/// validated against repeated multiplication in the tests.
inline RecOp i_power_closed_form(int i) {
    if (i < 1) throw std::invalid_argument("i_power_closed_form: i must be >= 1");
    const Poly n = Poly::variable();
    Poly r = detail::i_power_denominator(i);
    RecOp acc;
    for (int k = 0; k <= i; ++k) {
        Poly s;
        if (k == 0) {
            s = detail::poch(n.shifted(BigRat(1)), i - 1);  // (n+1)_{i-1}
        } else if (k == i) {
            Poly t = detail::poch(n.shifted(BigRat(1 - i)), i - 1);  // (n-i+1)_{i-1}
            s = (i % 2 == 0) ? t : -t;
        } else {
            s = Poly(detail::binom(i, k)) * Poly{BigRat(2L * k - i), BigRat(1)} *
                detail::poch(n.shifted(BigRat(k + 1)), i - 1 - k) *
                detail::poch(n.shifted(BigRat(1 - i)), k - 1);
            if (k % 2 != 0) s = -s;
        }
        acc += RecOp::term(RatFunc(s, r), -i + 2 * k);
    }
    return acc;
}

/// Per-computation cache of I powers (closed form).
class IPowerCache {
  public:
    const RecOp& get(int i) {
        auto it = cache_.find(i);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(i, i_power_closed_form(i)).first->second;
    }

  private:
    std::map<int, RecOp> cache_;
};

// ---------------------------------------------------------------------------
// Algorithm results.
// ---------------------------------------------------------------------------

inline const char* hypothesis_disclaimer() {
    return "This recurrence annihilates the Chebyshev coefficients of solutions only "
           "under an analytic hypothesis on the solution (convergence of the integral "
           "of f^(k)(x)/sqrt(1-x^2), or of its (1-x^2)^k-weighted variant when "
           "(1-x^2)^i divides each coefficient p_i). The hypothesis is not checked "
           "here. Counterexample when it fails: arccos(x) solves "
           "(1-x^2)y'' - x y' = 0, whose image has numerator n^2, yet its Chebyshev "
           "coefficients -4/(n^2 pi) (n odd) are not annihilated by n^2.";
}

/// syntactic part of the weighted hypothesis: (1-x^2)^i | p_i for all i
inline bool hprime_syntactic(const DiffOp& L) {
    Poly w{BigRat(1), BigRat(0), BigRat(-1)};  // 1 - x^2
    for (int i = 1; i <= L.degree(); ++i) {
        if (L.coeff(i).is_zero()) continue;
        Poly p = L.coeff(i).as_poly();
        Poly wi = w.pow(static_cast<unsigned>(i));
        if (!Poly::divmod(p, wi).second.is_zero()) return false;
    }
    return true;
}

struct RecurrenceResult {
    RecOp op;                       // normalized, support [0, order]
    long order = 0;                 // S-span of the normalized operator
    long support_offset = 0;        // lo of the raw operator before the shift
    std::string algorithm;
    std::optional<RecOp> denominator;  // normalized Q (Lewanowicz only)
    std::string hypothesis_note;
};

namespace detail {

inline RecurrenceResult make_result(const RecOp& raw, const std::string& algo,
                                    std::optional<RecOp> den = std::nullopt) {
    if (raw.is_zero()) throw std::domain_error(algo + ": zero recurrence operator");
    RecurrenceResult r;
    r.op = rec_normalize(raw, &r.support_offset);
    r.order = r.op.span();
    r.algorithm = algo;
    if (den) r.denominator = rec_normalize(*den);
    r.hypothesis_note = hypothesis_disclaimer();
    return r;
}

/// clears rational coefficients of the input operator (multiplies by the
/// common denominator on the left — a unit of Q(x), harmless)
inline DiffOp as_polynomial_operator(const DiffOp& L) {
    if (L.is_zero()) throw std::domain_error("chebrec: zero differential operator");
    auto [p, d] = diff_clear_denominators(L);
    (void)d;
    return diff_from_polys(p);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lewanowicz: Horner evaluation of the morphism over fractions, keeping the
// fraction irreducible structurally (lclm steps, no blanket reduction).
// ---------------------------------------------------------------------------

inline RecurrenceResult lewanowicz(const DiffOp& Lin) {
    DiffOp L = detail::as_polynomial_operator(Lin);
    const int k = L.degree();
    RecOp den = cheb_D_den();                                // S^{-1} - S
    RecOp two_n(RatFunc(Poly{BigRat(0), BigRat(2)}));        // 2n
    RecOp P = phi_polynomial(L.coeff(k).as_poly());
    RecOp Q = RecOp::one();
    for (int i = k - 1; i >= 0; --i) {
        if (P.is_zero()) {
            // fraction is exactly zero: multiplying by D keeps it zero
            P = Q * phi_polynomial(L.coeff(i).as_poly());
            continue;
        }
        auto l = rec_lclm_cofactors(den, P);  // lclm = ca*(S^{-1}-S) = cb*P
        Q = l.cb * Q;
        P = l.ca * two_n + Q * phi_polynomial(L.coeff(i).as_poly());
    }
    return detail::make_result(P, "lewanowicz", Q);
}

// ---------------------------------------------------------------------------
// Integral form L = sum_i d^i q_i(x), computed by peeling the top order.
// ---------------------------------------------------------------------------

/// returns q_0..q_k (index = power of the derivation on the left)
inline std::vector<Poly> to_integral_form(const DiffOp& Lin) {
    DiffOp L = detail::as_polynomial_operator(Lin);
    const int k = L.degree();
    std::vector<Poly> q(static_cast<size_t>(k) + 1);
    DiffOp rest = L;
    for (int i = k; i >= 0; --i) {
        if (rest.degree() > i) throw std::logic_error("to_integral_form: order did not drop");
        Poly qi = rest.coeff(i).is_zero() ? Poly() : rest.coeff(i).as_poly();
        q[static_cast<size_t>(i)] = qi;
        if (!qi.is_zero())
            rest -= DiffOp::monomial(RatFunc(1), i) * DiffOp(RatFunc(qi));
    }
    if (!rest.is_zero()) throw std::logic_error("to_integral_form: nonzero remainder");
    return q;
}

// ---------------------------------------------------------------------------
// Paszkowski: I^k phi(L) = sum_i I^{k-i} q_i(X).
// ---------------------------------------------------------------------------

/// the raw (un-normalized) operator, shared with the cross-checks
inline RecOp paszkowski_raw(const DiffOp& Lin, IPowerCache* cache = nullptr) {
    DiffOp L = detail::as_polynomial_operator(Lin);
    const int k = L.degree();
    auto q = to_integral_form(L);
    IPowerCache local;
    IPowerCache& ip = cache ? *cache : local;
    RecOp R = phi_polynomial(q[static_cast<size_t>(k)]);
    for (int i = 1; i <= k; ++i) {
        const Poly& qi = q[static_cast<size_t>(k - i)];
        if (qi.is_zero()) continue;
        R += ip.get(i) * phi_polynomial(qi);
    }
    return R;
}

inline RecurrenceResult paszkowski(const DiffOp& L) {
    return detail::make_result(paszkowski_raw(L), "paszkowski");
}

// ---------------------------------------------------------------------------
// Rebillard: I^k phi(L) = sum_i p_i(X_k) I^{k-i}, with
// X_k = (2n)^{-1}((n+k)S + (n-k)S^{-1}).
// ---------------------------------------------------------------------------

inline RecOp cheb_X_k(int k) {
    Poly two_n{BigRat(0), BigRat(2)};
    return RecOp::term(RatFunc(Poly{BigRat(-k), BigRat(1)}, two_n), -1) +
           RecOp::term(RatFunc(Poly{BigRat(k), BigRat(1)}, two_n), 1);
}

inline RecOp rebillard_raw(const DiffOp& Lin, IPowerCache* cache = nullptr) {
    DiffOp L = detail::as_polynomial_operator(Lin);
    const int k = L.degree();
    RecOp xk = cheb_X_k(k);
    IPowerCache local;
    IPowerCache& ip = cache ? *cache : local;
    auto p_of_xk = [&](const Poly& p) {
        RecOp r;
        for (int i = p.degree(); i >= 0; --i) r = r * xk + RecOp(RatFunc(p.coeff(i)));
        return r;
    };
    RecOp R = p_of_xk(L.coeff(k).as_poly());
    for (int i = 1; i <= k; ++i) {
        if (L.coeff(k - i).is_zero()) continue;
        R += p_of_xk(L.coeff(k - i).as_poly()) * ip.get(i);
    }
    return R;
}

inline RecurrenceResult rebillard(const DiffOp& L) {
    return detail::make_result(rebillard_raw(L), "rebillard");
}

// ---------------------------------------------------------------------------
// Fast multiplication of I^ell by P = sum_{i<=ell} I^i a_i(X), deg a_i <= d,
// by block decomposition plus evaluation-interpolation in n.
//
// r(2ell) I^ell P = sum_i (r(2ell) I^{ell+i}) a_i(X) has polynomial
// coefficients of n-degree at most 3ell-1, because r(2ell)/r(j) is a
// polynomial of degree 2(2ell-j) for j <= 2ell and r(j)I^j has n-degree
// j-1. Evaluation points start at 2ell+1: the coefficients of P have poles
// only in [-(ell-1), ell-1], and the product probes them at t+j with
// |j| <= ell.
// ---------------------------------------------------------------------------

inline RecOp fast_mul_by_I_power(int ell, const RecOp& P, int d, IPowerCache* cache = nullptr) {
    if (ell < 1) throw std::invalid_argument("fast_mul_by_I_power: ell must be >= 1");
    IPowerCache local;
    IPowerCache& ip = cache ? *cache : local;
    if (P.is_zero()) return RecOp();

    // B = r(2ell) I^ell, polynomial coefficients
    Poly r2l = detail::i_power_denominator(2 * ell);
    RecOp B = ip.get(ell).scaled(RatFunc(r2l));

    const long block = 2L * ell + 1;   // block width in S
    const long lo = P.lo(), hi = P.hi();
    const int npts = 3 * ell;          // n-degree bound 3ell - 1
    const int ncheck = npts + 1;       // one extra point guards the bound

    // result support: [lo - ell, hi + ell]
    const long rlo = lo - ell, rhi = hi + ell;
    std::vector<std::vector<BigRat>> acc(static_cast<size_t>(rhi - rlo + 1),
                                         std::vector<BigRat>(static_cast<size_t>(ncheck)));

    // evaluate B once per point
    std::vector<std::vector<BigRat>> Bval(static_cast<size_t>(ncheck));
    for (int s = 0; s < ncheck; ++s) {
        BigRat t(2L * ell + 1 + s);
        auto& row = Bval[static_cast<size_t>(s)];
        row.resize(static_cast<size_t>(2 * ell + 1));
        for (long j = -ell; j <= ell; ++j) row[static_cast<size_t>(j + ell)] = B.coeff(j).eval(t);
    }

    // block decomposition is plain coefficient extraction; the product of B
    // with each block is evaluated and the evaluations are summed into the
    // final S-positions before a single interpolation pass
    for (long base = lo; base <= hi; base += block) {
        for (int s = 0; s < ncheck; ++s) {
            BigRat t(2L * ell + 1 + s);
            for (long j = -ell; j <= ell; ++j) {
                const BigRat& bj = Bval[static_cast<size_t>(s)][static_cast<size_t>(j + ell)];
                if (bj.is_zero()) continue;
                BigRat tj = t + BigRat(j);
                for (long m = base; m < std::min(base + block, hi + 1); ++m) {
                    RatFunc am = P.coeff(m);
                    if (am.is_zero()) continue;
                    acc[static_cast<size_t>(j + m - rlo)][static_cast<size_t>(s)] +=
                        bj * am.eval(tj);
                }
            }
        }
    }

    std::vector<BigRat> xs(static_cast<size_t>(npts));
    for (int s = 0; s < npts; ++s) xs[static_cast<size_t>(s)] = BigRat(2L * ell + 1 + s);
    std::vector<RatFunc> out(acc.size());
    for (size_t m = 0; m < acc.size(); ++m) {
        std::vector<BigRat> ys(acc[m].begin(), acc[m].begin() + npts);
        Poly c = poly_interpolate(xs, ys);
        if (c.degree() >= npts)
            throw std::logic_error("fast_mul_by_I_power: interpolated degree exceeds bound");
        if (c.eval(BigRat(2L * ell + 1 + npts)) != acc[m][static_cast<size_t>(npts)])
            throw std::logic_error("fast_mul_by_I_power: degree bound violated at check point");
        out[m] = RatFunc(c, r2l);
    }
    return RecOp(rlo, std::move(out));
}

// ---------------------------------------------------------------------------
// Divide and conquer: P_(0..k) = sum_i I^i a_i(X), split at ell = ceil(k/2):
// P_(0..ell-1) + I^ell P_(ell..k), the product done by fast multiplication.
// ---------------------------------------------------------------------------

namespace detail {

/// a is the list a_lo..a_hi (absolute indices into the original a_i's,
/// but powers of I are relative to lo)
inline RecOp dac_range(const std::vector<Poly>& a, size_t lo, size_t hi, int d,
                       IPowerCache& cache) {
    const size_t k = hi - lo;
    if (k == 0) return phi_polynomial(a[lo]);
    const size_t ell = (k + 1) / 2;
    RecOp low = dac_range(a, lo, lo + ell - 1, d, cache);
    RecOp high = dac_range(a, lo + ell, hi, d, cache);
    if (high.is_zero()) return low;
    return low + fast_mul_by_I_power(static_cast<int>(ell), high, d, &cache);
}

}  // namespace detail

inline RecOp dac_raw(const DiffOp& Lin, IPowerCache* cache = nullptr) {
    DiffOp L = detail::as_polynomial_operator(Lin);
    const int k = L.degree();
    auto q = to_integral_form(L);
    // a_i = q_{k-i}, so the target is sum_i I^i a_i(X)
    std::vector<Poly> a(q.rbegin(), q.rend());
    int d = 0;
    for (const auto& p : a) d = std::max(d, std::max(0, p.degree()));
    IPowerCache local;
    IPowerCache& ip = cache ? *cache : local;
    return detail::dac_range(a, 0, static_cast<size_t>(k), d, ip);
}

inline RecurrenceResult dac(const DiffOp& L) {
    return detail::make_result(dac_raw(L), "dac");
}

// ---------------------------------------------------------------------------
// Order reduction: left-divide by the gcld with (the numerator of) I^k.
// ---------------------------------------------------------------------------

inline RecurrenceResult reduce_order(const RecurrenceResult& R, int k) {
    if (k < 1) return R;
    RecOp ik_num = rec_normalize(i_power_closed_form(k).scaled(
        RatFunc(detail::i_power_denominator(k))));
    RecOp g = rec_gcld(R.op, ik_num);
    if (g.span() == 0) return R;
    RecOp reduced = detail::rec_exact_left_quotient(R.op.rshifted(-R.op.lo()), g);
    RecurrenceResult out = detail::make_result(reduced, R.algorithm + "+reduce");
    out.support_offset = R.support_offset;  // offset of the pre-reduction operator
    out.denominator = R.denominator;
    return out;
}

inline RecurrenceResult run_algorithm(const std::string& name, const DiffOp& L) {
    if (name == "lewanowicz") return lewanowicz(L);
    if (name == "paszkowski") return paszkowski(L);
    if (name == "rebillard") return rebillard(L);
    if (name == "dac") return dac(L);
    throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace orecheb

#endif  // ORECHEB_CHEBREC_HPP
