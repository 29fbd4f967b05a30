#ifndef ORECHEB_ORE_HPP
#define ORECHEB_ORE_HPP

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orecheb/ratfunc.hpp"

namespace orecheb {

// Commutation rules d*a = sigma(a)*d + delta(a) for the two Ore rings in
// use: recurrence operators (sigma = shift, delta = 0, sigma invertible)
// and differential operators (sigma = id, delta = d/dx).

struct ShiftRule {
    static RatFunc sigma(const RatFunc& a) { return a.shifted_arg(BigRat(1)); }
    static RatFunc sigma_pow(const RatFunc& a, long j) {
        return j == 0 ? a : a.shifted_arg(BigRat(j));
    }
    static RatFunc delta(const RatFunc&) { return RatFunc(); }
    static constexpr bool delta_is_zero = true;
};

struct DerivationRule {
    static RatFunc sigma(const RatFunc& a) { return a; }
    static RatFunc sigma_pow(const RatFunc& a, long) { return a; }
    static RatFunc delta(const RatFunc& a) { return a.derivative(); }
    static constexpr bool delta_is_zero = false;
};

/// Ore polynomial sum_i c_i d^i with rational-function coefficients and
/// nonnegative powers of the indeterminate.
template <class Rule>
class OrePoly {
  public:
    OrePoly() = default;
    explicit OrePoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit OrePoly(const RatFunc& scalar) {
        if (!scalar.is_zero()) c_.push_back(scalar);
    }

    static OrePoly zero() { return OrePoly(); }
    static OrePoly one() { return OrePoly(RatFunc(1)); }
    static OrePoly monomial(const RatFunc& c, int e) {
        if (c.is_zero()) return OrePoly();
        std::vector<RatFunc> v(static_cast<size_t>(e) + 1);
        v.back() = c;
        return OrePoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
        return c_[static_cast<size_t>(i)];
    }
    RatFunc leading() const { return c_.empty() ? RatFunc() : c_.back(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    OrePoly operator-() const {
        OrePoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
        std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return OrePoly(std::move(v));
    }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
        if (a.is_zero() || b.is_zero()) return OrePoly();
        if constexpr (Rule::delta_is_zero) {
            std::vector<RatFunc> v(a.c_.size() + b.c_.size() - 1);
            for (size_t i = 0; i < a.c_.size(); ++i) {
                if (a.c_[i].is_zero()) continue;
                for (size_t j = 0; j < b.c_.size(); ++j) {
                    if (b.c_[j].is_zero()) continue;
                    v[i + j] += a.c_[i] * Rule::sigma_pow(b.c_[j], static_cast<long>(i));
                }
            }
            return OrePoly(std::move(v));
        } else {
            // generic: accumulate a_i * (d^i b), with d*b expanded through
            // the commutation rule
            OrePoly result;
            OrePoly db = b;  // d^i * b
            for (size_t i = 0; i < a.c_.size(); ++i) {
                if (!a.c_[i].is_zero()) result += db.scaled(a.c_[i]);
                if (i + 1 < a.c_.size()) db = db.apply_gen();
            }
            return result;
        }
    }

    OrePoly& operator+=(const OrePoly& o) { return *this = *this + o; }
    OrePoly& operator-=(const OrePoly& o) { return *this = *this - o; }
    OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    /// coefficient-wise left multiplication by a scalar
    OrePoly scaled(const RatFunc& s) const {
        if (s.is_zero()) return OrePoly();
        OrePoly r(*this);
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    /// d * this, expanded through the commutation rule
    OrePoly apply_gen() const {
        std::vector<RatFunc> v(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            v[i + 1] += Rule::sigma(c_[i]);
            v[i] += Rule::delta(c_[i]);
        }
        return OrePoly(std::move(v));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFunc> c_;
};

/// Linear differential operator sum p_i(x) d/dx^i over Q(x).
using DiffOp = OrePoly<DerivationRule>;
using RecCore = OrePoly<ShiftRule>;

// ---------------------------------------------------------------------------
// Euclidean toolbox. Division works in any Ore ring; the left-sided variants
// additionally use sigma^{-1}, which both rules here provide.
// ---------------------------------------------------------------------------

/// a = q*b + r with deg r < deg b
template <class Rule>
std::pair<OrePoly<Rule>, OrePoly<Rule>> ore_divmod_right(const OrePoly<Rule>& a,
                                                         const OrePoly<Rule>& b) {
    if (b.is_zero()) throw std::domain_error("ore_divmod_right: zero divisor");
    OrePoly<Rule> q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int e = r.degree() - db;
        RatFunc c = r.leading() / Rule::sigma_pow(b.leading(), e);
        auto t = OrePoly<Rule>::monomial(c, e);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

/// a = b*q + r with deg r < deg b
template <class Rule>
std::pair<OrePoly<Rule>, OrePoly<Rule>> ore_divmod_left(const OrePoly<Rule>& a,
                                                        const OrePoly<Rule>& b) {
    if (b.is_zero()) throw std::domain_error("ore_divmod_left: zero divisor");
    OrePoly<Rule> q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int e = r.degree() - db;
        RatFunc c = Rule::sigma_pow(r.leading() / b.leading(), -db);
        auto t = OrePoly<Rule>::monomial(c, e);
        q += t;
        r -= b * t;
    }
    return {q, r};
}

template <class Rule>
OrePoly<Rule> ore_gcrd(OrePoly<Rule> a, OrePoly<Rule> b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        auto r = ore_divmod_right(a, b).second;
        // left scaling keeps the right-divisor structure and the
        // coefficients modest
        if (!r.is_zero()) r = r.scaled(r.leading().inverse());
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <class Rule>
OrePoly<Rule> ore_gcld(OrePoly<Rule> a, OrePoly<Rule> b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        auto r = ore_divmod_left(a, b).second;
        if (!r.is_zero()) {
            // right scaling is the one that keeps left divisors intact
            RatFunc c = Rule::sigma_pow(r.leading().inverse(), -r.degree());
            r = r * OrePoly<Rule>(c);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <class Rule>
struct ExtendedEuclid {
    OrePoly<Rule> g;        // gcrd(a, b)
    OrePoly<Rule> u, v;     // Bezout: g = u*a + v*b
    OrePoly<Rule> lclm;     // least common left multiple
    OrePoly<Rule> ca, cb;   // lclm = ca*a = cb*b
};

/// Extended right Euclidean algorithm: Bezout cofactors plus the lclm
/// cofactors from the final step.
template <class Rule>
ExtendedEuclid<Rule> ore_extended_gcrd(const OrePoly<Rule>& a, const OrePoly<Rule>& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("ore_extended_gcrd: both operands zero");
    using Op = OrePoly<Rule>;
    Op r0 = a, r1 = b;
    Op u0 = Op::one(), u1 = Op::zero();
    Op v0 = Op::zero(), v1 = Op::one();
    while (!r1.is_zero()) {
        auto [q, r2] = ore_divmod_right(r0, r1);
        Op u2 = u0 - q * u1;
        Op v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    ExtendedEuclid<Rule> out;
    out.g = r0;
    out.u = u0;
    out.v = v0;
    out.ca = u1;
    out.cb = -v1;
    out.lclm = u1 * a;
    return out;
}

/// least common right multiple via the extended left Euclidean algorithm;
/// cofactors multiply on the right: lcrm = a*ca = b*cb.
template <class Rule>
std::tuple<OrePoly<Rule>, OrePoly<Rule>, OrePoly<Rule>> ore_lcrm_cofactors(const OrePoly<Rule>& a,
                                                                           const OrePoly<Rule>& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("ore_lcrm_cofactors: both operands zero");
    using Op = OrePoly<Rule>;
    Op r0 = a, r1 = b;
    Op u0 = Op::one(), u1 = Op::zero();
    Op v0 = Op::zero(), v1 = Op::one();
    while (!r1.is_zero()) {
        auto [q, r2] = ore_divmod_left(r0, r1);
        Op u2 = u0 - u1 * q;
        Op v2 = v0 - v1 * q;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    return {a * u1, u1, -v1};
}

// ---------------------------------------------------------------------------
// RecOp: Laurent recurrence operator sum_{j=lo..hi} r_j(n) S^j over Q(n).
// Stored as a nonnegative-support core right-multiplied by S^lo, so the
// stored coefficients are exactly the r_j.
// ---------------------------------------------------------------------------

class RecOp {
  public:
    RecOp() = default;
    RecOp(long lo, RecCore core) : lo_(lo), c_(std::move(core)) { fix(); }
    RecOp(long lo, std::vector<RatFunc> coeffs) : lo_(lo), c_(std::move(coeffs)) { fix(); }
    explicit RecOp(const RatFunc& scalar) : lo_(0), c_(scalar) { fix(); }

    static RecOp zero() { return RecOp(); }
    static RecOp one() { return RecOp(RatFunc(1)); }
    static RecOp shift(long j) { return RecOp(j, std::vector<RatFunc>{RatFunc(1)}); }
    static RecOp term(const RatFunc& c, long j) { return RecOp(j, std::vector<RatFunc>{c}); }

    bool is_zero() const { return c_.is_zero(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + c_.degree(); }
    /// S-span of the support
    long span() const { return is_zero() ? 0 : c_.degree(); }
    RatFunc coeff(long j) const { return c_.coeff(static_cast<int>(j - lo_)); }
    const RecCore& core() const { return c_; }

    RecOp operator-() const { return RecOp(lo_, -c_); }

    friend RecOp operator+(const RecOp& a, const RecOp& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::max(a.hi(), b.hi());
        std::vector<RatFunc> v(static_cast<size_t>(hi - lo) + 1);
        for (long j = lo; j <= hi; ++j) v[static_cast<size_t>(j - lo)] = a.coeff(j) + b.coeff(j);
        return RecOp(lo, std::move(v));
    }
    friend RecOp operator-(const RecOp& a, const RecOp& b) { return a + (-b); }

    friend RecOp operator*(const RecOp& a, const RecOp& b) {
        if (a.is_zero() || b.is_zero()) return RecOp();
        // A S^la * B S^lb = A * sigma^la(B) * S^(la+lb)
        return RecOp(a.lo_ + b.lo_, a.c_ * b.shifted_core(a.lo_));
    }

    RecOp& operator+=(const RecOp& o) { return *this = *this + o; }
    RecOp& operator-=(const RecOp& o) { return *this = *this - o; }
    RecOp& operator*=(const RecOp& o) { return *this = *this * o; }

    friend bool operator==(const RecOp& a, const RecOp& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RecOp& a, const RecOp& b) { return !(a == b); }

    /// S^j * this (shifts both the support and the coefficient arguments)
    RecOp lshifted(long j) const {
        if (is_zero() || j == 0) return *this;
        return RecOp(lo_ + j, shifted_core(j));
    }
    /// this * S^j (shifts the support only)
    RecOp rshifted(long j) const {
        if (is_zero()) return *this;
        return RecOp(lo_ + j, c_);
    }
    /// coefficient-wise left scalar multiple
    RecOp scaled(const RatFunc& s) const { return RecOp(lo_, c_.scaled(s)); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long j = lo_; j <= hi(); ++j) {
            RatFunc c = coeff(j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str("n") << ")";
            if (j != 0) os << "*S^" << j;
        }
        return os.str();
    }

  private:
    RecCore shifted_core(long j) const {
        if (j == 0) return c_;
        std::vector<RatFunc> v(c_.coeffs());
        for (auto& x : v) x = x.shifted_arg(BigRat(j));
        return RecCore(std::move(v));
    }

    void fix() {
        // strip zero low-order coefficients into the base shift
        const auto& v = c_.coeffs();
        size_t k = 0;
        while (k < v.size() && v[k].is_zero()) ++k;
        if (k > 0) {
            std::vector<RatFunc> w(v.begin() + static_cast<long>(k), v.end());
            lo_ += static_cast<long>(k);
            c_ = RecCore(std::move(w));
        }
        if (c_.is_zero()) lo_ = 0;
    }

    long lo_ = 0;
    RecCore c_;
};

namespace detail {

inline RecCore rec_to_core(const RecOp& a) {
    if (a.is_zero()) return RecCore();
    if (a.lo() < 0) throw std::domain_error("RecOp: negative S-support where nonnegative required");
    std::vector<RatFunc> v(static_cast<size_t>(a.hi()) + 1);
    for (long j = a.lo(); j <= a.hi(); ++j) v[static_cast<size_t>(j)] = a.coeff(j);
    return RecCore(std::move(v));
}

inline RecOp rec_from_core(const RecCore& c) { return RecOp(0, c); }

}  // namespace detail

/// Right Euclidean division; both operands must already have nonnegative
/// S-support.
inline std::pair<RecOp, RecOp> rec_divmod_right(const RecOp& a, const RecOp& b) {
    auto [q, r] = ore_divmod_right(detail::rec_to_core(a), detail::rec_to_core(b));
    return {detail::rec_from_core(q), detail::rec_from_core(r)};
}

/// Left Euclidean division; both operands must already have nonnegative
/// S-support.
inline std::pair<RecOp, RecOp> rec_divmod_left(const RecOp& a, const RecOp& b) {
    auto [q, r] = ore_divmod_left(detail::rec_to_core(a), detail::rec_to_core(b));
    return {detail::rec_from_core(q), detail::rec_from_core(r)};
}

/// gcrd up to a unit; Laurent inputs are right-shifted to nonnegative
/// support first.
inline RecOp rec_gcrd(const RecOp& a, const RecOp& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("rec_gcrd: both operands zero");
    if (a.is_zero()) return b.rshifted(-b.lo());
    if (b.is_zero()) return a.rshifted(-a.lo());
    auto g = ore_gcrd(detail::rec_to_core(a.rshifted(-a.lo())),
                      detail::rec_to_core(b.rshifted(-b.lo())));
    return detail::rec_from_core(g);
}

/// gcld up to a unit; right shifts do not disturb left divisors.
inline RecOp rec_gcld(const RecOp& a, const RecOp& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("rec_gcld: both operands zero");
    if (a.is_zero()) return b.rshifted(-b.lo());
    if (b.is_zero()) return a.rshifted(-a.lo());
    auto g = ore_gcld(detail::rec_to_core(a.rshifted(-a.lo())),
                      detail::rec_to_core(b.rshifted(-b.lo())));
    return detail::rec_from_core(g);
}

struct RecLclm {
    RecOp lclm;
    RecOp ca, cb;  // lclm = ca*a = cb*b, exactly
};

/// lclm with exact cofactors. A common right shift is applied to both
/// operands, so the cofactor identities hold for the original Laurent
/// operators (the shift cancels on the right).
inline RecLclm rec_lclm_cofactors(const RecOp& a, const RecOp& b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("rec_lclm_cofactors: zero operand");
    long s = std::max({0L, -a.lo(), -b.lo()});
    auto ee = ore_extended_gcrd(detail::rec_to_core(a.rshifted(s)),
                                detail::rec_to_core(b.rshifted(s)));
    RecLclm out;
    out.ca = detail::rec_from_core(ee.ca);
    out.cb = detail::rec_from_core(ee.cb);
    out.lclm = detail::rec_from_core(ee.lclm).rshifted(-s);
    return out;
}

inline RecOp rec_lclm(const RecOp& a, const RecOp& b) { return rec_lclm_cofactors(a, b).lclm; }

/// lcrm up to a unit.
inline RecOp rec_lcrm(const RecOp& a, const RecOp& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("rec_lcrm: zero operand");
    auto [m, ca, cb] = ore_lcrm_cofactors(detail::rec_to_core(a.rshifted(-a.lo())),
                                          detail::rec_to_core(b.rshifted(-b.lo())));
    (void)ca;
    (void)cb;
    return detail::rec_from_core(m);
}

/// Extended gcrd on nonnegative-support operators, exposing Bezout
/// cofactors g = u*a + v*b.
struct RecBezout {
    RecOp g, u, v;
};

inline RecBezout rec_extended_gcrd(const RecOp& a, const RecOp& b) {
    auto ee = ore_extended_gcrd(detail::rec_to_core(a), detail::rec_to_core(b));
    return {detail::rec_from_core(ee.g), detail::rec_from_core(ee.u), detail::rec_from_core(ee.v)};
}

// ---------------------------------------------------------------------------
// Canonical normalization: shift the support to [0, m] by left-multiplying
// with S^{-lo} (which preserves the annihilated sequences up to an index
// shift), clear coefficient denominators, divide out any common polynomial
// factor and the integer content, and fix the sign of the leading
// polynomial. The result compares coefficient-wise across algorithms.
// ---------------------------------------------------------------------------

inline RecOp rec_normalize(const RecOp& a, long* support_offset = nullptr) {
    if (support_offset) *support_offset = a.lo();
    if (a.is_zero()) return RecOp();
    RecOp r = a.lshifted(-a.lo());
    // clear denominators
    Poly d = Poly::one();
    for (long j = 0; j <= r.hi(); ++j) d = poly_lcm(d, r.coeff(j).den());
    std::vector<Poly> p(static_cast<size_t>(r.hi()) + 1);
    for (long j = 0; j <= r.hi(); ++j) {
        RatFunc c = r.coeff(j) * RatFunc(d);
        p[static_cast<size_t>(j)] = c.as_poly();
    }
    // common polynomial factor — a left unit of the Laurent ring; dividing
    // it out makes outputs of different algorithms comparable. An operator
    // of S-span 0 is itself a unit and is kept as its primitive part
    // instead (so a polynomial numerator like n^2 stays visible).
    if (r.span() > 0) {
        Poly g;
        for (const auto& q : p) g = poly_gcd(g, q);
        if (g.degree() > 0)
            for (auto& q : p) q = Poly::divmod(q, g).first;
    }
    // rational content and sign
    BigRat cont(0);
    for (const auto& q : p) cont = rat_gcd(cont, q.content());
    size_t lead = p.size();
    while (lead > 0 && p[lead - 1].is_zero()) --lead;
    if (lead > 0 && p[lead - 1].leading().sign() < 0) cont = -cont;
    std::vector<RatFunc> v(p.size());
    BigRat inv = cont.inverse();
    for (size_t i = 0; i < p.size(); ++i) v[i] = RatFunc(p[i] * inv);
    return RecOp(0, std::move(v));
}

inline bool rec_equal_up_to_unit(const RecOp& a, const RecOp& b) {
    return rec_normalize(a) == rec_normalize(b);
}

// ---------------------------------------------------------------------------
// Actions: operators applied to sequences and functions.
// ---------------------------------------------------------------------------

/// (P.u)(n) = sum_j r_j(n) u_{n+j}, with the symmetric extension
/// u_{-m} = u_m for negative indices. Throws if some coefficient has a pole
/// at n, naming the index.
template <class Seq>
auto rec_apply_at(const RecOp& p, const Seq& u, long n) -> std::decay_t<decltype(u[0])> {
    using V = std::decay_t<decltype(u[0])>;
    V acc{};
    for (long j = p.lo(); j <= p.hi(); ++j) {
        RatFunc c = p.coeff(j);
        if (c.is_zero()) continue;
        if (c.has_pole_at(BigRat(n)))
            throw std::domain_error("rec_apply: coefficient pole at n = " + std::to_string(n));
        long idx = n + j;
        if (idx < 0) idx = -idx;  // Chebyshev symmetric extension
        if (idx >= static_cast<long>(u.size()))
            throw std::out_of_range("rec_apply: sequence too short at n = " + std::to_string(n));
        if constexpr (std::is_same_v<V, BigRat>) {
            acc += c.eval(BigRat(n)) * u[static_cast<size_t>(idx)];
        } else {
            acc += c.eval(BigRat(n)).to_double() * u[static_cast<size_t>(idx)];
        }
    }
    return acc;
}

template <class Seq>
std::vector<std::decay_t<decltype(std::declval<Seq>()[0])>> rec_apply(const RecOp& p, const Seq& u,
                                                                      long n_min, long n_max) {
    std::vector<std::decay_t<decltype(u[0])>> out;
    for (long n = n_min; n <= n_max; ++n) out.push_back(rec_apply_at(p, u, n));
    return out;
}

/// Action of a differential operator on a function given with its
/// derivatives: f(i, x) = f^{(i)}(x).
inline std::function<double(double)> diff_apply(const DiffOp& a,
                                                std::function<double(int, double)> f) {
    return [a, f](double x) {
        double acc = 0;
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            acc += a.coeff(i).eval_double(x) * f(i, x);
        }
        return acc;
    };
}

/// Exact action of a differential operator on a polynomial.
inline RatFunc diff_apply_poly(const DiffOp& a, const Poly& f) {
    RatFunc acc;
    Poly der = f;
    for (int i = 0; i <= a.degree(); ++i) {
        acc += a.coeff(i) * RatFunc(der);
        der = der.derivative();
    }
    return acc;
}

// small conveniences for building differential operators

inline DiffOp diff_from_polys(const std::vector<Poly>& p) {
    std::vector<RatFunc> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = RatFunc(p[i]);
    return DiffOp(std::move(v));
}

inline std::string diff_str(const DiffOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a.coeff(i).str("x") << ")";
        if (i > 0) {
            os << "*Dx";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

/// Clears rational-function coefficients: returns (polynomial coefficients,
/// common denominator d) with d * L having the returned coefficients.
inline std::pair<std::vector<Poly>, Poly> diff_clear_denominators(const DiffOp& a) {
    Poly d = Poly::one();
    for (int i = 0; i <= a.degree(); ++i) d = poly_lcm(d, a.coeff(i).den());
    std::vector<Poly> p(static_cast<size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) p[static_cast<size_t>(i)] = (a.coeff(i) * RatFunc(d)).as_poly();
    return {p, d};
}

}  // namespace orecheb

#endif  // ORECHEB_ORE_HPP
