#ifndef ORECHEB_POLY_HPP
#define ORECHEB_POLY_HPP

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orecheb/rational.hpp"

namespace orecheb {

/// Dense univariate polynomial over Q. The coefficient vector is trimmed so
/// the leading coefficient is nonzero; the zero polynomial has an empty
/// vector and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const BigRat& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(BigRat(1)); }
    /// c * x^e
    static Poly monomial(const BigRat& c, int e) {
        if (c.is_zero()) return Poly();
        std::vector<BigRat> v(static_cast<size_t>(e) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(BigRat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    BigRat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return BigRat(0);
        return c_[static_cast<size_t>(i)];
    }
    BigRat leading() const { return c_.empty() ? BigRat(0) : c_.back(); }
    BigRat constant_term() const { return coeff(0); }

    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigRat> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<BigRat> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const BigRat& s) {
        if (s.is_zero()) return Poly();
        Poly r(a);
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend Poly operator*(const BigRat& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact long division; throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: zero divisor");
        Poly r(a);
        std::vector<BigRat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1);
        const BigRat lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            BigRat c = r.leading() / lb;
            q[static_cast<size_t>(k)] = c;
            r -= Poly::monomial(c, k) * b;
        }
        return {Poly(std::move(q)), r};
    }

    BigRat eval(const BigRat& t) const {
        BigRat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }
    double eval_double(double t) const {
        double r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i].to_double();
        return r;
    }

    /// p(x + t)
    Poly shifted(const BigRat& t) const {
        Poly r;
        Poly xpt{t, BigRat(1)};
        for (size_t i = c_.size(); i-- > 0;) r = r * xpt + Poly(c_[i]);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<BigRat> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigRat(static_cast<long>(i));
        return Poly(std::move(v));
    }

    Poly pow(unsigned e) const {
        Poly r = Poly::one(), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// Rational content, positive; 0 for the zero polynomial.
    BigRat content() const {
        BigRat g(0);
        for (const auto& x : c_) g = rat_gcd(g, x);
        return g;
    }

    /// content-free version with positive leading coefficient
    Poly primitive_part() const {
        if (is_zero()) return Poly();
        BigRat g = content();
        if (leading().sign() < 0) g = -g;
        Poly r(*this);
        for (auto& x : r.c_) x /= g;
        return r;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        BigRat l = leading();
        Poly r(*this);
        for (auto& x : r.c_) x /= l;
        return r;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigRat> c_;
};

namespace detail {

inline std::vector<mpz_class> poly_to_primitive_int(const Poly& p) {
    std::vector<mpz_class> v(static_cast<size_t>(p.degree()) + 1);
    mpz_class den_lcm = 1;
    for (int i = 0; i <= p.degree(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(i).den().get_mpz_t());
    mpz_class g = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        v[static_cast<size_t>(i)] = p.coeff(i).num() * (den_lcm / p.coeff(i).den());
        opcount::add();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[static_cast<size_t>(i)].get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& x : v) {
            x /= g;
            opcount::add();
        }
    return v;
}

inline void int_poly_trim(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void int_poly_make_primitive(std::vector<mpz_class>& v) {
    int_poly_trim(v);
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(v.back()) < 0) g = -g;
    if (g != 1)
        for (auto& x : v) {
            x /= g;
            opcount::add();
        }
}

// pseudo-remainder of a by b over Z
inline std::vector<mpz_class> int_poly_prem(std::vector<mpz_class> r, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (r.size() >= b.size()) {
        mpz_class lr = r.back();
        size_t k = r.size() - b.size();
        for (auto& x : r) {
            x *= lb;
            opcount::add();
        }
        for (size_t i = 0; i < b.size(); ++i) {
            r[k + i] -= lr * b[i];
            opcount::add();
        }
        int_poly_trim(r);
        if (r.empty()) break;
    }
    return r;
}

}  // namespace detail

/// Polynomial gcd via primitive-part Euclid over the integers; the result is
/// monic.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto A = detail::poly_to_primitive_int(a);
    auto B = detail::poly_to_primitive_int(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        auto R = detail::int_poly_prem(A, B);
        detail::int_poly_make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<BigRat> v(A.size());
    for (size_t i = 0; i < A.size(); ++i) v[i] = BigRat(A[i]);
    return Poly(std::move(v)).monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = poly_gcd(a, b);
    return (Poly::divmod(a, g).first * b).monic();
}

/// Interpolating polynomial through distinct points, Newton divided
/// differences, exact.
inline Poly poly_interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("poly_interpolate: size mismatch");
    const size_t n = xs.size();
    std::vector<BigRat> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    Poly r;
    for (size_t i = n; i-- > 0;) r = r * Poly{-xs[i], BigRat(1)} + Poly(dd[i]);
    return r;
}

/// Product by evaluation at distinct integer points followed by
/// interpolation; agrees with operator*.
inline Poly poly_mul_interp(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    int n = a.degree() + b.degree() + 1;
    std::vector<BigRat> xs(static_cast<size_t>(n)), ys(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<size_t>(i)] = BigRat(i);
        ys[static_cast<size_t>(i)] = a.eval(BigRat(i)) * b.eval(BigRat(i));
    }
    return poly_interpolate(xs, ys);
}

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigRat c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        BigRat a = c.abs();
        if (i == 0 || a != BigRat(1)) {
            os << a.str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace orecheb

#endif  // ORECHEB_POLY_HPP
