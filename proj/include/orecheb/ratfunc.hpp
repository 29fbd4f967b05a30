#ifndef ORECHEB_RATFUNC_HPP
#define ORECHEB_RATFUNC_HPP

#include <string>
#include <utility>

#include "orecheb/poly.hpp"

namespace orecheb {

/// Rational function over Q, kept canonical: coprime numerator/denominator,
/// monic denominator (the constant is absorbed into the numerator), zero is
/// 0/1. Canonical form makes equality a plain comparison.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const BigRat& c) : num_(Poly(c)), den_(Poly::one()) {}  // NOLINT(runtime/explicit)
    RatFunc(long c) : num_(Poly(BigRat(c))), den_(Poly::one()) {}   // NOLINT(runtime/explicit)
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly::one(); }

    /// numerator, requiring a trivial denominator
    const Poly& as_poly() const {
        if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
        return num_;
    }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-reduce first to keep intermediate degrees down
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        Poly n = Poly::divmod(a.num_, g1).first * Poly::divmod(b.num_, g2).first;
        Poly d = Poly::divmod(a.den_, g2).first * Poly::divmod(b.den_, g1).first;
        return RatFunc(std::move(n), std::move(d));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// value at t; throws if t is a pole
    BigRat eval(const BigRat& t) const {
        BigRat d = den_.eval(t);
        if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at pole " + t.str());
        return num_.eval(t) / d;
    }
    double eval_double(double t) const { return num_.eval_double(t) / den_.eval_double(t); }
    bool has_pole_at(const BigRat& t) const { return den_.eval(t).is_zero(); }

    /// argument shift n -> n + j
    RatFunc shifted_arg(const BigRat& j) const { return RatFunc(num_.shifted(j), den_.shifted(j)); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    std::string str(const std::string& var = "n") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        BigRat l = den_.leading();
        if (l != BigRat(1)) {
            den_ = den_.monic();
            BigRat inv = l.inverse();
            num_ = num_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace orecheb

#endif  // ORECHEB_RATFUNC_HPP
