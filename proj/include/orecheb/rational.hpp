#ifndef ORECHEB_RATIONAL_HPP
#define ORECHEB_RATIONAL_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace orecheb {

// Portable arithmetic-operation counter. Multiplications and divisions of
// exact scalars are counted, including the integer ones performed inside
// polynomial gcd; additions are not.
namespace opcount {

inline std::atomic<std::uint64_t>& counter() {
    static std::atomic<std::uint64_t> c{0};
    return c;
}

inline void add(std::uint64_t k = 1) { counter().fetch_add(k, std::memory_order_relaxed); }
inline void reset() { counter().store(0, std::memory_order_relaxed); }
inline std::uint64_t get() { return counter().load(std::memory_order_relaxed); }

}  // namespace opcount

/// Arbitrary-precision rational scalar. Always canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class BigRat {
  public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}                     // NOLINT(runtime/explicit)
    BigRat(int n) : v_(n) {}                      // NOLINT(runtime/explicit)
    BigRat(const mpz_class& n) : v_(n) {}         // NOLINT(runtime/explicit)
    BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    BigRat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }
    BigRat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }
    explicit BigRat(const std::string& s) : v_(s) { v_.canonicalize(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) {
        opcount::add();
        v_ *= o.v_;
        return *this;
    }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        opcount::add();
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }

    BigRat inverse() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        opcount::add();
        return BigRat(mpq_class(1) / v_);
    }

    BigRat pow(unsigned e) const {
        BigRat r(1), b(*this);
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

  private:
    mpq_class v_;
};

/// gcd on Q used for content computations: gcd of numerators over lcm of
/// denominators, nonnegative.
inline BigRat rat_gcd(const BigRat& a, const BigRat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return BigRat(gn, dl);
}

inline std::string rat_to_string(const BigRat& q) { return q.str(); }

}  // namespace orecheb

#endif  // ORECHEB_RATIONAL_HPP
