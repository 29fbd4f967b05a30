#ifndef ORECHEB_FRACTION_HPP
#define ORECHEB_FRACTION_HPP

#include <utility>

#include "orecheb/ore.hpp"

namespace orecheb {

/// Left fraction den^{-1} * num of recurrence operators. No automatic
/// reduction: irreducibility is established explicitly with reduce(), so
/// the algorithms that track it structurally stay observable.
class RecFrac {
  public:
    /// zero fraction, canonical form 1^{-1} * 0
    RecFrac() : den_(RecOp::one()), num_() {}
    RecFrac(RecOp den, RecOp num) : den_(std::move(den)), num_(std::move(num)) {
        if (den_.is_zero()) throw std::domain_error("RecFrac: zero denominator");
        if (num_.is_zero()) den_ = RecOp::one();
    }
    /// polynomial fraction 1^{-1} * p
    explicit RecFrac(RecOp num) : den_(RecOp::one()), num_(std::move(num)) {}

    static RecFrac zero() { return RecFrac(); }
    static RecFrac one() { return RecFrac(RecOp::one()); }

    const RecOp& den() const { return den_; }
    const RecOp& num() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.span() == 0 && den_.lo() == 0; }

    RecFrac operator-() const { return RecFrac(den_, -num_); }

  private:
    RecOp den_;  // Q
    RecOp num_;  // P
};

/// Q1^{-1}P1 and Q2^{-1}P2 are equivalent when the lclm cofactors of the
/// denominators carry the numerators to the same operator.
inline bool frac_equiv(const RecFrac& a, const RecFrac& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    auto l = rec_lclm_cofactors(a.den(), b.den());
    return l.ca * a.num() == l.cb * b.num();
}

/// Reduction to the common denominator lclm(Q1, Q2).
inline RecFrac frac_add(const RecFrac& a, const RecFrac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto l = rec_lclm_cofactors(a.den(), b.den());
    return RecFrac(l.lclm, l.ca * a.num() + l.cb * b.num());
}

inline RecFrac frac_sub(const RecFrac& a, const RecFrac& b) { return frac_add(a, -b); }

/// (Q1^{-1}P1)(Q2^{-1}P2) = (Phat1 Q1)^{-1} (Qhat2 P2), where
/// lclm(Q2, P1) = Phat1 P1 = Qhat2 Q2.
inline RecFrac frac_mul(const RecFrac& a, const RecFrac& b) {
    if (a.is_zero() || b.is_zero()) return RecFrac::zero();
    auto l = rec_lclm_cofactors(b.den(), a.num());
    // lclm = cb * num(a) = ca * den(b)
    return RecFrac(l.cb * a.den(), l.ca * b.num());
}

/// (Q^{-1}P)^{-1} = P^{-1}Q
inline RecFrac frac_inv(const RecFrac& a) {
    if (a.is_zero()) throw std::domain_error("frac_inv: zero fraction");
    return RecFrac(a.num(), a.den());
}

namespace detail {

/// exact left quotient: a = g * q, throws when the division is not exact
inline RecOp rec_exact_left_quotient(const RecOp& a, const RecOp& g) {
    long lo = a.lo();
    auto [q, r] = rec_divmod_left(a.rshifted(-lo), g);
    if (!r.is_zero()) throw std::domain_error("rec_exact_left_quotient: inexact division");
    return q.rshifted(lo);
}

}  // namespace detail

/// Equivalent fraction with gcld(num, den) = 1 (unique up to a unit).
inline RecFrac frac_reduce(const RecFrac& a) {
    if (a.is_zero()) return RecFrac::zero();
    RecOp g = rec_gcld(a.num(), a.den());
    if (g.span() == 0) return a;
    return RecFrac(detail::rec_exact_left_quotient(a.den(), g),
                   detail::rec_exact_left_quotient(a.num(), g));
}

inline bool frac_is_irreducible(const RecFrac& a) {
    if (a.is_zero()) return true;
    return rec_gcld(a.num(), a.den()).span() == 0;
}

}  // namespace orecheb

#endif  // ORECHEB_FRACTION_HPP
