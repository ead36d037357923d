#pragma once

/*
 * Exact arithmetic in Q = Q(t) and the quotient Q(t)/L where linking forms
 * take their values.
 *
 * A RatFunc is stored as num/den with num, den integer Laurent polynomials,
 * fully reduced: den lies in Z[t] with nonzero constant term and positive
 * leading coefficient, gcd(num, den) over Z[t] (polynomial part and integer
 * content alike) is 1.  This representation is canonical, so structural
 * equality coincides with equality in Q(t), and num/den lies in L exactly
 * when den == 1.
 *
 * The gcd is computed by the primitive-part Euclidean scheme on Z[t] images
 * (pseudo-remainders, primitive part each step); integer content is handled
 * separately.
 */

#include <optional>
#include <string>

#include "forms/laurent.hpp"

namespace forms {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Laurent& p) : num_(p), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const Laurent& n, const Laurent& d) { normalize(n, d); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool in_lambda() const { return den_ == Laurent(1); }

    /* value as an element of L; caller must ensure in_lambda() */
    const Laurent& as_laurent() const {
        if (!in_lambda()) throw value_not_in_lambda("as_laurent: value not in the Laurent ring: " + debug());
        return num_;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc involute() const { return RatFunc(num_.involute(), den_.involute()); }

    /* polynomial (Laurent) part and the remainder class: r = poly + frac with
     * deg(num(frac)) < deg(den) after shifting into Z[t]; used for display of
     * coset representatives only */
    RatFunc fractional_part() const;

    std::string debug() const { return to_string(num_) + " / " + to_string(den_); }

private:
    void normalize(Laurent n, Laurent d);

    Laurent num_, den_;
};

inline RatFunc rf_normalize(const Laurent& n, const Laurent& d) { return RatFunc(n, d); }
inline bool in_lambda(const RatFunc& r) { return r.in_lambda(); }

/* gcd over Z[t] of two Laurent polynomials after shifting into Z[t] with
 * nonzero constant terms; result is primitive+content, canonical associate */
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/* A class in Q(t)/L, stored by a reduced representative. */
class Coset {
public:
    Coset() = default;
    explicit Coset(const RatFunc& r) : rep_(r) {}

    const RatFunc& rep() const { return rep_; }
    bool is_integral() const { return rep_.in_lambda(); }

    Coset involute() const { return Coset(rep_.involute()); }
    Coset operator+(const Coset& o) const { return Coset(rep_ + o.rep_); }
    Coset operator-(const Coset& o) const { return Coset(rep_ - o.rep_); }
    Coset operator-() const { return Coset(-rep_); }

    /* canonical small representative for display: strip the polynomial part */
    RatFunc display_rep() const { return rep_.fractional_part(); }

    std::string str() const;

private:
    RatFunc rep_;
};

inline bool coset_eq(const Coset& a, const Coset& b) {
    return (a.rep() - b.rep()).in_lambda();
}
inline Coset coset_involute(const Coset& a) { return a.involute(); }
inline RatFunc involute(const RatFunc& a) { return a.involute(); }

} // namespace forms
