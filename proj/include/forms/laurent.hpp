#pragma once

/*
 * Exact arithmetic in the ring of integer Laurent polynomials
 *
 *     L = Z[t, t^{-1}]
 *
 * with the involution induced by t -> t^{-1}.
 *
 * Representation. A Laurent polynomial is stored as a sparse map from
 * exponent to nonzero arbitrary-precision integer coefficient (GMP).  Zero
 * coefficients are never stored, so the zero polynomial has empty support
 * and equality of values is equality of the underlying maps.  Coefficients
 * are arbitrary precision because determinant and inversion workloads grow
 * intermediate coefficients without bound.
 *
 * Units of L are exactly the signed monomials ±t^k.  Every nonzero p has a
 * unique associate u·p (u a unit) lying in Z[t] with nonzero constant term
 * and positive leading coefficient; canonical_associate returns it.  This
 * normalizes the "equal up to units" comparisons used throughout.
 *
 * Exact division: divide_exact(p, d) shifts both operands into Z[t] with
 * nonzero constant terms and runs long division from the bottom
 * (constant-term) end; any non-integral step or nonzero remainder means d
 * does not divide p and the call reports that instead of returning a value.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "forms/errors.hpp"

namespace forms {

using Int = mpz_class;

class Laurent {
public:
    using coeff_map = std::map<long, Int>;

    Laurent() = default;
    Laurent(long n) { if (n != 0) c_[0] = n; }
    explicit Laurent(const Int& n) { if (n != 0) c_[0] = n; }

    /* the monomial c * t^e */
    static Laurent term(const Int& c, long e) {
        Laurent p;
        if (c != 0) p.c_[e] = c;
        return p;
    }
    static Laurent t(long e = 1) { return term(1, e); }

    bool is_zero() const { return c_.empty(); }
    const coeff_map& coeffs() const { return c_; }

    Int coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }

    /* support bounds; require a nonzero polynomial */
    long lo() const {
        if (is_zero()) throw zero_input("lo() of zero polynomial");
        return c_.begin()->first;
    }
    long hi() const {
        if (is_zero()) throw zero_input("hi() of zero polynomial");
        return c_.rbegin()->first;
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /* p * t^k */
    Laurent shifted(long k) const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    Laurent involute() const {
        Laurent r;
        for (auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /* augmentation p |-> p(1) */
    Int augment() const {
        Int s = 0;
        for (auto& [e, c] : c_) s += c;
        return s;
    }

    /* gcd of all coefficients, nonnegative; 0 for the zero polynomial */
    Int content() const {
        Int g = 0;
        for (auto& [e, c] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }

private:
    void add_term(long e, const Int& c) {
        if (c == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    coeff_map c_;
};

inline Laurent involute(const Laurent& p) { return p.involute(); }
inline Int augment(const Laurent& p) { return p.augment(); }

/* +-t^k */
struct UnitMonomial {
    int sign = 1; /* +1 or -1 */
    long exp = 0;

    Laurent to_laurent() const { return Laurent::term(sign, exp); }
    UnitMonomial inverse() const { return {sign, -exp}; }
    UnitMonomial involute() const { return {sign, -exp}; }
    UnitMonomial operator*(const UnitMonomial& o) const {
        return {sign * o.sign, exp + o.exp};
    }
    bool operator==(const UnitMonomial& o) const = default;
};

std::optional<UnitMonomial> is_unit(const Laurent& p);

/* q with q*d == p, if d divides p exactly */
std::optional<Laurent> divide_exact(const Laurent& p, const Laurent& d);

/* the unique unit multiple of p lying in Z[t] with nonzero constant term and
 * positive leading coefficient */
Laurent canonical_associate(const Laurent& p);

/* equality up to multiplication by a unit +-t^k */
bool associates(const Laurent& p, const Laurent& q);

/* a*p + b*q = n for a positive integer n, found via the extended euclidean
 * algorithm over Q[t] with denominators cleared.  Inputs must be canonical
 * associates.  coprime is false when p and q share a positive-degree factor */
struct BezoutIdentity {
    bool coprime = false;
    Laurent a, b;
    Int n = 0;
};

BezoutIdentity integral_bezout(const Laurent& p, const Laurent& q);

std::string to_string(const Laurent& p);

/* parse e.g. "2-t-t^-1", "t^2-t+1", "-3t^-2", "0" */
Laurent parse_laurent(const std::string& s);

} // namespace forms
