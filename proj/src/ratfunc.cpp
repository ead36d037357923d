#include "forms/ratfunc.hpp"

#include <algorithm>
#include <vector>

namespace forms {

namespace {

/* dense Z[t] image of a Laurent polynomial already shifted to lo() == 0 */
std::vector<Int> to_dense(const Laurent& p) {
    std::vector<Int> v(static_cast<size_t>(p.hi()) + 1, Int(0));
    for (auto& [e, c] : p.coeffs()) v[static_cast<size_t>(e)] = c;
    return v;
}

Laurent from_dense(const std::vector<Int>& v) {
    Laurent p;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p += Laurent::term(v[i], static_cast<long>(i));
    return p;
}

void trim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Int dense_content(const std::vector<Int>& v) {
    Int g = 0;
    for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(std::vector<Int>& v) {
    Int g = dense_content(v);
    if (g == 0 || g == 1) return;
    for (auto& c : v) c /= g;
}

/* pseudo-remainder of a by b (deg a >= deg b >= 0), in place on a copy */
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int lb = b.back();
    while (a.size() >= b.size()) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        /* scale a so the leading term cancels exactly */
        for (auto& c : a) c *= lb;
        const Int factor = a.back() / lb;
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b.is_zero() ? Laurent() : canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);

    std::vector<Int> r0 = to_dense(canonical_associate(a));
    std::vector<Int> r1 = to_dense(canonical_associate(b));
    const Int cont = [&] {
        Int g;
        Int ca = dense_content(r0), cb = dense_content(r1);
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return g;
    }();
    make_primitive(r0);
    make_primitive(r1);
    if (r0.size() < r1.size()) std::swap(r0, r1);

    while (!r1.empty()) {
        std::vector<Int> r = pseudo_rem(r0, r1);
        make_primitive(r);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    Laurent g = from_dense(r0);
    g = canonical_associate(g);
    Laurent result = g * Laurent(cont);
    return canonical_associate(result);
}

void RatFunc::normalize(Laurent n, Laurent d) {
    if (d.is_zero()) throw division_by_zero("rational function with zero denominator");
    if (n.is_zero()) {
        num_ = Laurent();
        den_ = Laurent(1);
        return;
    }
    /* factor the t-power unit out of both */
    const long sn = n.lo(), sd = d.lo();
    n = n.shifted(-sn);
    d = d.shifted(-sd);

    const Laurent g = laurent_gcd(n, d);
    n = *divide_exact(n, g);
    d = *divide_exact(d, g);
    if (d.coeff(d.hi()) < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shifted(sn - sd);
    den_ = d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw division_by_zero("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::fractional_part() const {
    if (in_lambda()) return RatFunc();
    /* top-degree reduction with integer quotient steps; display-only
     * canonicalization, equality testing never uses it */
    Laurent n = num_;
    const long shift = std::min(n.lo(), 0L);
    Laurent n0 = n.shifted(-shift); /* in Z[t] */
    const long dd = den_.hi();
    while (!n0.is_zero() && n0.hi() >= dd - shift) {
        const Int lc = n0.coeff(n0.hi());
        const Int ld = den_.coeff(dd);
        if (lc % ld != 0) break;
        n0 -= Laurent::term(lc / ld, n0.hi() - dd) * den_;
    }
    RatFunc r;
    r.num_ = n0.shifted(shift);
    r.den_ = den_;
    return r;
}

std::string Coset::str() const {
    const RatFunc d = display_rep();
    if (d.is_zero()) return "[0]";
    return "[(" + to_string(d.num()) + ")/(" + to_string(d.den()) + ")]";
}

} // namespace forms
