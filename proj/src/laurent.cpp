#include "forms/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace forms {

std::optional<UnitMonomial> is_unit(const Laurent& p) {
    if (p.coeffs().size() != 1) return std::nullopt;
    auto& [e, c] = *p.coeffs().begin();
    if (c == 1) return UnitMonomial{1, e};
    if (c == -1) return UnitMonomial{-1, e};
    return std::nullopt;
}

std::optional<Laurent> divide_exact(const Laurent& p, const Laurent& d) {
    if (d.is_zero()) throw division_by_zero("divide_exact: zero divisor");
    if (p.is_zero()) return Laurent();

    /* shift both into Z[t] with nonzero constant term */
    const long sp = p.lo(), sd = d.lo();
    Laurent rem = p.shifted(-sp);
    const Laurent dd = d.shifted(-sd);
    const Int dc = dd.coeff(0); /* nonzero by construction */

    /* long division from the constant term upward; quotient exponent range
     * is [0, deg rem - deg dd] when division is exact */
    Laurent q;
    while (!rem.is_zero()) {
        const long e = rem.lo();
        if (rem.hi() - e < dd.hi()) return std::nullopt;
        const Int c = rem.coeff(e);
        if (c % dc != 0) return std::nullopt;
        const Laurent step = Laurent::term(c / dc, e);
        q += step;
        rem -= step * dd;
    }
    return q.shifted(sp - sd);
}

Laurent canonical_associate(const Laurent& p) {
    if (p.is_zero()) throw zero_input("canonical_associate of zero");
    Laurent r = p.shifted(-p.lo());
    if (r.coeff(r.hi()) < 0) r = -r;
    return r;
}

bool associates(const Laurent& p, const Laurent& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return canonical_associate(p) == canonical_associate(q);
}

std::string to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    /* descending exponents */
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const long e = it->first;
        Int c = it->second;
        if (c < 0) {
            out << '-';
            c = -c;
        } else if (!first) {
            out << '+';
        }
        first = false;
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str();
            out << 't';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

long parse_long(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) throw parse_error("expected integer at position " + std::to_string(start) + " in polynomial");
    return std::stol(c.s.substr(start, c.i - start));
}

Int parse_bigint(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw parse_error("expected digits at position " + std::to_string(start));
    return Int(c.s.substr(start, c.i - start));
}

} // namespace

Laurent parse_laurent(const std::string& s) {
    Cursor c{s};
    Laurent result;
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            if (c.peek() == '-') sign = -sign;
            ++c.i;
        }
        if (c.done()) throw parse_error("dangling sign in polynomial: " + s);
        Int coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_bigint(c);
            saw_coeff = true;
            if (!c.done() && c.peek() == '*') ++c.i; /* tolerate 2*t */
        }
        long e = 0;
        if (!c.done() && (c.peek() == 't' || c.peek() == 'T')) {
            ++c.i;
            e = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                e = parse_long(c);
            }
        } else if (!saw_coeff) {
            throw parse_error("expected coefficient or 't' in polynomial: " + s);
        }
        result += Laurent::term(sign * coeff, e);
        any = true;
    }
    if (!any) throw parse_error("empty polynomial string");
    return result;
}

namespace {

/* extended euclid over Q[t], small degrees only */
struct QPoly {
    std::vector<mpq_class> c; /* c[i] is the coefficient of t^i */

    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
};

QPoly qp_from(const Laurent& p) {
    QPoly q;
    if (p.is_zero()) return q;
    if (p.lo() < 0) throw invariant_violation("qp_from expects an ordinary polynomial");
    q.c.assign(static_cast<size_t>(p.hi()) + 1, mpq_class(0));
    for (auto& [e, v] : p.coeffs()) q.c[static_cast<size_t>(e)] = mpq_class(v);
    return q;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), mpq_class(0));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.trim();
    return a;
}

/* divide a by b in place, returning the quotient; a becomes the remainder */
QPoly qp_divmod(QPoly& a, const QPoly& b) {
    QPoly q;
    if (a.deg() >= b.deg()) q.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, mpq_class(0));
    while (!a.zero() && a.deg() >= b.deg()) {
        const mpq_class f = a.c.back() / b.c.back();
        const size_t sh = static_cast<size_t>(a.deg() - b.deg());
        q.c[sh] += f;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[sh + i] -= f * b.c[i];
        a.trim();
    }
    q.trim();
    return q;
}


Laurent qp_to_laurent_int(const QPoly& p, const Int& scale) {
    Laurent out;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (sgn(p.c[i]) == 0) continue;
        mpq_class v = p.c[i] * mpq_class(scale);
        if (v.get_den() != 1)
            throw invariant_violation("denominator clearing failed");
        out += Laurent::term(Int(v.get_num()), static_cast<long>(i));
    }
    return out;
}

} // namespace

/* integral bezout identity a*p + b*q = n for canonical-associate inputs */
BezoutIdentity integral_bezout(const Laurent& p, const Laurent& q) {
    QPoly r0 = qp_from(p), r1 = qp_from(q);
    QPoly s0, s1, t0, t1;
    s0.c = {mpq_class(1)};
    t1.c = {mpq_class(1)};
    while (!r1.zero()) {
        QPoly rem = r0;
        const QPoly quo = qp_divmod(rem, r1);
        r0 = r1;
        r1 = rem;
        QPoly ns = qp_sub(s0, qp_mul(quo, s1));
        s0 = s1;
        s1 = std::move(ns);
        QPoly nt = qp_sub(t0, qp_mul(quo, t1));
        t0 = t1;
        t1 = std::move(nt);
    }
    BezoutIdentity bz;
    if (r0.deg() != 0) return bz; /* positive-degree common factor */
    bz.coprime = true;
    const mpq_class g = r0.c[0];
    for (auto& v : s0.c) v /= g;
    for (auto& v : t0.c) v /= g;
    Int n = 1;
    for (auto& v : s0.c) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), v.get_den().get_mpz_t());
    for (auto& v : t0.c) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), v.get_den().get_mpz_t());
    bz.a = qp_to_laurent_int(s0, n);
    bz.b = qp_to_laurent_int(t0, n);
    bz.n = n;
    /* strip a common integer content */
    Int cc;
    mpz_gcd(cc.get_mpz_t(), bz.a.content().get_mpz_t(), bz.b.content().get_mpz_t());
    if (cc > 1) {
        bz.a = *divide_exact(bz.a, Laurent(cc));
        bz.b = *divide_exact(bz.b, Laurent(cc));
        bz.n /= cc;
    }
    if (bz.a * p + bz.b * q != Laurent(bz.n))
        throw invariant_violation("bezout identity verification failed");
    return bz;
}

} // namespace forms
