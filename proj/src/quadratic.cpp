#include "forms/quadratic.hpp"

#include <numeric>

namespace forms {

QuadraticForm::QuadraticForm(LMat rep, UnitMonomial eps)
    : rep_(std::move(rep)), eps_(eps) {
    if (rep_.rows() != rep_.cols())
        throw dimension_mismatch("representative matrix must be square");
}

HermitianForm QuadraticForm::symmetrize() const {
    return HermitianForm(rep_ + t_eps(rep_, eps_), eps_);
}

LMat t_eps(const LMat& b, UnitMonomial eps) {
    return involute(b).transpose().scaled(eps.to_laurent());
}

Laurent reduce_diagonal(const Laurent& d, UnitMonomial eps) {
    const long me = eps.exp;
    Laurent out;
    for (auto& [e, c] : d.coeffs()) {
        if (2 * e < me)
            out += Laurent::term(eps.sign > 0 ? c : Int(-c), me - e);
        else
            out += Laurent::term(c, e);
    }
    if (me % 2 == 0 && eps.sign < 0) {
        const long mid = me / 2;
        const Int c = out.coeff(mid);
        const Int r = ((c % 2) + 2) % 2;
        out += Laurent::term(r - c, mid);
    }
    return out;
}

LMat q_canonical(const LMat& rep, UnitMonomial eps) {
    if (rep.rows() != rep.cols())
        throw dimension_mismatch("representative matrix must be square");
    const size_t n = rep.rows();
    const Laurent e = eps.to_laurent();
    LMat m = rep;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j) {
            if (m(i, j).is_zero()) continue;
            m(j, i) += e * involute(m(i, j));
            m(i, j) = Laurent();
        }
    for (size_t i = 0; i < n; ++i) m(i, i) = reduce_diagonal(m(i, i), eps);
    return m;
}

QuadraticForm canonical(const QuadraticForm& q) {
    return QuadraticForm(q_canonical(q.rep(), q.eps()), q.eps());
}

bool q_equal(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.eps() != b.eps())
        throw epsilon_mismatch("comparing quadratic forms of different type");
    if (a.rank() != b.rank()) return false;
    return q_canonical(a.rep(), a.eps()) == q_canonical(b.rep(), b.eps());
}

Laurent self_value(const QuadraticForm& q, const LMat& x) {
    if (x.rows() != q.rank() || x.cols() != 1)
        throw dimension_mismatch("self value expects a column vector of matching rank");
    return reduce_diagonal((x.transpose() * q.rep() * involute(x))(0, 0), q.eps());
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.eps() != b.eps())
        throw epsilon_mismatch("direct sum requires forms of the same type");
    return QuadraticForm(diag_sum(a.rep(), b.rep()), a.eps());
}

namespace {

Laurent tinv_minus_1() { return Laurent::term(Int(1), -1) - Laurent(1); }

} // namespace

QuadraticForm xi_map(const QuadraticForm& q) {
    if (q.eps() != eps_minus_t())
        throw invariant_violation("scaling map is defined on forms of type -t");
    return QuadraticForm(q.rep().scaled(tinv_minus_1()), eps_plus());
}

LMat factor_skew(const LMat& z) {
    if (z.rows() != z.cols())
        throw dimension_mismatch("factor_skew expects a square matrix");
    if (involute(z).transpose() != -z)
        throw invariant_violation("factor_skew input must be skew");
    const size_t n = z.rows();
    const Laurent d1 = tinv_minus_1();
    const Laurent dd = Laurent::term(Int(1), -1) - Laurent::t(); /* t^-1 - t */
    LMat y(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto q = divide_exact(z(i, j), d1);
            if (!q) throw no_factorization("off-diagonal entry not divisible by t^-1 - 1");
            y(i, j) = *q;
        }
    for (size_t i = 0; i < n; ++i) {
        auto q = divide_exact(z(i, i), dd);
        if (!q) throw no_factorization("diagonal entry not divisible by t^-1 - t");
        y(i, i) = *q;
    }
    if ((y - t_eps(y, eps_minus_t())).scaled(d1) != z)
        throw invariant_violation("skew factorization verification failed");
    return y;
}

BlockRefinement extract_block_refinement(const QuadraticForm& q, const LMat& p,
                                         const std::vector<size_t>& sizes) {
    const size_t n = q.rank();
    if (std::accumulate(sizes.begin(), sizes.end(), size_t{0}) != n)
        throw dimension_mismatch("block sizes must sum to the rank");
    if (p.rows() != n || p.cols() != n)
        throw dimension_mismatch("basis change must be square of matching rank");
    if (!is_unit(det_laurent(p)))
        throw invariant_violation("basis change must be invertible over the group ring");

    const LMat m = p.transpose() * q.rep() * involute(p);
    const LMat s = m + t_eps(m, q.eps());

    std::vector<size_t> off(sizes.size() + 1, 0);
    for (size_t k = 0; k < sizes.size(); ++k) off[k + 1] = off[k] + sizes[k];

    for (size_t a = 0; a < sizes.size(); ++a)
        for (size_t b = 0; b < sizes.size(); ++b) {
            if (a == b) continue;
            if (!s.block(off[a], off[b], sizes[a], sizes[b]).is_zero())
                throw not_block_refinable("symmetrization is not block diagonal in the new basis");
        }

    LMat theta(n, n);
    for (size_t a = 0; a < sizes.size(); ++a)
        for (size_t b = a + 1; b < sizes.size(); ++b)
            theta.set_block(off[a], off[b], m.block(off[a], off[b], sizes[a], sizes[b]));

    const LMat m2 = m - (theta - t_eps(theta, q.eps()));
    BlockRefinement out;
    out.certificate = theta;
    for (size_t a = 0; a < sizes.size(); ++a) {
        for (size_t b = 0; b < sizes.size(); ++b)
            if (a != b && !m2.block(off[a], off[b], sizes[a], sizes[b]).is_zero())
                throw invariant_violation("block refinement certificate verification failed");
        out.blocks.emplace_back(m2.block(off[a], off[a], sizes[a], sizes[a]), q.eps());
    }
    return out;
}

Laurent alpha_solve(const Laurent& m, UnitMonomial eps) {
    if (m != eps.to_laurent() * involute(m))
        throw invariant_violation("alpha_solve input must be eps-symmetric");
    const long me = eps.exp;
    Laurent a;
    for (auto& [k, c] : m.coeffs()) {
        if (2 * k > me) {
            a += Laurent::term(c, k);
        } else if (2 * k == me) {
            if (c % 2 != 0)
                throw correction_failed("no exact correction: middle coefficient is odd");
            a += Laurent::term(c / 2, k);
        }
    }
    if (a + eps.to_laurent() * involute(a) != m)
        throw invariant_violation("alpha_solve verification failed");
    return a;
}

namespace {

/* adj(m) with m * adj(m) = adj(m) * m = det(m) * I, by cofactor expansion */
LMat adjugate(const LMat& m) {
    const size_t g = m.rows();
    LMat a(g, g);
    if (g == 0) return a;
    if (g == 1) {
        a(0, 0) = Laurent(1);
        return a;
    }
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) {
            LMat minor(g - 1, g - 1);
            size_t rr = 0;
            for (size_t r = 0; r < g; ++r) {
                if (r == j) continue;
                size_t cc = 0;
                for (size_t c = 0; c < g; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            const Laurent d = det_laurent(minor);
            a(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return a;
}

/* r with lt * r = I over the group ring.  Integer inputs go through the
 * integer lattice solver, which is complete for them.  Otherwise the g
 * columns S of lt carry a Cramer solution r_S with lt * r_S = det_S * I and
 * r_S integral, so a unit minor answers outright; failing that, a bezout
 * identity between two minors yields lt * r = n * I for an integer n, and
 * integer gcds across pairs drive n to 1.  A plain rational solve covers
 * whatever is left. */
LMat lambda_right_inverse(const LMat& lt) {
    const size_t g = lt.rows();
    const size_t n = lt.cols();
    if (auto zi = to_integer(lt)) {
        auto x = integer_right_inverse(*zi);
        if (!x) throw non_integral_dual("no integral dual basis exists");
        return to_int_laurent(*x);
    }

    struct Sub {
        std::vector<size_t> cols;
        Laurent det, canon, unit; /* canon = unit * det */
        std::optional<LMat> sol;  /* lt * sol = det * I */
    };
    std::vector<Sub> subs;
    size_t count = 1;
    for (size_t k = 0; k < g && count <= 256; ++k)
        count = count * (n - k) / (k + 1);
    if (g > 0 && count <= 256) {
        std::vector<size_t> pick(g);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            LMat m(g, g);
            for (size_t i = 0; i < g; ++i)
                for (size_t j = 0; j < g; ++j) m(i, j) = lt(i, pick[j]);
            const Laurent d = det_laurent(m);
            if (!d.is_zero()) {
                if (const auto u = is_unit(d)) {
                    LMat r(n, g);
                    const LMat a = adjugate(m).scaled(u->inverse().to_laurent());
                    for (size_t j = 0; j < g; ++j)
                        for (size_t k = 0; k < g; ++k) r(pick[j], k) = a(j, k);
                    return r;
                }
                const Laurent c = canonical_associate(d);
                subs.push_back({pick, d, c, *divide_exact(c, d), std::nullopt});
            }
            size_t i = g;
            while (i > 0 && pick[i - 1] == n - g + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (size_t j = i; j < g; ++j) pick[j] = pick[j - 1] + 1;
        }

        const auto cramer = [&](Sub& s) -> const LMat& {
            if (!s.sol) {
                LMat r(n, g);
                const LMat a = adjugate([&] {
                    LMat m(g, g);
                    for (size_t i = 0; i < g; ++i)
                        for (size_t j = 0; j < g; ++j) m(i, j) = lt(i, s.cols[j]);
                    return m;
                }());
                for (size_t j = 0; j < g; ++j)
                    for (size_t k = 0; k < g; ++k) r(s.cols[j], k) = a(j, k);
                s.sol = std::move(r);
            }
            return *s.sol;
        };

        std::optional<LMat> acc;
        Int accn = 0;
        size_t attempts = 0;
        for (size_t i = 0; i < subs.size() && attempts < 512; ++i) {
            for (size_t j = i + 1; j < subs.size() && attempts < 512; ++j) {
                ++attempts;
                const BezoutIdentity bz = integral_bezout(subs[i].canon, subs[j].canon);
                if (!bz.coprime) continue;
                const LMat r = cramer(subs[i]).scaled(bz.a * subs[i].unit) +
                               cramer(subs[j]).scaled(bz.b * subs[j].unit);
                if (!acc) {
                    acc = r;
                    accn = bz.n;
                } else {
                    Int gg, x, y;
                    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                               accn.get_mpz_t(), bz.n.get_mpz_t());
                    acc = acc->scaled(Laurent(x)) + r.scaled(Laurent(y));
                    accn = gg;
                }
                if (accn == 1) return *acc;
            }
        }
    }

    auto x = solve(to_rat(lt), to_rat(LMat::identity(g)));
    if (!x) throw invariant_violation("dual system unsolvable for a full-rank lagrangian");
    auto lx = to_lambda(*x);
    if (!lx) throw non_integral_dual("dual basis solution leaves the group ring");
    return *lx;
}

} // namespace

HyperbolicBasis hyperbolize(const HermitianForm& f, const LMat& l) {
    const size_t n = f.rank();
    if (l.rows() != n) throw dimension_mismatch("lagrangian ambient rank mismatch");
    if (n % 2 != 0) throw not_a_lagrangian("odd rank form has no lagrangian");
    const size_t g = n / 2;
    if (l.cols() != g) throw not_a_lagrangian("lagrangian must have half rank");
    if (n == 0) return {LMat(0, 0), std_hyperbolic(0, f.eps())};
    if (!is_nonsingular(f))
        throw singular_form("hyperbolization requires a unit determinant");
    if (rank(to_rat(l)) != g) throw not_a_lagrangian("lagrangian columns are dependent");
    if (!(l.transpose() * f.gram() * involute(l)).is_zero())
        throw not_a_lagrangian("pairing does not vanish on the lagrangian");
    if (!spans_equal(perp(f, l), l))
        throw not_a_lagrangian("lagrangian is not its own orthogonal complement");

    const LMat r = lambda_right_inverse(l.transpose());
    const auto ainv_q = inverse(to_rat(f.gram()));
    const auto ainv = to_lambda(*ainv_q); /* unit determinant, so integral */
    const LMat wbar = *ainv * r;
    const LMat w = involute(wbar);

    const LMat m = w.transpose() * f.gram() * wbar;
    LMat c(g, g);
    for (size_t i = 0; i < g; ++i) {
        for (size_t k = i + 1; k < g; ++k) c(i, k) = m(i, k);
        c(i, i) = alpha_solve(m(i, i), f.eps());
    }
    const LMat v = w - l * c.transpose();

    LMat b(n, n);
    for (size_t i = 0; i < g; ++i) {
        b.set_col(2 * i, l.col(i));
        b.set_col(2 * i + 1, v.col(i));
    }
    HermitianForm h = std_hyperbolic(g, f.eps());
    if (b.transpose() * f.gram() * involute(b) != h.gram())
        throw invariant_violation("hyperbolic basis verification failed");
    return {b, std::move(h)};
}

HyperbolicBasis hyperbolize(const QuadraticForm& q, const LMat& l) {
    if (l.rows() != q.rank()) throw dimension_mismatch("lagrangian ambient rank mismatch");
    const LMat lq = l.transpose() * q.rep() * involute(l);
    if (!q_canonical(lq, q.eps()).is_zero())
        throw not_a_lagrangian("self values do not vanish on the lagrangian");
    HyperbolicBasis hb = hyperbolize(q.symmetrize(), l);

    const LMat nrep = hb.basis.transpose() * q.rep() * involute(hb.basis);
    LMat target(q.rank(), q.rank());
    for (size_t i = 0; 2 * i + 1 < q.rank(); ++i) target(2 * i, 2 * i + 1) = Laurent(1);
    if (q_canonical(nrep, q.eps()) != q_canonical(target, q.eps()))
        throw correction_failed("self values of the hyperbolic basis do not vanish");
    return hb;
}

} // namespace forms
