#include "forms/selftest.hpp"

#include <ostream>
#include <random>
#include <string>

#include "forms/errors.hpp"
#include "forms/form_union.hpp"
#include "forms/linking.hpp"
#include "forms/quadratic.hpp"
#include "forms/seifert.hpp"

namespace forms {

namespace {

using Rng = std::mt19937_64;

struct Harness {
    std::ostream& out;
    int failures = 0;
    int section_failures = 0;
    int section_checks = 0;
    std::string current;

    void begin(const std::string& name) {
        current = name;
        section_failures = 0;
        section_checks = 0;
    }
    void check(bool ok, const char* what) {
        ++section_checks;
        if (!ok) {
            ++failures;
            ++section_failures;
            out << "    FAIL: " << what << "\n";
        }
    }
    void end() {
        out << (section_failures ? "FAIL " : "ok   ") << current << " ("
            << section_checks << " checks)\n";
    }
};

Laurent random_laurent(Rng& rng, long deg = 2, long coeff = 3) {
    std::uniform_int_distribution<long> e(-deg, deg), c(-coeff, coeff);
    std::uniform_int_distribution<int> terms(0, 3);
    Laurent p;
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) p += Laurent::term(Int(c(rng)), e(rng));
    return p;
}

Laurent random_nonzero(Rng& rng, long deg = 2, long coeff = 3) {
    for (;;) {
        Laurent p = random_laurent(rng, deg, coeff);
        if (!p.is_zero()) return p;
    }
}

LMat random_lmat(Rng& rng, std::size_t r, std::size_t c, long deg = 1,
                 long coeff = 2) {
    LMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = random_laurent(rng, deg, coeff);
    return m;
}

LMat random_ivec(Rng& rng, std::size_t n, long coeff = 3) {
    std::uniform_int_distribution<long> c(-coeff, coeff);
    LMat v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = Laurent(c(rng));
    return v;
}

// product of elementary operations: always a unit of the matrix ring
LMat random_unit_mat(Rng& rng, std::size_t n) {
    LMat e = LMat::identity(n);
    if (n == 0) return e;
    const Laurent units[6] = {Laurent(1),     Laurent(-1),    Laurent::t(1),
                              -Laurent::t(1), Laurent::t(-1), -Laurent::t(-1)};
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> upick(0, 5), opick(0, 2);
    for (std::size_t k = 0; k < n + 2; ++k) {
        const int op = opick(rng);
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (op == 0) {
            const Laurent u = units[upick(rng)];
            for (std::size_t col = 0; col < n; ++col) e(i, col) = e(i, col) * u;
        } else if (op == 1) {
            if (i != j)
                for (std::size_t col = 0; col < n; ++col)
                    std::swap(e(i, col), e(j, col));
        } else if (n > 1) {
            while (j == i) j = pick(rng);
            const Laurent u = units[upick(rng)];
            for (std::size_t col = 0; col < n; ++col)
                e(i, col) += u * e(j, col);
        }
    }
    return e;
}

LMat lambda_inverse(const LMat& m) {
    const auto qi = inverse(to_rat(m));
    if (!qi) throw invariant_violation("selftest: matrix not invertible");
    const auto li = to_lambda(*qi);
    if (!li) throw invariant_violation("selftest: inverse not integral");
    return *li;
}

HermitianForm random_hermitian(Rng& rng, std::size_t n, UnitMonomial eps) {
    for (;;) {
        const LMat b = random_lmat(rng, n, n);
        const HermitianForm f(b + t_eps(b, eps), eps);
        if (is_nondegenerate(f)) return f;
    }
}

void laurent_section(Harness& h, Rng& rng) {
    h.begin("laurent involution and unit laws");
    for (int i = 0; i < 25; ++i) {
        const Laurent p = random_laurent(rng), q = random_laurent(rng);
        h.check(involute(p * q) == involute(p) * involute(q),
                "involution is multiplicative");
        h.check(involute(p + q) == involute(p) + involute(q),
                "involution is additive");
        h.check(involute(involute(p)) == p, "involution is an involution");
        h.check(augment(involute(p)) == augment(p),
                "augmentation kills the involution");
        const Laurent d = random_nonzero(rng);
        const auto quot = divide_exact(p * d, d);
        h.check(quot && *quot == p, "exact division inverts multiplication");
        if (!p.is_zero()) {
            const Laurent c = canonical_associate(p);
            h.check(associates(p, c), "canonical associate is an associate");
            h.check(canonical_associate(c) == c,
                    "canonical associate is idempotent");
            h.check(parse_laurent(to_string(p)) == p, "print/parse roundtrip");
        }
    }
    h.check(is_unit(-Laurent::t(3)).has_value(), "monomials are units");
    h.check(!is_unit(Laurent(1) + Laurent::t(1)).has_value(),
            "1 + t is not a unit");
    h.end();
}

void ratfunc_section(Harness& h, Rng& rng) {
    h.begin("rational function field");
    for (int i = 0; i < 25; ++i) {
        const RatFunc a(random_laurent(rng), random_nonzero(rng));
        const RatFunc b(random_laurent(rng), random_nonzero(rng));
        const RatFunc c(random_laurent(rng), random_nonzero(rng));
        h.check((a + b) + c == a + (b + c), "addition associates");
        h.check(a * (b + c) == a * b + a * c, "multiplication distributes");
        h.check(involute(a * b) == involute(a) * involute(b),
                "involution is a field map");
        if (!b.is_zero()) h.check(a / b * b == a, "division inverts");
        h.check(coset_eq(Coset(a), Coset(a + RatFunc(random_laurent(rng)))),
                "cosets ignore integral parts");
    }
    h.end();
}

void hermitian_section(Harness& h, Rng& rng) {
    h.begin("hermitian pairing laws");
    const UnitMonomial epses[3] = {eps_plus(), UnitMonomial{-1, 0},
                                   eps_minus_t()};
    for (int i = 0; i < 12; ++i) {
        const UnitMonomial eps = epses[i % 3];
        const std::size_t n = 1 + i % 3;
        const HermitianForm f = random_hermitian(rng, n, eps);
        h.check(verify_isometry(f, f, LMat::identity(n)),
                "identity is an isometry");
        const LMat x = random_ivec(rng, n), y = random_ivec(rng, n);
        h.check(pair(f, y, x) == eps.to_laurent() * involute(pair(f, x, y)),
                "hermitian symmetry law");
        const Laurent s = random_laurent(rng);
        h.check(pair(f, x.scaled(s), y) == s * pair(f, x, y),
                "pairing is linear on the left");
        h.check(pair(f, x, y.scaled(s)) == involute(s) * pair(f, x, y),
                "pairing is conjugate-linear on the right");
        const LMat einv = random_unit_mat(rng, n);
        const HermitianForm g(einv.transpose() * f.gram() * involute(einv),
                              f.eps());
        h.check(verify_isometry(g, f, einv), "transported form is isometric");
    }
    h.end();
}

void boundary_section(Harness& h, Rng& rng) {
    h.begin("boundary linking forms");
    for (int i = 0; i < 10; ++i) {
        const UnitMonomial eps = (i % 2) ? UnitMonomial{-1, 0} : eps_plus();
        const std::size_t n = 1 + i % 3;
        const HermitianForm f = random_hermitian(rng, n, eps);
        const LinkingForm b = boundary_linking(f);
        const LMat x = random_ivec(rng, n), y = random_ivec(rng, n);
        const Coset bxy = b.pair_classes(x, y), byx = b.pair_classes(y, x);
        const RatFunc conj_eps(involute(eps.to_laurent()));
        h.check((byx.rep() - conj_eps * involute(bxy.rep())).in_lambda(),
                "linking symmetry law");
        h.check(b.class_is_zero(x.scaled(b.order())),
                "order annihilates the module");
        const LMat shifted = x + b.pres() * random_ivec(rng, n);
        h.check(coset_eq(b.pair_classes(shifted, y), bxy),
                "pairing is well defined on classes");
    }
    h.end();
}

void functoriality_section(Harness& h, Rng& rng) {
    h.begin("boundary functoriality");
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = 1 + i % 3;
        const HermitianForm f1 = random_hermitian(rng, n, eps_plus());
        const LMat einv = random_unit_mat(rng, n);
        const HermitianForm f0(einv.transpose() * f1.gram() * involute(einv),
                               f1.eps());
        h.check(boundary_of_isometry(LMat::identity(n)) == LMat::identity(n),
                "boundary of the identity");
        const LMat df = boundary_of_isometry(einv);
        h.check(verify_linking_isometry(boundary_linking(f0),
                                        boundary_linking(f1), df),
                "boundary of an isometry is a linking isometry");
        const LMat e2 = random_unit_mat(rng, n);
        h.check(boundary_of_isometry(e2 * einv) ==
                    boundary_of_isometry(e2) * boundary_of_isometry(einv),
                "boundary respects composition");
        const auto a1 = inverse(to_rat(f1.gram()));
        const auto a0 = inverse(to_rat(f0.gram()));
        h.check(a1 && a0 &&
                    to_rat(df).transpose() * *a1 * involute(to_rat(df)) == *a0,
                "exact naturality of the inverse gram");
    }
    h.end();
}

void quadratic_section(Harness& h, Rng& rng) {
    h.begin("quadratic classes");
    const UnitMonomial epses[3] = {eps_plus(), UnitMonomial{-1, 0},
                                   eps_minus_t()};
    for (int i = 0; i < 15; ++i) {
        const UnitMonomial eps = epses[i % 3];
        const std::size_t n = 1 + i % 3;
        const QuadraticForm q(random_lmat(rng, n, n), eps);
        const LMat d = random_lmat(rng, n, n);
        const QuadraticForm q2(q.rep() + d - t_eps(d, eps), eps);
        h.check(q_equal(q, q2), "class ignores the image of 1 - T");
        h.check(q.symmetrize().gram() == q2.symmetrize().gram(),
                "perturbation fixes the symmetrization");
        h.check(canonical(canonical(q)).rep() == canonical(q).rep(),
                "canonical representative is idempotent");
        if (eps == eps_minus_t()) {
            const LMat r = random_lmat(rng, n, n);
            const LMat dd = r + involute(r).transpose().scaled(Laurent::t(1));
            const Laurent u = Laurent::t(-1) - Laurent(1);
            const LMat z = dd.scaled(u);
            const LMat y = factor_skew(z);
            h.check(
                (y + involute(y).transpose().scaled(Laurent::t(1))).scaled(u) ==
                    z,
                "skew factorization certificate reconstructs its input");
            const QuadraticForm xi = xi_map(q);
            h.check(xi.symmetrize().gram() ==
                        q.symmetrize().gram().scaled(u),
                    "scaling map matches on symmetrizations");
        }
        const Laurent alpha = random_laurent(rng);
        const Laurent m = alpha + eps.to_laurent() * involute(alpha);
        const Laurent beta = alpha_solve(m, eps);
        h.check(beta + eps.to_laurent() * involute(beta) == m,
                "alpha_solve solves its equation");
    }
    h.end();
}

void hyperbolize_section(Harness& h, Rng& rng) {
    h.begin("hyperbolize transported lagrangians");
    const UnitMonomial epses[3] = {eps_plus(), UnitMonomial{-1, 0},
                                   eps_minus_t()};
    for (int i = 0; i < 9; ++i) {
        const UnitMonomial eps = epses[i % 3];
        const std::size_t g = 1 + (i / 3) % 2;
        const HermitianForm hstd = std_hyperbolic(g, eps);
        const LMat einv = random_unit_mat(rng, 2 * g);
        const HermitianForm f(einv.transpose() * hstd.gram() * involute(einv),
                              eps);
        LMat lstd(2 * g, g);
        for (std::size_t k = 0; k < g; ++k) lstd(2 * k, k) = Laurent(1);
        const LMat l = lambda_inverse(einv) * lstd;
        h.check(spans_equal(perp(f, l), l),
                "half-rank sublagrangian equals its perp");
        h.check(spans_equal(perp(f, perp(f, l)), perp(f, l)),
                "perp is idempotent");
        const HyperbolicBasis hb = hyperbolize(f, l);
        h.check(hb.form.gram() == hstd.gram(),
                "hyperbolization reaches the standard gram");
        h.check(hb.basis.transpose() * f.gram() * involute(hb.basis) ==
                    hstd.gram(),
                "hyperbolic basis recomputes the standard gram");
    }
    h.end();
}

void union_section(Harness& h, Rng& rng) {
    h.begin("unions along boundary isometries");
    const Laurent d = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
    {
        LMat a(1, 1);
        a(0, 0) = d;
        const HermitianForm f(a, eps_plus());
        const UnionResult u = form_union(f, f, LMat::identity(1));
        LMat expect(2, 2);
        expect(0, 1) = Laurent(-1);
        expect(1, 0) = Laurent(-1);
        expect(1, 1) = -d;
        h.check(u.form.gram() == expect, "one-generator union gram");
        const LMat gamma = graph_lagrangian(u);
        const HyperbolicBasis hb = hyperbolize(u.form, gamma);
        h.check(hb.form.gram() == std_hyperbolic(1, eps_plus()).gram(),
                "one-generator union hyperbolizes");
        LMat h2(1, 1);
        h2(0, 0) = Laurent(2);
        bool threw = false;
        try {
            form_union(f, f, h2, false);
        } catch (const value_not_in_lambda&) {
            threw = true;
        }
        h.check(threw, "non-isometry leaves the group ring");
    }
    for (int i = 0; i < 8; ++i) {
        const UnitMonomial eps = (i % 2) ? UnitMonomial{-1, 0} : eps_plus();
        const std::size_t n = 1 + i % 2;
        const HermitianForm f1 = random_hermitian(rng, n, eps);
        const LMat einv = random_unit_mat(rng, n);
        const HermitianForm f0(einv.transpose() * f1.gram() * involute(einv),
                               eps);
        const LMat bh = boundary_of_isometry(einv);
        const UnionResult u = form_union(f0, f1, bh);
        h.check(u.embed0.transpose() * u.form.gram() * involute(u.embed0) ==
                    f0.gram().scaled(involute(eps.to_laurent())),
                "first piece embeds with conjugate-eps pairing");
        h.check(u.embed1.transpose() * u.form.gram() * involute(u.embed1) ==
                    f1.gram().scaled(-involute(eps.to_laurent())),
                "second piece embeds with negated pairing");
        const LMat gamma = graph_lagrangian(u);
        h.check(gamma.cols() == n, "graph lagrangian has half rank");
    }
    h.end();
}

void seifert_section(Harness& h, Rng& rng) {
    h.begin("seifert determinant law");
    const ZMat stab(2, 2, {Int(0), Int(1), Int(0), Int(0)});
    const ZMat trefoil(2, 2, {Int(-1), Int(1), Int(0), Int(-1)});
    const ZMat fig8(2, 2, {Int(1), Int(1), Int(0), Int(-1)});
    const ZMat corpus[3] = {stab, trefoil, fig8};
    const Laurent tm1 = Laurent::t(1) - Laurent(1);
    for (int i = 0; i < 3; ++i)
        for (int j = -1; j < 3; ++j) {
            ZMat m = corpus[i];
            if (j >= 0) m = diag_sum(m, corpus[j]);
            const SeifertMatrix a(m);
            const HermitianForm p = pushed_in_form(a);
            Laurent lhs = det_laurent(p.gram());
            Laurent rhs = alexander(a);
            for (std::size_t k = 0; k < 2 * a.genus(); ++k) rhs = rhs * tm1;
            h.check(associates(lhs, rhs),
                    "det of pushed-in form is (t-1)^2g times alexander");
            h.check(specialize_at_1(p).is_zero(),
                    "pushed-in form vanishes at t = 1");
            h.check(p.gram() ==
                        seifert_quadratic(a).symmetrize().gram().scaled(
                            Laurent(1) - Laurent::t(-1)),
                    "pushed-in form is the scaled symmetrization");
        }
    h.check(alexander(SeifertMatrix(stab)) == Laurent(1),
            "stabilized unknot has trivial alexander polynomial");
    h.check(alexander(SeifertMatrix(trefoil)) ==
                Laurent::t(2) - Laurent::t(1) + Laurent(1),
            "trefoil alexander polynomial");
    (void)rng;
    h.end();
}

void fibred_section(Harness& h, Rng&) {
    h.begin("fibred linking forms");
    for (std::size_t g = 1; g <= 2; ++g) {
        const LinkingForm f = fibred_blanchfield(g);
        LMat j(2 * g, 2 * g);
        for (std::size_t k = 0; k < g; ++k) {
            j(k, g + k) = Laurent(1);
            j(g + k, k) = Laurent(-1);
        }
        h.check(verify_linking_isometry(f, f, j),
                "the standard symplectic matrix acts isometrically");
        LMat bad = LMat::identity(2 * g);
        bad(0, 0) = Laurent(-1);
        h.check(!verify_linking_isometry(f, f, bad),
                "a determinant -1 reflection is not an isometry");
    }
    h.end();
}

}  // namespace

int run_selftest(std::ostream& out) {
    Harness h{out};
    Rng rng(0x5e1f7e57u);
    laurent_section(h, rng);
    ratfunc_section(h, rng);
    hermitian_section(h, rng);
    boundary_section(h, rng);
    functoriality_section(h, rng);
    quadratic_section(h, rng);
    hyperbolize_section(h, rng);
    union_section(h, rng);
    seifert_section(h, rng);
    fibred_section(h, rng);
    out << (h.failures ? "selftest FAILED: " : "selftest passed: ")
        << h.failures << " failures\n";
    return h.failures;
}

}  // namespace forms
