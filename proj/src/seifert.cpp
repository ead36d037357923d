#include "forms/seifert.hpp"

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <vector>

#include "forms/errors.hpp"

namespace forms {

namespace {

// Nonzero integer vectors with sup norm at most `bound`, enumerated shell
// by shell so small solutions come first. Within a shell the first
// coordinate varies fastest, and only vectors whose first nonzero entry is
// positive are emitted (each line of Z^n has one admissible generator).
// Copying the enumerator forks the scan, which the recursive search uses to
// enumerate strictly increasing candidate tuples.
struct VecEnum {
    std::size_t n;
    long bound;
    long r = 0;
    bool fresh = true;
    std::vector<long> v;

    VecEnum(std::size_t n_, long b) : n(n_), bound(b), v(n_, 0) {}

    bool advance_raw() {
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] < r) {
                ++v[i];
                for (std::size_t j = 0; j < i; ++j) v[j] = -r;
                return true;
            }
        }
        return false;
    }

    bool next() {
        for (;;) {
            bool have;
            if (fresh) {
                fresh = false;
                ++r;
                if (r > bound || n == 0) return false;
                for (auto& e : v) e = -r;
                have = true;
            } else {
                have = advance_raw();
            }
            if (!have) {
                fresh = true;
                continue;
            }
            long m = 0;
            long first = 0;
            for (std::size_t j = n; j > 0; --j) {
                const long e = v[j - 1];
                m = std::max(m, std::labs(e));
                if (e != 0) first = e;
            }
            if (m != r) continue;
            if (first <= 0) continue;
            return true;
        }
    }
};

bool pairing_vanishes(const ZMat& a,
                      const std::vector<std::vector<long>>& basis,
                      const std::vector<long>& y) {
    const std::size_t n = a.rows();
    std::vector<Int> ay(n, Int(0)), aty(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ay[i] += a(i, j) * y[j];
            aty[i] += a(j, i) * y[j];
        }
    Int s(0);
    for (std::size_t i = 0; i < n; ++i) s += ay[i] * y[i];
    if (s != 0) return false;
    for (const auto& x : basis) {
        Int c1(0), c2(0);
        for (std::size_t i = 0; i < n; ++i) {
            c1 += ay[i] * x[i];
            c2 += aty[i] * x[i];
        }
        if (c1 != 0 || c2 != 0) return false;
    }
    return true;
}

// gcd of all j x j minors must be 1 for the chosen columns to span a
// direct summand; a common factor in a prefix persists in every extension,
// so pruning here is sound.
bool prefix_primitive(const std::vector<std::vector<long>>& cols,
                      std::size_t nrows) {
    const std::size_t j = cols.size();
    std::vector<std::size_t> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    Int g(0);
    for (;;) {
        ZMat sub(j, j);
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t c = 0; c < j; ++c)
                sub(r, c) = Int(cols[c][idx[r]]);
        Int d = abs(det_integer(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (g == 1) return true;
        std::size_t i = j;
        while (i > 0) {
            --i;
            if (idx[i] < nrows - j + i) {
                ++idx[i];
                for (std::size_t k = i + 1; k < j; ++k) idx[k] = idx[k - 1] + 1;
                break;
            }
            if (i == 0) return g == 1;
        }
        if (idx[0] > nrows - j) return g == 1;
    }
}

std::optional<LMat> monomial_adjustment(const LMat& blk, const LMat& target) {
    const Laurent cands[6] = {Laurent(1),     Laurent(-1),    Laurent::t(1),
                              -Laurent::t(1), Laurent::t(-1), -Laurent::t(-1)};
    for (int pattern = 0; pattern < 2; ++pattern)
        for (const auto& a : cands)
            for (const auto& b : cands) {
                LMat q(2, 2);
                if (pattern == 0) {
                    q(0, 0) = a;
                    q(1, 1) = b;
                } else {
                    q(0, 1) = a;
                    q(1, 0) = b;
                }
                if (q.transpose() * blk * involute(q) == target) return q;
            }
    return std::nullopt;
}

}  // namespace

SeifertMatrix::SeifertMatrix(ZMat a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols())
        throw dimension_mismatch("seifert matrix must be square");
    if (det_integer(a_ - a_.transpose()) != 1)
        throw invariant_violation(
            "not a seifert pairing: det(A - A^T) must be 1");
}

Laurent alexander(const SeifertMatrix& a) {
    const LMat la = to_int_laurent(a.matrix());
    const LMat lat = to_int_laurent(a.matrix().transpose());
    return canonical_associate(det_laurent(la - lat.scaled(Laurent::t(1))));
}

HermitianForm pushed_in_form(const SeifertMatrix& a) {
    const LMat la = to_int_laurent(a.matrix());
    const LMat lat = to_int_laurent(a.matrix().transpose());
    const LMat g = lat.scaled(Laurent(1) - Laurent::t(1)) +
                   la.scaled(Laurent(1) - Laurent::t(-1));
    return HermitianForm(g, eps_plus());
}

QuadraticForm seifert_quadratic(const SeifertMatrix& a) {
    return QuadraticForm(to_int_laurent(a.matrix()), eps_minus_t());
}

std::optional<ZMat> metaboliser_search(const SeifertMatrix& a, long bound,
                                       unsigned long long cap) {
    const ZMat& m = a.matrix();
    const std::size_t g = a.genus();
    const std::size_t n = 2 * g;
    if (g == 0) return ZMat(0, 0);

    std::vector<std::vector<long>> basis;
    unsigned long long tested = 0;

    std::function<std::optional<ZMat>(VecEnum)> go =
        [&](VecEnum en) -> std::optional<ZMat> {
        while (en.next()) {
            if (++tested > cap)
                throw resource_bound_exceeded("metaboliser search cap reached");
            if (!pairing_vanishes(m, basis, en.v)) continue;
            basis.push_back(en.v);
            if (!prefix_primitive(basis, n)) {
                basis.pop_back();
                continue;
            }
            if (basis.size() == g) {
                ZMat out(n, g);
                for (std::size_t c = 0; c < g; ++c)
                    for (std::size_t r = 0; r < n; ++r)
                        out(r, c) = Int(basis[c][r]);
                return out;
            }
            auto sub = go(en);
            if (sub) return sub;
            basis.pop_back();
        }
        return std::nullopt;
    };
    return go(VecEnum(n, bound));
}

LMat h2_block() {
    LMat h(2, 2);
    h(0, 1) = Laurent::t(1) - Laurent(1);
    h(1, 0) = Laurent::t(-1) - Laurent(1);
    return h;
}

HermitianForm target_form(const ZMat& qx, std::size_t g) {
    LMat acc = to_int_laurent(qx);
    for (std::size_t k = 0; k < g; ++k) acc = diag_sum(acc, h2_block());
    return HermitianForm(acc, eps_plus());
}

LMat hyperbolic_witness(const SeifertMatrix& a, long bound,
                        unsigned long long cap) {
    if (alexander(a) != Laurent(1))
        throw not_delta_one("alexander polynomial is not 1");
    const std::size_t g = a.genus();
    const HermitianForm pushed = pushed_in_form(a);
    if (g == 0) return LMat(0, 0);

    const auto mb = metaboliser_search(a, bound, cap);
    if (!mb) throw no_metaboliser("no metaboliser within the search window");

    const QuadraticForm sq = seifert_quadratic(a);
    const HyperbolicBasis hb = hyperbolize(sq, to_int_laurent(*mb));

    // In the hyperbolic basis the pushed-in form is block diagonal with
    // 2x2 blocks (1 - t^{-1}) [[0,1],[-t,0]]; close the gap to the
    // standard block by a computed monomial change of basis per block.
    const LMat m = hb.basis.transpose() * pushed.gram() * involute(hb.basis);
    const LMat h2 = h2_block();
    LMat adj(2 * g, 2 * g);
    for (std::size_t k = 0; k < g; ++k) {
        const auto qk = monomial_adjustment(m.block(2 * k, 2 * k, 2, 2), h2);
        if (!qk)
            throw correction_failed(
                "no monomial change of basis reaches the standard block");
        adj.set_block(2 * k, 2 * k, *qk);
    }
    const LMat p = hb.basis * adj;
    if (!verify_isometry(target_form(ZMat(0, 0), g), pushed, p))
        throw invariant_violation("hyperbolic witness failed validation");
    return p;
}

HermitianForm divide_hermitian_by(const HermitianForm& g, const Laurent& d) {
    if (d.is_zero()) throw division_by_zero("divisor is zero");
    const std::size_t n = g.rank();
    LMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto q = divide_exact(g.gram()(i, j), d);
            if (!q) throw not_divisible("gram entry is not a multiple of d");
            out(i, j) = *q;
        }
    const auto et = divide_exact(g.eps().to_laurent() * involute(d), d);
    if (!et) throw invariant_violation("divisor does not preserve the type");
    const auto eu = is_unit(*et);
    if (!eu) throw invariant_violation("divisor does not preserve the type");
    return HermitianForm(out, *eu);
}

}  // namespace forms
