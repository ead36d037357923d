#include "forms/hermitian.hpp"

#include <algorithm>

namespace forms {

HermitianForm::HermitianForm(LMat gram, UnitMonomial eps)
    : gram_(std::move(gram)), eps_(eps) {
    if (gram_.rows() != gram_.cols())
        throw dimension_mismatch("gram matrix must be square");
    const LMat adj = involute(gram_).transpose().scaled(eps_.to_laurent());
    if (adj != gram_)
        throw invariant_violation("gram matrix is not eps-hermitian");
}

Laurent pair(const HermitianForm& f, const LMat& x, const LMat& y) {
    if (x.rows() != f.rank() || y.rows() != f.rank() || x.cols() != 1 || y.cols() != 1)
        throw dimension_mismatch("pairing expects column vectors of matching rank");
    return (x.transpose() * f.gram() * involute(y))(0, 0);
}

RatFunc pair_rat(const HermitianForm& f, const QMat& x, const QMat& y) {
    if (x.rows() != f.rank() || y.rows() != f.rank() || x.cols() != 1 || y.cols() != 1)
        throw dimension_mismatch("pairing expects column vectors of matching rank");
    return (x.transpose() * to_rat(f.gram()) * involute(y))(0, 0);
}

bool is_nondegenerate(const HermitianForm& f) {
    return !det_laurent(f.gram()).is_zero();
}

bool is_nonsingular(const HermitianForm& f) {
    return is_unit(det_laurent(f.gram())).has_value();
}

bool verify_isometry(const HermitianForm& f0, const HermitianForm& f1, const LMat& p) {
    if (f0.eps() != f1.eps())
        throw epsilon_mismatch("isometry requires forms of the same type");
    if (f0.rank() != f1.rank() || p.rows() != f1.rank() || p.cols() != f0.rank())
        throw dimension_mismatch("isometry matrix shape mismatch");
    if (!is_unit(det_laurent(p))) return false;
    return p.transpose() * f1.gram() * involute(p) == f0.gram();
}

HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b) {
    if (a.eps() != b.eps())
        throw epsilon_mismatch("direct sum requires forms of the same type");
    return HermitianForm(diag_sum(a.gram(), b.gram()), a.eps());
}

ZMat specialize_at_1(const HermitianForm& f) {
    return f.gram().map([](const Laurent& x) { return augment(x); });
}

LMat perp(const HermitianForm& f, const LMat& s) {
    if (s.rows() != f.rank())
        throw dimension_mismatch("submodule ambient rank mismatch");
    const LMat b = f.gram() * involute(s);
    return saturate_columns(kernel(to_rat(b.transpose())));
}

bool spans_equal(const LMat& a, const LMat& b) {
    if (a.rows() != b.rows()) return false;
    const QMat qa = to_rat(a), qb = to_rat(b);
    const auto x = solve(qb, qa);
    if (!x || !to_lambda(*x)) return false;
    const auto y = solve(qa, qb);
    return y && to_lambda(*y).has_value();
}

HermitianForm std_hyperbolic(size_t g, UnitMonomial eps) {
    LMat m(2 * g, 2 * g);
    for (size_t i = 0; i < g; ++i) {
        m(2 * i, 2 * i + 1) = Laurent(1);
        m(2 * i + 1, 2 * i) = eps.to_laurent();
    }
    return HermitianForm(std::move(m), eps);
}

std::vector<Laurent> candidate_alphabet(long deg_bound, long coeff_bound) {
    if (deg_bound < 0 || coeff_bound < 0)
        throw parse_error("search bounds must be nonnegative");
    const size_t slots = static_cast<size_t>(2 * deg_bound + 1);
    const unsigned long long base = static_cast<unsigned long long>(2 * coeff_bound + 1);
    unsigned long long total = 1;
    for (size_t i = 0; i < slots; ++i) {
        if (total > 2'000'000ULL / base + 1)
            throw resource_bound_exceeded("candidate alphabet larger than 2e6 polynomials");
        total *= base;
    }
    if (total > 2'000'000ULL)
        throw resource_bound_exceeded("candidate alphabet larger than 2e6 polynomials");

    std::vector<Laurent> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<long> c(slots, -coeff_bound);
    for (;;) {
        Laurent p;
        for (size_t i = 0; i < slots; ++i)
            if (c[i] != 0)
                p += Laurent::term(Int(c[i]), static_cast<long>(i) - deg_bound);
        out.push_back(std::move(p));
        size_t pos = 0;
        while (pos < slots && c[pos] == coeff_bound) c[pos++] = -coeff_bound;
        if (pos == slots) break;
        ++c[pos];
    }

    auto key_less = [](const Laurent& a, const Laurent& b) {
        Int ma(0), mb(0);
        for (auto& [e, v] : a.coeffs()) ma += abs(v);
        for (auto& [e, v] : b.coeffs()) mb += abs(v);
        if (ma != mb) return ma < mb;
        if (a.coeffs().size() != b.coeffs().size())
            return a.coeffs().size() < b.coeffs().size();
        const long sa = a.is_zero() ? 0 : a.hi() - a.lo();
        const long sb = b.is_zero() ? 0 : b.hi() - b.lo();
        if (sa != sb) return sa < sb;
        /* prefer support near degree zero, then compare termwise */
        const long ca = a.is_zero() ? 0 : std::abs(a.hi()) + std::abs(a.lo());
        const long cb = b.is_zero() ? 0 : std::abs(b.hi()) + std::abs(b.lo());
        if (ca != cb) return ca < cb;
        auto ia = a.coeffs().begin(), ib = b.coeffs().begin();
        for (; ia != a.coeffs().end() && ib != b.coeffs().end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return false;
    };
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

std::optional<LMat> brute_isometry_search(const HermitianForm& f0,
                                          const HermitianForm& f1,
                                          const SearchBounds& bounds) {
    if (f0.eps() != f1.eps())
        throw epsilon_mismatch("isometry search requires forms of the same type");
    const size_t n = f0.rank();
    if (n != f1.rank()) return std::nullopt;
    if (n == 0) return LMat(0, 0);

    const std::vector<Laurent> alpha = candidate_alphabet(bounds.deg_bound, bounds.coeff_bound);
    const size_t k = n * n;
    unsigned long long tried = 0;

    for (size_t b = 0; b < alpha.size(); ++b) {
        std::vector<size_t> idx(k, 0);
        for (;;) {
            bool fresh = false;
            for (size_t m = 0; m < k && !fresh; ++m) fresh = (idx[m] == b);
            if (fresh) {
                if (++tried > bounds.search_cap)
                    throw resource_bound_exceeded("isometry search cap reached");
                LMat p(n, n);
                for (size_t m = 0; m < k; ++m) p(m / n, m % n) = alpha[idx[m]];
                if (verify_isometry(f0, f1, p)) return p;
            }
            size_t pos = 0;
            while (pos < k && idx[pos] == b) idx[pos++] = 0;
            if (pos == k) break;
            ++idx[pos];
        }
    }
    return std::nullopt;
}

} // namespace forms
