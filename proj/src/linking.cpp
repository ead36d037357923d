#include "forms/linking.hpp"

#include <algorithm>

namespace forms {

namespace {

LMat unit_vector(size_t n, size_t i) {
    LMat v(n, 1);
    v(i, 0) = Laurent(1);
    return v;
}

bool all_in_lambda(const QMat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).in_lambda()) return false;
    return true;
}

} // namespace

LinkingForm::LinkingForm(LMat pres, QMat pairing, UnitMonomial eps)
    : pres_(std::move(pres)), pairing_(std::move(pairing)), eps_(eps), proj_(Laurent(1)) {
    if (pres_.rows() != pres_.cols())
        throw dimension_mismatch("presentation must be square");
    if (pairing_.rows() != pres_.rows() || pairing_.cols() != pres_.cols())
        throw dimension_mismatch("pairing size must match the presentation");
    const Laurent det = det_laurent(pres_);
    if (det.is_zero()) throw degenerate_presentation("presentation matrix is singular");
    order_ = canonical_associate(det);

    const QMat qp = to_rat(pres_);
    if (!to_lambda(qp.transpose() * pairing_) || !to_lambda(pairing_ * involute(qp)))
        throw invariant_violation("pairing is not well defined on the cokernel");
    const RatFunc ebar{eps_.involute().to_laurent()};
    for (size_t i = 0; i < gens(); ++i)
        for (size_t j = 0; j < gens(); ++j)
            if (!(pairing_(j, i) - ebar * pairing_(i, j).involute()).in_lambda())
                throw invariant_violation("pairing symmetry violated");
}

LinkingForm::LinkingForm(LMat pres, QMat pairing, UnitMonomial eps, Laurent proj, Laurent order)
    : pres_(std::move(pres)), pairing_(std::move(pairing)), eps_(eps),
      proj_(std::move(proj)), order_(std::move(order)) {}

Coset LinkingForm::pair_classes(const LMat& x, const LMat& y) const {
    if (x.rows() != gens() || y.rows() != gens() || x.cols() != 1 || y.cols() != 1)
        throw dimension_mismatch("pairing expects column vectors of matching rank");
    const QMat qx = to_rat(apply_projector(x)), qy = to_rat(apply_projector(y));
    return Coset((qx.transpose() * pairing_ * involute(qy))(0, 0));
}

bool LinkingForm::classes_equal(const LMat& v, const LMat& w) const {
    if (v.rows() != gens() || w.rows() != gens() || v.cols() != 1 || w.cols() != 1)
        throw dimension_mismatch("class comparison expects column vectors");
    return coker_eq(pres_, apply_projector(v), apply_projector(w));
}

bool coker_eq(const LMat& p, const LMat& v, const LMat& w) {
    if (v.rows() != p.rows() || w.rows() != p.rows() || v.cols() != 1 || w.cols() != 1)
        throw dimension_mismatch("coker_eq expects column vectors");
    const auto x = solve(to_rat(p), to_rat(v - w));
    return x && to_lambda(*x).has_value();
}

LinkingForm boundary_linking(const HermitianForm& f, int sign) {
    if (sign != 1 && sign != -1) throw parse_error("boundary sign must be +1 or -1");
    const auto inv = inverse(to_rat(f.gram()));
    if (!inv) throw degenerate_form("boundary requires a nondegenerate form");
    QMat v = *inv;
    if (sign < 0) v = v.scaled(RatFunc(Laurent(-1)));
    return LinkingForm(involute(f.gram()), std::move(v), f.eps());
}

LMat boundary_of_isometry(const LMat& f) {
    if (f.rows() != f.cols())
        throw dimension_mismatch("boundary of a non-square matrix");
    const auto inv = inverse(to_rat(involute(f).transpose()));
    if (!inv) throw not_an_isometry("matrix is not invertible");
    const auto li = to_lambda(*inv);
    if (!li) throw not_an_isometry("matrix inverse leaves the group ring");
    return *li;
}

namespace {

bool inverse_on_cokernels(const LinkingForm& l0, const LinkingForm& l1, const LMat& h,
                          const SearchBounds& bounds) {
    /* exact path: a unit determinant gives the inverse directly */
    if (h.rows() == h.cols() && is_unit(det_laurent(h))) {
        const auto k = to_lambda(*inverse(to_rat(h)));
        if (k) {
            const auto x = solve(to_rat(l0.pres()), to_rat(*k * l1.pres()));
            if (x && to_lambda(*x)) return true;
        }
    }
    /* bounded search for a two-sided inverse modulo the presentations */
    const auto alphabet = candidate_alphabet(bounds.deg_bound, bounds.coeff_bound);
    const size_t n0 = l0.gens(), n1 = l1.gens();
    const size_t cells = n0 * n1;
    unsigned long long tried = 0;
    for (size_t b = 0; b < alphabet.size(); ++b) {
        std::vector<size_t> idx(cells, 0);
        for (;;) {
            bool fresh = false;
            for (size_t m = 0; m < cells && !fresh; ++m) fresh = (idx[m] == b);
            if (fresh) {
                if (++tried > bounds.search_cap)
                    throw resource_bound_exceeded("inverse search cap reached");
                LMat k(n0, n1);
                for (size_t m = 0; m < cells; ++m) k(m / n1, m % n1) = alphabet[idx[m]];
                bool ok = true;
                const auto x = solve(to_rat(l0.pres()), to_rat(k * l1.pres()));
                ok = x && to_lambda(*x).has_value();
                const LMat kh = k * h, hk = h * k;
                for (size_t i = 0; i < n0 && ok; ++i)
                    ok = coker_eq(l0.pres(), kh.col(i), unit_vector(n0, i));
                for (size_t j = 0; j < n1 && ok; ++j)
                    ok = coker_eq(l1.pres(), hk.col(j), unit_vector(n1, j));
                if (ok) return true;
            }
            size_t pos = 0;
            while (pos < cells && idx[pos] == b) idx[pos++] = 0;
            if (pos == cells) break;
            ++idx[pos];
        }
    }
    return false;
}

} // namespace

bool verify_linking_isometry(const LinkingForm& l0, const LinkingForm& l1, const LMat& h,
                             const SearchBounds& bounds) {
    if (l0.is_part() || l1.is_part())
        throw invariant_violation("isometry checking needs full modules, not split parts");
    if (l0.eps() != l1.eps())
        throw epsilon_mismatch("isometry requires linking forms of the same type");
    if (h.rows() != l1.gens() || h.cols() != l0.gens())
        throw dimension_mismatch("isometry matrix shape mismatch");

    const auto x = solve(to_rat(l1.pres()), to_rat(h * l0.pres()));
    if (!x || !to_lambda(*x)) return false;

    /* pairing first: it is cheap and rejects most non-isometries before the
     * potentially expensive inverse search */
    for (size_t i = 0; i < l0.gens(); ++i)
        for (size_t j = 0; j < l0.gens(); ++j) {
            const LMat ei = unit_vector(l0.gens(), i), ej = unit_vector(l0.gens(), j);
            if (!coset_eq(l1.pair_classes(h.col(i), h.col(j)), l0.pair_classes(ei, ej)))
                return false;
        }

    return inverse_on_cokernels(l0, l1, h, bounds);
}

LinkingForm fibred_blanchfield(size_t g) {
    const size_t n = 2 * g;
    LMat pres(n, n);
    const Laurent tm1 = Laurent::t() - Laurent(1);
    for (size_t i = 0; i < n; ++i) pres(i, i) = tm1;
    QMat v(n, n);
    const RatFunc c(Laurent(1), Laurent::term(Int(1), -1) - Laurent(1));
    for (size_t i = 0; i < g; ++i) {
        v(i, g + i) = c;
        v(g + i, i) = -c;
    }
    return LinkingForm(std::move(pres), std::move(v), eps_plus());
}

std::pair<LinkingForm, LinkingForm> split_coprime(const LinkingForm& l,
                                                  const Laurent& d0_in, const Laurent& d1_in) {
    if (l.is_part())
        throw invariant_violation("splitting an already split part is not supported");
    if (d0_in.is_zero() || d1_in.is_zero())
        throw zero_input("split factors must be nonzero");
    const Laurent d0 = canonical_associate(d0_in), d1 = canonical_associate(d1_in);

    /* multiplicities: peel each factor off the order; units contribute the
     * trivial part */
    Laurent rem = l.order();
    size_t k0 = 0, k1 = 0;
    if (!is_unit(d0))
        while (auto q = divide_exact(rem, d0)) {
            rem = *q;
            ++k0;
        }
    if (!is_unit(d1))
        while (auto q = divide_exact(rem, d1)) {
            rem = *q;
            ++k1;
        }
    if (!is_unit(rem))
        throw not_coprime("order is not a product of powers of the two factors");

    Laurent big0(1), big1(1);
    for (size_t i = 0; i < k0; ++i) big0 = big0 * d0;
    for (size_t i = 0; i < k1; ++i) big1 = big1 * d1;

    const BezoutIdentity bz = integral_bezout(big0, big1);
    if (!bz.coprime || !(bz.n == 1 || bz.n == -1))
        throw not_coprime("no integral bezout identity for the primary factors");
    Laurent a = bz.a, b = bz.b;
    if (bz.n == -1) {
        a = -a;
        b = -b;
    }
    const Laurent pi0 = b * big1, pi1 = a * big0;
    if (pi0 + pi1 != Laurent(1))
        throw invariant_violation("projectors do not sum to one");

    LinkingForm p0(l.pres(), l.pairing(), l.eps(), pi0, big0);
    LinkingForm p1(l.pres(), l.pairing(), l.eps(), pi1, big1);

    /* the parts must pair to zero against each other */
    const RatFunc cross{pi0 * involute(pi1)};
    for (size_t i = 0; i < l.gens(); ++i)
        for (size_t j = 0; j < l.gens(); ++j)
            if (!(cross * l.pairing()(i, j)).in_lambda())
                throw invariant_violation("split parts are not orthogonal");
    return {std::move(p0), std::move(p1)};
}

std::optional<CyclicPresentation> cyclic_presentation(const LinkingForm& l,
                                                      const SearchBounds& bounds) {
    const size_t n = l.gens();
    if (n == 0) return CyclicPresentation{Laurent(1), Laurent(), LMat(0, 1)};
    const auto alphabet = candidate_alphabet(bounds.deg_bound, bounds.coeff_bound);
    const QMat pinv = *inverse(to_rat(l.pres()));
    const auto projected_zero = [&](const LMat& v) {
        return all_in_lambda(pinv * to_rat(l.apply_projector(v)));
    };
    unsigned long long tried = 0;

    for (size_t i = 0; i < n; ++i) {
        const LMat gi = unit_vector(n, i);
        bool ok = true;
        for (size_t j = 0; j < n && ok; ++j) {
            if (j == i) continue;
            bool found = false;
            for (const Laurent& c : alphabet) {
                if (++tried > bounds.search_cap)
                    throw resource_bound_exceeded("cyclic generator search cap reached");
                if (projected_zero(unit_vector(n, j) - gi.scaled(c))) {
                    found = true;
                    break;
                }
            }
            ok = found;
        }
        if (!ok) continue;
        const RatFunc r = RatFunc(l.order()) * l.pair_classes(gi, gi).rep();
        if (!r.in_lambda())
            throw invariant_violation("order does not annihilate the generator pairing");
        return CyclicPresentation{l.order(), r.as_laurent(), l.apply_projector(gi)};
    }
    return std::nullopt;
}

LinkingForm cyclic_linking(const Laurent& order, const Laurent& value, UnitMonomial eps) {
    if (order.is_zero()) throw zero_input("cyclic order must be nonzero");
    LMat pres(1, 1);
    pres(0, 0) = order;
    QMat v(1, 1);
    v(0, 0) = RatFunc(value, order);
    return LinkingForm(std::move(pres), std::move(v), eps);
}

namespace {

bool invertible_with(const Laurent& p, const Laurent& d, const std::vector<Laurent>& alphabet,
                     const SearchBounds& bounds, unsigned long long& tried) {
    if (is_unit(p)) return true;
    if (divide_exact(p * involute(p) - Laurent(1), d)) return true; /* conjugate witness */
    const BezoutIdentity bz = integral_bezout(canonical_associate(p), d);
    if (!bz.coprime) return false;
    if (bz.n == 1 || bz.n == -1) return true;
    for (const Laurent& q : alphabet) {
        if (++tried > bounds.search_cap)
            throw resource_bound_exceeded("invertibility witness search cap reached");
        if (divide_exact(p * q - Laurent(1), d)) return true;
    }
    return false;
}

} // namespace

bool invertible_mod(const Laurent& p, const Laurent& order, const SearchBounds& bounds) {
    if (order.is_zero()) throw zero_input("order must be nonzero");
    if (is_unit(order)) return true; /* trivial module */
    if (p.is_zero()) return false;
    const auto alphabet = candidate_alphabet(bounds.deg_bound, bounds.coeff_bound);
    unsigned long long tried = 0;
    return invertible_with(p, canonical_associate(order), alphabet, bounds, tried);
}

std::vector<Laurent> aut_cyclic_blanchfield(const Laurent& order, const Laurent& value,
                                            const SearchBounds& bounds) {
    if (order.is_zero()) throw zero_input("order must be nonzero");
    const Laurent d = canonical_associate(order);
    std::vector<Laurent> classes;
    if (is_unit(d)) {
        classes.push_back(Laurent(1));
        return classes;
    }
    const auto alphabet = candidate_alphabet(bounds.deg_bound, bounds.coeff_bound);
    unsigned long long tried = 0;
    for (const Laurent& p : alphabet) {
        if (++tried > bounds.search_cap)
            throw resource_bound_exceeded("automorphism search cap reached");
        if (p.is_zero()) continue;
        if (!divide_exact(p * involute(p) * value - value, d)) continue;
        bool dup = false;
        for (const Laurent& q : classes)
            if (divide_exact(p - q, d)) {
                dup = true;
                break;
            }
        if (dup) continue;
        if (!invertible_with(p, d, alphabet, bounds, tried)) continue;
        classes.push_back(p);
    }
    return classes;
}

} // namespace forms
