#include "forms/form_union.hpp"

#include <cstddef>

#include "forms/errors.hpp"

namespace forms {

UnionResult form_union(const HermitianForm& f0, const HermitianForm& f1,
                       const LMat& h, bool verify_boundary) {
    if (f0.eps() != f1.eps())
        throw epsilon_mismatch("union requires forms of the same type");
    if (f0.eps().exp != 0)
        throw epsilon_mismatch("union is defined for eps = +1 or -1 only");
    const std::size_t n0 = f0.rank();
    const std::size_t n1 = f1.rank();
    if (h.rows() != n1 || h.cols() != n0)
        throw dimension_mismatch("gluing matrix has the wrong shape");

    const auto a0inv = inverse(to_rat(f0.gram()));
    const auto a1inv = inverse(to_rat(f1.gram()));
    if (!a0inv || !a1inv)
        throw degenerate_form("union requires nondegenerate pieces");

    if (verify_boundary) {
        const LinkingForm b0 = boundary_linking(f0);
        const LinkingForm b1 = boundary_linking(f1);
        if (!verify_linking_isometry(b0, b1, h))
            throw not_an_isometry(
                "gluing matrix is not an isometry of the boundary forms");
    }

    const std::size_t n = n0 + n1;
    LMat u(n, n);
    u.set_block(0, 0, LMat::identity(n0));
    u.set_block(n0, 0, h);
    u.set_block(n0, n0, involute(f1.gram()));

    QMat d(n, n);
    d.set_block(0, 0, *a0inv);
    d.set_block(n0, n0, a1inv->scaled(RatFunc(-1)));

    const QMat uq = to_rat(u);
    const auto gram = to_lambda(uq.transpose() * d * involute(uq));
    if (!gram)
        throw value_not_in_lambda(
            "union pairing leaves the group ring; the gluing matrix does not "
            "match the boundary pairings");

    // First piece: x maps to (conj(A0) x, -X x) with X = Ab1^{-1} h Ab0,
    // the unique matrix making the image orthogonal to the second lattice.
    const auto xq =
        solve(to_rat(involute(f1.gram())), to_rat(h * involute(f0.gram())));
    if (!xq) throw invariant_violation("embedding solve failed");
    const auto x = to_lambda(*xq);
    if (!x)
        throw value_not_in_lambda(
            "gluing matrix is not well defined on the boundary cokernel");

    LMat e0(n, n0);
    e0.set_block(0, 0, involute(f0.gram()));
    e0.set_block(n0, 0, x->scaled(Laurent(-1)));
    LMat e1(n, n1);
    e1.set_block(n0, 0, LMat::identity(n1));

    return UnionResult{HermitianForm(*gram, f0.eps()), e0, e1};
}

LMat graph_lagrangian(const UnionResult& u) {
    const std::size_t n0 = u.embed0.cols();
    const std::size_t n = u.form.rank();
    if (n != 2 * n0)
        throw not_a_lagrangian("union pieces have different ranks");
    LMat gamma(n, n0);
    for (std::size_t i = 0; i < n0; ++i) gamma(i, i) = Laurent(1);
    if (!(gamma.transpose() * u.form.gram() * involute(gamma)).is_zero())
        throw not_a_lagrangian("graph columns are not isotropic");
    if (!spans_equal(perp(u.form, gamma), gamma))
        throw not_a_lagrangian("graph is not its own orthogonal complement");
    return gamma;
}

}  // namespace forms
