#pragma once

#include "forms/hermitian.hpp"

#include <vector>

namespace forms {

/* Quadratic refinements.
 *
 * A quadratic form of type eps is a square representative matrix psi taken
 * modulo the image of 1 - T_eps, where T_eps(B) = eps * conj(B)^T.  Its
 * symmetrization psi + T_eps(psi) is an eps-hermitian Gram matrix, and the
 * self value of a column vector x is x^T psi xbar read modulo the lattice
 * { r - eps * conj(r) }.
 *
 * The canonical representative pushes the strict lower triangle into the
 * upper one (an entry z at (i,j) with i > j moves to eps * conj(z) added at
 * (j,i)) and reduces each diagonal entry modulo the lattice above.  Two
 * representatives define the same form exactly when their canonical forms
 * agree, so equality testing is structural. */

class QuadraticForm {
public:
    QuadraticForm(LMat rep, UnitMonomial eps);

    const LMat& rep() const { return rep_; }
    const UnitMonomial& eps() const { return eps_; }
    size_t rank() const { return rep_.rows(); }

    HermitianForm symmetrize() const;

private:
    LMat rep_;
    UnitMonomial eps_;
};

/* T_eps(B) = eps * conj(B)^T */
LMat t_eps(const LMat& b, UnitMonomial eps);

/* reduce a scalar modulo { r - eps * conj(r) }: coefficients below the
 * symmetry line move across it, and for eps = -t^{2k} the coefficient on
 * the line is reduced mod 2 */
Laurent reduce_diagonal(const Laurent& d, UnitMonomial eps);

LMat q_canonical(const LMat& rep, UnitMonomial eps);
QuadraticForm canonical(const QuadraticForm& q);

bool q_equal(const QuadraticForm& a, const QuadraticForm& b);

/* self value q(x), returned as the reduced representative */
Laurent self_value(const QuadraticForm& q, const LMat& x);

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);

/* scale a form of type -t by t^-1 - 1, producing a form of type +1 */
QuadraticForm xi_map(const QuadraticForm& q);

/* Given a skew matrix Z = -conj(Z)^T whose off-diagonal entries are
 * divisible by t^-1 - 1 and whose diagonal entries are divisible by
 * t^-1 - t, produce Y with (t^-1 - 1) * (Y + t * conj(Y)^T) = Z.  This is
 * the certificate step showing the scaling map above is injective: when two
 * type -t representatives have equal scalings, Z is their scaled difference
 * and Y exhibits the difference as trivial.  Throws no_factorization if the
 * divisibility fails. */
LMat factor_skew(const LMat& z);

struct BlockRefinement {
    std::vector<QuadraticForm> blocks;
    LMat certificate; /* rep in the new basis minus (1 - T_eps)(certificate) is block diagonal */
};

/* change basis by p (columns express the new basis) and split the form into
 * diagonal blocks of the given sizes; throws not_block_refinable when the
 * symmetrization fails to be block diagonal in the new basis */
BlockRefinement extract_block_refinement(const QuadraticForm& q, const LMat& p,
                                         const std::vector<size_t>& sizes);

struct HyperbolicBasis {
    LMat basis;         /* columns l_1, v_1, ..., l_g, v_g */
    HermitianForm form; /* the standard hyperbolic form the basis realizes */
};

/* Turn a Lagrangian into an explicit hyperbolic structure: the returned
 * basis pulls the form back to the orthogonal sum of [[0,1],[eps,0]] planes,
 * with the Lagrangian spanning the odd-position vectors.  Requires a
 * nonsingular form.  The quadratic overload also requires the self values on
 * the Lagrangian to vanish and certifies that the corrected basis has
 * vanishing self values. */
HyperbolicBasis hyperbolize(const HermitianForm& f, const LMat& lagrangian);
HyperbolicBasis hyperbolize(const QuadraticForm& q, const LMat& lagrangian);

/* solve alpha + eps * conj(alpha) = m; throws correction_failed when no
 * solution exists (m must be eps-symmetric) */
Laurent alpha_solve(const Laurent& m, UnitMonomial eps);

} // namespace forms
