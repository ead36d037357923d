#pragma once

#include "forms/matrix.hpp"

#include <optional>

namespace forms {

/* epsilon-Hermitian forms over the group ring.
 *
 * A form is a square Gram matrix A with A = eps * conj(A)^T, where conj is
 * the entrywise involution t -> t^-1 and eps is a unit monomial s*t^m
 * (eps * conj(eps) = 1 holds automatically).  The pairing of column vectors
 * is lambda(x, y) = x^T A ybar, linear in x and conjugate-linear in y.
 *
 * An isometry from (A0, eps) to (A1, eps) is a matrix P over the group ring
 * with unit determinant satisfying P^T A1 Pbar = A0; columns of P express
 * the basis of the source in the basis of the target. */

struct SearchBounds {
    long deg_bound = 2;   /* candidate exponents range over [-deg, deg] */
    long coeff_bound = 2; /* candidate coefficients range over [-c, c] */
    unsigned long long search_cap = 5'000'000;
};

class HermitianForm {
public:
    HermitianForm(LMat gram, UnitMonomial eps);

    const LMat& gram() const { return gram_; }
    const UnitMonomial& eps() const { return eps_; }
    size_t rank() const { return gram_.rows(); }

    bool operator==(const HermitianForm& o) const {
        return gram_ == o.gram_ && eps_ == o.eps_;
    }

private:
    LMat gram_;
    UnitMonomial eps_;
};

inline UnitMonomial eps_plus() { return UnitMonomial{1, 0}; }
inline UnitMonomial eps_minus_t() { return UnitMonomial{-1, 1}; }

Laurent pair(const HermitianForm& f, const LMat& x, const LMat& y);
RatFunc pair_rat(const HermitianForm& f, const QMat& x, const QMat& y);

bool is_nondegenerate(const HermitianForm& f); /* nonzero determinant */
bool is_nonsingular(const HermitianForm& f);   /* unit determinant */

bool verify_isometry(const HermitianForm& f0, const HermitianForm& f1, const LMat& p);

HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b);

/* evaluate every entry at t = 1; the result is a (skew-)symmetric integer
 * matrix according to the sign of eps at 1 */
ZMat specialize_at_1(const HermitianForm& f);

/* orthogonal complement of the column span of s, returned as a matrix whose
 * primitive columns span { x : lambda(x, s_j) = 0 for all j } */
LMat perp(const HermitianForm& f, const LMat& s);

/* equality of column spans as submodules; both arguments must have full
 * column rank */
bool spans_equal(const LMat& a, const LMat& b);

/* orthogonal sum of g standard hyperbolic planes [[0,1],[eps,0]] */
HermitianForm std_hyperbolic(size_t g, UnitMonomial eps);

/* exhaustive isometry search over matrices whose entries are drawn from the
 * bounded candidate alphabet, in deterministic complexity order.  Returns
 * the first isometry found, nullopt if the alphabet is exhausted, and throws
 * resource_bound_exceeded once search_cap candidates have been tested. */
std::optional<LMat> brute_isometry_search(const HermitianForm& f0,
                                          const HermitianForm& f1,
                                          const SearchBounds& bounds);

/* the bounded candidate alphabet used by the brute searches, sorted by
 * complexity (total coefficient mass, then term count, then support) */
std::vector<Laurent> candidate_alphabet(long deg_bound, long coeff_bound);

} // namespace forms
