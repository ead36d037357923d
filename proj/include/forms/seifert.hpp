#pragma once

#include <optional>

#include "forms/matrix.hpp"
#include "forms/quadratic.hpp"

namespace forms {

// Knot-theoretic front end. A Seifert matrix A is a 2g x 2g integer matrix
// with det(A - A^T) = 1; g is the genus of the underlying surface. From it
// we derive the Alexander polynomial det(A - tA^T) (up to units), the
// intersection form of the pushed-in surface complement
//
//   (1 - t) A^T + (1 - t^{-1}) A     (+1-Hermitian),
//
// and the (-t)-quadratic refinement with representative A, whose
// symmetrization A - tA^T is nonsingular exactly when the Alexander
// polynomial is trivial.
class SeifertMatrix {
public:
    explicit SeifertMatrix(ZMat a);
    const ZMat& matrix() const { return a_; }
    std::size_t genus() const { return a_.rows() / 2; }

private:
    ZMat a_;
};

Laurent alexander(const SeifertMatrix& a);
HermitianForm pushed_in_form(const SeifertMatrix& a);
QuadraticForm seifert_quadratic(const SeifertMatrix& a);

// Bounded exhaustive search for a metaboliser: a primitive rank-g summand
// of Z^{2g} on which the Seifert pairing vanishes identically, returned as
// a 2g x g basis matrix with entries bounded by `bound` in absolute value.
// Vectors are scanned shell by shell (growing sup norm), so small solutions
// are found first and the result is deterministic. Returns nullopt when the
// window holds no metaboliser basis; throws resource_bound_exceeded when
// the scan exceeds `cap` candidate vectors.
std::optional<ZMat> metaboliser_search(const SeifertMatrix& a, long bound,
                                       unsigned long long cap = 50'000'000);

// The standard hyperbolic summand in the +1-Hermitian world and the glued
// target form QX + g hyperbolic blocks (QX a symmetric integer matrix).
LMat h2_block();
HermitianForm target_form(const ZMat& qx, std::size_t g);

// Witness that the pushed-in form of an Alexander-polynomial-one Seifert
// matrix is standard: returns P with
//
//   P^T * pushed_in_form(A) * conj(P) = target_form(empty, g),
//
// i.e. verify_isometry(target_form(empty, g), pushed_in_form(A), P) holds.
// Pipeline: find a metaboliser, extend it to a Lagrangian of the
// (-t)-quadratic form, hyperbolize, then convert each hyperbolic block to
// the standard block by a computed monomial change of basis (computed, not
// assumed; failure of that final search is a hard error and has not been
// observed). Throws not_delta_one when the Alexander polynomial is
// nontrivial and no_metaboliser when the bounded search finds nothing.
LMat hyperbolic_witness(const SeifertMatrix& a, long bound = 20,
                        unsigned long long cap = 50'000'000);

// Entrywise exact division of a Hermitian Gram by d (default t^{-1} - 1).
// The quotient is eps * conj(d)/d - Hermitian; for +1-Hermitian input and
// the default divisor that is -t. Throws not_divisible when an entry is
// not a multiple of d.
HermitianForm divide_hermitian_by(const HermitianForm& g,
                                  const Laurent& d = Laurent::t(-1) -
                                                     Laurent(1));

}  // namespace forms
