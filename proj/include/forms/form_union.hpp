#pragma once

#include "forms/hermitian.hpp"
#include "forms/linking.hpp"

namespace forms {

// Union of two nondegenerate forms along an isometry of their boundary
// linking forms.
//
// Inputs are (lambda0, lambda1) with Gram matrices A0, A1 and a matrix h
// describing an isometry d(lambda0) -> -d(lambda1) on cokernel generators.
// The glued form lives on the pushout lattice; concretely we take the basis
//
//   U = [ I   0  ]
//       [ h  Ab1 ]      (Ab1 = conj(A1))
//
// inside the rational span of lambda0 + (-lambda1) and compute
//
//   G = U^T diag(A0^{-1}, -A1^{-1}) conj(U).
//
// G has entries in the group ring exactly when h matches the boundary
// pairings; that certification is always performed, independently of the
// `verify_boundary` precheck. Both inputs embed isometrically: embed0
// carries lambda0 (columns are the images of the standard basis of the
// first lattice, scaled by conj(A0), pairing conj(eps) * lambda0), embed1
// carries -conj(eps) * lambda1.
//
// Only eps = +1 or -1 is admitted: the glued Gram is eps-Hermitian exactly
// when eps is fixed by the involution.
struct UnionResult {
    HermitianForm form;
    LMat embed0;
    LMat embed1;
};

UnionResult form_union(const HermitianForm& f0, const HermitianForm& f1,
                       const LMat& h, bool verify_boundary = true);

// When the gluing map is the boundary of an isometry F : lambda0 -> lambda1
// of the ambient forms, the union is hyperbolic and the graph of F gives a
// Lagrangian. In union coordinates that graph is spanned by the first
// rank(f0) basis vectors; this checks isotropy and self-perpendicularity
// and returns the spanning columns, throwing not_a_lagrangian otherwise.
LMat graph_lagrangian(const UnionResult& u);

}  // namespace forms
