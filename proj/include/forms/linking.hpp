#pragma once

#include "forms/hermitian.hpp"
#include "forms/ratfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace forms {

/* Torsion linking forms.
 *
 * A linking form is the cokernel of a nonsingular square presentation P over
 * the group ring, carrying a pairing into Q(t)/Lambda: classes of integral
 * vectors pair by beta([x],[y]) = x^T V ybar read modulo Lambda, where V is
 * a rational matrix satisfying P^T V and V conj(P) integral (those two
 * conditions make beta well defined on the cokernel).  The symmetry law is
 * beta(y, x) = conj(eps) * conj(beta(x, y)).
 *
 * The determinant of P annihilates the module, so order() below is a
 * well-defined annihilating polynomial even though the ring is not a PID.
 *
 * A coprime splitting carries its two summands around as the original
 * presentation together with a scalar projector pi: the part is { [pi x] },
 * with the pairing inherited.  Operations on classes apply the projector
 * before anything else, so a part behaves like a standalone module without
 * needing a presentation of its own; cyclic_presentation recovers an honest
 * one-generator presentation when the part is cyclic. */
class LinkingForm {
public:
    LinkingForm(LMat pres, QMat pairing, UnitMonomial eps);

    const LMat& pres() const { return pres_; }
    const QMat& pairing() const { return pairing_; }
    const UnitMonomial& eps() const { return eps_; }
    const Laurent& projector() const { return proj_; }
    const Laurent& order() const { return order_; }
    size_t gens() const { return pres_.rows(); }
    bool is_part() const { return !(proj_ == Laurent(1)); }

    LMat apply_projector(const LMat& v) const { return v.scaled(proj_); }
    Coset pair_classes(const LMat& x, const LMat& y) const;
    bool classes_equal(const LMat& v, const LMat& w) const;
    bool class_is_zero(const LMat& v) const { return classes_equal(v, LMat(gens(), 1)); }

private:
    LinkingForm(LMat pres, QMat pairing, UnitMonomial eps, Laurent proj, Laurent order);
    friend std::pair<LinkingForm, LinkingForm> split_coprime(const LinkingForm&,
                                                             const Laurent&, const Laurent&);

    LMat pres_;
    QMat pairing_;
    UnitMonomial eps_;
    Laurent proj_;
    Laurent order_;
};

/* [v] == [w] in coker(p), decided by solving over the fraction field and
 * checking integrality */
bool coker_eq(const LMat& p, const LMat& v, const LMat& w);

/* boundary of a nondegenerate form: module coker(conj(A)), pairing
 * sign * A^{-1}.  The sign toggles the orientation convention. */
LinkingForm boundary_linking(const HermitianForm& f, int sign = 1);

/* boundary of an isometry: (conj(F)^T)^{-1}, integral whenever F has unit
 * determinant */
LMat boundary_of_isometry(const LMat& f);

/* check that h induces an isometry of linking forms: integrality of
 * h on the cokernels, existence of an inverse (exact when det(h) is a unit,
 * otherwise a bounded search), and preservation of the pairing on
 * generators.  Only full modules, not split parts. */
bool verify_linking_isometry(const LinkingForm& l0, const LinkingForm& l1,
                             const LMat& h, const SearchBounds& bounds = {});

/* the linking form of a fibred module: (Lambda/(t-1))^{2g} with pairing
 * J / (t^-1 - 1), J the standard symplectic matrix */
LinkingForm fibred_blanchfield(size_t g);

/* split off the d0-primary and d1-primary parts.  The factors must be
 * coprime in the strong sense that an integral combination a*D0 + b*D1 = 1
 * exists for the full multiplicities D_i dividing the order; otherwise
 * not_coprime is thrown. */
std::pair<LinkingForm, LinkingForm> split_coprime(const LinkingForm& l,
                                                  const Laurent& d0, const Laurent& d1);

struct CyclicPresentation {
    Laurent order;  /* annihilator of the generator */
    Laurent value;  /* beta(g, g) = value / order */
    LMat generator; /* the generating class, in ambient coordinates */
};

/* search for a single generator: each projected standard generator must be a
 * bounded-coefficient multiple of the candidate.  Returns nullopt when no
 * generator is found within the bounds. */
std::optional<CyclicPresentation> cyclic_presentation(const LinkingForm& l,
                                                      const SearchBounds& bounds = {});

/* the one-generator linking form Lambda/(order) with beta(1,1) = value/order */
LinkingForm cyclic_linking(const Laurent& order, const Laurent& value,
                           UnitMonomial eps = eps_plus());

/* all isometry classes of the cyclic form (order, value): multipliers p,
 * invertible mod order, with p conj(p) value = value mod order.  Enumerated
 * over the bounded alphabet in complexity order; the returned list keeps the
 * first representative of each class found. */
std::vector<Laurent> aut_cyclic_blanchfield(const Laurent& order, const Laurent& value,
                                            const SearchBounds& bounds = {});

/* invertibility of p in Lambda/(order): unit monomials short-circuit, then
 * an integral Bezout identity is attempted, then a bounded witness search */
bool invertible_mod(const Laurent& p, const Laurent& order, const SearchBounds& bounds = {});

} // namespace forms
