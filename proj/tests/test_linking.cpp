#include <catch2/catch_amalgamated.hpp>

#include "forms/errors.hpp"
#include "forms/linking.hpp"

using namespace forms;

namespace {

const Laurent one(1);
const Laurent d = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
const Laurent delta3 = Laurent::t(2) - Laurent::t(1) + one;  // t^2 - t + 1

LMat col(std::initializer_list<int> xs) {
    LMat v(xs.size(), 1);
    size_t i = 0;
    for (int x : xs) v(i++, 0) = Laurent(x);
    return v;
}

}  // namespace

TEST_CASE("cokernel membership over the fraction field") {
    const LMat p(1, 1, {d});
    CHECK(coker_eq(p, LMat(1, 1, {d}), LMat(1, 1)));
    CHECK(coker_eq(p, LMat(1, 1, {one + d}), LMat(1, 1, {one})));
    CHECK(!coker_eq(p, LMat(1, 1, {one}), LMat(1, 1)));
    CHECK(!coker_eq(p, LMat(1, 1, {Laurent(2)}), LMat(1, 1)));
}

TEST_CASE("boundary of a one generator form") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    const LinkingForm b = boundary_linking(f);
    CHECK(b.gens() == 1);
    CHECK(b.pres() == LMat(1, 1, {d}));  // d is self conjugate
    CHECK(associates(b.order(), d));
    CHECK(!b.is_part());

    const LMat g = col({1});
    const Coset v = b.pair_classes(g, g);
    CHECK(coset_eq(v, Coset(RatFunc(one, d))));
    // symmetry: beta(y,x) = conj(eps) conj(beta(x,y)); here eps = 1 and 1/d is self conjugate
    CHECK(coset_eq(b.pair_classes(g, g), b.pair_classes(g, g).involute()));
    // d * g dies in the cokernel
    CHECK(b.class_is_zero(g.scaled(d)));
    CHECK(!b.class_is_zero(g));
    CHECK(b.classes_equal(g.scaled(one + d), g));

    // orientation reversal negates the pairing
    const LinkingForm bm = boundary_linking(f, -1);
    CHECK(coset_eq(bm.pair_classes(g, g), -v));

    CHECK_THROWS_AS(boundary_linking(HermitianForm(LMat(1, 1), eps_plus())),
                    degenerate_form);
}

TEST_CASE("boundary of an isometry is contravariant and natural") {
    const LMat f(2, 2, {one, Laurent::t(1), Laurent(), one});
    const LMat bf = boundary_of_isometry(f);
    // (conj(f)^T)^{-1} computed by hand
    CHECK(bf == LMat(2, 2, {one, Laurent(), -Laurent::t(-1), one}));
    CHECK(boundary_of_isometry(LMat::identity(3)) == LMat::identity(3));
    const LMat g(2, 2, {one, Laurent(), -Laurent::t(-2), one});
    // boundary of a composite is the composite of boundaries
    CHECK(boundary_of_isometry(g * f) == boundary_of_isometry(g) * boundary_of_isometry(f));
    CHECK_THROWS_AS(boundary_of_isometry(LMat(1, 1, {Laurent(2)})), not_an_isometry);
}

TEST_CASE("linking isometries are verified on generators") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    const LinkingForm b = boundary_linking(f);
    CHECK(verify_linking_isometry(b, b, LMat::identity(1)));
    CHECK(verify_linking_isometry(b, b, LMat(1, 1, {-Laurent::t(3)})));
    // multiplication by 1 + d is the identity on the cokernel
    CHECK(verify_linking_isometry(b, b, LMat(1, 1, {one + d})));
    // 2 is not invertible mod d and scales the pairing by 4
    CHECK(!verify_linking_isometry(b, b, LMat(1, 1, {Laurent(2)})));

    // an isometry of forms restricts to the boundary
    const HermitianForm f2 = direct_sum(f, f);
    const LMat u(2, 2, {one, Laurent(), one - Laurent::t(1), one});
    const LMat g = u.transpose() * f2.gram() * involute(u);
    const HermitianForm f3(g, eps_plus());
    REQUIRE(verify_isometry(f3, f2, u));
    CHECK(verify_linking_isometry(boundary_linking(f3), boundary_linking(f2),
                                  boundary_of_isometry(u)));
}

TEST_CASE("fibred module with the symplectic pairing") {
    const LinkingForm l = fibred_blanchfield(1);
    CHECK(l.gens() == 2);
    // the annihilator comes from the determinant of the presentation
    CHECK(associates(l.order(), (Laurent::t(1) - one) * (Laurent::t(1) - one)));
    const LMat e1 = col({1, 0}), e2 = col({0, 1});
    const RatFunc w(one, Laurent::t(-1) - one);
    CHECK(coset_eq(l.pair_classes(e1, e2), Coset(w)));
    CHECK(coset_eq(l.pair_classes(e2, e1), Coset(-w)));
    CHECK(l.pair_classes(e1, e1).is_integral());

    // symplectic integer matrices induce isometries, the transvection included
    CHECK(verify_linking_isometry(l, l, LMat(2, 2, {one, one, Laurent(), one})));
    CHECK(verify_linking_isometry(l, l, LMat(2, 2, {Laurent(), one, -one, Laurent()})));
    // determinant -1 flips the pairing sign
    CHECK(!verify_linking_isometry(l, l, LMat(2, 2, {Laurent(), one, one, Laurent()})));

    // genus two: the pairing couples generator i with generator g + i
    const LinkingForm l2 = fibred_blanchfield(2);
    CHECK(l2.gens() == 4);
    CHECK(l2.pair_classes(col({1, 0, 0, 0}), col({0, 1, 0, 0})).is_integral());
    CHECK(coset_eq(l2.pair_classes(col({1, 0, 0, 0}), col({0, 0, 1, 0})), Coset(w)));
}

TEST_CASE("coprime splitting separates the primary parts") {
    // orders d and t^2-t+1 admit the identity d + t^-1 (t^2-t+1) = 1
    const LMat p(2, 2, {d, Laurent(), Laurent(), delta3});
    QMat v(2, 2);
    v(0, 0) = RatFunc(one, d);
    v(1, 1) = RatFunc(Laurent::t(1), delta3);
    const LinkingForm l(p, v, eps_plus());
    auto [l0, l1] = split_coprime(l, d, delta3);
    CHECK(l0.is_part());
    CHECK(l1.is_part());
    CHECK(associates(l0.order(), d));
    CHECK(associates(l1.order(), delta3));

    // the projected generators pair inside their own part only
    const LMat e1 = col({1, 0}), e2 = col({0, 1});
    CHECK(coset_eq(l0.pair_classes(e1, e1), l.pair_classes(e1, e1)));
    CHECK(l0.class_is_zero(e2));
    CHECK(l1.class_is_zero(e1));
    CHECK(coset_eq(l1.pair_classes(e2, e2), l.pair_classes(e2, e2)));

    // parts are not full modules and cannot be fed back in
    CHECK_THROWS_AS(split_coprime(l0, d, delta3), invariant_violation);
    CHECK_THROWS_AS(verify_linking_isometry(l0, l0, LMat::identity(2)),
                    invariant_violation);
    CHECK_THROWS_AS(split_coprime(l, d, d), not_coprime);
}

TEST_CASE("cyclic presentations are recovered from parts") {
    const LinkingForm c = cyclic_linking(d, one);
    const auto cp = cyclic_presentation(c);
    REQUIRE(cp.has_value());
    CHECK(associates(cp->order, d));
    CHECK(coset_eq(c.pair_classes(cp->generator, cp->generator),
                   Coset(RatFunc(cp->value, cp->order))));

    // a two generator module that is not cyclic within small bounds
    const LMat p(2, 2, {d, Laurent(), Laurent(), d});
    QMat v(2, 2);
    v(0, 0) = RatFunc(one, d);
    v(1, 1) = RatFunc(one, d);
    const LinkingForm nc(p, v, eps_plus());
    CHECK(!cyclic_presentation(nc, SearchBounds{1, 1, 100000}).has_value());
}

TEST_CASE("multiplier invertibility modulo the order") {
    CHECK(invertible_mod(Laurent::t(5), d));
    CHECK(invertible_mod(one + d, d));
    CHECK(!invertible_mod(Laurent(2), d));
    CHECK(!invertible_mod(Laurent(), d));
    // t - 1 has pp' = 1 mod the trefoil polynomial
    CHECK(invertible_mod(Laurent::t(1) - one, delta3));
}

TEST_CASE("isometry classes of the cyclic trefoil module") {
    const auto cls = aut_cyclic_blanchfield(delta3, Laurent::t(1), SearchBounds{1, 1, 1000000});
    REQUIRE(cls.size() == 6);
    // the six classes are the images of the signed powers of t
    const std::vector<Laurent> expect = {
        Laurent(-1), one, -Laurent::t(-1), Laurent::t(-1), -Laurent::t(1), Laurent::t(1)};
    CHECK(cls == expect);
    // t - 1 satisfies the congruence but lands in an existing class
    const LinkingForm c = cyclic_linking(delta3, Laurent::t(1));
    CHECK(verify_linking_isometry(c, c, LMat(1, 1, {Laurent::t(1) - one})));
}

TEST_CASE("pairing well definedness is enforced at construction") {
    QMat v(1, 1);
    v(0, 0) = RatFunc(one, d);
    CHECK_NOTHROW(LinkingForm(LMat(1, 1, {d}), v, eps_plus()));
    // a pairing denominator foreign to the presentation is rejected
    QMat w(1, 1);
    w(0, 0) = RatFunc(one, delta3);
    CHECK_THROWS_AS(LinkingForm(LMat(1, 1, {d}), w, eps_plus()), invariant_violation);
    // an asymmetric pairing is rejected even when well defined
    QMat w2(1, 1);
    w2(0, 0) = RatFunc(one, Laurent::t(1) - one);
    CHECK_THROWS_AS(LinkingForm(LMat(1, 1, {d}), w2, eps_plus()), invariant_violation);
    // degenerate presentations are rejected
    CHECK_THROWS_AS(LinkingForm(LMat(1, 1), v, eps_plus()), degenerate_presentation);
}
