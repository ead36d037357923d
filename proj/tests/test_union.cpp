#include <catch2/catch_amalgamated.hpp>

#include "forms/errors.hpp"
#include "forms/form_union.hpp"
#include "forms/linking.hpp"
#include "forms/quadratic.hpp"

using namespace forms;

namespace {

const Laurent one(1);
const Laurent d = Laurent(2) - Laurent::t(1) - Laurent::t(-1);

LMat col(std::initializer_list<int> xs) {
    LMat v(xs.size(), 1);
    size_t i = 0;
    for (int x : xs) v(i++, 0) = Laurent(x);
    return v;
}

}  // namespace

TEST_CASE("gluing two one generator pieces along the identity") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    const UnionResult u = form_union(f, f, LMat::identity(1));
    CHECK(u.form.eps() == eps_plus());
    CHECK(u.form.gram() == LMat(2, 2, {Laurent(), -one, -one, -d}));
    CHECK(is_nonsingular(u.form));
    CHECK(u.embed0 == LMat(2, 1, {d, -one}));
    CHECK(u.embed1 == LMat(2, 1, {Laurent(), one}));

    // the two pieces sit inside the union with the expected induced pairings
    CHECK(u.embed0.transpose() * u.form.gram() * involute(u.embed0)
          == LMat(1, 1, {d}));
    CHECK(u.embed1.transpose() * u.form.gram() * involute(u.embed1)
          == LMat(1, 1, {-d}));
    // and the two pieces are orthogonal inside the union
    const LMat cross = u.embed0.transpose() * u.form.gram() * involute(u.embed1);
    CHECK(cross.is_zero());
}

TEST_CASE("the graph of the gluing is a lagrangian") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    const UnionResult u = form_union(f, f, LMat::identity(1));
    const LMat gamma = graph_lagrangian(u);
    CHECK(gamma == LMat(2, 1, {one, Laurent()}));
    CHECK((gamma.transpose() * u.form.gram() * involute(gamma)).is_zero());

    const auto hb = hyperbolize(u.form, gamma);
    CHECK(hb.form.gram() == std_hyperbolic(1, eps_plus()).gram());
    CHECK(verify_isometry(hb.form, u.form, hb.basis));
}

TEST_CASE("gluing along the boundary of an ambient isometry") {
    const HermitianForm f0 = direct_sum(HermitianForm(LMat(1, 1, {d}), eps_plus()),
                                        HermitianForm(LMat(1, 1, {d}), eps_plus()));
    const LMat v(2, 2, {one, one - Laurent::t(1), Laurent(), one});
    const HermitianForm g(v.transpose() * f0.gram() * involute(v), eps_plus());
    REQUIRE(verify_isometry(g, f0, v));
    const LMat h = boundary_of_isometry(v);
    REQUIRE(verify_linking_isometry(boundary_linking(g), boundary_linking(f0), h));

    const UnionResult u = form_union(g, f0, h);
    CHECK(u.form.rank() == 4);
    CHECK(is_nonsingular(u.form));
    CHECK(u.embed0.transpose() * u.form.gram() * involute(u.embed0) == g.gram());
    CHECK(u.embed1.transpose() * u.form.gram() * involute(u.embed1) == -f0.gram());

    const LMat gamma = graph_lagrangian(u);
    CHECK((gamma.transpose() * u.form.gram() * involute(gamma)).is_zero());
    const auto hb = hyperbolize(u.form, gamma);
    CHECK(hb.form.gram() == std_hyperbolic(2, eps_plus()).gram());
    CHECK(verify_isometry(hb.form, u.form, hb.basis));
}

TEST_CASE("gluings that fail to match the boundary pairings are rejected") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    // 2 is not invertible on the boundary, so the precheck fails
    CHECK_THROWS_AS(form_union(f, f, LMat(1, 1, {Laurent(2)})), not_an_isometry);
    // skipping the precheck moves the failure to the integrality certificate
    CHECK_THROWS_AS(form_union(f, f, LMat(1, 1, {Laurent(2)}), false),
                    value_not_in_lambda);
    // t is a unit and an honest boundary isometry, so both paths accept it
    CHECK_NOTHROW(form_union(f, f, LMat(1, 1, {Laurent::t(1)})));
}

TEST_CASE("union input validation") {
    const HermitianForm f(LMat(1, 1, {d}), eps_plus());
    const HermitianForm fm(LMat(1, 1, {Laurent::t(1) - one}), eps_minus_t());
    CHECK_THROWS_AS(form_union(f, fm, LMat::identity(1)), epsilon_mismatch);
    CHECK_THROWS_AS(form_union(fm, fm, LMat::identity(1)), epsilon_mismatch);
    CHECK_THROWS_AS(form_union(f, f, LMat::identity(2)), dimension_mismatch);
    const HermitianForm z(LMat(1, 1), eps_plus());
    CHECK_THROWS_AS(form_union(z, z, LMat::identity(1)), degenerate_form);

    // lagrangian extraction rejects unions whose pieces had different ranks
    const UnionResult u = form_union(f, f, LMat::identity(1));
    UnionResult broken = u;
    broken.embed0 = LMat(2, 2);
    CHECK_THROWS_AS(graph_lagrangian(broken), not_a_lagrangian);
}
