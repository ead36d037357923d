#include <catch2/catch_amalgamated.hpp>

#include "forms/errors.hpp"
#include "forms/hermitian.hpp"

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

TEST_CASE("constructor enforces the symmetry law") {
    CHECK_NOTHROW(HermitianForm(LMat(1, 1, {d}), eps_plus()));
    CHECK_THROWS_AS(HermitianForm(LMat(1, 1, {Laurent::t(1)}), eps_plus()),
                    invariant_violation);
    CHECK_THROWS_AS(HermitianForm(LMat(1, 2, {one, one}), eps_plus()),
                    dimension_mismatch);
    // eps = -t: diagonal entries must satisfy a = -t * abar
    const Laurent a = Laurent::t(1) - Laurent(1);  // t - 1 = -t(t^-1 - 1)
    CHECK_NOTHROW(HermitianForm(LMat(1, 1, {a}), eps_minus_t()));
    CHECK_THROWS_AS(HermitianForm(LMat(1, 1, {one}), eps_minus_t()),
                    invariant_violation);
}

TEST_CASE("pairing is sesquilinear with the right symmetry") {
    const HermitianForm f(LMat(2, 2, {d, one - Laurent::t(-1),
                                      one - Laurent::t(1), d}),
                          eps_plus());
    const LMat x = col({1, 0}), y = col({0, 1});
    CHECK(pair(f, x, y) == one - Laurent::t(-1));
    CHECK(pair(f, y, x) == involute(pair(f, x, y)));
    CHECK(pair(f, x, x) == d);
    // scaling: lambda(px, y) = p lambda(x, y), lambda(x, py) = pbar lambda(x, y)
    const Laurent p = Laurent(2) + Laurent::t(3);
    CHECK(pair(f, x.scaled(p), y) == p * pair(f, x, y));
    CHECK(pair(f, x, y.scaled(p)) == involute(p) * pair(f, x, y));
}

TEST_CASE("degeneracy and singularity are distinct notions") {
    const HermitianForm hy = std_hyperbolic(1, eps_plus());
    CHECK(hy.gram() == LMat(2, 2, {Laurent(), one, one, Laurent()}));
    CHECK(is_nondegenerate(hy));
    CHECK(is_nonsingular(hy));
    const HermitianForm df(LMat(1, 1, {d}), eps_plus());
    CHECK(is_nondegenerate(df));
    CHECK(!is_nonsingular(df));
    const HermitianForm zf(LMat(1, 1, {Laurent()}), eps_plus());
    CHECK(!is_nondegenerate(zf));
}

TEST_CASE("isometry verification checks determinant and the gram identity") {
    const HermitianForm hy = std_hyperbolic(1, eps_plus());
    CHECK(verify_isometry(hy, hy, LMat::identity(2)));
    CHECK(verify_isometry(hy, hy, LMat(2, 2, {Laurent(), one, one, Laurent()})));
    // scaling the whole basis by t preserves the hyperbolic pairing
    CHECK(verify_isometry(hy, hy, LMat::identity(2).scaled(Laurent::t(1))));
    // scaling only one basis vector does not
    CHECK(!verify_isometry(hy, hy, LMat(2, 2, {Laurent::t(1), Laurent(),
                                               Laurent(), one})));
    CHECK(!verify_isometry(hy, hy, LMat(2, 2, {one, one, Laurent(), one})));
    CHECK(!verify_isometry(hy, hy, LMat(2, 2, {Laurent(2), Laurent(), Laurent(), one})));
    const HermitianForm df(LMat(1, 1, {d}), eps_plus());
    CHECK_THROWS_AS(verify_isometry(df, hy, LMat(2, 1)), dimension_mismatch);
    CHECK_THROWS_AS(verify_isometry(df, HermitianForm(LMat(1, 1, {Laurent::t(1) - one}),
                                                      eps_minus_t()),
                                    LMat::identity(1)),
                    epsilon_mismatch);
}

TEST_CASE("direct sums and specialization at t = 1") {
    const HermitianForm df(LMat(1, 1, {d}), eps_plus());
    const HermitianForm s = direct_sum(df, std_hyperbolic(1, eps_plus()));
    CHECK(s.rank() == 3);
    CHECK(s.gram()(0, 0) == d);
    CHECK(s.gram()(1, 2) == one);
    CHECK(s.gram()(0, 1).is_zero());
    const ZMat z = specialize_at_1(s);
    CHECK(z(0, 0) == 0);  // d vanishes at 1
    CHECK(z(1, 2) == 1);
    CHECK(z == z.transpose());
}

TEST_CASE("orthogonal complements are saturated") {
    const HermitianForm f = direct_sum(HermitianForm(LMat(1, 1, {d}), eps_plus()),
                                       HermitianForm(LMat(1, 1, {d}), eps_plus()));
    const LMat p = perp(f, col({1, 0}));
    REQUIRE(p.cols() == 1);
    CHECK(spans_equal(p, col({0, 1})));
    // in a hyperbolic plane e1 is its own complement
    const HermitianForm hy = std_hyperbolic(1, eps_plus());
    CHECK(spans_equal(perp(hy, col({1, 0})), col({1, 0})));
}

TEST_CASE("span comparison ignores basis choice but sees index") {
    const LMat a(2, 2, {one, Laurent(), one, one});
    CHECK(spans_equal(a, LMat::identity(2)));
    CHECK(spans_equal(col({1, 1}).scaled(Laurent::t(2)), col({1, 1})));
    CHECK(!spans_equal(col({2, 0}), col({1, 0})));
    CHECK(!spans_equal(col({1, 0}), col({0, 1})));
}

TEST_CASE("candidate alphabet is ordered by complexity") {
    const auto al = candidate_alphabet(1, 1);
    REQUIRE(al.size() >= 7);
    CHECK(al[0].is_zero());
    CHECK(al[1] == Laurent(-1));
    CHECK(al[2] == one);
    CHECK(al[3] == -Laurent::t(-1));
    CHECK(al[4] == Laurent::t(-1));
    CHECK(al[5] == -Laurent::t(1));
    CHECK(al[6] == Laurent::t(1));
    // every polynomial respects the bounds
    const auto big = candidate_alphabet(2, 1);
    for (const auto& q : big) {
        if (q.is_zero()) continue;
        CHECK(q.lo() >= -2);
        CHECK(q.hi() <= 2);
    }
}

TEST_CASE("brute isometry search finds witnesses and respects caps") {
    const HermitianForm df(LMat(1, 1, {d}), eps_plus());
    const auto w = brute_isometry_search(df, df, SearchBounds{1, 1, 1000});
    REQUIRE(w.has_value());
    CHECK(verify_isometry(df, df, *w));

    const HermitianForm unitf(LMat(1, 1, {one}), eps_plus());
    CHECK(!brute_isometry_search(unitf, df, SearchBounds{1, 1, 1000}).has_value());

    const HermitianForm hy = std_hyperbolic(1, eps_plus());
    CHECK_THROWS_AS(brute_isometry_search(hy, hy, SearchBounds{1, 1, 5}),
                    resource_bound_exceeded);
}

TEST_CASE("hyperbolic planes transported by a unit change of basis") {
    // conjugating the standard plane by an invertible matrix and searching
    // the conjugated Lagrangian back recovers a hyperbolic structure
    const LMat u(2, 2, {one, Laurent(), Laurent::t(1), one});
    const HermitianForm hy = std_hyperbolic(1, eps_plus());
    const LMat g = u.transpose() * hy.gram() * involute(u);
    const HermitianForm f(g, eps_plus());
    CHECK(verify_isometry(f, hy, u));
}
