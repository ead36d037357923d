#include <catch2/catch_amalgamated.hpp>

#include "forms/errors.hpp"
#include "forms/laurent.hpp"
#include "forms/ratfunc.hpp"

using namespace forms;

namespace {
const Laurent one(1);
const Laurent d = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
}  // namespace

TEST_CASE("field arithmetic and normalization") {
    const RatFunc a(one, d);
    const RatFunc b(Laurent::t(1), d);
    CHECK(a + b == RatFunc(one + Laurent::t(1), d));
    CHECK(a * RatFunc(d) == RatFunc(one));
    CHECK((a - a).is_zero());
    CHECK(a / b == RatFunc(one, Laurent::t(1)));
    CHECK_THROWS_AS(a / RatFunc(), division_by_zero);
    CHECK_THROWS_AS(RatFunc(one, Laurent()), division_by_zero);
    // common factors cancel: (1+t)/(d(1+t)) == 1/d
    const Laurent f = one + Laurent::t(1);
    CHECK(RatFunc(f, d * f) == a);
}

TEST_CASE("membership in the group ring") {
    CHECK(RatFunc(d).in_lambda());
    CHECK(RatFunc(d * d, d).in_lambda());
    CHECK(!RatFunc(one, d).in_lambda());
    CHECK(RatFunc(Laurent::t(3), Laurent::t(-2)).in_lambda());
    CHECK(RatFunc(d * d, d).as_laurent() == d);
    CHECK_THROWS_AS(RatFunc(one, d).as_laurent(), value_not_in_lambda);
}

TEST_CASE("involution extends to the fraction field") {
    const RatFunc a(one + Laurent::t(1), d);
    CHECK(a.involute() == RatFunc(involute(one + Laurent::t(1)), involute(d)));
    CHECK(involute(a * a) == involute(a) * involute(a));
    CHECK(involute(involute(a)) == a);
}

TEST_CASE("cosets modulo the group ring") {
    const Coset x(RatFunc(one, d));
    CHECK(!x.is_integral());
    CHECK(Coset(RatFunc(d)).is_integral());
    CHECK(coset_eq(x, Coset(RatFunc(one + d * d, d))));
    CHECK(!coset_eq(x, Coset(RatFunc(Laurent::t(1), d))));
    // representatives are reduced: integral part stripped
    CHECK(coset_eq(Coset(x.rep() + RatFunc(Laurent(42))), x));
    const Coset y = x.involute();
    CHECK(coset_eq(y, Coset(RatFunc(one, involute(d)))));
}

TEST_CASE("fractional part splits off the integral summand") {
    const RatFunc a = RatFunc(one, d) + RatFunc(Laurent::t(2) + Laurent(5));
    const RatFunc fp = a.fractional_part();
    CHECK((a - fp).in_lambda());
    CHECK(!fp.in_lambda());
    CHECK(RatFunc(d).fractional_part().is_zero());
}
