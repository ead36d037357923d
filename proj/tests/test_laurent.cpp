#include <catch2/catch_amalgamated.hpp>

#include "forms/errors.hpp"
#include "forms/laurent.hpp"

using namespace forms;

TEST_CASE("construction and coefficient access") {
    const Laurent p = Laurent::term(Int(2), -1) + Laurent::t(1) - Laurent(3);
    CHECK(p.coeff(-1) == 2);
    CHECK(p.coeff(0) == -3);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.lo() == -1);
    CHECK(p.hi() == 1);
    CHECK(Laurent().is_zero());
    CHECK_THROWS_AS(Laurent().lo(), zero_input);
}

TEST_CASE("ring arithmetic") {
    const Laurent a = Laurent(1) + Laurent::t(1);          // 1 + t
    const Laurent b = Laurent(1) - Laurent::t(-1);         // 1 - t^-1
    CHECK(a * b == Laurent::t(1) - Laurent::t(-1));        // t - t^-1
    CHECK(a * Laurent() == Laurent());
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2) == Laurent::t(2) + Laurent::t(3));
    CHECK(-a == Laurent(-1) - Laurent::t(1));
}

TEST_CASE("involution is the ring map t to t^-1") {
    const Laurent p = Laurent(2) - Laurent::t(1) + Laurent::term(Int(5), 3);
    CHECK(involute(p) == Laurent(2) - Laurent::t(-1) + Laurent::term(Int(5), -3));
    CHECK(involute(involute(p)) == p);
    const Laurent q = Laurent::t(-2) + Laurent(7);
    CHECK(involute(p * q) == involute(p) * involute(q));
    CHECK(involute(p + q) == involute(p) + involute(q));
}

TEST_CASE("augmentation and content") {
    const Laurent p = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
    CHECK(augment(p) == 0);
    CHECK(p.content() == 1);
    CHECK((p * Laurent(6)).content() == 6);
    CHECK(augment(Laurent(5) * Laurent::t(3)) == 5);
}

TEST_CASE("units are the signed monomials") {
    const auto u = is_unit(-Laurent::t(2));
    REQUIRE(u.has_value());
    CHECK(u->sign == -1);
    CHECK(u->exp == 2);
    CHECK(u->inverse().exp == -2);
    CHECK(u->to_laurent() == -Laurent::t(2));
    CHECK(!is_unit(Laurent(2)).has_value());
    CHECK(!is_unit(Laurent(1) + Laurent::t(1)).has_value());
    CHECK(!is_unit(Laurent()).has_value());
    const UnitMonomial v{1, -1};
    CHECK((*u * v).exp == 1);
    CHECK(u->involute().exp == -2);
}

TEST_CASE("exact division") {
    const Laurent d = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
    const Laurent p = Laurent(3) + Laurent::t(2);
    const auto q = divide_exact(p * d, d);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    CHECK(!divide_exact(Laurent(3), d).has_value());
    const auto z = divide_exact(Laurent(), d);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
    CHECK_THROWS_AS(divide_exact(p, Laurent()), division_by_zero);
    // t - 1 = -t * (t^-1 - 1)
    const auto m = divide_exact(Laurent::t(1) - Laurent(1),
                                Laurent::t(-1) - Laurent(1));
    REQUIRE(m.has_value());
    CHECK(*m == -Laurent::t(1));
}

TEST_CASE("canonical associates") {
    const Laurent p = -Laurent::t(3) + Laurent::t(2);  // t^2 - t^3
    const Laurent c = canonical_associate(p);
    CHECK(c == Laurent::t(1) - Laurent(1));
    CHECK(c.lo() == 0);
    CHECK(c.coeffs().rbegin()->second > 0);
    CHECK(associates(p, c));
    CHECK(associates(p, -p.shifted(4)));
    CHECK(!associates(p, p + Laurent(1)));
    CHECK_THROWS_AS(canonical_associate(Laurent()), zero_input);
}

TEST_CASE("printing and parsing round trip") {
    const Laurent p = Laurent(2) - Laurent::t(1) - Laurent::t(-1);
    CHECK(parse_laurent(to_string(p)) == p);
    CHECK(parse_laurent("t^2-t+1") == Laurent::t(2) - Laurent::t(1) + Laurent(1));
    CHECK(parse_laurent("2-t-t^-1") == p);
    CHECK(parse_laurent("-3t^-2") == Laurent::term(Int(-3), -2));
    CHECK(parse_laurent("0") == Laurent());
    CHECK(parse_laurent(" 1 + t ") == Laurent(1) + Laurent::t(1));
    CHECK_THROWS_AS(parse_laurent("t^"), parse_error);
    CHECK_THROWS_AS(parse_laurent(""), parse_error);
}
