#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdes/designs.hpp"

using symdes::DesignParams;
using symdes::Int;
using symdes::Rat;
using symdes::RatMatrix;
using symdes::Status;

TEST_CASE("validate_params accepts admissible triples") {
    for (DesignParams p : {DesignParams{7, 3, 1}, DesignParams{7, 4, 2},
                           DesignParams{11, 5, 2}, DesignParams{21, 5, 1},
                           DesignParams{31, 6, 1}, DesignParams{45, 12, 3}}) {
        CAPTURE(p.v);
        CAPTURE(p.k);
        CHECK(symdes::validate_params(p).status == Status::pass);
    }
}

TEST_CASE("validate_params rejects broken triples") {
    CHECK(symdes::validate_params({8, 4, 1}).status == Status::fail);   // counting identity
    CHECK(symdes::validate_params({7, 3, 0}).status == Status::fail);   // lambda too small
    CHECK(symdes::validate_params({7, 6, 5}).status == Status::fail);   // k = v - 1
    CHECK(symdes::validate_params({7, 3, 3}).status == Status::fail);   // lambda = k
    CHECK(symdes::validate_params({13, 5, 2}).status == Status::fail);  // 2*12 != 5*4
}

TEST_CASE("plane_params expands the order") {
    DesignParams p = symdes::plane_params(5);
    CHECK(p.v == 31);
    CHECK(p.k == 6);
    CHECK(p.lambda == 1);
    CHECK(p.order() == 5);
    CHECK(symdes::validate_params(p).status == Status::pass);
    CHECK_THROWS_AS(symdes::plane_params(1), symdes::error);
}

TEST_CASE("pg2 produces exact incidence matrices for small primes") {
    for (Int q : {2, 3, 5, 7}) {
        RatMatrix a = symdes::pg2(q);
        DesignParams p = symdes::plane_params(q);
        CAPTURE(q);
        REQUIRE(a.rows() == p.v);
        REQUIRE(a.cols() == p.v);
        CHECK(symdes::is_zero_one(a));
        CHECK(symdes::incidence_check(a, p).status == Status::pass);
    }
}

TEST_CASE("pg2 rejects non-prime field orders") {
    CHECK_THROWS_AS(symdes::pg2(4), symdes::unsupported_error);
    CHECK_THROWS_AS(symdes::pg2(6), symdes::unsupported_error);
    CHECK_THROWS_AS(symdes::pg2(9), symdes::unsupported_error);
    CHECK_THROWS_AS(symdes::pg2(1), symdes::unsupported_error);
}

TEST_CASE("is_zero_one spots fractional and out-of-range entries") {
    RatMatrix m(2, 2);
    m << Rat(0), Rat(1), Rat(1), Rat(0);
    CHECK(symdes::is_zero_one(m));
    m(0, 0) = Rat(1, 2);
    CHECK_FALSE(symdes::is_zero_one(m));
    m(0, 0) = Rat(2);
    CHECK_FALSE(symdes::is_zero_one(m));
    m(0, 0) = Rat(-1);
    CHECK_FALSE(symdes::is_zero_one(m));
}

TEST_CASE("incidence_check fails on a perturbed matrix") {
    RatMatrix a = symdes::pg2(2);
    DesignParams p = symdes::plane_params(2);
    a(0, 0) = a(0, 0) == Rat(0) ? Rat(1) : Rat(0);
    CHECK(symdes::incidence_check(a, p).status == Status::fail);
}

TEST_CASE("incidence_check requires both Gram products") {
    // Row sums correct but column structure broken: duplicate a row.
    RatMatrix a = symdes::pg2(2);
    DesignParams p = symdes::plane_params(2);
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(1, j) = a(0, j);
    CHECK(symdes::incidence_check(a, p).status == Status::fail);
}

TEST_CASE("classical bordered identity holds for plane incidence matrices") {
    for (Int q : {2, 3, 5}) {
        RatMatrix a = symdes::pg2(q);
        DesignParams p = symdes::plane_params(q);
        CAPTURE(q);
        CHECK(symdes::ryser_classical_border(a, p).status == Status::pass);
    }
}

TEST_CASE("classical bordered identity fails off-design") {
    RatMatrix a = symdes::pg2(2);
    DesignParams p = symdes::plane_params(2);
    a(3, 4) = a(3, 4) == Rat(0) ? Rat(1) : Rat(0);
    CHECK(symdes::ryser_classical_border(a, p).status == Status::fail);
}
