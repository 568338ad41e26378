#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "symdes/border.hpp"
#include "symdes/designs.hpp"
#include "symdes/elimination.hpp"

using symdes::EliminationTrace;
using symdes::Int;
using symdes::Rat;
using symdes::RatMatrix;
using symdes::Status;

namespace {

// Rows are successive cyclic shifts of the first row; with a difference-set
// pattern the Gram matrix is exactly alpha*I + beta*J.
RatMatrix circulant(std::initializer_list<int> first, Int rows) {
    const Int cols = static_cast<Int>(first.size());
    RatMatrix m = RatMatrix::Constant(rows, cols, Rat(0));
    std::vector<int> row(first);
    for (Int i = 0; i < rows; ++i)
        for (Int j = 0; j < cols; ++j) m(i, (j + i) % cols) = Rat(row[j]);
    return m;
}

// [I_w | 1] or [I_w | 1 | 0]: Gram matrix I + J, so alpha = beta = 1.
RatMatrix eye_ones(Int w, int d) {
    RatMatrix m = RatMatrix::Constant(w, w + d, Rat(0));
    for (Int i = 0; i < w; ++i) {
        m(i, i) = Rat(1);
        m(i, w) = Rat(1);
    }
    return m;
}

void check_witness(const EliminationTrace& t) {
    REQUIRE(static_cast<Int>(t.kept_values.size()) == t.w + t.d);
    Rat lhs = t.kept_values[t.w] * t.kept_values[t.w];
    if (t.case_id >= 5) lhs *= t.alpha;
    if (t.d == 2) lhs += t.kept_values[t.w + 1] * t.kept_values[t.w + 1];
    CHECK(lhs == t.beta * t.z_value * t.z_value);
    bool tail_nonzero = false;
    for (int j = 0; j < t.d; ++j)
        if (!t.kept_values[t.w + j].is_zero()) tail_nonzero = true;
    CHECK(tail_nonzero);
    CHECK(symdes::replay(t).status == Status::pass);
}

}  // namespace

TEST_CASE("identity-plus-ones matrices cover the four-square cases") {
    SUBCASE("w = 0 mod 4, one extra column") {
        EliminationTrace t = symdes::eliminate(eye_ones(4, 1), Rat(1), Rat(1), 1);
        CHECK(t.case_id == 1);
        CHECK(t.bracketing == symdes::Bracketing::four_square);
        CHECK(t.kept_symbol == 'f');
        check_witness(t);
    }
    SUBCASE("w = 0 mod 4, two extra columns") {
        EliminationTrace t = symdes::eliminate(eye_ones(4, 2), Rat(1), Rat(1), 2);
        CHECK(t.case_id == 2);
        check_witness(t);
    }
    SUBCASE("w = 3 mod 4, one extra column") {
        EliminationTrace t = symdes::eliminate(eye_ones(3, 1), Rat(1), Rat(1), 1);
        CHECK(t.case_id == 7);
        CHECK(t.kept_symbol == 'y');
        check_witness(t);
    }
    SUBCASE("w = 3 mod 4, two extra columns") {
        EliminationTrace t = symdes::eliminate(eye_ones(3, 2), Rat(1), Rat(1), 2);
        CHECK(t.case_id == 8);
        check_witness(t);
    }
}

TEST_CASE("difference-set circulants cover the two-square cases") {
    SUBCASE("w = 2 mod 4, one extra column") {
        EliminationTrace t =
            symdes::eliminate(circulant({1, 1, 0, 1, 0, 0, 0}, 6), Rat(2), Rat(1), 1);
        CHECK(t.case_id == 3);
        CHECK(t.bracketing == symdes::Bracketing::two_square);
        CHECK(t.final_relation == "f7^2 = 1*z^2");
        check_witness(t);
    }
    SUBCASE("w = 2 mod 4, two extra columns") {
        EliminationTrace t = symdes::eliminate(circulant({1, 1, 0, 0}, 2), Rat(1), Rat(1), 2);
        CHECK(t.case_id == 4);
        CHECK(t.final_relation == "f3^2 + f4^2 = 1*z^2");
        check_witness(t);
    }
    SUBCASE("w = 1 mod 4, one extra column") {
        EliminationTrace t =
            symdes::eliminate(circulant({1, 1, 1, 1, 1, 0}, 5), Rat(1), Rat(4), 1);
        CHECK(t.case_id == 5);
        CHECK(t.kept_symbol == 'y');
        CHECK(t.eform_symbol == 'x');
        CHECK(t.final_relation == "1*y6^2 = 4*z^2");
        check_witness(t);
    }
    SUBCASE("w = 1 mod 4, two extra columns") {
        EliminationTrace t =
            symdes::eliminate(circulant({1, 1, 0, 1, 0, 0, 0}, 5), Rat(2), Rat(1), 2);
        CHECK(t.case_id == 6);
        CHECK(t.final_relation == "2*y6^2 + y7^2 = 1*z^2");
        check_witness(t);
    }
}

TEST_CASE("a constructed bordered matrix eliminates to its square relation") {
    auto spec = symdes::construct_search({7, 3, 1}, 8, 1, 1, 24);
    REQUIRE(spec.has_value());
    RatMatrix c = symdes::assemble(symdes::pg2(2), *spec);
    EliminationTrace t = symdes::eliminate(c, Rat(2), Rat(9), 1);
    CHECK(t.case_id == 1);
    CHECK(t.final_relation == "f8^2 = 9*z^2");
    check_witness(t);
    // beta = 9 = 3^2, so the surviving value is exactly 3|z|.
    Rat f = t.kept_values[t.w];
    CHECK(f * f == Rat(9) * t.z_value * t.z_value);
    CHECK((f == Rat(3) * t.z_value || f == Rat(-3) * t.z_value));
}

TEST_CASE("beta = 0 degenerates to the zero witness") {
    RatMatrix c = RatMatrix::Constant(4, 5, Rat(0));
    for (Int i = 0; i < 4; ++i) c(i, i) = Rat(2);
    EliminationTrace t = symdes::eliminate(c, Rat(4), Rat(0), 1);
    CHECK(t.degenerate_beta);
    CHECK(t.final_relation == "f5^2 = 0*z^2");
    for (const Rat& v : t.kept_values) CHECK(v.is_zero());
    CHECK(t.z_value.is_zero());
    CHECK(symdes::replay(t).status == Status::pass);
}

TEST_CASE("two-square cases need alpha to be a sum of two squares") {
    // Gram matrix 3*I + 2*J on a 2x3 circulant; alpha = 3 has no two-square split.
    try {
        symdes::eliminate(circulant({2, 1, 0}, 2), Rat(3), Rat(2), 1);
        FAIL("expected unsupported_error");
    } catch (const symdes::unsupported_error& e) {
        CHECK(std::string(e.what()).find("sum of two squares") != std::string::npos);
    }
}

TEST_CASE("eliminate validates inputs before running") {
    CHECK_THROWS_AS(symdes::eliminate(eye_ones(4, 1), Rat(1), Rat(1), 3),
                    symdes::inconsistent_input_error);
    CHECK_THROWS_AS(symdes::eliminate(eye_ones(4, 1), Rat(1), Rat(1), 2),
                    symdes::invalid_shape_error);
    CHECK_THROWS_AS(symdes::eliminate(eye_ones(4, 1), Rat(2), Rat(1), 1),
                    symdes::inconsistent_input_error);
    RatMatrix half(1, 2);
    half << Rat(1, 2), Rat(1, 2);
    // Gram identity holds with alpha = beta = 1/4, but the procedure is
    // integer-only in alpha and beta.
    CHECK_THROWS_AS(symdes::eliminate(half, Rat(1, 4), Rat(1, 4), 1),
                    symdes::unsupported_error);
}

TEST_CASE("replay rejects a tampered trace") {
    EliminationTrace t = symdes::eliminate(eye_ones(4, 1), Rat(1), Rat(1), 1);
    REQUIRE(symdes::replay(t).status == Status::pass);
    EliminationTrace bad = t;
    bad.z_value += Rat(1);
    CHECK(symdes::replay(bad).status == Status::fail);
    bad = t;
    bad.free_values[0] += Rat(1);
    CHECK(symdes::replay(bad).status == Status::fail);
    bad = t;
    bad.kept_values[0] += Rat(1);
    CHECK(symdes::replay(bad).status == Status::fail);
    bad = t;
    bad.steps.pop_back();
    CHECK(symdes::replay(bad).status == Status::fail);
}

TEST_CASE("rendered traces are deterministic and self-describing") {
    RatMatrix c = circulant({1, 1, 0, 1, 0, 0, 0}, 6);
    EliminationTrace t1 = symdes::eliminate(c, Rat(2), Rat(1), 1);
    EliminationTrace t2 = symdes::eliminate(c, Rat(2), Rat(1), 1);
    std::string r1 = symdes::render_trace(t1);
    std::string r2 = symdes::render_trace(t2);
    CHECK(r1 == r2);
    CHECK(r1.find("case=3") != std::string::npos);
    CHECK(r1.find("relation=f7^2 = 1*z^2") != std::string::npos);
    CHECK(r1.find("value.z=") != std::string::npos);
    CHECK(r1.find("degenerate_beta=no") != std::string::npos);
    CHECK(r1.find("step.1=") != std::string::npos);
    CHECK(r1.find("step.6=") != std::string::npos);
}
