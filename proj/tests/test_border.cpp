#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "symdes/border.hpp"
#include "symdes/ratmatrix.hpp"

using symdes::BorderSpec;
using symdes::Certificate;
using symdes::DesignParams;
using symdes::Int;
using symdes::Rat;
using symdes::RatMatrix;
using symdes::Status;

namespace {

BorderSpec sample_spec() {
    BorderSpec spec;
    spec.params = {7, 3, 1};
    spec.l = 8;
    spec.d = 1;
    spec.s = 1;
    spec.a = {Rat(2), Rat(2)};
    spec.zero_cols = 0;
    spec.c = {Rat(3, 5)};
    spec.a22 = RatMatrix(1, 2);
    spec.a22 << Rat(4, 5), Rat(14, 5);
    spec.a23 = RatMatrix(1, 0);
    return spec;
}

}  // namespace

TEST_CASE("validate_shape pins down every structural rule") {
    BorderSpec spec = sample_spec();
    CHECK_NOTHROW(symdes::validate_shape(spec));
    BorderSpec bad = spec;
    bad.d = 3;
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
    bad = spec;
    bad.s = 0;
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
    bad = spec;
    bad.l = 0;
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
    bad = spec;
    bad.zero_cols = 1;  // breaks p + z = s + d
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
    bad = spec;
    bad.c = {Rat(1), Rat(1)};  // c must have s entries
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
    bad = spec;
    bad.a22 = RatMatrix(1, 3);
    CHECK_THROWS_AS(symdes::validate_shape(bad), symdes::inconsistent_input_error);
}

TEST_CASE("scalar_verify accepts the sample border and reports identity failures") {
    BorderSpec spec = sample_spec();
    CHECK(symdes::scalar_verify(spec).status == Status::pass);

    BorderSpec broken = spec;
    broken.l = 5;  // E1: lambda + sum a^2 = 9 != beta = 6
    symdes::Verdict v = symdes::scalar_verify(broken);
    CHECK(v.status == Status::fail);
    CHECK(v.detail.find("E1") != std::string::npos);

    broken = spec;
    broken.c = {Rat(1)};
    v = symdes::scalar_verify(broken);
    CHECK(v.status == Status::fail);
    CHECK(v.detail.find("E3") != std::string::npos);

    broken = spec;
    broken.a22(0, 0) = spec.a[0];
    broken.a22(0, 1) = spec.a[1];  // inflates E3 to 3c + 8
    v = symdes::scalar_verify(broken);
    CHECK(v.status == Status::fail);
}

TEST_CASE("scalar_verify rejects constant border columns") {
    // All five identities hold, but the single zero column has a zero A23
    // entry, so the assembled column is constant.
    BorderSpec spec = sample_spec();
    spec.d = 2;
    spec.zero_cols = 1;
    spec.a23 = RatMatrix(1, 1);
    spec.a23(0, 0) = Rat(0);
    symdes::Verdict v = symdes::scalar_verify(spec);
    CHECK(v.status == Status::fail);
    bool noted = false;
    for (const auto& [key, value] : v.evidence)
        if (key == "failed" && value == "constant-column") noted = true;
    CHECK(noted);
}

TEST_CASE("assemble builds the bordered matrix and gram_check confirms it") {
    BorderSpec spec = sample_spec();
    RatMatrix design = symdes::pg2(2);
    RatMatrix c = symdes::assemble(design, spec);
    REQUIRE(c.rows() == 8);
    REQUIRE(c.cols() == 9);
    CHECK(symdes::gram_check(c, Rat(2), Rat(9)));
    // Border row and constant column landed where expected.
    CHECK(c(7, 0) == Rat(3, 5));
    CHECK(c(0, 7) == Rat(2));
    CHECK(c(0, 8) == Rat(2));
    CHECK(c(7, 7) == Rat(4, 5));
    CHECK(c(7, 8) == Rat(14, 5));
}

TEST_CASE("assemble validates design shape and 0/1 entries") {
    BorderSpec spec = sample_spec();
    RatMatrix wrong_size = RatMatrix::Constant(6, 6, Rat(0));
    CHECK_THROWS_AS(symdes::assemble(wrong_size, spec), symdes::inconsistent_input_error);
    RatMatrix fractional = symdes::pg2(2);
    fractional(0, 0) = Rat(1, 2);
    CHECK_THROWS_AS(symdes::assemble(fractional, spec), symdes::inconsistent_input_error);
}

TEST_CASE("border spec text round-trips byte-identically") {
    for (const Certificate& cert : symdes::catalog()) {
        std::ostringstream os;
        symdes::write_border_spec(os, cert.spec);
        std::istringstream is(os.str());
        BorderSpec back = symdes::read_border_spec(is);
        std::ostringstream os2;
        symdes::write_border_spec(os2, back);
        CAPTURE(cert.name);
        CHECK(os.str() == os2.str());
        CHECK(back.params.v == cert.spec.params.v);
        CHECK(back.l == cert.spec.l);
        CHECK(back.d == cert.spec.d);
        CHECK(back.s == cert.spec.s);
        CHECK(back.zero_cols == cert.spec.zero_cols);
    }
}

TEST_CASE("border spec reader flags malformed input") {
    auto read = [](const std::string& text) {
        std::istringstream is(text);
        return symdes::read_border_spec(is);
    };
    CHECK_THROWS_AS(read(""), symdes::parse_error);
    CHECK_THROWS_AS(read("params 7 3\n"), symdes::parse_error);
    CHECK_THROWS_AS(read("params 7 3 1\nl x\n"), symdes::parse_error);
    // Wrong keyword order.
    CHECK_THROWS_AS(read("l 8\nparams 7 3 1\n"), symdes::parse_error);
    // Valid prefix, then trailing garbage.
    std::ostringstream os;
    symdes::write_border_spec(os, sample_spec());
    CHECK_THROWS_AS(read(os.str() + "surplus\n"), symdes::parse_error);
    // A22 row with too few entries.
    CHECK_THROWS_AS(read("params 7 3 1\nl 8\nd 1\ns 1\na 2 2\nzerocols 0\nc 3/5\nA22\n4/5\n"),
                    symdes::parse_error);
}

TEST_CASE("catalog holds the recorded certificates with unique names") {
    const auto& cat = symdes::catalog();
    CHECK(cat.size() == 19);
    std::set<std::string> names;
    for (const Certificate& cert : cat) {
        names.insert(cert.name);
        CHECK((cert.verdict == "obstruction" || cert.verdict == "consistent"));
        CHECK_FALSE(cert.provenance.empty());
    }
    CHECK(names.size() == cat.size());
}

TEST_CASE("every catalog certificate passes its scalar identities") {
    for (const Certificate& cert : symdes::catalog()) {
        CAPTURE(cert.name);
        CHECK(symdes::scalar_verify(cert.spec).status == Status::pass);
    }
}

TEST_CASE("catalog_entry finds by name") {
    const Certificate* hit = symdes::catalog_entry("order-10");
    REQUIRE(hit != nullptr);
    CHECK(hit->spec.params.v == 111);
    CHECK(hit->spec.beta() == 101);
    CHECK(symdes::catalog_entry("no-such-entry") == nullptr);
}

TEST_CASE("construct_search finds the known small border") {
    auto spec = symdes::construct_search({7, 3, 1}, 8, 1, 1, 24);
    REQUIRE(spec.has_value());
    CHECK(symdes::scalar_verify(*spec).status == Status::pass);
    CHECK(spec->a.size() == 2);
    CHECK(spec->a[0] == Rat(2));
    CHECK(spec->a[1] == Rat(2));
    CHECK(spec->c[0] == Rat(3, 5));
    CHECK(spec->a22(0, 0) == Rat(14, 5));
    CHECK(spec->a22(0, 1) == Rat(4, 5));
}

TEST_CASE("construct_search returns nothing under a tiny bound") {
    CHECK_FALSE(symdes::construct_search({7, 3, 1}, 8, 1, 1, 1).has_value());
}

TEST_CASE("construct_search rejects out-of-domain requests") {
    CHECK_THROWS_AS(symdes::construct_search({7, 3, 1}, 8, 3, 1, 4),
                    symdes::inconsistent_input_error);
    CHECK_THROWS_AS(symdes::construct_search({7, 3, 1}, 8, 1, 3, 4),
                    symdes::inconsistent_input_error);
    CHECK_THROWS_AS(symdes::construct_search({7, 3, 1}, 0, 1, 1, 4),
                    symdes::inconsistent_input_error);
    CHECK_THROWS_AS(symdes::construct_search({8, 4, 1}, 8, 1, 1, 4),
                    symdes::inconsistent_input_error);
    // l = 3 is not a sum of two squares.
    CHECK_THROWS_AS(symdes::construct_search({7, 3, 1}, 3, 1, 1, 4), symdes::error);
}
