#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "srkex/io.hpp"
#include "srkex/protocol.hpp"

using namespace srkex;

TEST_CASE("semiring serialization round-trips") {
    for (const char* name : {"boolean_b2", "s6", "s20", "zmod6"}) {
        const SemiringTable t = builtin(name);
        std::istringstream in(serialize_semiring(t));
        const SemiringTable back = parse_semiring(in);
        CAPTURE(name);
        CHECK(back == t);
    }
}

TEST_CASE("matrix serialization round-trips") {
    const ProtocolInstance inst = paper_instance();
    for (const SemiringMatrix* m : {&inst.m1, &inst.m2, &inst.s}) {
        std::istringstream in(serialize_matrix(*m));
        CHECK(parse_matrix(in, inst.table) == *m);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in(
        "# a header comment\n"
        "semiring tiny\n"
        "\n"
        "order 2\n"
        "zero 0\n"
        "one 1\n"
        "# tables follow\n"
        "add\n"
        "0 1\n"
        "1 1\n"
        "mul\n"
        "0 0\n"
        "0 1\n");
    const SemiringTable t = parse_semiring(in);
    CHECK(t.name == "tiny");
    CHECK(t.order == 2);
    CHECK(t.add == builtin("boolean_b2").add);
}

TEST_CASE("zero and one may be absent") {
    std::istringstream in(
        "semiring bare\norder 1\nzero none\none none\nadd\n0\nmul\n0\n");
    const SemiringTable t = parse_semiring(in);
    CHECK_FALSE(t.zero.has_value());
    CHECK_FALSE(t.one.has_value());
}

namespace {

std::string error_of(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_semiring(in);
    } catch (const StructuralError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse errors carry line numbers") {
    // row 1 of the add table (line 6) is short
    const std::string short_row =
        "semiring t\norder 2\nzero 0\none 1\nadd\n0\n1 1\nmul\n0 0\n0 1\n";
    CHECK(error_of(short_row).find("line 6") != std::string::npos);
    CHECK(error_of(short_row).find("expected 2 entries") != std::string::npos);

    const std::string bad_entry =
        "semiring t\norder 2\nzero 0\none 1\nadd\n0 7\n1 1\nmul\n0 0\n0 1\n";
    CHECK(error_of(bad_entry).find("line 6") != std::string::npos);

    const std::string bad_keyword =
        "semiring t\norder 2\nzero 0\nuno 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n";
    CHECK(error_of(bad_keyword).find("line 4") != std::string::npos);

    const std::string trailing =
        "semiring t\norder 2\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nextra\n";
    CHECK(error_of(trailing).find("line 11") != std::string::npos);

    CHECK(error_of("").find("line") != std::string::npos);
    CHECK_FALSE(error_of("semiring t\norder nope\n").empty());
}

TEST_CASE("matrix parser validates the semiring binding") {
    TablePtr s6 = builtin_shared("s6");
    std::istringstream wrong_name("matrix\nsemiring b2\nn 1\n0\n");
    CHECK_THROWS_AS(parse_matrix(wrong_name, s6), StructuralError);

    std::istringstream out_of_range("matrix\nsemiring s6\nn 1\n9\n");
    try {
        parse_matrix(out_of_range, s6);
        FAIL("expected error");
    } catch (const StructuralError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    std::istringstream trailing("matrix\nsemiring s6\nn 1\n0\n0\n");
    CHECK_THROWS_AS(parse_matrix(trailing, s6), StructuralError);
}

TEST_CASE("missing files raise structural errors") {
    CHECK_THROWS_AS(parse_semiring_file("/nonexistent/x"), StructuralError);
    CHECK_THROWS_AS(parse_matrix_file("/nonexistent/x", builtin_shared("s6")), StructuralError);
}

TEST_CASE("shipped fixture files parse and match the builtins") {
    const char* dir = std::getenv("SRKEX_DATA");
    REQUIRE(dir != nullptr);
    const std::string data(dir);
    CHECK(parse_semiring_file(data + "/s6.semiring") == builtin("s6"));
    CHECK(parse_semiring_file(data + "/s20.semiring") == builtin("s20"));
    CHECK(parse_semiring_file(data + "/boolean_b2.semiring") == builtin("boolean_b2"));

    const ProtocolInstance inst = paper_instance();
    const SemiringMatrix m1 = parse_matrix_file(data + "/m1.matrix", inst.table);
    CHECK(m1.n() == 20);
    CHECK(m1 == inst.m1);
    CHECK(parse_matrix_file(data + "/m2.matrix", inst.table) == inst.m2);
    CHECK(parse_matrix_file(data + "/s.matrix", inst.table) == inst.s);
    CHECK(parse_matrix_file(data + "/a.matrix", inst.table) == paper_token_a());
}

TEST_CASE("sha256 known answer and hex") {
    const std::uint8_t abc[] = {'a', 'b', 'c'};
    CHECK(hex(sha256(abc)) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const std::vector<std::uint8_t> empty;
    CHECK(hex(sha256(empty)) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
