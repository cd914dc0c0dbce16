#include <doctest.h>

#include "ndslab/record.hpp"

using namespace ndslab;

TEST_CASE("a flat record parses into named fields") {
    RecordValue r = parse_record_text("pl-map { breakpoints = [\"0\", \"1/2\", \"1\"], n = 3 }");
    CHECK(r.kind == RecordValue::Kind::Record);
    CHECK(r.record_name == "pl-map");
    REQUIRE(r.find("breakpoints") != nullptr);
    CHECK(r.at("breakpoints").list.size() == 3);
    CHECK(r.at("breakpoints").list[1].text == "1/2");
    CHECK(r.at("n").integer == 3);
    CHECK(r.find("missing") == nullptr);
    CHECK_THROWS(r.at("missing"));
}

TEST_CASE("records nest and lists nest") {
    RecordValue r = parse_record_text(
        "suite { maps = [pl-map { breakpoints = [\"0\",\"1\"], values = [\"0\",\"1\"] }], "
        "grid = [[1, 2], [3]] }");
    REQUIRE(r.at("maps").list.size() == 1);
    CHECK(r.at("maps").list[0].record_name == "pl-map");
    CHECK(r.at("grid").list[1].list[0].integer == 3);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_record_text("thing {\n  a = [1, 2\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 1);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("config files are key = value lines with comments") {
    auto kv = parse_config_text(
        "# a comment line\n"
        "fixture = \"example31\"\n"
        "horizon = 64   # trailing comment\n"
        "\n"
        "v = \"(2/5, 1/2)\"\n");
    REQUIRE(kv.size() == 3);
    CHECK(kv[0].first == "fixture");
    CHECK(kv[0].second.text == "example31");
    CHECK(kv[1].second.integer == 64);
    CHECK(kv[2].second.text == "(2/5, 1/2)");
}

TEST_CASE("quoting escapes the characters that matter") {
    CHECK(quote_string("a\"b") == "\"a\\\"b\"");
    CHECK(quote_string("plain") == "\"plain\"");
}
