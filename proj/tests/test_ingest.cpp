#include "support.hpp"

#include "fivefour/votes.hpp"

#include <doctest.h>

#include <sstream>

using namespace fivefour;

namespace {

VoteTable parse(const std::string& text, Diagnostics* diag = nullptr, const ColumnMap& cols = {}) {
    std::istringstream in(text);
    return parse_votes(in, cols, diag);
}

std::string five_four_fixture() {
    const auto roster = testing::letter_roster();
    std::vector<testing::FixtureCase> cases;
    cases.push_back({"c1", 2000, "NC", {2, 2, 2, 2, 2, 1, 1, 1, 1}});
    cases.push_back({"c2", 2000, "NC", {2, 2, 2, 2, 2, 2, 2, 2, 2}});
    cases.push_back({"c3", 2001, "NC", {1, 2, 2, 2, 2, 2, 1, 1, 1}});
    return testing::to_csv(roster, cases);
}

}  // namespace

TEST_CASE("a 5-4 fixture yields one complete nine-justice slice") {
    const auto table = parse(five_four_fixture());
    CHECK(table.records().size() == 27);
    CHECK(table.cases().size() == 3);
    const auto slice = select_court(table, CourtSelector::court("NC"));
    REQUIRE(slice.roster.size() == 9);
    CHECK(slice.roster.front().name == "JA");
    CHECK(slice.cases.size() == 3);
    CHECK(slice.excluded_cases == 0);
    CHECK(slice.cases[0].codes == std::array<int, 9>{2, 2, 2, 2, 2, 1, 1, 1, 1});
}

TEST_CASE("an empty majority field makes the case incomplete and it is excluded with a warning") {
    const auto roster = testing::letter_roster();
    std::vector<testing::FixtureCase> cases;
    cases.push_back({"c1", 2000, "NC", {2, 2, 2, 2, 2, 1, 1, 1, 1}});
    cases.push_back({"c2", 2000, "NC", {2, 2, 2, 2, 0, 1, 1, 1, 1}});
    const auto table = parse(testing::to_csv(roster, cases));
    Diagnostics diag;
    const auto slice = select_court(table, CourtSelector::court("NC"), &diag);
    CHECK(slice.cases.size() == 1);
    CHECK(slice.excluded_cases == 1);
    REQUIRE(diag.warnings.size() == 1);
    CHECK(diag.warnings[0].find("excluded 1") != std::string::npos);
}

TEST_CASE("duplicate justice rows keep the first and are reported") {
    std::string text = five_four_fixture();
    text += "c1,2000,NC,1,JA,1\n";
    Diagnostics diag;
    const auto table = parse(text, &diag);
    CHECK(table.duplicate_rows() == 1);
    CHECK(table.records().size() == 27);
    CHECK_FALSE(diag.empty());
    const auto slice = select_court(table, CourtSelector::court("NC"));
    CHECK(slice.cases[0].codes[0] == 2);
}

TEST_CASE("malformed rows are rejected and out-of-range codes become missing") {
    std::string text = "caseId,term,naturalCourt,justice,justiceName,majority\n";
    text += "c1,abc,NC,1,JA,2\n";
    text += "c1,2000,NC,1\n";
    text += "c1,2000,NC,1,JA,7\n";
    const auto table = parse(text);
    CHECK(table.rejected_rows() == 2);
    REQUIRE(table.records().size() == 1);
    CHECK_FALSE(table.records()[0].majority_code.has_value());
    CHECK(table.issues().size() == 3);
}

TEST_CASE("a missing mapped column is a configuration error") {
    CHECK_THROWS_AS(parse("caseId,term,naturalCourt,justice,justiceName\n"), ConfigError);
    CHECK_THROWS_AS(parse(""), ConfigError);
}

TEST_CASE("column map and delimiter are configurable") {
    ColumnMap cols;
    cols.set("case_id", "docket");
    cols.set("majority", "side");
    cols.set("delimiter", ";");
    const auto table = parse("docket;term;naturalCourt;justice;justiceName;side\n\"x;1\";1999;N;5;\"O\"\"Brien\";2\n",
                             nullptr, cols);
    REQUIRE(table.records().size() == 1);
    CHECK(table.records()[0].case_id == "x;1");
    CHECK(table.records()[0].justice_name == "O\"Brien");
    CHECK_THROWS_AS(cols.set("nonsense", "x"), ConfigError);
}

TEST_CASE("a roster other than nine justices is a data error naming them") {
    const auto roster = testing::letter_roster();
    std::vector<testing::FixtureCase> cases;
    cases.push_back({"c1", 2000, "NC", {2, 2, 2, 2, 0, 1, 1, 1, 0}});
    const auto table = parse(testing::to_csv(roster, cases));
    try {
        select_court(table, CourtSelector::court("NC"));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("7 voting justices") != std::string::npos);
        CHECK(std::string(e.what()).find("JA") != std::string::npos);
    }
    CHECK_THROWS_AS(select_court(table, CourtSelector::court("nope")), DataError);
}

TEST_CASE("natural courts are ordered chronologically") {
    const auto roster = testing::letter_roster();
    std::vector<testing::FixtureCase> cases;
    cases.push_back({"a", 2010, "late", {2, 2, 2, 2, 2, 1, 1, 1, 1}});
    cases.push_back({"b", 1990, "early", {2, 2, 2, 2, 2, 1, 1, 1, 1}});
    cases.push_back({"c", 1995, "early", {2, 2, 2, 2, 2, 1, 1, 1, 1}});
    const auto table = parse(testing::to_csv(roster, cases));
    CHECK(table.natural_courts() == std::vector<std::string>{"early", "late"});
    CHECK(table.term_span("early") == std::pair<int, int>{1990, 1995});
}

TEST_CASE("term ranges parse and select") {
    CHECK(parse_term_range("1994..2004").first == 1994);
    CHECK(parse_term_range("1994-2004").last == 2004);
    CHECK(parse_term_range("2005").first == 2005);
    CHECK(parse_term_range("2005").last == 2005);
    CHECK_THROWS_AS(parse_term_range("2004..1994"), ConfigError);
    CHECK_THROWS_AS(parse_term_range("x"), ConfigError);

    const auto table = parse(five_four_fixture());
    const auto slice = select_court(table, CourtSelector::term_range(2001, 2001));
    CHECK(slice.cases.size() == 1);
    const auto full = select_court(table, CourtSelector::court("NC"));
    CHECK(restrict_terms(full, {2000, 2000}).cases.size() == 2);
    CHECK_THROWS_AS(restrict_terms(full, {1800, 1801}), DataError);
}

TEST_CASE("re-slicing a slice is idempotent") {
    const auto table = parse(five_four_fixture());
    const auto once = select_court(table, CourtSelector::court("NC"));
    const auto again = select_court(slice_table(once), CourtSelector::court("NC"));
    CHECK(again.roster == once.roster);
    REQUIRE(again.cases.size() == once.cases.size());
    for (std::size_t i = 0; i < once.cases.size(); ++i) {
        CHECK(again.cases[i].case_id == once.cases[i].case_id);
        CHECK(again.cases[i].codes == once.cases[i].codes);
    }
}

TEST_CASE("write_votes round-trips") {
    const auto table = parse(five_four_fixture());
    std::ostringstream out;
    write_votes(out, table);
    const auto back = parse(out.str());
    REQUIRE(back.records().size() == table.records().size());
    for (std::size_t i = 0; i < back.records().size(); ++i) {
        CHECK(back.records()[i].case_id == table.records()[i].case_id);
        CHECK(back.records()[i].majority_code == table.records()[i].majority_code);
    }
}

TEST_CASE("a UTF-8 byte-order mark and CRLF line endings are tolerated") {
    std::string text = "\xEF\xBB\xBF" "caseId,term,naturalCourt,justice,justiceName,majority\r\nc1,2000,NC,1,JA,2\r\n";
    const auto table = parse(text);
    REQUIRE(table.records().size() == 1);
    CHECK(table.records()[0].majority_code == 2);
}
