#include "admz/errors.hpp"
#include "admz/report_json.hpp"

#include <doctest.h>

using namespace admz;

TEST_CASE("report round trip") {
    for (const char* s : {"1", "2", "-1/2", "1/2", "-4/3"}) {
        CAPTURE(s);
        const auto report = classify_category_O(parse_level(s));
        const auto tree = report_to_json(report);
        CHECK(report_from_json(tree) == report);
        CHECK(report_from_json(nlohmann::json::parse(tree.dump())) == report);
    }
}

TEST_CASE("report schema") {
    const auto tree = report_to_json(classify_category_O(parse_level("-1/2")));
    for (const char* key : {"level", "S", "Pk", "p1", "p2", "singular_vector", "Q", "families"})
        CHECK(tree.contains(key));
    CHECK(tree["S"] == nlohmann::json::array({"1", "0", "-1/2", "-3/2"}));
    CHECK(tree["level"]["k"] == "-1/2");
    CHECK(tree["Pk"][2]["lambda1"] == "-3/2");
    CHECK(tree["Q"]["text"] == "-4/39*f*e^3 - 1/39*h^2*e^2 - 2/39*h*e^2 - 1/52*e^2");
    CHECK(tree["families"]["dense"]["condition"] == "r in {-1/2, -3/2}, mu not integer, r-mu not integer");
    CHECK(tree["families"]["dense"]["samples"].size() == 6);
}

TEST_CASE("malformed report") {
    auto tree = report_to_json(classify_category_O(parse_level("1")));
    tree.erase("Q");
    CHECK_THROWS_AS(report_from_json(tree), InvalidInput);
    auto bad = report_to_json(classify_category_O(parse_level("1")));
    bad["S"][0] = "x";
    CHECK_THROWS_AS(report_from_json(bad), InvalidInput);
}
