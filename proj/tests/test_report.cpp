#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soficheck/report.hpp"

using namespace soficheck;

TEST_CASE("csv rows") {
    std::vector<report::CountRow> rows{
        {"updown", 1, "follower", true, 3, ""},
        {"sgap{1,2}", 2, "follower", false, 4, "depth-3 lower bound"},
    };
    CHECK(report::to_csv(rows) ==
          "system,n,side,exact,count,bound_note\n"
          "updown,1,follower,true,3,\n"
          "\"sgap{1,2}\",2,follower,false,4,depth-3 lower bound\n");
}

TEST_CASE("csv quoting") {
    std::vector<report::CountRow> rows{{"a\"b", 1, "follower", true, 1, "x,y"}};
    auto csv = report::to_csv(rows);
    CHECK(csv.find("\"a\"\"b\"") != std::string::npos);
    CHECK(csv.find("\"x,y\"") != std::string::npos);
}

TEST_CASE("json rows keep field order") {
    std::vector<report::CountRow> rows{{"updown", 1, "follower", true, 3, ""}};
    auto j = report::to_json(rows);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"system", "n", "side", "exact", "count",
                                           "bound_note"});
    CHECK(j[0]["exact"] == true);
    CHECK(j[0]["count"] == 3);
}
