#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace soficheck::report {

/// One row of the tabular report shared by every engine.
struct CountRow {
    std::string system;
    std::size_t n = 0;
    std::string side;       // follower | predecessor | extender | complexity
    bool exact = false;
    std::size_t count = 0;
    std::string bound_note; // empty for exact counts
};

/// CSV with header `system,n,side,exact,count,bound_note`; fields containing
/// commas or quotes are quoted. Output is byte-deterministic.
std::string to_csv(const std::vector<CountRow>& rows);

nlohmann::ordered_json to_json(const std::vector<CountRow>& rows);

} // namespace soficheck::report
