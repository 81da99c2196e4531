#include "soficheck/report.hpp"

namespace soficheck::report {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv(const std::vector<CountRow>& rows) {
    std::string out = "system,n,side,exact,count,bound_note\n";
    for (const auto& r : rows) {
        out += csv_field(r.system) + "," + std::to_string(r.n) + "," + r.side + "," +
               (r.exact ? "true" : "false") + "," + std::to_string(r.count) + "," +
               csv_field(r.bound_note) + "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const std::vector<CountRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["system"] = r.system;
        j["n"] = r.n;
        j["side"] = r.side;
        j["exact"] = r.exact;
        j["count"] = r.count;
        j["bound_note"] = r.bound_note;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace soficheck::report
