#include <sstream>

#include "json.hpp"
#include "zagreb/extremal.hpp"

namespace zagreb {

namespace {

using nlohmann::ordered_json;

ordered_json optional_value(const std::optional<Index>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string optional_text(const std::optional<Index>& v) { return v ? std::to_string(*v) : std::string{}; }

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string reports_to_json(const std::vector<ExtremalReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
        out.push_back({
            {"n", r.n},
            {"k", r.k},
            {"min_m1", optional_value(r.min_m1)},
            {"min_m2", optional_value(r.min_m2)},
            {"argmin_m1", r.argmin_m1},
            {"argmin_m2", r.argmin_m2},
            {"class_size", r.class_size},
            {"m1_matches_paper", r.m1_matches_paper},
            {"m2_matches_paper", r.m2_matches_paper},
            {"unique_extremal_is_cnk", r.unique_extremal_is_cnk},
        });
    }
    return out.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ExtremalReport>& reports) {
    std::ostringstream out;
    out << "n,k,class_size,min_m1,min_m2,m1_ok,m2_ok,unique_cnk\n";
    for (const auto& r : reports) {
        out << r.n << ',' << r.k << ',' << r.class_size << ',' << optional_text(r.min_m1) << ','
            << optional_text(r.min_m2) << ',' << flag(r.m1_matches_paper) << ',' << flag(r.m2_matches_paper) << ','
            << flag(r.unique_extremal_is_cnk) << '\n';
    }
    return out.str();
}

std::string reports_to_text(const std::vector<ExtremalReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        const auto claim = paper_lower_bounds(r.n);
        out << "n=" << r.n << " k=" << r.k << " class=" << r.class_size << " min_m1=" << optional_text(r.min_m1)
            << " (claim " << claim.m1 << ") min_m2=" << optional_text(r.min_m2) << " (claim " << claim.m2 << ")"
            << (r.agrees_with_claims() ? " ok" : " MISMATCH") << '\n';
    }
    return out.str();
}

}  // namespace zagreb
