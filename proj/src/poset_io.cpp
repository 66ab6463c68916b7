#include "ordpoly/poset_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ordpoly {

using nlohmann::json;

json poset_to_json(const Poset& p) {
    json covers = json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back(json::array({a, b}));
    return json{{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw std::invalid_argument("poset file: expected {\"n\": ..., \"covers\": [...]}");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("poset file: covers entries must be [a, b] pairs");
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Poset::from_covers(n, covers);
}

Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open poset file: " + path);
    json j;
    in >> j;
    return poset_from_json(j);
}

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return coeffs;
}

json ehrhart_to_json(const EhrhartPolynomial& e) {
    return json{{"dim", e.dim},
                {"coefficients", polynomial_to_json(e.poly)},
                {"method", to_string(e.method)}};
}

json hstar_to_json(const HStarVector& h) {
    json entries = json::array();
    for (const auto& v : h.h) entries.push_back(v.get_str());
    return entries;
}

json sign_report_to_json(const SignReport& r) {
    json signs = json::array();
    for (Sign s : r.signs)
        signs.push_back(s == Sign::negative ? "negative" : (s == Sign::zero ? "zero" : "positive"));
    return json{{"dim", r.dim},
                {"signs", signs},
                {"negative_degrees", r.negative_degrees},
                {"is_ehrhart_positive", r.is_ehrhart_positive}};
}

} // namespace ordpoly
