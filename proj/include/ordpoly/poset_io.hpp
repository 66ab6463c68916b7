#ifndef ORDPOLY_POSET_IO_HPP
#define ORDPOLY_POSET_IO_HPP

#include <string>

#include <json.hpp>

#include "ordpoly/ehrhart.hpp"
#include "ordpoly/poset.hpp"
#include "ordpoly/positivity.hpp"

namespace ordpoly {

// Poset file format: {"n": <int>, "covers": [[a, b], ...]} where each pair
// means a < b is a cover. The reader takes the reflexive-transitive closure
// and validates the axioms.

nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
Poset load_poset_file(const std::string& path);

nlohmann::json polynomial_to_json(const Polynomial& p);
nlohmann::json ehrhart_to_json(const EhrhartPolynomial& e);
nlohmann::json hstar_to_json(const HStarVector& h);
nlohmann::json sign_report_to_json(const SignReport& r);

} // namespace ordpoly

#endif
