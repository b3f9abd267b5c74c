#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nobeling/basis.hpp"
#include "nobeling/checks.hpp"
#include "nobeling/cube.hpp"
#include "nobeling/profinite.hpp"

namespace nobeling::io {

using nlohmann::json;

// ".cube" text:
//   n <count>
//   order <rank of coordinate 0> ... <rank of coordinate n-1>   (optional)
//   one n-character 0/1 line per point, coordinate 0 leftmost
// Every line ends in '\n'. The writer omits the order line for the identity
// order and lists points in canonical order.
std::string write_cube(const CubeSet& s);
CubeSet read_cube(std::string_view text);

// { "<point>": "<integer>", ... } covering exactly the points of the domain.
FunctionOnS read_function(const CubeSet& domain, const json& j);
json function_to_json(const FunctionOnS& f);

json product_to_json(const Product& p);
Product product_from_json(const CoordinateOrder& order, const json& j);

json basis_to_json(const GoodBasis& b);
json decomposition_to_json(const Decomposition& d);
json filtration_to_json(const Filtration& f);
json verification_to_json(const CubeSet& s, const VerificationReport& r);
json stage_report_to_json(const StageReport& r);

// { "stages": [[labels]...], "transitions": [{ "child": "parent" }...] }
InverseSystem read_system(const json& j);

// { "elements": [labels], "family": [[labels]...] }; family is optional.
struct SpaceInput {
    FiniteSpace space;
    std::optional<ClopenFamily> family;
};
SpaceInput read_space(const json& j);

std::string read_file(const std::string& path);
json parse_json(std::string_view text);

}  // namespace nobeling::io
