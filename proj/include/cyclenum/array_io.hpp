#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclenum/homo_poly.hpp"
#include "cyclenum/sign_word.hpp"

namespace cyclenum {

/// A triangle (eta set) or tetrahedron (alpha set) together with the word it
/// belongs to. JSON form:
///
///   {"word": "+++", "eta": "+", "degree": 2, "layout": "dense-(i,j)-lex",
///    "coefficients": ["0", "1", ...]}
///
/// Coefficients are decimal strings in HomoPoly's dense order; the layout
/// string names the explicit coordinates, the last one being implied.
struct ArrayDump {
    SignWord word;
    std::optional<Sign> eta;
    std::optional<int> alpha;
    HomoPoly poly;
};

std::string layout_name(int variables);
int variables_from_layout(const std::string& layout);

nlohmann::ordered_json to_json(const ArrayDump& dump);
/// Throws std::invalid_argument on schema violations.
ArrayDump array_dump_from_json(const nlohmann::ordered_json& j);

/// Rows of a three-variable array, top to bottom, in the orientation where
/// the bottom, right and left sides are i = 0, j = 0 and k = 0.
std::vector<std::vector<BigCount>> triangle_rows(const HomoPoly& triangle);

/// Centered text rendering of triangle_rows.
std::string pretty_triangle(const HomoPoly& triangle);

/// A four-variable array printed as one triangle in (i, j, k) per value of l.
std::string pretty_tetra(const HomoPoly& tetra);

}  // namespace cyclenum
