#include "cyclenum/array_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclenum {

using nlohmann::ordered_json;

std::string layout_name(int variables) {
    static const char* names[] = {"i", "j", "k"};
    if (variables < 2 || variables > kMaxVariables) throw std::invalid_argument("layouts cover 2..4 variables");
    std::string out = "dense-(";
    for (int l = 0; l + 1 < variables; ++l) {
        if (l) out += ',';
        out += names[l];
    }
    return out + ")-lex";
}

int variables_from_layout(const std::string& layout) {
    for (int m = 2; m <= kMaxVariables; ++m) {
        if (layout == layout_name(m)) return m;
    }
    throw std::invalid_argument("unknown array layout '" + layout + "'");
}

ordered_json to_json(const ArrayDump& dump) {
    ordered_json j;
    j["word"] = dump.word.str();
    if (dump.eta) j["eta"] = std::string(1, to_char(*dump.eta));
    if (dump.alpha) j["alpha"] = *dump.alpha;
    j["degree"] = dump.poly.degree();
    j["layout"] = layout_name(dump.poly.variables());
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : dump.poly.coefficients()) coeffs.push_back(c.get_str());
    j["coefficients"] = std::move(coeffs);
    return j;
}

ArrayDump array_dump_from_json(const ordered_json& j) {
    try {
        ArrayDump dump;
        dump.word = SignWord::parse(j.at("word").get<std::string>());
        if (j.contains("eta")) dump.eta = parse_sign(j.at("eta").get<std::string>());
        if (j.contains("alpha")) {
            const int alpha = j.at("alpha").get<int>();
            if (alpha < 1 || alpha > 6) throw std::invalid_argument("alpha must be in 1..6");
            dump.alpha = alpha;
        }
        const int degree = j.at("degree").get<int>();
        const int variables = variables_from_layout(j.at("layout").get<std::string>());
        dump.poly = HomoPoly(variables, degree);
        const auto& coeffs = j.at("coefficients");
        if (!coeffs.is_array() || coeffs.size() != dump.poly.size()) {
            throw std::invalid_argument("coefficient count does not match degree and layout");
        }
        auto out = dump.poly.coefficients();
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            const auto text = coeffs[t].get<std::string>();
            if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                throw std::invalid_argument("coefficients must be nonnegative decimal strings");
            }
            out[t] = BigCount(text);
        }
        return dump;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed array dump: ") + e.what());
    }
}

std::vector<std::vector<BigCount>> triangle_rows(const HomoPoly& triangle) {
    if (triangle.variables() != 3) throw std::invalid_argument("triangle_rows needs a three-variable array");
    const int d = triangle.degree();
    std::vector<std::vector<BigCount>> rows;
    for (int r = 0; r <= d; ++r) {
        const int i = d - r;
        std::vector<BigCount> row;
        for (int j = r; j >= 0; --j) row.push_back(triangle[{i, j, d - i - j, 0}]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string pretty_triangle(const HomoPoly& triangle) {
    const auto rows = triangle_rows(triangle);
    std::size_t width = 1;
    for (const auto& row : rows) {
        for (const auto& v : row) width = std::max(width, v.get_str().size());
    }
    std::ostringstream out;
    const std::size_t half = (width + 2) / 2;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line((rows.size() - 1 - r) * half, ' ');
        for (std::size_t t = 0; t < rows[r].size(); ++t) {
            const auto text = rows[r][t].get_str();
            if (t) line += ' ';
            line += std::string(width - text.size(), ' ') + text;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string pretty_tetra(const HomoPoly& tetra) {
    if (tetra.variables() != 4) throw std::invalid_argument("pretty_tetra needs a four-variable array");
    const int d = tetra.degree();
    std::ostringstream out;
    for (int l = 0; l <= d; ++l) {
        HomoPoly slice(3, d - l);
        for (const auto& e : slice.exponent_list()) slice[e] = tetra[{e[0], e[1], e[2], l}];
        out << "l = " << l << '\n' << pretty_triangle(slice);
    }
    return out.str();
}

}  // namespace cyclenum
