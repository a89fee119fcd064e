#include "cyclenum/permutation.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <numeric>
#include <stdexcept>

namespace cyclenum {

namespace detail {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') {
                throw std::invalid_argument("compact permutation form accepts digits 1-9 only: '" +
                                            std::string(text) + "'");
            }
            values.push_back(ch - '0');
        }
        return values;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto stop = std::min(text.find(',', start), text.size());
        auto field = text.substr(start, stop - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
        }
        values.push_back(value);
        start = stop + 1;
    }
    return values;
}

}  // namespace detail

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const auto n = images_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(detail::parse_int_list(text)); }

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(images_[i]);
    }
    return out;
}

SignWord descent_pattern(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 2) throw std::invalid_argument("descent pattern needs n >= 2");
    std::vector<Sign> signs(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
        signs[static_cast<std::size_t>(i - 1)] = sigma(i + 1) > sigma(i) ? Sign::Plus : Sign::Minus;
    }
    return SignWord(std::move(signs));
}

}  // namespace cyclenum
