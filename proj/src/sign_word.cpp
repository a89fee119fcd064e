#include "cyclenum/sign_word.hpp"

#include <stdexcept>

namespace cyclenum {

Sign parse_sign(std::string_view text) {
    if (text == "+") return Sign::Plus;
    if (text == "-") return Sign::Minus;
    throw std::invalid_argument("expected a sign '+' or '-', got '" + std::string(text) + "'");
}

SignWord SignWord::parse(std::string_view text) {
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (char ch : text) {
        if (ch == '+') {
            signs.push_back(Sign::Plus);
        } else if (ch == '-') {
            signs.push_back(Sign::Minus);
        } else {
            throw std::invalid_argument("sign word must match [+-]*, got '" + std::string(text) + "'");
        }
    }
    return SignWord(std::move(signs));
}

SignWord SignWord::all_plus(std::size_t length) {
    return SignWord(std::vector<Sign>(length, Sign::Plus));
}

SignWord SignWord::from_bits(std::uint64_t bits, std::size_t length) {
    std::vector<Sign> signs(length);
    for (std::size_t i = 0; i < length; ++i) {
        signs[i] = ((bits >> i) & 1U) ? Sign::Minus : Sign::Plus;
    }
    return SignWord(std::move(signs));
}

Sign SignWord::at(std::size_t position) const {
    if (position == 0 || position > signs_.size()) {
        throw std::out_of_range("sign word position out of range");
    }
    return signs_[position - 1];
}

SignWord SignWord::appended(Sign s) const {
    auto signs = signs_;
    signs.push_back(s);
    return SignWord(std::move(signs));
}

SignWord SignWord::prefix(std::size_t length) const {
    if (length > signs_.size()) throw std::out_of_range("prefix longer than word");
    return SignWord(std::vector<Sign>(signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::string SignWord::str() const {
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) out.push_back(to_char(s));
    return out;
}

SignWord involution_i(const SignWord& w) {
    std::vector<Sign> out = w.signs();
    // index 1, 3, ... are the even 1-based positions
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = negate(out[i]);
    return SignWord(std::move(out));
}

std::vector<SignWord> all_words(std::size_t length) {
    if (length >= 63) throw std::invalid_argument("word length too large to enumerate");
    std::vector<SignWord> out;
    const std::uint64_t count = std::uint64_t{1} << length;
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(SignWord::from_bits(bits, length));
    return out;
}

}  // namespace cyclenum
