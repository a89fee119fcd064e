#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclenum {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign negate(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Parses a single '+' or '-' character; throws std::invalid_argument otherwise.
Sign parse_sign(std::string_view text);

/// A word over {+,-}. Positions are 1-based in the accessors that mirror the
/// combinatorial definitions (`at`), 0-based for container-style access.
class SignWord {
public:
    SignWord() = default;
    explicit SignWord(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    /// Parses a string over '+' and '-'. The empty string is the empty word.
    static SignWord parse(std::string_view text);
    static SignWord all_plus(std::size_t length);
    /// Word of length `length` whose i-th letter (0-based) is Minus iff bit i
    /// of `bits` is set.
    static SignWord from_bits(std::uint64_t bits, std::size_t length);

    std::size_t size() const noexcept { return signs_.size(); }
    bool empty() const noexcept { return signs_.empty(); }
    Sign operator[](std::size_t i) const { return signs_[i]; }
    Sign at(std::size_t position) const;  // 1-based
    Sign back() const { return signs_.back(); }
    const std::vector<Sign>& signs() const noexcept { return signs_; }

    SignWord appended(Sign s) const;
    SignWord prefix(std::size_t length) const;

    std::string str() const;

    friend bool operator==(const SignWord&, const SignWord&) = default;
    friend auto operator<=>(const SignWord&, const SignWord&) = default;

private:
    std::vector<Sign> signs_;
};

/// Flips the signs at even (1-based) positions.
SignWord involution_i(const SignWord& w);

/// All 2^length words of the given length, in the order of `SignWord::from_bits`.
std::vector<SignWord> all_words(std::size_t length);

}  // namespace cyclenum
