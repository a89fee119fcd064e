#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cyclenum/sign_word.hpp"

namespace cyclenum {

/// A permutation of [n] in one-line notation, values 1-based.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Accepts "4,3,1,2" or, for n <= 9, the compact "4312".
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }  // sigma(i), 1-based
    const std::vector<int>& images() const noexcept { return images_; }

    /// Comma-separated one-line form, e.g. "4,3,1,2".
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Word of ascents (+) and descents (-), length n-1. Requires n >= 2.
SignWord descent_pattern(const Permutation& sigma);

}  // namespace cyclenum
