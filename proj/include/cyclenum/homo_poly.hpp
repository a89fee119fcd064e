#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cyclenum {

using BigCount = mpz_class;
using BigRatio = mpq_class;

inline constexpr int kMaxVariables = 4;

/// Exponent tuple (i_1, ..., i_m); entries past m are unused and kept at 0.
using Exponents = std::array<int, kMaxVariables>;

/// Homogeneous polynomial of degree d in m <= 4 variables with big-integer
/// coefficients, stored densely.
///
/// Layout: exponent tuples summing to d, in lexicographic order of
/// (i_1, ..., i_{m-1}) with i_m implied. For m = 3 that is the triangle
/// (i, j) with k = d - i - j; for m = 4 the tetrahedron (i, j, k).
class HomoPoly {
public:
    HomoPoly() = default;
    /// The zero polynomial of the given shape.
    HomoPoly(int variables, int degree);

    static HomoPoly constant(int variables, const BigCount& value);
    static HomoPoly monomial(const Exponents& exponents, int variables, const BigCount& coefficient = 1);

    /// Number of exponent tuples of m entries summing to d.
    static std::size_t cell_count(int variables, int degree);

    int variables() const noexcept { return variables_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Dense index of an exponent tuple; throws if it does not sum to d.
    std::size_t index_of(const Exponents& e) const;
    /// Inverse of index_of.
    Exponents exponents_at(std::size_t index) const;
    /// All exponent tuples in layout order.
    std::vector<Exponents> exponent_list() const;

    const BigCount& operator[](const Exponents& e) const { return coeffs_[index_of(e)]; }
    BigCount& operator[](const Exponents& e) { return coeffs_[index_of(e)]; }
    /// Coefficient or zero when e lies outside the support shape (wrong sum / negative).
    BigCount coefficient(const Exponents& e) const;

    std::span<const BigCount> coefficients() const noexcept { return coeffs_; }
    std::span<BigCount> coefficients() noexcept { return coeffs_; }

    BigCount sum() const;
    bool is_zero() const;

    HomoPoly& operator+=(const HomoPoly& other);
    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
    friend bool operator==(const HomoPoly& a, const HomoPoly& b);

private:
    int variables_ = 0;
    int degree_ = 0;
    std::vector<BigCount> coeffs_;
};

}  // namespace cyclenum
