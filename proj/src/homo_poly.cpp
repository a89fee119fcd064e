#include "cyclenum/homo_poly.hpp"

#include <stdexcept>
#include <string>

namespace cyclenum {

namespace {

// Number of r-tuples of nonnegative integers summing to s.
std::size_t tuples(int r, int s) {
    if (s < 0) return 0;
    const auto u = static_cast<std::size_t>(s);
    switch (r) {
        case 0: return s == 0 ? 1 : 0;
        case 1: return 1;
        case 2: return u + 1;
        case 3: return (u + 1) * (u + 2) / 2;
        case 4: return (u + 1) * (u + 2) * (u + 3) / 6;
        default: throw std::invalid_argument("unsupported variable count");
    }
}

void check_shape(int variables, int degree) {
    if (variables < 1 || variables > kMaxVariables) {
        throw std::invalid_argument("variable count must be in 1.." + std::to_string(kMaxVariables));
    }
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
}

}  // namespace

HomoPoly::HomoPoly(int variables, int degree) : variables_(variables), degree_(degree) {
    check_shape(variables, degree);
    coeffs_.assign(tuples(variables, degree), BigCount(0));
}

HomoPoly HomoPoly::constant(int variables, const BigCount& value) {
    HomoPoly p(variables, 0);
    p.coeffs_[0] = value;
    return p;
}

HomoPoly HomoPoly::monomial(const Exponents& exponents, int variables, const BigCount& coefficient) {
    int degree = 0;
    for (int l = 0; l < variables; ++l) degree += exponents[static_cast<std::size_t>(l)];
    HomoPoly p(variables, degree);
    p[exponents] = coefficient;
    return p;
}

std::size_t HomoPoly::cell_count(int variables, int degree) {
    check_shape(variables, degree);
    return tuples(variables, degree);
}

std::size_t HomoPoly::index_of(const Exponents& e) const {
    int total = 0;
    for (int l = 0; l < variables_; ++l) {
        if (e[static_cast<std::size_t>(l)] < 0) throw std::out_of_range("negative exponent");
        total += e[static_cast<std::size_t>(l)];
    }
    if (total != degree_) throw std::out_of_range("exponents do not sum to the degree");
    // Tuples whose first entry is >= e_1 biject with tuples summing to rest - e_1.
    std::size_t rank = 0;
    int rest = degree_;
    for (int l = 0; l + 1 < variables_; ++l) {
        const int r = variables_ - l;
        rank += tuples(r, rest) - tuples(r, rest - e[static_cast<std::size_t>(l)]);
        rest -= e[static_cast<std::size_t>(l)];
    }
    return rank;
}

Exponents HomoPoly::exponents_at(std::size_t index) const {
    if (index >= coeffs_.size()) throw std::out_of_range("coefficient index out of range");
    Exponents e{};
    int rest = degree_;
    for (int l = 0; l + 1 < variables_; ++l) {
        const int r = variables_ - l;
        int value = 0;
        // the block with first entry `value` has tuples(r - 1, rest - value) members
        while (index >= tuples(r - 1, rest - value)) {
            index -= tuples(r - 1, rest - value);
            ++value;
        }
        e[static_cast<std::size_t>(l)] = value;
        rest -= value;
    }
    e[static_cast<std::size_t>(variables_ - 1)] = rest;
    return e;
}

std::vector<Exponents> HomoPoly::exponent_list() const {
    std::vector<Exponents> out;
    out.reserve(coeffs_.size());
    if (variables_ == 0) return out;
    Exponents e{};
    e[static_cast<std::size_t>(variables_ - 1)] = degree_;
    while (true) {
        out.push_back(e);
        // lexicographic successor: bump the rightmost free slot that can absorb
        // one unit from the implied last entry, zeroing everything after it
        int l = variables_ - 2;
        while (l >= 0 && e[static_cast<std::size_t>(variables_ - 1)] == 0) {
            // last entry exhausted: carry leftwards
            const int moved = e[static_cast<std::size_t>(l)];
            e[static_cast<std::size_t>(l)] = 0;
            e[static_cast<std::size_t>(variables_ - 1)] += moved;
            --l;
        }
        if (l < 0) break;
        ++e[static_cast<std::size_t>(l)];
        --e[static_cast<std::size_t>(variables_ - 1)];
    }
    return out;
}

BigCount HomoPoly::coefficient(const Exponents& e) const {
    int total = 0;
    for (int l = 0; l < variables_; ++l) {
        if (e[static_cast<std::size_t>(l)] < 0) return 0;
        total += e[static_cast<std::size_t>(l)];
    }
    if (total != degree_) return 0;
    return coeffs_[index_of(e)];
}

BigCount HomoPoly::sum() const {
    BigCount total = 0;
    for (const auto& c : coeffs_) total += c;
    return total;
}

bool HomoPoly::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& other) {
    if (other.variables_ != variables_ || other.degree_ != degree_) {
        throw std::invalid_argument("adding homogeneous polynomials of different shape");
    }
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
    return *this;
}

bool operator==(const HomoPoly& a, const HomoPoly& b) {
    return a.variables_ == b.variables_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

}  // namespace cyclenum
