#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclenum/homo_poly.hpp"

namespace cyclenum {

/// Densities of the six chain classes R^(alpha)_{+^n} inside P_{+^n}.
struct DensityRow {
    int n = 0;
    BigCount total;                  // #P_{+^n}
    std::array<BigCount, 6> counts;  // #R^(alpha)_{+^n}
    BigCount q_plus;                 // #Q^+_{+^n}
    std::array<BigRatio, 6> p;       // exact counts[alpha] / total
    BigRatio q_plus_density;
    BigRatio r_plus_plus_density;    // p[1] + p[2]
};

/// Rows for n = 2..n_max, computed in one pass of the evolution engines.
std::vector<DensityRow> densities(int n_max);

/// The row for a single n >= 2.
DensityRow density_at(int n);

/// Fixed-point decimal of a nonnegative rational with `digits` digits after
/// the point, rounded to nearest (ties away from zero).
std::string decimal_expansion(const BigRatio& value, int digits);

/// Conjectured limits of p_n^(alpha), alpha = 1..6.
std::array<long double, 6> conjectured_limits();
long double conjectured_q_plus_limit();        // 2/pi
long double conjectured_r_plus_plus_limit();   // 1/2

struct ConjectureReport {
    DensityRow row;
    std::array<long double, 6> limits;
    std::array<long double, 6> deviations;  // |p_n^(alpha) - limit|
    long double q_plus_deviation;
    long double r_plus_plus_deviation;
    long double max_deviation() const;
};

ConjectureReport conjecture_report(int n);

/// Rational converted with ~30 significant digits before rounding to long double.
long double to_long_double(const BigRatio& value);

}  // namespace cyclenum
