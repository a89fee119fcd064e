#include "cyclenum/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cyclenum/boustrophedon.hpp"

namespace cyclenum {

namespace {

DensityRow make_row(int n, const REvolution& r, const QEvolution& q) {
    DensityRow row;
    row.n = n;
    row.total = 0;
    for (int alpha = 1; alpha <= 6; ++alpha) {
        row.counts[static_cast<std::size_t>(alpha - 1)] = r.get(alpha).sum();
        row.total += row.counts[static_cast<std::size_t>(alpha - 1)];
    }
    row.q_plus = q.plus().sum();
    for (std::size_t t = 0; t < 6; ++t) {
        row.p[t] = BigRatio(row.counts[t], row.total);
        row.p[t].canonicalize();
    }
    row.q_plus_density = BigRatio(row.q_plus, row.total);
    row.q_plus_density.canonicalize();
    row.r_plus_plus_density = row.p[0] + row.p[1];
    return row;
}

}  // namespace

std::vector<DensityRow> densities(int n_max) {
    if (n_max < 2) throw std::invalid_argument("densities need n_max >= 2");
    std::vector<DensityRow> rows;
    REvolution r(Sign::Plus, Sign::Plus);
    QEvolution q(Sign::Plus);
    q.advance(Sign::Plus);
    rows.push_back(make_row(2, r, q));
    for (int n = 3; n <= n_max; ++n) {
        r.advance(Sign::Plus);
        q.advance(Sign::Plus);
        rows.push_back(make_row(n, r, q));
    }
    return rows;
}

DensityRow density_at(int n) { return densities(n).back(); }

std::string decimal_expansion(const BigRatio& value, int digits) {
    if (digits < 0) throw std::invalid_argument("digit count must be nonnegative");
    if (value < 0) throw std::invalid_argument("decimal_expansion expects a nonnegative value");
    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(value * scale) = floor((2 * num * scale + den) / (2 * den))
    BigCount scaled = (2 * value.get_num() * scale + value.get_den()) / (2 * value.get_den());
    BigCount whole = scaled / scale;
    BigCount frac = scaled % scale;
    std::string out = whole.get_str();
    if (digits > 0) {
        std::string tail = frac.get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - tail.size(), '0');
        out += tail;
    }
    return out;
}

std::array<long double, 6> conjectured_limits() {
    constexpr long double inv_pi = std::numbers::inv_pi_v<long double>;
    return {inv_pi, 0.5L - inv_pi, 2 * inv_pi - 0.5L, 2 * inv_pi - 0.5L, 0.5L - inv_pi, 1 - 3 * inv_pi};
}

long double conjectured_q_plus_limit() { return 2 * std::numbers::inv_pi_v<long double>; }
long double conjectured_r_plus_plus_limit() { return 0.5L; }

long double to_long_double(const BigRatio& value) {
    return std::stold(decimal_expansion(value, 30));
}

long double ConjectureReport::max_deviation() const {
    long double worst = std::max(q_plus_deviation, r_plus_plus_deviation);
    for (long double d : deviations) worst = std::max(worst, d);
    return worst;
}

ConjectureReport conjecture_report(int n) {
    ConjectureReport report{density_at(n), conjectured_limits(), {}, 0, 0};
    for (std::size_t t = 0; t < 6; ++t) {
        report.deviations[t] = std::fabs(to_long_double(report.row.p[t]) - report.limits[t]);
    }
    report.q_plus_deviation = std::fabs(to_long_double(report.row.q_plus_density) - conjectured_q_plus_limit());
    report.r_plus_plus_deviation =
        std::fabs(to_long_double(report.row.r_plus_plus_density) - conjectured_r_plus_plus_limit());
    return report;
}

}  // namespace cyclenum
