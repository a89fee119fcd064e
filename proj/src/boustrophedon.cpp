#include "cyclenum/boustrophedon.hpp"

#include <stdexcept>
#include <string>

#include "cyclenum/oracle.hpp"

namespace cyclenum {

namespace {

struct Term {
    int source;  // alpha of the source polynomial, 1-based
    PhiIndices phi;
};

// R_{w+}^(alpha) and R_{w-}^(alpha) as sums of Phi images of the R_w^(beta).
const std::array<std::vector<Term>, 6> kRPlus = {{
    {{1, {4, 1, 2}}, {2, {3, 1, 2}}, {4, {2, 2, 1}}},
    {{3, {3, 4, 2}}, {5, {2, 2, 4}}},
    {{3, {3, 4, 1}}, {5, {2, 4, 1}}, {6, {1, 1, 4}}},
    {{1, {1, 1, 4}}},
    {{1, {4, 1, 3}}, {2, {1, 1, 3}}},
    {{3, {4, 4, 3}}},
}};

const std::array<std::vector<Term>, 6> kRMinus = {{
    {{4, {1, 1, 2}}},
    {{6, {1, 4, 2}}, {5, {4, 4, 2}}},
    {{6, {4, 4, 1}}},
    {{4, {2, 1, 4}}, {2, {3, 1, 4}}, {1, {4, 4, 1}}},
    {{4, {2, 1, 3}}, {2, {3, 3, 1}}},
    {{6, {1, 4, 3}}, {5, {2, 4, 3}}, {3, {3, 3, 4}}},
}};

bool r_seed(int alpha, Sign first, Sign second) {
    using enum Sign;
    switch (alpha) {
        case 1: return first == Plus && second == Plus;
        case 2: return first == Minus && second == Minus;
        case 3: return first == Minus && second == Plus;
        case 4: return first == Plus && second == Minus;
        case 5: return first == Plus && second == Plus;
        case 6: return first == Minus && second == Minus;
        default: return false;
    }
}

BoustroLine boustro_step(const BoustroLine& line, Sign s) {
    const std::size_t k = line.size();
    BoustroLine next(k + 1, BigCount(0));
    if (s == Sign::Plus) {
        // next[j] = sum of line[i] for i < j
        for (std::size_t j = 1; j <= k; ++j) next[j] = next[j - 1] + line[j - 1];
    } else {
        // next[j] = sum of line[i] for i >= j
        for (std::size_t j = k; j-- > 0;) next[j] = next[j + 1] + line[j];
    }
    return next;
}

}  // namespace

PEvolution::PEvolution(Sign first, PhiKernel kernel)
    : word_(std::vector<Sign>{first}), poly_(HomoPoly::monomial(first == Sign::Plus ? Exponents{1, 0, 0, 0} : Exponents{0, 1, 0, 0}, 2)),
      kernel_(kernel) {}

void PEvolution::advance(Sign s) {
    const bool even_ground = (word_.size() + 2) % 2 == 0;
    const bool keep_first = (s == Sign::Plus) == even_ground;
    poly_ = apply_phi(kernel_, keep_first ? PhiIndices{1, 1, 2} : PhiIndices{2, 2, 1}, poly_);
    word_ = word_.appended(s);
}

QEvolution::QEvolution(Sign first, PhiKernel kernel)
    : word_(std::vector<Sign>{first}), plus_(HomoPoly::constant(3, first == Sign::Plus ? 1 : 0)),
      minus_(HomoPoly::constant(3, first == Sign::Minus ? 1 : 0)), kernel_(kernel) {}

void QEvolution::advance(Sign s) {
    if (s == Sign::Plus) {
        auto plus = apply_phi(kernel_, {2, 2, 1}, minus_) + apply_phi(kernel_, {3, 1, 2}, plus_);
        minus_ = apply_phi(kernel_, {1, 1, 3}, plus_);
        plus_ = std::move(plus);
    } else {
        auto plus = apply_phi(kernel_, {1, 1, 2}, minus_);
        minus_ = apply_phi(kernel_, {3, 3, 1}, plus_) + apply_phi(kernel_, {2, 1, 3}, minus_);
        plus_ = std::move(plus);
    }
    word_ = word_.appended(s);
}

REvolution::REvolution(Sign first, Sign second, PhiKernel kernel)
    : word_(std::vector<Sign>{first, second}), kernel_(kernel) {
    for (int alpha = 1; alpha <= 6; ++alpha) {
        polys_[static_cast<std::size_t>(alpha - 1)] = HomoPoly::constant(4, r_seed(alpha, first, second) ? 1 : 0);
    }
}

void REvolution::advance(Sign s) {
    const auto& table = s == Sign::Plus ? kRPlus : kRMinus;
    std::array<HomoPoly, 6> next;
    for (std::size_t target = 0; target < 6; ++target) {
        HomoPoly acc(4, static_cast<int>(word_.size()) - 1);
        for (const Term& term : table[target]) {
            acc += apply_phi(kernel_, term.phi, polys_[static_cast<std::size_t>(term.source - 1)]);
        }
        next[target] = std::move(acc);
    }
    polys_ = std::move(next);
    word_ = word_.appended(s);
}

HomoPoly evolve_P(const SignWord& w, PhiKernel kernel) {
    if (w.empty()) throw std::invalid_argument("evolve_P needs a nonempty word");
    PEvolution engine(w[0], kernel);
    for (std::size_t t = 1; t < w.size(); ++t) engine.advance(w[t]);
    return engine.poly();
}

QPolys evolve_Q(const SignWord& w, PhiKernel kernel) {
    if (w.empty()) throw std::invalid_argument("evolve_Q needs a nonempty word");
    QEvolution engine(w[0], kernel);
    for (std::size_t t = 1; t < w.size(); ++t) engine.advance(w[t]);
    return {engine.plus(), engine.minus()};
}

std::array<HomoPoly, 6> evolve_R(const SignWord& w, PhiKernel kernel) {
    if (w.size() < 2) throw std::invalid_argument("evolve_R needs |w| >= 2");
    REvolution engine(w[0], w[1], kernel);
    for (std::size_t t = 2; t < w.size(); ++t) engine.advance(w[t]);
    return engine.all();
}

BigCount count_P(const SignWord& w) { return evolve_P(w).sum(); }

BigCount count_Q(const SignWord& w, Sign eta) {
    const auto q = evolve_Q(w);
    return eta == Sign::Plus ? q.plus.sum() : q.minus.sum();
}

BigCount count_R_alpha(const SignWord& w, int alpha) {
    if (alpha < 1 || alpha > 6) throw std::invalid_argument("alpha must be in 1..6");
    return evolve_R(w)[static_cast<std::size_t>(alpha - 1)].sum();
}

BigCount count_R(const SignWord& w, Sign eta1, Sign eta2) {
    if (w.empty()) throw std::invalid_argument("count_R needs a nonempty word");
    if (w.size() == 1) return oracle::count_r_signs_brute(w, eta1, eta2);
    const auto r = evolve_R(w);
    auto sum = [&](int alpha) { return r[static_cast<std::size_t>(alpha - 1)].sum(); };
    if (eta1 == Sign::Plus) return eta2 == Sign::Plus ? BigCount(sum(1) + sum(2)) : sum(3);
    return eta2 == Sign::Plus ? sum(4) : BigCount(sum(5) + sum(6));
}

BigCount viennot_counts(const SignWord& w) {
    BoustroLine line{BigCount(1)};
    for (Sign s : w.signs()) line = boustro_step(line, s);
    BigCount total = 0;
    for (const auto& v : line) total += v;
    return total;
}

std::vector<BoustroLine> entringer_triangle(int n) {
    if (n < 1) throw std::invalid_argument("entringer_triangle needs n >= 1");
    std::vector<BoustroLine> lines;
    lines.reserve(static_cast<std::size_t>(n));
    lines.push_back({BigCount(1)});
    // even lines accumulate from the left (ascent), odd lines from the right (descent)
    for (int k = 2; k <= n; ++k) lines.push_back(boustro_step(lines.back(), k % 2 == 0 ? Sign::Plus : Sign::Minus));
    return lines;
}

std::vector<BigCount> euler_numbers(int n) {
    std::vector<BigCount> out;
    for (const auto& line : entringer_triangle(n)) {
        BigCount total = 0;
        for (const auto& v : line) total += v;
        out.push_back(total);
    }
    return out;
}

HomoPoly seidel_block(const TriangularArray& h, int n) {
    if (n < 1 || static_cast<int>(h.size()) < n) throw std::invalid_argument("source array has fewer than n lines");
    const auto& line = h[static_cast<std::size_t>(n - 1)];
    if (static_cast<int>(line.size()) != n) {
        throw std::invalid_argument("line " + std::to_string(n) + " of the source array must have " + std::to_string(n) + " entries");
    }
    HomoPoly block(3, n - 1);
    const auto exps = block.exponent_list();
    auto coeffs = block.coefficients();
    for (std::size_t t = 0; t < exps.size(); ++t) {
        // j = 0 is the right end of the bottom line, j = n-1 the left end
        coeffs[t] = line[static_cast<std::size_t>(n - 1 - exps[t][1])];
    }
    return block;
}

HomoPoly seidel_sequence(const TriangularArray& h, int n, PhiKernel kernel) {
    if (n < 1) throw std::invalid_argument("seidel_sequence needs n >= 1");
    if (static_cast<int>(h.size()) < n) throw std::invalid_argument("source array has fewer than n lines");
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        if (h[k].size() != k + 1) throw std::invalid_argument("ragged source array at line " + std::to_string(k + 1));
    }
    HomoPoly a = seidel_block(h, 1);
    for (int k = 2; k <= n; ++k) a = apply_phi(kernel, {1, 1, 3}, a) + seidel_block(h, k);
    return a;
}

}  // namespace cyclenum
