#include "cyclenum/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclenum/permutation.hpp"

namespace cyclenum::oracle {

namespace {

constexpr int kMaxRefinedFWord = 8;
constexpr int kMaxRefinedGWord = 7;
constexpr int kMaxDescentWord = 9;

int effective_limit(int limit) { return limit > 0 ? std::min(limit, kHardMaxN) : max_ground_set(); }

Exponents g_exponents(const CyclicOrder& z, int alpha) {
    const int n = z.size();
    std::vector<int> mc;
    switch (alpha) {
        case 1: mc = multi_content(z, {n - 1, n, 1, 2}); return {mc[0], mc[1], mc[2], mc[3]};
        case 2: mc = multi_content(z, {n - 1, 2, n, 1}); return {mc[0], mc[2], mc[3], mc[1]};
        case 3: mc = multi_content(z, {n, 2, 1, n - 1}); return {mc[0], mc[1], mc[2], mc[3]};
        case 4: mc = multi_content(z, {n, n - 1, 1, 2}); return {mc[0], mc[1], mc[2], mc[3]};
        case 5: mc = multi_content(z, {n, 2, n - 1, 1}); return {mc[0], mc[2], mc[3], mc[1]};
        case 6: mc = multi_content(z, {n - 1, 2, 1, n}); return {mc[0], mc[1], mc[2], mc[3]};
        default: throw std::invalid_argument("alpha must be in 1..6");
    }
}

Sign q_sign(const CyclicOrder& z) {
    const int n = z.size();
    return z.contains(n - 1, n, 1) ? Sign::Plus : Sign::Minus;
}

}  // namespace

int max_ground_set() {
    if (const char* raw = std::getenv("CYCLENUM_MAX_ORACLE_N")) {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && value >= 3) return static_cast<int>(std::min<long>(value, kHardMaxN));
    }
    return kDefaultMaxN;
}

void check_ground_set(int n, int limit) {
    if (n < 3 || n > limit) {
        throw std::invalid_argument("oracle ground set size " + std::to_string(n) + " outside 3.." +
                                    std::to_string(limit) + " (raise with CYCLENUM_MAX_ORACLE_N, hard cap " +
                                    std::to_string(kHardMaxN) + ")");
    }
}

void for_each_cyclic_order(int n, const std::function<void(const CyclicOrder&)>& visit, int limit) {
    check_ground_set(n, effective_limit(limit));
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> successors(static_cast<std::size_t>(n));
    do {
        successors[0] = rest.front();
        for (std::size_t t = 0; t + 1 < rest.size(); ++t) successors[static_cast<std::size_t>(rest[t] - 1)] = rest[t + 1];
        successors[static_cast<std::size_t>(rest.back() - 1)] = 1;
        visit(CyclicOrder::from_successors(successors));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<CyclicOrder> enumerate_cyclic_orders(int n, int limit) {
    std::vector<CyclicOrder> out;
    for_each_cyclic_order(n, [&](const CyclicOrder& z) { out.push_back(z); }, limit);
    return out;
}

int chain_type(const CyclicOrder& z) {
    const int n = z.size();
    if (n < 4) throw std::invalid_argument("chain type needs n >= 4");
    if (is_chain(z, {1, 2, n - 1, n})) return 1;
    if (is_chain(z, {1, n - 1, 2, n})) return 2;
    if (is_chain(z, {1, n - 1, n, 2})) return 3;
    if (is_chain(z, {1, 2, n, n - 1})) return 4;
    if (is_chain(z, {1, n, 2, n - 1})) return 5;
    if (is_chain(z, {1, n, n - 1, 2})) return 6;
    throw std::logic_error("no chain type matched; cyclic order is malformed");
}

ClassCounts classify_all(int n, int limit) {
    ClassCounts counts;
    counts.n = n;
    check_ground_set(n, effective_limit(limit));
    for (auto& w : all_words(static_cast<std::size_t>(n - 2))) counts.by_word.emplace(std::move(w), ClassRecord{});
    for_each_cyclic_order(
        n,
        [&](const CyclicOrder& z) {
            auto& record = counts.by_word.at(cyclic_descent_pattern(z));
            ++record.p;
            if (q_sign(z) == Sign::Plus) {
                ++record.q_plus;
            } else {
                ++record.q_minus;
            }
            if (n >= 4) ++record.r[static_cast<std::size_t>(chain_type(z) - 1)];
        },
        limit);
    return counts;
}

HomoPoly refined_f_brute(const SignWord& w, Sign eta) {
    if (w.empty() || w.size() > kMaxRefinedFWord) throw std::invalid_argument("refined_f_brute needs 1 <= |w| <= 8");
    const int n = static_cast<int>(w.size()) + 2;
    HomoPoly out(3, n - 3);
    for_each_cyclic_order(
        n,
        [&](const CyclicOrder& z) {
            if (q_sign(z) != eta || cyclic_descent_pattern(z) != w) return;
            const auto mc = eta == Sign::Plus ? multi_content(z, {n - 1, n, 1}) : multi_content(z, {n, n - 1, 1});
            ++out[{mc[0], mc[1], mc[2], 0}];
        },
        kHardMaxN);
    return out;
}

HomoPoly refined_g_brute(const SignWord& w, int alpha) {
    if (alpha < 1 || alpha > 6) throw std::invalid_argument("alpha must be in 1..6");
    if (w.size() < 2 || w.size() > kMaxRefinedGWord) throw std::invalid_argument("refined_g_brute needs 2 <= |w| <= 7");
    const int n = static_cast<int>(w.size()) + 2;
    HomoPoly out(4, n - 4);
    for_each_cyclic_order(
        n,
        [&](const CyclicOrder& z) {
            if (chain_type(z) != alpha || cyclic_descent_pattern(z) != w) return;
            ++out[g_exponents(z, alpha)];
        },
        kHardMaxN);
    return out;
}

HomoPoly refined_e_brute(const SignWord& w) {
    if (w.empty() || w.size() > kMaxRefinedFWord) throw std::invalid_argument("refined_e_brute needs 1 <= |w| <= 8");
    const int n = static_cast<int>(w.size()) + 2;
    HomoPoly out(2, n - 2);
    for_each_cyclic_order(
        n,
        [&](const CyclicOrder& z) {
            if (cyclic_descent_pattern(z) != w) return;
            const int forward = z.content(n - 1, n);
            const int backward = z.content(n, n - 1);
            if (n % 2 == 0) {
                ++out[{forward, backward, 0, 0}];
            } else {
                ++out[{backward, forward, 0, 0}];
            }
        },
        kHardMaxN);
    return out;
}

BigCount count_descent_class_brute(const SignWord& w) {
    if (w.size() > kMaxDescentWord) throw std::invalid_argument("count_descent_class_brute needs |w| <= 9");
    std::vector<int> images(w.size() + 1);
    std::iota(images.begin(), images.end(), 1);
    BigCount count = 0;
    if (w.empty()) return 1;
    do {
        if (descent_pattern(Permutation(images)) == w) ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    return count;
}

BigCount count_r_signs_brute(const SignWord& w, Sign eta1, Sign eta2) {
    if (w.empty()) throw std::invalid_argument("count_r_signs_brute needs a nonempty word");
    const int n = static_cast<int>(w.size()) + 2;
    BigCount count = 0;
    for_each_cyclic_order(n, [&](const CyclicOrder& z) {
        if (cyclic_descent_pattern(z) != w || q_sign(z) != eta1) return;
        const Sign second = z.contains(n, 1, 2) ? Sign::Plus : Sign::Minus;
        if (second == eta2) ++count;
    });
    return count;
}

}  // namespace cyclenum::oracle
