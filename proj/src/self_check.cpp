#include "cyclenum/self_check.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cyclenum/bijection.hpp"
#include "cyclenum/boustrophedon.hpp"
#include "cyclenum/oracle.hpp"
#include "cyclenum/phi.hpp"

namespace cyclenum {

namespace {

CheckResult refined_arrays(int max_len) {
    for (int len = 1; len <= max_len; ++len) {
        const auto counts = oracle::classify_all(len + 2);
        for (const auto& w : all_words(static_cast<std::size_t>(len))) {
            const auto& record = counts.by_word.at(w);
            const auto q = evolve_Q(w);
            if (q.plus != oracle::refined_f_brute(w, Sign::Plus) || q.minus != oracle::refined_f_brute(w, Sign::Minus)) {
                return {"refined P/Q/R arrays match the oracle", false, "mismatch at w=" + w.str()};
            }
            if (q.plus.sum() != record.q_plus || q.minus.sum() != record.q_minus) {
                return {"refined P/Q/R arrays match the oracle", false, "class size mismatch at w=" + w.str()};
            }
            if (evolve_P(w) != oracle::refined_e_brute(w) || count_P(w) != record.p) {
                return {"refined P/Q/R arrays match the oracle", false, "P mismatch at w=" + w.str()};
            }
            if (len < 2) continue;
            const auto r = evolve_R(w);
            for (int alpha = 1; alpha <= 6; ++alpha) {
                const auto& poly = r[static_cast<std::size_t>(alpha - 1)];
                if (poly != oracle::refined_g_brute(w, alpha) || poly.sum() != record.r[static_cast<std::size_t>(alpha - 1)]) {
                    return {"refined P/Q/R arrays match the oracle", false, "R^(" + std::to_string(alpha) + ") mismatch at w=" + w.str()};
                }
            }
        }
    }
    return {"refined P/Q/R arrays match the oracle", true, "|w| <= " + std::to_string(max_len)};
}

CheckResult descent_classes(int max_len) {
    for (int len = 1; len <= max_len; ++len) {
        for (const auto& w : all_words(static_cast<std::size_t>(len))) {
            const auto expected = oracle::count_descent_class_brute(involution_i(w));
            if (viennot_counts(involution_i(w)) != expected || count_P(w) != expected) {
                return {"#P_w = #S_i(w)", false, "mismatch at w=" + w.str()};
            }
        }
    }
    return {"#P_w = #S_i(w) (engine, Viennot, brute force)", true, "|w| <= " + std::to_string(max_len)};
}

CheckResult bijection(int max_len) {
    for (int n = 2; n <= max_len + 1; ++n) {
        std::set<Permutation> images;
        for (const auto& z : oracle::enumerate_cyclic_orders(n + 1)) {
            const auto sigma = forward_F(z);
            if (inverse_F(sigma) != z) return {"bijection F", false, "inverse_F(F(Z)) != Z at Z=" + z.str()};
            if (descent_pattern(sigma) != involution_i(cyclic_descent_pattern(z))) {
                return {"bijection F", false, "descent transport fails at Z=" + z.str()};
            }
            images.insert(sigma);
        }
        BigCount factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        if (BigCount(static_cast<unsigned long>(images.size())) != factorial) {
            return {"bijection F", false, "F is not onto S_" + std::to_string(n)};
        }
    }
    return {"F: C_{n+1} -> S_n bijective, transports descent patterns", true, "n <= " + std::to_string(max_len + 1)};
}

CheckResult entringer(int max_len) {
    const int top = std::min(max_len + 1, 8);
    const auto triangle = entringer_triangle(top);
    for (int n = 1; n <= top; ++n) {
        for (int i = 1; i <= n; ++i) {
            if (entringer_by_content(n, i) != triangle[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)]) {
                return {"Entringer by content", false, "mismatch at e(" + std::to_string(n) + "," + std::to_string(i) + ")"};
            }
        }
    }
    return {"Entringer numbers by arc content", true, "n <= " + std::to_string(top)};
}

CheckResult phi_forms() {
    for (int m = 2; m <= 4; ++m) {
        for (int d = 0; d <= 5; ++d) {
            const HomoPoly shape(m, d);
            for (const auto& e : shape.exponent_list()) {
                const auto mono = HomoPoly::monomial(e, m);
                for (int a = 1; a <= m; ++a) {
                    for (int b = 1; b <= m; ++b) {
                        for (int c = 1; c <= m; ++c) {
                            if (b == c) continue;
                            const auto expanded = phi({a, b, c}, mono);
                            if (expanded != phi_index_form({a, b, c}, mono) || expanded != phi_prefix({a, b, c}, mono)) {
                                return {"Phi forms agree", false, "disagreement at m=" + std::to_string(m)};
                            }
                        }
                    }
                }
            }
        }
    }
    return {"Phi expansion = index form = prefix form", true, "all monomials, m <= 4, d <= 5"};
}

CheckResult partitions() {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const auto len = static_cast<std::size_t>(2 + trial % 19);
        const auto w = SignWord::from_bits(rng(), len);
        const auto p = count_P(w);
        const auto q = evolve_Q(w);
        const auto r = evolve_R(w);
        BigCount r_total = 0;
        for (const auto& poly : r) r_total += poly.sum();
        const BigCount q_plus_from_r = r[0].sum() + r[1].sum() + r[2].sum();
        if (q.plus.sum() + q.minus.sum() != p || r_total != p || q_plus_from_r != q.plus.sum()) {
            return {"partition identities", false, "fails at w=" + w.str()};
        }
    }
    return {"partition identities P = Q+ + Q- = sum R", true, "40 random words, |w| <= 20"};
}

}  // namespace

std::vector<CheckResult> run_self_check(int max_word_len) {
    if (max_word_len < 1 || max_word_len > 7) throw std::invalid_argument("verify supports --max-word-len in 1..7");
    return {refined_arrays(max_word_len), descent_classes(max_word_len), bijection(std::min(max_word_len, 6)),
            entringer(max_word_len), phi_forms(), partitions()};
}

}  // namespace cyclenum
