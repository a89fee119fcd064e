// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclenum/array_io.hpp"
#include "cyclenum/bijection.hpp"
#include "cyclenum/boustrophedon.hpp"
#include "cyclenum/density.hpp"
#include "cyclenum/oracle.hpp"
#include "cyclenum/phi.hpp"

using namespace cyclenum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<BigCount> big(std::initializer_list<long> values) {
    std::vector<BigCount> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

Outcome table_one() {
    const auto euler = big({1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792});
    const auto qplus = big({1, 1, 3, 11, 38, 169, 899, 5047, 31914, 226205});
    const auto rpp = big({1, 1, 2, 9, 31, 128, 708, 4015, 24865, 177444});
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto w = SignWord::all_plus(n);
        if (count_P(w) != euler[n - 1]) return fail("#P mismatch at n=" + std::to_string(n));
        if (count_Q(w, Sign::Plus) != qplus[n - 1]) return fail("#Q+ mismatch at n=" + std::to_string(n));
        if (count_R(w, Sign::Plus, Sign::Plus) != rpp[n - 1]) return fail("#R++ mismatch at n=" + std::to_string(n));
    }
    return {true, "n = 1..10, three sequences"};
}

Outcome entringer_five() {
    const std::vector<std::vector<BigCount>> expected = {big({1}), big({0, 1}), big({1, 1, 0}), big({0, 1, 2, 2}), big({5, 5, 4, 2, 0})};
    if (entringer_triangle(5) != expected) return fail("rows differ");
    return {true, "5 rows"};
}

Outcome q_triangles() {
    using Rows = std::vector<std::vector<BigCount>>;
    struct Case {
        const char* word;
        Rows plus;
        Rows minus;
    };
    const std::vector<Case> cases = {
        {"+", {big({1})}, {big({0})}},
        {"++", {big({0}), big({0, 1})}, {big({1}), big({0, 0})}},
        {"+++", {big({0}), big({1, 0}), big({1, 0, 1})}, {big({1}), big({0, 1}), big({0, 0, 0})}},
        {"++++", {big({0}), big({1, 1}), big({1, 2, 1}), big({1, 2, 1, 1})}, {big({1}), big({1, 1}), big({1, 0, 1}), big({0, 0, 0, 0})}},
    };
    for (const auto& c : cases) {
        const auto q = evolve_Q(SignWord::parse(c.word));
        if (triangle_rows(q.plus) != c.plus) return fail(std::string("T+ differs for ") + c.word);
        if (triangle_rows(q.minus) != c.minus) return fail(std::string("T- differs for ") + c.word);
    }
    return {true, "8 triangles"};
}

Outcome oracle_equivalence() {
    int words = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
        const auto counts = oracle::classify_all(static_cast<int>(len) + 2);
        for (const auto& w : all_words(len)) {
            ++words;
            const auto& rec = counts.by_word.at(w);
            const auto q = evolve_Q(w);
            if (q.plus != oracle::refined_f_brute(w, Sign::Plus) || q.minus != oracle::refined_f_brute(w, Sign::Minus)) {
                return fail("Q coefficients differ at w=" + w.str());
            }
            if (q.plus.sum() != rec.q_plus || q.minus.sum() != rec.q_minus || count_P(w) != rec.p) {
                return fail("class sums differ at w=" + w.str());
            }
            if (len < 2) continue;  // R arrays start at two letters
            const auto r = evolve_R(w);
            for (int alpha = 1; alpha <= 6; ++alpha) {
                const auto& poly = r[static_cast<std::size_t>(alpha - 1)];
                if (poly != oracle::refined_g_brute(w, alpha)) return fail("R coefficients differ at w=" + w.str());
                if (poly.sum() != rec.r[static_cast<std::size_t>(alpha - 1)]) return fail("R sum differs at w=" + w.str());
            }
        }
    }
    return {true, std::to_string(words) + " words"};
}

Outcome bijection_suite() {
    for (int n = 2; n <= 7; ++n) {
        std::set<Permutation> images;
        bool ok = true;
        std::string where;
        oracle::for_each_cyclic_order(n + 1, [&](const CyclicOrder& z) {
            if (!ok) return;
            const auto sigma = forward_F(z);
            if (inverse_F(sigma) != z || descent_pattern(sigma) != involution_i(cyclic_descent_pattern(z))) {
                ok = false;
                where = z.str();
            }
            images.insert(sigma);
        });
        if (!ok) return fail("round trip or descent transport fails at Z=" + where);
        BigCount factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        if (BigCount(static_cast<unsigned long>(images.size())) != factorial) return fail("F not onto at n=" + std::to_string(n));
    }
    const auto triangle = entringer_triangle(8);
    for (int n = 1; n <= 8; ++n) {
        for (int i = 1; i <= n; ++i) {
            if (entringer_by_content(n, i) != triangle[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)]) {
                return fail("Entringer by content differs at (" + std::to_string(n) + "," + std::to_string(i) + ")");
            }
        }
    }
    return {true, "n <= 7 bijective with descent transport; Entringer n <= 8"};
}

Outcome operator_equivalence() {
    long checks = 0;
    for (int m = 2; m <= 4; ++m) {
        for (int d = 0; d <= 5; ++d) {
            for (const auto& e : HomoPoly(m, d).exponent_list()) {
                const auto mono = HomoPoly::monomial(e, m);
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b)
                        for (int c = 1; c <= m; ++c) {
                            if (b == c) continue;
                            const auto ex = phi({a, b, c}, mono);
                            if (ex != phi_index_form({a, b, c}, mono) || ex != phi_prefix({a, b, c}, mono)) {
                                return fail("monomial disagreement at m=" + std::to_string(m) + " d=" + std::to_string(d));
                            }
                            if (ex.degree() != d + 1) return fail("degree not raised");
                            ++checks;
                        }
            }
        }
    }
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> pick_deg(0, 8), pick_terms(1, 10);
    std::uniform_int_distribution<long> pick_coeff(-999999, 999999);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 2 + trial % 3;
        const int d = pick_deg(rng);
        HomoPoly p(m, d), q(m, d);
        std::uniform_int_distribution<std::size_t> cell(0, p.size() - 1);
        for (int t = pick_terms(rng); t > 0; --t) p.coefficients()[cell(rng)] += pick_coeff(rng);
        for (int t = pick_terms(rng); t > 0; --t) q.coefficients()[cell(rng)] += pick_coeff(rng);
        std::uniform_int_distribution<int> pick(1, m);
        PhiIndices idx{pick(rng), pick(rng), pick(rng)};
        while (idx.c == idx.b) idx.c = pick(rng);
        const auto ex = phi(idx, p);
        if (ex != phi_index_form(idx, p) || ex != phi_prefix(idx, p)) return fail("random disagreement at trial " + std::to_string(trial));
        if (ex.degree() != d + 1) return fail("degree not raised at trial " + std::to_string(trial));
        if (phi_prefix(idx, p + q) != phi_prefix(idx, p) + phi_prefix(idx, q)) return fail("linearity fails at trial " + std::to_string(trial));
        ++checks;
    }
    return {true, std::to_string(checks) + " operator applications (1000 random sparse)"};
}

Outcome conjecture() {
    const auto report = conjecture_report(50);
    const long double tol = 1e-7L;
    for (int alpha = 0; alpha < 6; ++alpha) {
        if (!(report.deviations[static_cast<std::size_t>(alpha)] <= tol)) return fail("alpha " + std::to_string(alpha + 1) + " off");
    }
    if (!(report.q_plus_deviation <= tol)) return fail("Q+ density off");
    if (!(report.r_plus_plus_deviation <= tol)) return fail("R++ density off");
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3Le at n=50", report.max_deviation());
    return {true, buf};
}

Outcome partitions() {
    std::mt19937_64 rng(31337);
    int tested = 0;
    for (std::size_t len = 2; len <= 20; ++len) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto w = SignWord::from_bits(rng(), len);
            const auto p = count_P(w);
            const auto q = evolve_Q(w);
            const auto r = evolve_R(w);
            BigCount r_total = 0;
            for (const auto& poly : r) r_total += poly.sum();
            if (q.plus.sum() + q.minus.sum() != p || r_total != p) return fail("partition fails at w=" + w.str());
            if (r[0].sum() + r[1].sum() + r[2].sum() != q.plus.sum()) return fail("Q+ split fails at w=" + w.str());
            ++tested;
        }
    }
    return {true, std::to_string(tested) + " random words, |w| = 2..20"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;  // 0 means no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "first terms of #P, #Q+, #R++ for +^n", 1.0, table_one},
        {2, "boustrophedon rows for n <= 5", 0, entringer_five},
        {3, "Q triangles for +, ++, +++, ++++", 0, q_triangles},
        {4, "engine arrays equal brute-force counts, |w| <= 6", 120.0, oracle_equivalence},
        {5, "bijection F and Entringer numbers by content", 0, bijection_suite},
        {6, "Phi expansion, index form and prefix form agree", 0, operator_equivalence},
        {7, "densities at n=50 within 1e-7 of the conjectured limits", 60.0, conjecture},
        {8, "P = Q+ + Q- = sum of R on random words", 0, partitions},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && c.budget_s > 0 && secs > c.budget_s) out = fail("took longer than " + std::to_string(c.budget_s) + " s");
        failures += out.ok ? 0 : 1;
        std::printf("%s [%d] %s: %s (%.3f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
