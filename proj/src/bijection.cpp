#include "cyclenum/bijection.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclenum/oracle.hpp"

namespace cyclenum {

namespace {

// Successor maps below may describe the 2-cycle on [2], which CyclicOrder
// does not admit; they stay private to F and its inverse.
using Successors = std::vector<int>;

int& at(Successors& succ, int x) { return succ[static_cast<std::size_t>(x - 1)]; }
int at(const Successors& succ, int x) { return succ[static_cast<std::size_t>(x - 1)]; }

int arc_content(const Successors& succ, int from, int to) {
    int count = 0;
    for (int x = at(succ, from); x != to; x = at(succ, x)) ++count;
    return count;
}

Successors without_max(const Successors& succ) {
    const int n = static_cast<int>(succ.size());
    Successors out(succ.begin(), succ.end() - 1);
    for (int& s : out) {
        if (s == n) s = at(succ, n);
    }
    return out;
}

int last_value_from_content(int m, int beta) { return m % 2 == 0 ? m - beta : 1 + beta; }
int content_from_last_value(int m, int last) { return m % 2 == 0 ? m - last : last - 1; }

}  // namespace

Permutation shrink_d(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 2) throw std::invalid_argument("d needs a permutation of [n] with n >= 2");
    const int pivot = sigma(n);
    std::vector<int> images(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) images[static_cast<std::size_t>(i - 1)] = sigma(i) < pivot ? sigma(i) : sigma(i) - 1;
    return Permutation(std::move(images));
}

SplitPair split_D(const Permutation& sigma) { return {shrink_d(sigma), sigma(sigma.size())}; }

Permutation unsplit_D(const SplitPair& pair) {
    const int n = pair.reduced.size() + 1;
    if (pair.last < 1 || pair.last > n) {
        throw std::invalid_argument("last value " + std::to_string(pair.last) + " outside [1, " + std::to_string(n) + "]");
    }
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int v : pair.reduced.images()) images.push_back(v < pair.last ? v : v + 1);
    images.push_back(pair.last);
    return Permutation(std::move(images));
}

Permutation forward_F(const CyclicOrder& z) {
    const int n = z.size() - 1;
    // contents[m] = c(m, m+1) in the order restricted to [m+1]
    std::vector<int> contents(static_cast<std::size_t>(n) + 1, 0);
    Successors succ = z.successors();
    for (int m = n; m >= 2; --m) {
        contents[static_cast<std::size_t>(m)] = arc_content(succ, m, m + 1);
        succ = without_max(succ);
    }
    Permutation sigma = Permutation::identity(1);
    for (int m = 2; m <= n; ++m) {
        sigma = unsplit_D({sigma, last_value_from_content(m, contents[static_cast<std::size_t>(m)])});
    }
    return sigma;
}

CyclicOrder inverse_F(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 2) throw std::invalid_argument("inverse_F needs n >= 2 (cyclic orders live on [n+1], n+1 >= 3)");
    // reductions[m] is the permutation of [m] obtained by applying d n-m times
    std::vector<Permutation> reductions(static_cast<std::size_t>(n) + 1);
    reductions[static_cast<std::size_t>(n)] = sigma;
    for (int m = n; m >= 2; --m) reductions[static_cast<std::size_t>(m - 1)] = shrink_d(reductions[static_cast<std::size_t>(m)]);

    Successors succ = {2, 1};
    for (int m = 2; m <= n; ++m) {
        const auto& current = reductions[static_cast<std::size_t>(m)];
        const int beta = content_from_last_value(m, current(m));
        int x = m;
        for (int step = 0; step < beta; ++step) x = at(succ, x);
        succ.push_back(at(succ, x));
        at(succ, x) = m + 1;
    }
    return CyclicOrder::from_successors(std::move(succ));
}

bool descent_transport_check(const SignWord& w) {
    if (w.empty() || w.size() > 7) throw std::invalid_argument("descent_transport_check needs 1 <= |w| <= 7");
    const auto target = involution_i(w);
    bool ok = true;
    oracle::for_each_cyclic_order(static_cast<int>(w.size()) + 2, [&](const CyclicOrder& z) {
        if (!ok || cyclic_descent_pattern(z) != w) return;
        if (descent_pattern(forward_F(z)) != target) ok = false;
    });
    return ok;
}

BigCount entringer_by_content(int n, int i) {
    if (n < 1 || n > 9) throw std::invalid_argument("entringer_by_content needs 1 <= n <= 9");
    if (i < 1 || i > n) throw std::invalid_argument("entringer index i must be in 1..n");
    // The single order on [2]: the unique up/down permutation of [1] ends in 1.
    if (n == 1) return 1;
    const auto pattern = SignWord::all_plus(static_cast<std::size_t>(n - 1));
    BigCount count = 0;
    oracle::for_each_cyclic_order(n + 1, [&](const CyclicOrder& z) {
        if (cyclic_descent_pattern(z) != pattern) return;
        const int c = n % 2 == 1 ? z.content(n, n + 1) : z.content(n + 1, n);
        if (c + 1 == i) ++count;
    });
    return count;
}

}  // namespace cyclenum
