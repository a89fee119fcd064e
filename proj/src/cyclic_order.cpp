#include "cyclenum/cyclic_order.hpp"

#include <stdexcept>
#include <string>

#include "text_util.hpp"

namespace cyclenum {

namespace {

void require_distinct(const CyclicOrder& z, std::span<const int> points) {
    const int n = z.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int p : points) {
        if (p < 1 || p > n) throw std::invalid_argument("element " + std::to_string(p) + " not in [" + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("repeated element " + std::to_string(p));
        seen[static_cast<std::size_t>(p)] = true;
    }
}

}  // namespace

CyclicOrder::CyclicOrder(std::vector<int> successors) : succ_(std::move(successors)) {
    const int n = static_cast<int>(succ_.size());
    if (n < 3) throw std::invalid_argument("cyclic orders need a ground set of size >= 3");
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int v : succ_) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("successor map is not a bijection of [" + std::to_string(n) + "]");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
    position_.assign(static_cast<std::size_t>(n), -1);
    int x = 1;
    for (int t = 0; t < n; ++t) {
        if (position_[static_cast<std::size_t>(x - 1)] != -1) {
            throw std::invalid_argument("successor map is not a single " + std::to_string(n) + "-cycle");
        }
        position_[static_cast<std::size_t>(x - 1)] = t;
        x = succ_[static_cast<std::size_t>(x - 1)];
    }
}

CyclicOrder CyclicOrder::from_sequence(std::span<const int> sequence) {
    const auto n = sequence.size();
    if (n < 3) throw std::invalid_argument("cyclic orders need a ground set of size >= 3");
    std::vector<int> successors(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        const int x = sequence[t];
        if (x < 1 || static_cast<std::size_t>(x) > n) {
            throw std::invalid_argument("element " + std::to_string(x) + " not in [" + std::to_string(n) + "]");
        }
        if (successors[static_cast<std::size_t>(x - 1)] != 0) {
            throw std::invalid_argument("repeated element " + std::to_string(x));
        }
        successors[static_cast<std::size_t>(x - 1)] = sequence[(t + 1) % n];
    }
    return CyclicOrder(std::move(successors));
}

CyclicOrder CyclicOrder::from_successors(std::vector<int> successors) { return CyclicOrder(std::move(successors)); }

CyclicOrder CyclicOrder::parse(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    const auto labels = detail::parse_int_list(text);
    return from_sequence(labels);
}

CyclicOrder CyclicOrder::identity(int n) {
    if (n < 3) throw std::invalid_argument("cyclic orders need a ground set of size >= 3");
    std::vector<int> successors(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) successors[static_cast<std::size_t>(x - 1)] = x == n ? 1 : x + 1;
    return CyclicOrder(std::move(successors));
}

std::size_t CyclicOrder::index(int x) const {
    if (x < 1 || x > size()) {
        throw std::invalid_argument("element " + std::to_string(x) + " not in [" + std::to_string(size()) + "]");
    }
    return static_cast<std::size_t>(x - 1);
}

int CyclicOrder::offset(int x, int y) const {
    const int n = size();
    return ((position_[index(y)] - position_[index(x)]) % n + n) % n;
}

std::vector<int> CyclicOrder::cycle() const {
    std::vector<int> out;
    out.reserve(succ_.size());
    int x = 1;
    do {
        out.push_back(x);
        x = succ_[static_cast<std::size_t>(x - 1)];
    } while (x != 1);
    return out;
}

std::string CyclicOrder::str() const {
    std::string out;
    for (int x : cycle()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(x);
    }
    return out;
}

bool CyclicOrder::contains(int x, int y, int z) const {
    if (x == y || y == z || x == z) throw std::invalid_argument("triple elements must be distinct");
    return offset(x, y) < offset(x, z);
}

int CyclicOrder::content(int i, int j) const {
    if (i == j) throw std::invalid_argument("content needs two distinct elements");
    return offset(i, j) - 1;
}

bool in_order(const CyclicOrder& z, int x, int y, int w) { return z.contains(x, y, w); }

bool validate_cyclic_axioms(const CyclicOrder& z) {
    const int n = z.size();
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            if (y == x) continue;
            for (int w = 1; w <= n; ++w) {
                if (w == x || w == y) continue;
                const bool xyw = z.contains(x, y, w);
                // totality + asymmetry
                if (xyw == z.contains(w, y, x)) return false;
                // cyclicity
                if (xyw && !z.contains(y, w, x)) return false;
                if (!xyw) continue;
                for (int u = 1; u <= n; ++u) {
                    if (u == x || u == y || u == w) continue;
                    // transitivity
                    if (z.contains(x, w, u) && !z.contains(x, y, u)) return false;
                }
            }
        }
    }
    return true;
}

int content(const CyclicOrder& z, int i, int j) { return z.content(i, j); }

std::vector<int> multi_content(const CyclicOrder& z, std::span<const int> points) {
    if (points.size() < 2) throw std::invalid_argument("multi-content needs at least two points");
    require_distinct(z, points);
    std::vector<int> out(points.size());
    for (std::size_t t = 0; t < points.size(); ++t) out[t] = z.content(points[t], points[(t + 1) % points.size()]);
    return out;
}

std::vector<int> multi_content(const CyclicOrder& z, std::initializer_list<int> points) {
    return multi_content(z, std::span<const int>(points.begin(), points.size()));
}

bool is_chain(const CyclicOrder& z, std::span<const int> points) {
    if (points.size() < 3) throw std::invalid_argument("a chain needs at least three points");
    require_distinct(z, points);
    for (std::size_t t = 2; t < points.size(); ++t) {
        if (!z.contains(points[0], points[t - 1], points[t])) return false;
    }
    return true;
}

bool is_chain(const CyclicOrder& z, std::initializer_list<int> points) {
    return is_chain(z, std::span<const int>(points.begin(), points.size()));
}

CyclicOrder delete_max(const CyclicOrder& z) {
    const int n = z.size();
    if (n < 4) throw std::invalid_argument("delete_max needs a ground set of size >= 4");
    std::vector<int> successors(static_cast<std::size_t>(n - 1));
    for (int x = 1; x < n; ++x) {
        const int s = z.succ(x);
        successors[static_cast<std::size_t>(x - 1)] = s == n ? z.succ(n) : s;
    }
    return CyclicOrder::from_successors(std::move(successors));
}

SignWord cyclic_descent_pattern(const CyclicOrder& z) {
    const int n = z.size();
    std::vector<Sign> signs(static_cast<std::size_t>(n - 2));
    for (int i = 1; i <= n - 2; ++i) {
        signs[static_cast<std::size_t>(i - 1)] = z.contains(i, i + 1, i + 2) ? Sign::Plus : Sign::Minus;
    }
    return SignWord(std::move(signs));
}

}  // namespace cyclenum
