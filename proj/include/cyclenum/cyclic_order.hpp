#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclenum/sign_word.hpp"

namespace cyclenum {

/// A total cyclic order on [n], n >= 3, stored as its successor cycle:
/// succ(x) is the element met right after x when turning in the positive
/// direction. (x, y, z) belongs to the order iff walking from x one meets y
/// strictly before z.
///
/// Values are immutable. Equality compares successor maps only, so two
/// readings of the same circle starting at different points are equal.
class CyclicOrder {
public:
    /// Elements of [n] in circular reading order. Throws std::invalid_argument
    /// on duplicates, out-of-range labels, or n < 3.
    static CyclicOrder from_sequence(std::span<const int> sequence);
    static CyclicOrder from_sequence(std::initializer_list<int> sequence) {
        return from_sequence(std::span<const int>(sequence.begin(), sequence.size()));
    }
    /// successors[x-1] = succ(x); must form a single n-cycle.
    static CyclicOrder from_successors(std::vector<int> successors);
    /// Parses the text form "1,3,4,2" (any rotation is accepted).
    static CyclicOrder parse(std::string_view text);
    /// The order 1 -> 2 -> ... -> n -> 1.
    static CyclicOrder identity(int n);

    int size() const noexcept { return static_cast<int>(succ_.size()); }
    int succ(int x) const { return succ_[index(x)]; }
    const std::vector<int>& successors() const noexcept { return succ_; }

    /// The cycle read from element 1.
    std::vector<int> cycle() const;
    /// Text form: comma-separated cycle starting at 1.
    std::string str() const;

    /// True iff (x, y, z) is in the order. Arguments must be distinct labels in [n].
    bool contains(int x, int y, int z) const;

    /// Number of elements strictly inside the arc from i to j.
    int content(int i, int j) const;

    friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) { return a.succ_ == b.succ_; }

private:
    explicit CyclicOrder(std::vector<int> successors);
    std::size_t index(int x) const;
    // offset of y when walking from x, in [0, n)
    int offset(int x, int y) const;

    std::vector<int> succ_;
    std::vector<int> position_;  // position on the walk from 1; not part of equality
};

bool in_order(const CyclicOrder& z, int x, int y, int w);

bool validate_cyclic_axioms(const CyclicOrder& z);

int content(const CyclicOrder& z, int i, int j);

/// (c(y1,y2), c(y2,y3), ..., c(yp,y1)). Requires p >= 2 distinct elements.
std::vector<int> multi_content(const CyclicOrder& z, std::span<const int> points);
std::vector<int> multi_content(const CyclicOrder& z, std::initializer_list<int> points);

/// (y1, ..., yp) is a chain iff y2, ..., yp are met in that order when walking from y1.
bool is_chain(const CyclicOrder& z, std::span<const int> points);
bool is_chain(const CyclicOrder& z, std::initializer_list<int> points);

/// Removes the largest label; triples among the remaining labels are kept. Needs n >= 4.
CyclicOrder delete_max(const CyclicOrder& z);

/// Position i is Plus iff (i, i+1, i+2) is in the order. Length n-2.
SignWord cyclic_descent_pattern(const CyclicOrder& z);

}  // namespace cyclenum
