#pragma once

#include <array>
#include <functional>
#include <map>

#include "cyclenum/cyclic_order.hpp"
#include "cyclenum/homo_poly.hpp"
#include "cyclenum/sign_word.hpp"

namespace cyclenum::oracle {

// Brute force over all (n-1)! cyclic orders. Used as ground truth for the
// recurrences and the bijection, never as an engine.

inline constexpr int kDefaultMaxN = 10;
inline constexpr int kHardMaxN = 12;

/// The ground-set guard in effect: CYCLENUM_MAX_ORACLE_N when set (clamped to
/// kHardMaxN), otherwise kDefaultMaxN.
int max_ground_set();

/// Throws std::invalid_argument unless 3 <= n <= limit (limit <= kHardMaxN).
void check_ground_set(int n, int limit);

/// Calls `visit` once per total cyclic order on [n]. Element 1 is held at the
/// start of the cycle and the other labels run through all permutations.
/// Cost (n-1)!. `limit` overrides the guard; 0 means max_ground_set().
void for_each_cyclic_order(int n, const std::function<void(const CyclicOrder&)>& visit, int limit = 0);

std::vector<CyclicOrder> enumerate_cyclic_orders(int n, int limit = 0);

struct ClassRecord {
    BigCount p = 0;
    BigCount q_plus = 0;
    BigCount q_minus = 0;
    std::array<BigCount, 6> r{};  // r[alpha - 1]; only filled for n >= 4
};

struct ClassCounts {
    int n = 0;
    std::map<SignWord, ClassRecord> by_word;  // every word of length n-2
};

/// Which of the six chains through 1, 2, n-1, n the order contains (1..6).
/// Requires n >= 4.
int chain_type(const CyclicOrder& z);

/// One pass over all orders on [n], classifying each by cyclic descent
/// pattern, by the orientation of (n-1, n, 1), and (n >= 4) by chain type.
ClassCounts classify_all(int n, int limit = 0);

/// f^eta_{w,i,j,k} as a degree |w|-1 polynomial in three variables: the
/// multi-content of (n-1, n, 1) for eta = +, of (n, n-1, 1) for eta = -.
/// |w| <= 8.
HomoPoly refined_f_brute(const SignWord& w, Sign eta);

/// g^(alpha)_{w,i,j,k,l} as a degree |w|-2 polynomial in four variables.
/// 2 <= |w| <= 7, 1 <= alpha <= 6.
HomoPoly refined_g_brute(const SignWord& w, int alpha);

/// e_{w,i,j}: the content pair of (n-1, n), read as (i, j) for even n and as
/// (j, i) for odd n. Degree |w|, |w| <= 8.
HomoPoly refined_e_brute(const SignWord& w);

/// Number of permutations of [|w|+1] with descent pattern w. |w| <= 9.
BigCount count_descent_class_brute(const SignWord& w);

/// #R_w^{eta1,eta2} by direct membership on orders of [|w|+2].
BigCount count_r_signs_brute(const SignWord& w, Sign eta1, Sign eta2);

}  // namespace cyclenum::oracle
