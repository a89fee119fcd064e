#pragma once

#include "cyclenum/cyclic_order.hpp"
#include "cyclenum/homo_poly.hpp"
#include "cyclenum/permutation.hpp"
#include "cyclenum/sign_word.hpp"

namespace cyclenum {

/// The image of D: sigma -> (d(sigma), sigma(n)).
struct SplitPair {
    Permutation reduced;  // on [n-1]
    int last;             // in [n]
};

/// d(sigma)(i) = sigma(i) if sigma(i) < sigma(n), sigma(i) - 1 otherwise, i <= n-1.
Permutation shrink_d(const Permutation& sigma);

SplitPair split_D(const Permutation& sigma);

/// Inverse of split_D: reinserts `last` as the final value and shifts the
/// reduced values >= last up by one.
Permutation unsplit_D(const SplitPair& pair);

/// The bijection F from cyclic orders on [n+1] to permutations of [n].
///
/// Built by peeling the largest label off repeatedly: at each size m+1 the
/// content beta = c(m, m+1) becomes the last value of the permutation of [m]
/// (m - beta for even m, 1 + beta for odd m), and the smaller labels determine
/// the rest through D^{-1}.
Permutation forward_F(const CyclicOrder& z);

/// Inverse of forward_F: inserts n+1 into the cycle so that c(n, n+1) equals
/// n - sigma(n) (n even) or sigma(n) - 1 (n odd), recursively on d(sigma).
/// Requires n >= 2 (the result lives on [n+1], n+1 >= 3).
CyclicOrder inverse_F(const Permutation& sigma);

/// True iff every order with cyclic descent pattern w is mapped by F into the
/// descent class of involution_i(w). |w| <= 7.
bool descent_transport_check(const SignWord& w);

/// Orders on [n+1] with (j, j+1, j+2) for all j <= n-1 and
/// i = 1 + c(n, n+1) (n odd) or 1 + c(n+1, n) (n even). 1 <= i <= n <= 9.
BigCount entringer_by_content(int n, int i);

}  // namespace cyclenum
