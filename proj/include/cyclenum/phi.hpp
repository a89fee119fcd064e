#pragma once

#include "cyclenum/homo_poly.hpp"

namespace cyclenum {

/// Variable indices (1-based) of a Phi_{a,b,c} operator. b != c; a may equal
/// b or c.
struct PhiIndices {
    int a;
    int b;
    int c;
};

/// The degree-raising linear operator Phi_{a,b,c}, defined on monomials by
///
///   X^i  ->  (prod_{l not in {b,c}} X_l^{i_l}) * X_a^{i_b + 1} * sum_{k=0}^{i_c} X_b^{i_c - k} X_c^k
///
/// This version expands every monomial of P term by term.
HomoPoly phi(PhiIndices idx, const HomoPoly& p);

/// Coefficient form: every output coefficient mu_i is the sum of the input
/// coefficients lambda_{i'} over the preimage index set I_{a,b,c}(i). Each sum
/// is evaluated directly.
HomoPoly phi_index_form(PhiIndices idx, const HomoPoly& p);

/// Same map as phi_index_form, with each preimage sum read off running prefix
/// sums along the summation line: O(cells) per application.
HomoPoly phi_prefix(PhiIndices idx, const HomoPoly& p);

/// Which implementation the evolution engines apply.
enum class PhiKernel { Prefix, Expand, IndexForm };

HomoPoly apply_phi(PhiKernel kernel, PhiIndices idx, const HomoPoly& p);

}  // namespace cyclenum
