#pragma once

#include <array>
#include <vector>

#include "cyclenum/homo_poly.hpp"
#include "cyclenum/phi.hpp"
#include "cyclenum/sign_word.hpp"

namespace cyclenum {

// Higher-dimensional boustrophedons. Each engine keeps the generating
// polynomials for the current word and extends the word one letter at a time
// by applying Phi operators; coefficients count cyclic orders refined by the
// contents of the arcs between reference points.

/// P_w in two variables: coefficient of X1^i X2^j counts orders of P_w whose
/// content pair (c(n-1,n), c(n,n-1)) is (i,j) for even n and (j,i) for odd n.
/// Degree |w|.
class PEvolution {
public:
    explicit PEvolution(Sign first, PhiKernel kernel = PhiKernel::Prefix);
    void advance(Sign s);
    const SignWord& word() const noexcept { return word_; }
    const HomoPoly& poly() const noexcept { return poly_; }

private:
    SignWord word_;
    HomoPoly poly_;
    PhiKernel kernel_;
};

/// The pair (Q_w^+, Q_w^-) in three variables, degree |w|-1.
class QEvolution {
public:
    explicit QEvolution(Sign first, PhiKernel kernel = PhiKernel::Prefix);
    void advance(Sign s);
    const SignWord& word() const noexcept { return word_; }
    const HomoPoly& plus() const noexcept { return plus_; }
    const HomoPoly& minus() const noexcept { return minus_; }
    const HomoPoly& get(Sign eta) const noexcept { return eta == Sign::Plus ? plus_ : minus_; }

private:
    SignWord word_;
    HomoPoly plus_;
    HomoPoly minus_;
    PhiKernel kernel_;
};

/// R_w^(1..6) in four variables, degree |w|-2. Starts from a two-letter word.
class REvolution {
public:
    REvolution(Sign first, Sign second, PhiKernel kernel = PhiKernel::Prefix);
    void advance(Sign s);
    const SignWord& word() const noexcept { return word_; }
    const HomoPoly& get(int alpha) const { return polys_.at(static_cast<std::size_t>(alpha - 1)); }
    const std::array<HomoPoly, 6>& all() const noexcept { return polys_; }

private:
    SignWord word_;
    std::array<HomoPoly, 6> polys_;
    PhiKernel kernel_;
};

struct QPolys {
    HomoPoly plus;
    HomoPoly minus;
};

/// Throws std::invalid_argument on the empty word.
HomoPoly evolve_P(const SignWord& w, PhiKernel kernel = PhiKernel::Prefix);
QPolys evolve_Q(const SignWord& w, PhiKernel kernel = PhiKernel::Prefix);
/// Throws std::invalid_argument when |w| < 2.
std::array<HomoPoly, 6> evolve_R(const SignWord& w, PhiKernel kernel = PhiKernel::Prefix);

BigCount count_P(const SignWord& w);
BigCount count_Q(const SignWord& w, Sign eta);
BigCount count_R_alpha(const SignWord& w, int alpha);
/// #R_w^{eta1,eta2}: (+,+) = R1+R2, (+,-) = R3, (-,+) = R4, (-,-) = R5+R6.
/// One-letter words have no chain types; they are counted directly on the
/// single orders of [3].
BigCount count_R(const SignWord& w, Sign eta1, Sign eta2);

using BoustroLine = std::vector<BigCount>;

/// Size of the descent class S_w, by the linear (one-dimensional)
/// boustrophedon: line k holds the number of permutations of [k] following
/// the first k-1 letters and ending in each value.
BigCount viennot_counts(const SignWord& w);

/// Lines 1..n of the Seidel-Entringer-Arnold triangle; line n is
/// (e_{n,1}, ..., e_{n,n}).
std::vector<BoustroLine> entringer_triangle(int n);

/// Euler numbers E_1..E_n as row sums of entringer_triangle(n).
std::vector<BigCount> euler_numbers(int n);

/// A triangular source array: line k (1-based) has k entries.
using TriangularArray = std::vector<std::vector<BigCount>>;

/// T_n(H): the side-n triangle, constant along constant j, whose bottom line
/// (i = 0, read left to right) is the n-th line of H.
HomoPoly seidel_block(const TriangularArray& h, int n);

/// A_1 = T_1(H), A_n = Phi_{1,1,3}(A_{n-1}) + T_n(H). Throws on ragged H or
/// fewer than n lines.
HomoPoly seidel_sequence(const TriangularArray& h, int n, PhiKernel kernel = PhiKernel::Prefix);

}  // namespace cyclenum
