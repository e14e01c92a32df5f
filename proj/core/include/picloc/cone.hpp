#ifndef PICLOC_CONE_HPP
#define PICLOC_CONE_HPP

#include <span>

#include "picloc/integer_matrix.hpp"

namespace picloc {

/**
 * Decides whether there are lambda >= 0 and epsilon > 0 with
 *   g * lambda + epsilon * x = f
 * over the rationals. `g` is d x n, `x` and `f` have length d.
 *
 * Equalities are removed by exact Gaussian elimination; the remaining
 * inequalities (some strict) are decided by Fourier-Motzkin elimination.
 */
bool strictly_feasible(const IntMatrix& g, std::span<const Integer> x, std::span<const Integer> f);

}   // namespace picloc

#endif
