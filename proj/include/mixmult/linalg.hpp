#ifndef MIXMULT_LINALG_HPP
#define MIXMULT_LINALG_HPP

#include <vector>

#include "mixmult/fields.hpp"

namespace mixmult {

// Solve A x = b exactly for square integer A by fraction-free (Bareiss)
// elimination; divisions stay exact throughout, the back substitution is
// rational. Throws on a singular matrix.
std::vector<Rat> solve_exact(std::vector<std::vector<Int>> A, std::vector<Int> b);

} // namespace mixmult

#endif
