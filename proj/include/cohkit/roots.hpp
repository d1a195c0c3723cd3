#pragma once

#include <vector>

#include "cohkit/types.hpp"

namespace cohkit {

// All roots of c_0 + c_1 z + ... + c_n z^n via simultaneous Aberth-Ehrlich
// iteration. Requires n >= 1 and c_n != 0. Deterministic: fixed initial
// guesses on a perturbed circle at the Cauchy bound, fixed iteration order,
// output sorted by (real, imag). Throws NoConvergence after 500 iterations or
// when a residual exceeds 1e-9 times the largest coefficient magnitude.
std::vector<cplx> aberth_roots(const std::vector<cplx>& coefficients);

}  // namespace cohkit
