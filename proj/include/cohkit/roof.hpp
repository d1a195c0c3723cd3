#pragma once

#include <cstdint>
#include <vector>

#include "cohkit/poly.hpp"
#include "cohkit/qstate.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

// Probability-weighted pure-state ensemble representing a density matrix.
struct Decomposition {
    struct Entry {
        double probability;
        PureState state;
    };
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
    CMatrix reconstruct(std::size_t dim) const;
    double reconstruction_error(const DensityMatrix& rho) const;
};

struct SolverConfig {
    std::size_t decomposition_size = 0;  // 0 -> rank + 2
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    std::size_t max_sweeps = 400;    // refinement iteration cap
    double step_tolerance = 1e-10;   // line-search interval width
    double value_tolerance = 1e-9;   // sweep improvement stop
    unsigned threads = 1;            // 0 -> hardware concurrency
};

// sqrt(p_i) |psi_i> = sum_k V_ik sqrt(lambda_k) |v_k> for an n x r matrix V
// with orthonormal columns; entries with probability below 1e-14 are dropped.
Decomposition decomposition_from_isometry(const Spectrum& spectrum, const CMatrix& isometry);

// sum_i p_i * measure(psi_i)
double average_measure(const Decomposition& dec, const HomogeneousPolynomial& p, double scale);

struct RoofResult {
    double value;
    Decomposition decomposition;
    std::size_t best_restart;
};

// Minimizes the average measure over isometry-parametrized decompositions:
// Haar-seeded restarts followed by coordinate descent over two-row Givens
// rotations. The returned value is a certified upper bound witnessed by the
// decomposition; deterministic given the seed, independent of thread count.
RoofResult minimize_convex_roof(const DensityMatrix& rho, const HomogeneousPolynomial& p,
                                double scale, const SolverConfig& cfg = {});

// Coordinate-descent pass over an existing decomposition, accepting only
// strict decreases; the reconstruction target is preserved exactly.
Decomposition local_refine(const Decomposition& dec, const HomogeneousPolynomial& p, double scale,
                           const SolverConfig& cfg = {});

}  // namespace cohkit
