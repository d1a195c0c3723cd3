#pragma once

#include <cmath>
#include <vector>

#include "cohkit/qstate.hpp"
#include "cohkit/random.hpp"
#include "cohkit/types.hpp"

namespace cohkit::testing {

inline PureState state_from_reals(std::vector<double> reals) {
    std::vector<cplx> amps(reals.begin(), reals.end());
    return PureState::validated(std::move(amps));
}

inline PureState basis_state(std::size_t d, std::size_t i) {
    std::vector<cplx> amps(d, 0.0);
    amps[i] = 1.0;
    return PureState::validated(std::move(amps));
}

// (|i> + |j>)/sqrt(2) embedded in dimension d
inline PureState two_level_plus(std::size_t d, std::size_t i, std::size_t j) {
    std::vector<cplx> amps(d, 0.0);
    amps[i] = 1.0 / std::sqrt(2.0);
    amps[j] = 1.0 / std::sqrt(2.0);
    return PureState::validated(std::move(amps));
}

// (|i> - |j>)/sqrt(2) embedded in dimension d
inline PureState two_level_minus(std::size_t d, std::size_t i, std::size_t j) {
    std::vector<cplx> amps(d, 0.0);
    amps[i] = 1.0 / std::sqrt(2.0);
    amps[j] = -1.0 / std::sqrt(2.0);
    return PureState::validated(std::move(amps));
}

inline DensityMatrix random_density(std::size_t d, std::size_t rank, RandomStream& rng) {
    CMatrix m(d, d);
    std::vector<double> weights(rank);
    double wsum = 0.0;
    for (std::size_t k = 0; k < rank; ++k) {
        weights[k] = -std::log(1.0 - rng.uniform());
        wsum += weights[k];
    }
    for (std::size_t k = 0; k < rank; ++k) {
        std::vector<cplx> v = rng.haar_state(d);
        double w = weights[k] / wsum;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                m.at(r, c) += w * v[r] * std::conj(v[c]);
            }
        }
    }
    m.hermitize();
    return DensityMatrix::validated(std::move(m));
}

// Stinespring-style random Kraus set: an isometry from C^d to C^d (x) C^k cut
// into k blocks.
inline std::vector<CMatrix> random_kraus(std::size_t d, std::size_t n_ops, RandomStream& rng) {
    CMatrix w = rng.haar_isometry(d * n_ops, d);
    std::vector<CMatrix> kraus(n_ops, CMatrix(d, d));
    for (std::size_t n = 0; n < n_ops; ++n) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                kraus[n].at(r, c) = w.at(n * d + r, c);
            }
        }
    }
    return kraus;
}

}  // namespace cohkit::testing
