#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cohkit/matrix.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

// Seeded random stream with explicit substream derivation. All sampling goes
// through next_u64() so results are reproducible across standard libraries
// (std::*_distribution output is implementation-defined and is avoided).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    // Independent substream; derive(i) results do not depend on how much of
    // the parent stream was consumed.
    RandomStream derive(std::uint64_t stream) const;

    std::uint64_t next_u64();
    std::uint64_t next_below(std::uint64_t n);
    double uniform();  // [0, 1)
    double normal();   // standard normal, Box-Muller
    cplx normal_complex();

    std::vector<cplx> haar_state(std::size_t dim);
    // rows x cols complex matrix with orthonormal columns, Haar-distributed
    // (Gaussian matrix followed by modified Gram-Schmidt).
    CMatrix haar_isometry(std::size_t rows, std::size_t cols);
    std::vector<std::size_t> permutation(std::size_t n);

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cohkit
