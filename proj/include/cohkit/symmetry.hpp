#pragma once

#include <cstdint>
#include <vector>

#include "cohkit/qstate.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

// The uniform superposition with amplitudes 1/sqrt(d); the one pure state
// invariant under every basis permutation.
PureState max_coherent(std::size_t d);

// One-parameter family p |Psi_d><Psi_d| + (1-p) I/d, equivalently coordinates
// by its overlap K = p (d-1)/d + 1/d with the maximally coherent state.
class SymmetricState {
  public:
    static SymmetricState from_mixing(std::size_t dim, double p);
    static SymmetricState from_overlap(std::size_t dim, double overlap);

    std::size_t dim() const { return dim_; }
    double mixing_p() const { return p_; }
    double overlap() const;
    DensityMatrix materialize() const;

  private:
    SymmetricState(std::size_t dim, double p) : dim_(dim), p_(p) {}
    std::size_t dim_;
    double p_;
};

struct TwirlMode {
    bool exact = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    static TwirlMode exact_mode() { return TwirlMode{}; }
    static TwirlMode sampled(std::size_t n, std::uint64_t seed) {
        return TwirlMode{false, n, seed};
    }
};

// (1/d!) sum_g U_g rho U_g^dag; permutations enumerated in lexicographic
// order. Exact mode is capped at d = 8; sampled mode averages n uniformly
// random permutations with Monte-Carlo error O(1/sqrt(n)).
DensityMatrix twirl(const DensityMatrix& rho, TwirlMode mode = TwirlMode::exact_mode());

// K = <Psi_d| rho |Psi_d>
double overlap_K(const DensityMatrix& rho);

// Minimum G measure over pure states with fixed overlap K: zero up to the
// kink at (d-1)/d, then d (a b^{d-1})^{2/d}.
double cbar_g(std::size_t d, double K);

// Convex roof of the G measure on the symmetric family: max{1 - d(1-K), 0}.
double cg_symmetric(std::size_t d, double K);

// max{1 - d(1-K), 0} evaluated at K(rho); a lower bound on the convex roof
// for arbitrary states.
double cg_lower_bound(const DensityMatrix& rho);

// Tightened bound after pre-treating with a user-supplied incoherent channel:
// the larger of the bound on rho and on channel(rho).
double cg_lower_bound_with_pretreatment(const DensityMatrix& rho,
                                        const std::vector<CMatrix>& kraus);

struct SweepRow {
    double K;
    double cbar;
    double cg;
};

std::vector<SweepRow> sweep_symmetric_curve(std::size_t d, double k_min, double k_max,
                                            std::size_t n_points);

}  // namespace cohkit
