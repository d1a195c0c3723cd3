#pragma once

#include <utility>
#include <vector>

#include "cohkit/poly.hpp"
#include "cohkit/qstate.hpp"
#include "cohkit/random.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

// Nonnegative entries summing to 1 within 1e-10.
class ProbVector {
  public:
    static ProbVector validated(std::vector<double> entries);
    static ProbVector from_state(const PureState& psi);

    std::size_t size() const { return entries_.size(); }
    const std::vector<double>& entries() const { return entries_; }

  private:
    explicit ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {}
    std::vector<double> entries_;
};

// True when x majorizes y (y is majorized by x): every descending-sorted
// prefix sum of x is at least that of y, within 1e-12 in favor of "true".
bool majorizes(const ProbVector& x, const ProbVector& y);

// The majorization sufficient condition for converting psi to phi by an
// incoherent operation: |psi|^2 majorized by |phi|^2. "True" certifies the
// transformation; "false" only means this test does not certify it.
bool incoherently_transformable(const PureState& psi, const PureState& phi);

struct MonotonicityReport {
    double value_initial;
    double value_final;
    bool violation;
};

// For a certified pair psi -> phi, a monotone measure must not increase;
// flags a violation when C(psi) < C(phi) - 1e-9.
MonotonicityReport monotonicity_witness(const HomogeneousPolynomial& p, double scale,
                                        const PureState& psi, const PureState& phi);

// Random (psi, phi) with psi certified transformable to phi: |psi|^2 is a
// convex mixture of permutations of |phi|^2 (Birkhoff), with random phases.
std::pair<PureState, PureState> sample_transformable_pair(std::size_t d, RandomStream& rng);

}  // namespace cohkit
