#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cohkit/qstate.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

// Degree-h homogeneous polynomial in the state amplitudes: a sparse map from
// exponent multi-indices (k_1..k_d), sum k_i = h, to complex coefficients.
// The measure itself is scale * |P(psi)|^power.
class HomogeneousPolynomial {
  public:
    using TermMap = std::map<std::vector<int>, cplx>;

    static HomogeneousPolynomial make(std::size_t dim, int degree, double power, TermMap terms);

    std::size_t dim() const { return dim_; }
    int degree() const { return degree_; }
    double power() const { return power_; }
    const TermMap& terms() const { return terms_; }

    // P(a) for an arbitrary (not necessarily normalized) amplitude vector.
    template <typename T>
    std::complex<T> raw_eval(const std::vector<std::complex<T>>& amplitudes) const {
        std::complex<T> sum = 0.0;
        for (const auto& [exponents, coeff] : terms_) {
            std::complex<T> prod(static_cast<T>(coeff.real()), static_cast<T>(coeff.imag()));
            for (std::size_t i = 0; i < dim_; ++i) {
                for (int k = 0; k < exponents[i]; ++k) {
                    prod *= amplitudes[i];
                }
            }
            sum += prod;
        }
        return sum;
    }

  private:
    HomogeneousPolynomial(std::size_t dim, int degree, double power, TermMap terms)
        : dim_(dim), degree_(degree), power_(power), terms_(std::move(terms)) {}

    std::size_t dim_;
    int degree_;
    double power_;
    TermMap terms_;
};

// The geometric-mean measure: P(a) = a_1 a_2 ... a_d with degree d and power
// 2/d. Evaluating with scale = d gives d |a_1...a_d|^{2/d}.
HomogeneousPolynomial g_polynomial(std::size_t d);

// scale * |P(psi)|^power
double evaluate(const HomogeneousPolynomial& p, const PureState& psi, double scale);

// 2|a_1 a_2| for qubits; the d = 2 polynomial form of the l1 measure.
double c_l1_pure(const PureState& psi);

struct UnivariatePoly {
    // c_0..c_h of q(w); trailing zeros permitted (degree may drop below h).
    std::vector<cplx> coefficients;

    cplx eval(cplx w) const;
};

// Coefficients of q(w) = P(psi1 + w psi2), recovered by sampling P at h+1
// points on the unit circle and inverse-DFT interpolation.
UnivariatePoly superposition_poly(const HomogeneousPolynomial& p, const PureState& psi1,
                                  const PureState& psi2);

// Roots of the trimmed polynomial (leading near-zero coefficients stripped).
std::vector<cplx> roots(const UnivariatePoly& q);

struct WitnessCandidate {
    std::optional<cplx> omega;  // absent for the "psi2 already has zero measure" branch
    PureState state;
    double value;
};

// One polished candidate per root of q(w), normalized superposition states
// (psi1 + w psi2)/Z(w) with their measure values.
std::vector<WitnessCandidate> witness_candidates(const HomogeneousPolynomial& p,
                                                 const PureState& psi1, const PureState& psi2,
                                                 double scale = 1.0);

// The candidates whose measure falls below the witness tolerance 1e-8; at
// least one whenever the measure of psi2 is positive. If psi2 itself has zero
// measure the list is just {psi2}.
std::vector<PureState> zero_coherence_witness(const HomogeneousPolynomial& p,
                                              const PureState& psi1, const PureState& psi2,
                                              double scale = 1.0);

struct Theorem2Report {
    int trials = 0;
    double max_value = 0.0;
    bool violation = false;
};

// Samples Haar-random states supported on random proper basis subsets and
// reports the largest measure value seen. A measure satisfying the vanishing
// condition must stay below 1e-8 on every such state.
Theorem2Report check_theorem2_vanishing(const HomogeneousPolynomial& p, double scale, int trials,
                                        std::uint64_t rng_seed);

}  // namespace cohkit
