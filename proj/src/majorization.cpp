#include "cohkit/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace cohkit {

namespace {

constexpr double kPrefixTol = 1e-12;

}  // namespace

ProbVector ProbVector::validated(std::vector<double> entries) {
    require(!entries.empty(), ErrorCode::InvalidArgument, "empty probability vector");
    double sum = 0.0;
    for (double& e : entries) {
        require(e >= -kPrefixTol, ErrorCode::InvalidArgument, "negative probability entry");
        e = std::max(e, 0.0);
        sum += e;
    }
    require(std::abs(sum - 1.0) <= 1e-10, ErrorCode::InvalidArgument,
            "probabilities sum to " + std::to_string(sum));
    return ProbVector(std::move(entries));
}

ProbVector ProbVector::from_state(const PureState& psi) {
    std::vector<double> p(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        p[i] = std::norm(psi.amp(i));
    }
    return ProbVector::validated(std::move(p));
}

bool majorizes(const ProbVector& x, const ProbVector& y) {
    require(x.size() == y.size(), ErrorCode::LengthMismatch,
            "pad the shorter vector with zeros before comparing");
    std::vector<double> xs = x.entries();
    std::vector<double> ys = y.entries();
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    double px = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px < py - kPrefixTol) {
            return false;
        }
    }
    return true;
}

bool incoherently_transformable(const PureState& psi, const PureState& phi) {
    require(psi.dim() == phi.dim(), ErrorCode::DimensionMismatch, "state dimensions differ");
    return majorizes(ProbVector::from_state(phi), ProbVector::from_state(psi));
}

MonotonicityReport monotonicity_witness(const HomogeneousPolynomial& p, double scale,
                                        const PureState& psi, const PureState& phi) {
    require(incoherently_transformable(psi, phi), ErrorCode::NotTransformable,
            "the majorization test does not certify this transformation");
    double vi = evaluate(p, psi, scale);
    double vf = evaluate(p, phi, scale);
    return MonotonicityReport{vi, vf, vi < vf - 1e-9};
}

std::pair<PureState, PureState> sample_transformable_pair(std::size_t d, RandomStream& rng) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "pairs need d >= 2");
    std::vector<cplx> phi_amps = rng.haar_state(d);
    std::vector<double> target(d);
    for (std::size_t i = 0; i < d; ++i) {
        target[i] = std::norm(phi_amps[i]);
    }

    // convex mixture of permutations of the target distribution
    constexpr int kMixTerms = 4;
    double weights[kMixTerms];
    double wsum = 0.0;
    for (int t = 0; t < kMixTerms; ++t) {
        weights[t] = -std::log(1.0 - rng.uniform());
        wsum += weights[t];
    }
    std::vector<double> mixed(d, 0.0);
    for (int t = 0; t < kMixTerms; ++t) {
        std::vector<std::size_t> perm = rng.permutation(d);
        double w = weights[t] / wsum;
        for (std::size_t i = 0; i < d; ++i) {
            mixed[perm[i]] += w * target[i];
        }
    }

    std::vector<cplx> psi_amps(d);
    for (std::size_t i = 0; i < d; ++i) {
        psi_amps[i] = std::polar(std::sqrt(mixed[i]), 2.0 * 3.14159265358979323846 *
                                                              rng.uniform());
    }
    return {PureState::normalized(std::move(psi_amps)), PureState::validated(std::move(phi_amps))};
}

}  // namespace cohkit
