#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "cohkit/majorization.hpp"
#include "cohkit/symmetry.hpp"
#include "helpers.hpp"

using namespace cohkit;
using namespace cohkit::testing;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

ProbVector pv(std::vector<double> entries) {
    return ProbVector::validated(std::move(entries));
}

// convex mixture of random permutations of x, hence majorized by x
ProbVector mix_down(const ProbVector& x, RandomStream& rng) {
    std::size_t d = x.size();
    std::vector<double> out(d, 0.0);
    double w1 = 0.3 + 0.4 * rng.uniform();
    std::vector<std::size_t> p1 = rng.permutation(d);
    std::vector<std::size_t> p2 = rng.permutation(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[p1[i]] += w1 * x.entries()[i];
        out[p2[i]] += (1.0 - w1) * x.entries()[i];
    }
    return ProbVector::validated(std::move(out));
}

}  // namespace

TEST_CASE("majorizes on frozen examples") {
    CHECK(majorizes(pv({1.0, 0.0}), pv({0.5, 0.5})));
    CHECK(!majorizes(pv({0.5, 0.5}), pv({1.0, 0.0})));

    // prefix sums 0.5, 0.8, 1.0 vs 0.4, 0.7, 1.0
    CHECK(majorizes(pv({0.5, 0.3, 0.2}), pv({0.4, 0.3, 0.3})));
    CHECK(!majorizes(pv({0.4, 0.3, 0.3}), pv({0.5, 0.3, 0.2})));

    ProbVector x = pv({0.7, 0.2, 0.1});
    CHECK(majorizes(x, x));

    CHECK(throws_code(ErrorCode::LengthMismatch,
                      [] { majorizes(pv({1.0, 0.0}), pv({0.5, 0.3, 0.2})); }));
}

TEST_CASE("probability vector validation") {
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { pv({0.5, 0.4}); }));
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { pv({1.2, -0.2}); }));
}

TEST_CASE("majorization is a preorder on constructed comparable chains") {
    RandomStream rng(151);
    for (std::size_t d = 2; d <= 8; ++d) {
        for (int rep = 0; rep < 1000; ++rep) {
            ProbVector x = ProbVector::from_state(PureState::validated(rng.haar_state(d)));
            ProbVector y = mix_down(x, rng);
            ProbVector z = mix_down(y, rng);
            CHECK(majorizes(x, y));
            CHECK(majorizes(y, z));
            CHECK(majorizes(x, z));  // transitivity along the chain
        }
    }
}

TEST_CASE("the uniform vector is majorized by everything") {
    RandomStream rng(157);
    for (std::size_t d = 2; d <= 6; ++d) {
        ProbVector uniform = ProbVector::from_state(max_coherent(d));
        for (int rep = 0; rep < 200; ++rep) {
            ProbVector x = ProbVector::from_state(PureState::validated(rng.haar_state(d)));
            CHECK(majorizes(x, uniform));
        }
    }
}

TEST_CASE("permuting entries changes neither side") {
    RandomStream rng(163);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t d = 2 + rep % 5;
        ProbVector x = ProbVector::from_state(PureState::validated(rng.haar_state(d)));
        ProbVector y = mix_down(x, rng);
        std::vector<std::size_t> perm = rng.permutation(d);
        std::vector<double> xs(d), ys(d);
        for (std::size_t i = 0; i < d; ++i) {
            xs[perm[i]] = x.entries()[i];
            ys[perm[i]] = y.entries()[i];
        }
        CHECK(majorizes(ProbVector::validated(xs), ProbVector::validated(ys)) ==
              majorizes(x, y));
        CHECK(majorizes(ProbVector::validated(xs), y) == majorizes(x, y));
    }
}

TEST_CASE("incoherently_transformable") {
    RandomStream rng(167);
    for (std::size_t d = 2; d <= 5; ++d) {
        // the maximally coherent state reaches everything
        for (int rep = 0; rep < 50; ++rep) {
            PureState target = PureState::validated(rng.haar_state(d));
            CHECK(incoherently_transformable(max_coherent(d), target));
        }
        // everything reaches a basis state
        for (int rep = 0; rep < 50; ++rep) {
            PureState psi = PureState::validated(rng.haar_state(d));
            CHECK(incoherently_transformable(psi, basis_state(d, rep % d)));
        }
    }
    CHECK(throws_code(ErrorCode::DimensionMismatch, [] {
        incoherently_transformable(max_coherent(2), max_coherent(3));
    }));
}

TEST_CASE("the two-block construction saturates the majorization threshold") {
    // psi_1 = (|0>+|1>)/sqrt(2) on the first block, psi_2 uniform on the
    // second; at alpha = (d_2 |a_j|^2 + 1)^{-1/2} = 1/sqrt(2) the d=4
    // superposition becomes exactly uniform, which (1/2, 1/2, 0, 0)
    // majorizes with all prefix sums tight.
    double alpha = 1.0 / std::sqrt(2.0 * 0.5 + 1.0);
    double beta = std::sqrt(1.0 - alpha * alpha);
    std::vector<cplx> amps(4);
    amps[0] = alpha / std::sqrt(2.0);
    amps[1] = alpha / std::sqrt(2.0);
    amps[2] = beta / std::sqrt(2.0);
    amps[3] = beta / std::sqrt(2.0);
    PureState psi = PureState::validated(std::move(amps));
    PureState phi = two_level_plus(4, 0, 1);
    CHECK(incoherently_transformable(psi, phi));

    ProbVector p = ProbVector::from_state(psi);
    for (int i = 0; i < 4; ++i) {
        CHECK(p.entries()[i] == doctest::Approx(0.25).epsilon(1e-12));
    }

    // an overweighted second block breaks the certificate: squared moduli
    // (0.15, 0.09, 0.06, 0.7) have first prefix 0.7 > 0.5
    PureState heavy = state_from_reals(
            {std::sqrt(0.15), std::sqrt(0.09), std::sqrt(0.06), std::sqrt(0.7)});
    PureState target = state_from_reals({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2), 0.0});
    CHECK(!incoherently_transformable(heavy, target));
}

TEST_CASE("monotonicity_witness on the G measure") {
    HomogeneousPolynomial g3 = g_polynomial(3);
    PureState phi = state_from_reals({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)});
    MonotonicityReport report = monotonicity_witness(g3, 3.0, max_coherent(3), phi);
    CHECK(report.value_initial == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.value_final == doctest::Approx(0.932170).epsilon(1e-6));
    CHECK(!report.violation);

    MonotonicityReport to_basis =
            monotonicity_witness(g_polynomial(4), 4.0, max_coherent(4), basis_state(4, 0));
    CHECK(to_basis.value_initial == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(to_basis.value_final == 0.0);
    CHECK(!to_basis.violation);
}

TEST_CASE("monotonicity_witness flags a non-monotone polynomial") {
    // P = a_1^2: the uniform qubit state measures 0.5 but the reachable
    // basis state measures 1
    HomogeneousPolynomial::TermMap terms;
    terms[std::vector<int>{2, 0}] = 1.0;
    HomogeneousPolynomial bad = HomogeneousPolynomial::make(2, 2, 1.0, std::move(terms));
    MonotonicityReport report =
            monotonicity_witness(bad, 1.0, max_coherent(2), basis_state(2, 0));
    CHECK(report.value_initial == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.value_final == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.violation);
}

TEST_CASE("monotonicity_witness requires a certified pair") {
    HomogeneousPolynomial g2 = g_polynomial(2);
    PureState skew = state_from_reals({std::sqrt(0.9), std::sqrt(0.1)});
    CHECK(throws_code(ErrorCode::NotTransformable,
                      [&] { monotonicity_witness(g2, 2.0, skew, max_coherent(2)); }));
}

TEST_CASE("certified pairs never violate G-measure monotonicity") {
    for (std::size_t d = 2; d <= 4; ++d) {
        HomogeneousPolynomial g = g_polynomial(d);
        RandomStream rng(170 + d);
        for (int rep = 0; rep < 10000; ++rep) {
            auto [psi, phi] = sample_transformable_pair(d, rng);
            MonotonicityReport report =
                    monotonicity_witness(g, static_cast<double>(d), psi, phi);
            CHECK(!report.violation);
        }
    }
}
