#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

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

// Exact twirl without enumerating the group: uniform diagonal, uniform
// off-diagonal average.
CMatrix twirl_closed_form(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    cplx diag_sum = 0.0;
    cplx off_sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            (i == j ? diag_sum : off_sum) += rho.entry(i, j);
        }
    }
    CMatrix out(d, d);
    cplx diag = diag_sum / static_cast<double>(d);
    cplx off = off_sum / static_cast<double>(d * (d - 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out.at(i, j) = (i == j) ? diag : off;
        }
    }
    return out;
}

double cbar_oracle_highprec(std::size_t d, double k) {
    long double dd = static_cast<long double>(d);
    long double kk = static_cast<long double>(k);
    if (kk <= (dd - 1.0L) / dd) {
        return 0.0;
    }
    long double a = (std::sqrt(kk) - std::sqrt(dd - 1.0L) * std::sqrt(1.0L - kk)) / std::sqrt(dd);
    long double b = (std::sqrt(kk) + std::sqrt(1.0L - kk) / std::sqrt(dd - 1.0L)) / std::sqrt(dd);
    return static_cast<double>(dd * std::pow(a * std::pow(b, dd - 1.0L), 2.0L / dd));
}

}  // namespace

TEST_CASE("max_coherent") {
    PureState p2 = max_coherent(2);
    CHECK(p2.amp(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    PureState p4 = max_coherent(4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p4.amp(i) == cplx(0.5));
    }
    CHECK(std::abs(p4.overlap(p4) - cplx(1.0)) <= 1e-15);
    CHECK(throws_code(ErrorCode::DimensionTooSmall, [] { max_coherent(1); }));
}

TEST_CASE("symmetric states materialize the two-parameter form") {
    SymmetricState s = SymmetricState::from_mixing(3, 0.4);
    DensityMatrix rho = s.materialize();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double expected = (i == j) ? (0.4 / 3.0 + 0.6 / 3.0) : 0.4 / 3.0;
            CHECK(std::abs(rho.entry(i, j) - cplx(expected)) <= 1e-12);
        }
    }

    // invariance under a transposition and a full cycle
    for (const std::vector<std::size_t>& perm :
         {std::vector<std::size_t>{1, 0, 2}, std::vector<std::size_t>{1, 2, 0}}) {
        CMatrix u = permutation_unitary(perm);
        CHECK(max_abs_diff(u * rho.entries() * u.adjoint(), rho.entries()) <= 1e-14);
    }
}

TEST_CASE("overlap coordinates round-trip") {
    SymmetricState s = SymmetricState::from_mixing(4, 0.5);
    CHECK(s.overlap() == doctest::Approx(0.625).epsilon(1e-15));
    SymmetricState back = SymmetricState::from_overlap(4, 0.625);
    CHECK(back.mixing_p() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(throws_code(ErrorCode::KOutOfRange, [] { SymmetricState::from_overlap(4, 0.1); }));
    CHECK(throws_code(ErrorCode::KOutOfRange, [] { SymmetricState::from_overlap(4, 1.1); }));
}

TEST_CASE("twirl maps basis projectors to the maximally mixed state") {
    DensityMatrix rho = basis_state(3, 1).projector();
    DensityMatrix out = twirl(rho);
    CMatrix expected = CMatrix::identity(3);
    expected *= 1.0 / 3.0;
    CHECK(max_abs_diff(out.entries(), expected) <= 1e-14);
    CHECK(overlap_K(out) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("twirl fixes symmetric states and the maximally coherent projector") {
    DensityMatrix rho = SymmetricState::from_mixing(4, 0.3).materialize();
    CHECK(max_abs_diff(twirl(rho).entries(), rho.entries()) <= 1e-12);

    DensityMatrix proj = max_coherent(3).projector();
    CHECK(max_abs_diff(twirl(proj).entries(), proj.entries()) <= 1e-12);
}

TEST_CASE("exact twirl matches the closed form and conserves the overlap") {
    RandomStream rng(67);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (int rep = 0; rep < 100; ++rep) {
            DensityMatrix rho = random_density(d, 1 + rep % d, rng);
            DensityMatrix out = twirl(rho);
            CHECK(max_abs_diff(out.entries(), twirl_closed_form(rho)) <= 1e-12);
            CHECK(std::abs(overlap_K(out) - overlap_K(rho)) <= 1e-10);

            // two-parameter form: equal diagonals, equal off-diagonals
            cplx diag = out.entry(0, 0);
            cplx off = out.entry(0, 1);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    CHECK(std::abs(out.entry(i, j) - (i == j ? diag : off)) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("twirl idempotence") {
    RandomStream rng(71);
    for (std::size_t d = 2; d <= 5; ++d) {
        DensityMatrix rho = random_density(d, d, rng);
        DensityMatrix once = twirl(rho);
        CHECK(max_abs_diff(twirl(once).entries(), once.entries()) <= 1e-10);
    }
}

TEST_CASE("twirl dimension cap and sampled mode") {
    RandomStream rng(73);
    DensityMatrix rho9 = random_density(9, 3, rng);
    CHECK(throws_code(ErrorCode::DimensionTooLargeForExact, [&] { twirl(rho9); }));

    DensityMatrix sampled = twirl(rho9, TwirlMode::sampled(500, 5));
    DensityMatrix again = twirl(rho9, TwirlMode::sampled(500, 5));
    CHECK(max_abs_diff(sampled.entries(), again.entries()) == 0.0);
    // every permutation conserves K, so even the sampled average does
    CHECK(std::abs(overlap_K(sampled) - overlap_K(rho9)) <= 1e-12);
}

TEST_CASE("overlap_K on reference states") {
    CMatrix mixed = CMatrix::identity(5);
    mixed *= 0.2;
    CHECK(overlap_K(DensityMatrix::validated(mixed)) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(overlap_K(max_coherent(4).projector()) == doctest::Approx(1.0).epsilon(1e-13));
    DensityMatrix rho = SymmetricState::from_mixing(4, 0.5).materialize();
    CHECK(overlap_K(rho) == doctest::Approx(0.625).epsilon(1e-13));
}

TEST_CASE("cbar_g: kink, endpoint, and the d=4 reference point") {
    for (std::size_t d = 2; d <= 6; ++d) {
        double kink = (static_cast<double>(d) - 1.0) / static_cast<double>(d);
        CHECK(cbar_g(d, kink) == 0.0);
        CHECK(cbar_g(d, 0.3 * kink) == 0.0);
        CHECK(cbar_g(d, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
    double v = cbar_g(4, 0.9);
    CHECK(std::abs(v - cbar_oracle_highprec(4, 0.9)) <= 1e-13);
    CHECK(v == doctest::Approx(0.76186).epsilon(2e-4));
    CHECK(throws_code(ErrorCode::KOutOfRange, [] { cbar_g(4, -0.1); }));
    CHECK(throws_code(ErrorCode::KOutOfRange, [] { cbar_g(4, 1.1); }));
}

TEST_CASE("cg_symmetric") {
    CHECK(cg_symmetric(4, 0.875) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cg_symmetric(4, 0.75) == 0.0);
    CHECK(cg_symmetric(4, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(throws_code(ErrorCode::KOutOfRange, [] { cg_symmetric(4, 0.1); }));
}

TEST_CASE("cg_lower_bound") {
    CHECK(cg_lower_bound(max_coherent(4).projector()) == doctest::Approx(1.0).epsilon(1e-12));
    CMatrix mixed = CMatrix::identity(3);
    mixed *= 1.0 / 3.0;
    CHECK(cg_lower_bound(DensityMatrix::validated(mixed)) == 0.0);
    DensityMatrix rho = SymmetricState::from_overlap(3, 0.9).materialize();
    CHECK(cg_lower_bound(rho) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(cg_lower_bound(rho) == doctest::Approx(cg_symmetric(3, 0.9)).epsilon(1e-13));
}

TEST_CASE("cg_lower_bound_with_pretreatment") {
    RandomStream rng(79);
    DensityMatrix rho = random_density(3, 2, rng);
    double base = cg_lower_bound(rho);

    std::vector<CMatrix> identity = {CMatrix::identity(3)};
    CHECK(cg_lower_bound_with_pretreatment(rho, identity) == doctest::Approx(base).epsilon(1e-13));

    std::vector<CMatrix> dephasing;
    for (std::size_t i = 0; i < 3; ++i) {
        CMatrix k(3, 3);
        k.at(i, i) = 1.0;
        dephasing.push_back(std::move(k));
    }
    CHECK(cg_lower_bound_with_pretreatment(rho, dephasing) ==
          doctest::Approx(base).epsilon(1e-13));

    DensityMatrix symm = SymmetricState::from_overlap(3, 0.95).materialize();
    std::vector<CMatrix> perm = {permutation_unitary({2, 0, 1})};
    CHECK(cg_lower_bound_with_pretreatment(symm, perm) ==
          doctest::Approx(cg_lower_bound(symm)).epsilon(1e-13));

    // a Hadamard-like unitary generates coherence from basis states
    CMatrix had(2, 2);
    double r = 1.0 / std::sqrt(2.0);
    had.at(0, 0) = r;
    had.at(0, 1) = r;
    had.at(1, 0) = r;
    had.at(1, 1) = -r;
    DensityMatrix rho2 = random_density(2, 2, rng);
    CHECK(throws_code(ErrorCode::ChannelNotIncoherent,
                      [&] { cg_lower_bound_with_pretreatment(rho2, {had}); }));

    CMatrix shrunk = CMatrix::identity(2);
    shrunk *= 0.9;
    CHECK(throws_code(ErrorCode::KrausNotTracePreserving,
                      [&] { cg_lower_bound_with_pretreatment(rho2, {shrunk}); }));
}

TEST_CASE("sweep_symmetric_curve: the d=4 line and edge rows") {
    std::vector<SweepRow> rows = sweep_symmetric_curve(4, 0.75, 1.0, 6);
    REQUIRE(rows.size() == 6);
    const double expected_cg[6] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    for (int i = 0; i < 6; ++i) {
        CHECK(rows[i].cg == doctest::Approx(expected_cg[i]).epsilon(1e-12));
        CHECK(rows[i].cg <= rows[i].cbar + 1e-12);
    }
    CHECK(rows[5].K == doctest::Approx(1.0));
    CHECK(rows[5].cbar == doctest::Approx(1.0).epsilon(1e-12));

    // with the full [1/d, 1] span, rows below the kink are zero
    std::vector<SweepRow> full = sweep_symmetric_curve(4, 0.25, 1.0, 7);
    CHECK(full[2].K == doctest::Approx(0.5));
    CHECK(full[2].cbar == 0.0);
    CHECK(full[2].cg == 0.0);

    std::vector<SweepRow> qubit = sweep_symmetric_curve(2, 0.5, 1.0, 11);
    CHECK(qubit.back().K == doctest::Approx(1.0));
    CHECK(qubit.back().cbar == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qubit.back().cg == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(throws_code(ErrorCode::KOutOfRange, [] { sweep_symmetric_curve(4, 0.1, 1.0, 5); }));
    CHECK(throws_code(ErrorCode::InvalidArgument,
                      [] { sweep_symmetric_curve(4, 0.75, 1.0, 1); }));
}

TEST_CASE("cbar_g is concave above the kink and dominates the chord") {
    for (std::size_t d = 2; d <= 5; ++d) {
        double kink = (static_cast<double>(d) - 1.0) / static_cast<double>(d);
        std::vector<SweepRow> rows = sweep_symmetric_curve(d, kink, 1.0, 101);
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            double second_diff = rows[i + 1].cbar - 2.0 * rows[i].cbar + rows[i - 1].cbar;
            CHECK(second_diff <= 1e-9);
        }
        // equality with the chord exactly at the kink and at K = 1
        CHECK(std::abs(rows.front().cbar - rows.front().cg) <= 1e-12);
        CHECK(std::abs(rows.back().cbar - rows.back().cg) <= 1e-12);
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            CHECK(rows[i].cbar > rows[i].cg + 1e-6);
        }
    }
}
