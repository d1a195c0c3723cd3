#include "cohkit/poly.hpp"

#include <algorithm>
#include <cmath>

#include "cohkit/random.hpp"
#include "cohkit/roots.hpp"

namespace cohkit {

namespace {

constexpr double kWitnessTol = 1e-8;
constexpr double kPi = 3.14159265358979323846;

using ldcplx = std::complex<long double>;

}  // namespace

HomogeneousPolynomial HomogeneousPolynomial::make(std::size_t dim, int degree, double power,
                                                  TermMap terms) {
    require(dim >= 2, ErrorCode::DimensionTooSmall, "polynomial dimension must be >= 2");
    require(degree >= 1, ErrorCode::InvalidArgument, "degree must be >= 1");
    require(power > 0.0, ErrorCode::InvalidArgument, "power must be positive");
    require(!terms.empty(), ErrorCode::InvalidArgument, "polynomial has no terms");
    bool any_nonzero = false;
    for (const auto& [exponents, coeff] : terms) {
        require(exponents.size() == dim, ErrorCode::InvalidArgument,
                "multi-index length must equal dim");
        int sum = 0;
        for (int k : exponents) {
            require(k >= 0, ErrorCode::InvalidArgument, "exponents must be nonnegative");
            sum += k;
        }
        require(sum == degree, ErrorCode::InvalidArgument,
                "every multi-index must sum to the degree");
        if (coeff != cplx(0.0)) {
            any_nonzero = true;
        }
    }
    require(any_nonzero, ErrorCode::InvalidArgument, "all coefficients are zero");
    return HomogeneousPolynomial(dim, degree, power, std::move(terms));
}

HomogeneousPolynomial g_polynomial(std::size_t d) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "G measure needs dimension >= 2");
    HomogeneousPolynomial::TermMap terms;
    terms[std::vector<int>(d, 1)] = 1.0;
    return HomogeneousPolynomial::make(d, static_cast<int>(d), 2.0 / static_cast<double>(d),
                                       std::move(terms));
}

double evaluate(const HomogeneousPolynomial& p, const PureState& psi, double scale) {
    require(p.dim() == psi.dim(), ErrorCode::DimensionMismatch,
            "polynomial and state dimensions differ");
    require(scale > 0.0, ErrorCode::InvalidArgument, "scale must be positive");
    double mag = std::abs(p.raw_eval(psi.amplitudes()));
    if (mag == 0.0) {
        return 0.0;
    }
    double m = p.power();
    return scale * (m == 1.0 ? mag : std::pow(mag, m));
}

double c_l1_pure(const PureState& psi) {
    require(psi.dim() == 2, ErrorCode::DimensionMismatch,
            "l1 polynomial form defined for d=2 only");
    return 2.0 * std::abs(psi.amp(0) * psi.amp(1));
}

cplx UnivariatePoly::eval(cplx w) const {
    cplx v = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        v = v * w + coefficients[i];
    }
    return v;
}

UnivariatePoly superposition_poly(const HomogeneousPolynomial& p, const PureState& psi1,
                                  const PureState& psi2) {
    require(psi1.dim() == psi2.dim(), ErrorCode::DimensionMismatch, "state dimensions differ");
    require(p.dim() == psi1.dim(), ErrorCode::DimensionMismatch,
            "polynomial and state dimensions differ");
    const int h = p.degree();
    const int n = h + 1;
    const std::size_t d = p.dim();

    // Nodes w_j = alpha * u_j with u_j the exact (h+1)-th roots of unity and a
    // fixed irrational phase offset alpha; the offset dodges node collisions
    // with symmetry axes of q.
    const double offset = 0.6180339887498949;
    const cplx alpha = std::polar(1.0, 2.0 * kPi * offset / n);

    std::vector<cplx> samples(n);
    std::vector<cplx> amps(d);
    for (int j = 0; j < n; ++j) {
        cplx w = alpha * std::polar(1.0, 2.0 * kPi * j / n);
        for (std::size_t i = 0; i < d; ++i) {
            amps[i] = psi1.amp(i) + w * psi2.amp(i);
        }
        samples[j] = p.raw_eval(amps);
    }

    // q(alpha u) has coefficients c_k alpha^k; inverse DFT then unwind alpha.
    UnivariatePoly q;
    q.coefficients.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += samples[j] * std::polar(1.0, -2.0 * kPi * j * k / n);
        }
        q.coefficients[k] = acc / (static_cast<double>(n) * std::pow(alpha, k));
    }
    return q;
}

std::vector<cplx> roots(const UnivariatePoly& q) {
    double max_coeff = 0.0;
    for (const cplx& c : q.coefficients) {
        max_coeff = std::max(max_coeff, std::abs(c));
    }
    require(max_coeff > 0.0, ErrorCode::ConstantPolynomial, "all coefficients are zero");

    // strip leading (highest-order) coefficients that vanish up to conditioning
    std::size_t top = q.coefficients.size();
    while (top > 0 && std::abs(q.coefficients[top - 1]) <= 1e-12 * max_coeff) {
        --top;
    }
    require(top > 1, ErrorCode::ConstantPolynomial,
            "polynomial is a constant after trimming; no roots exist");
    std::vector<cplx> c(q.coefficients.begin(), q.coefficients.begin() + top);

    // exact zeros at the origin factor out directly
    std::vector<cplx> out;
    while (c.size() > 1 && c.front() == cplx(0.0)) {
        out.push_back(0.0);
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        std::vector<cplx> rest = aberth_roots(c);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return out;
}

namespace {

// A few Newton steps in extended precision against the exact term-by-term
// evaluation of P(psi1 + w psi2). The interpolated-coefficient derivative is
// accurate enough to steer; the residual is what matters. Rounded-double
// roots leave amplitude residuals ~1e-16 which the fractional powers of the
// measure amplify past the witness tolerance; extended precision buys the
// missing digits.
ldcplx polish_root(const HomogeneousPolynomial& p, const PureState& psi1, const PureState& psi2,
                   const UnivariatePoly& q, cplx root) {
    const std::size_t d = p.dim();
    std::vector<ldcplx> a1(d), a2(d), amps(d);
    for (std::size_t i = 0; i < d; ++i) {
        a1[i] = ldcplx(psi1.amp(i).real(), psi1.amp(i).imag());
        a2[i] = ldcplx(psi2.amp(i).real(), psi2.amp(i).imag());
    }
    ldcplx z(root.real(), root.imag());
    long double best_res = -1.0L;
    ldcplx best_z = z;
    for (int step = 0; step < 8; ++step) {
        for (std::size_t i = 0; i < d; ++i) {
            amps[i] = a1[i] + z * a2[i];
        }
        ldcplx f = p.raw_eval(amps);
        long double res = std::abs(f);
        if (best_res < 0.0L || res < best_res) {
            best_res = res;
            best_z = z;
        }
        if (res == 0.0L) {
            break;
        }
        ldcplx df = 0.0L;
        for (std::size_t k = q.coefficients.size(); k-- > 1;) {
            ldcplx ck(q.coefficients[k].real(), q.coefficients[k].imag());
            df = df * z + ck * static_cast<long double>(k);
        }
        if (std::abs(df) == 0.0L) {
            break;
        }
        z -= f / df;
    }
    return best_z;
}

PureState state_from_root(const PureState& psi1, const PureState& psi2, ldcplx z) {
    const std::size_t d = psi1.dim();
    std::vector<ldcplx> amps(d);
    long double n2 = 0.0L;
    for (std::size_t i = 0; i < d; ++i) {
        amps[i] = ldcplx(psi1.amp(i).real(), psi1.amp(i).imag()) +
                  z * ldcplx(psi2.amp(i).real(), psi2.amp(i).imag());
        n2 += std::norm(amps[i]);
    }
    long double inv = 1.0L / std::sqrt(n2);
    std::vector<cplx> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        ldcplx w = amps[i] * inv;
        out[i] = cplx(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    }
    return PureState::validated(std::move(out));
}

}  // namespace

std::vector<WitnessCandidate> witness_candidates(const HomogeneousPolynomial& p,
                                                 const PureState& psi1, const PureState& psi2,
                                                 double scale) {
    require(psi1.dim() == psi2.dim(), ErrorCode::DimensionMismatch, "state dimensions differ");
    require(p.dim() == psi1.dim(), ErrorCode::DimensionMismatch,
            "polynomial and state dimensions differ");
    double k = std::abs(psi1.overlap(psi2));
    require(k < 1.0 - 1e-9, ErrorCode::StatesParallel,
            "states coincide up to a phase; the superposition family is trivial");

    if (evaluate(p, psi2, scale) <= kWitnessTol) {
        return {WitnessCandidate{std::nullopt, psi2, evaluate(p, psi2, scale)}};
    }

    UnivariatePoly q = superposition_poly(p, psi1, psi2);
    std::vector<cplx> zs;
    try {
        zs = roots(q);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoConvergence) {
            fail(ErrorCode::RootFindingDiverged, e.what());
        }
        throw;
    }

    std::vector<WitnessCandidate> out;
    out.reserve(zs.size());
    for (const cplx& z : zs) {
        ldcplx polished = polish_root(p, psi1, psi2, q, z);
        PureState state = state_from_root(psi1, psi2, polished);
        double value = evaluate(p, state, scale);
        out.push_back(WitnessCandidate{
                cplx(static_cast<double>(polished.real()), static_cast<double>(polished.imag())),
                std::move(state), value});
    }
    return out;
}

std::vector<PureState> zero_coherence_witness(const HomogeneousPolynomial& p,
                                              const PureState& psi1, const PureState& psi2,
                                              double scale) {
    std::vector<WitnessCandidate> candidates = witness_candidates(p, psi1, psi2, scale);
    std::vector<PureState> out;
    for (WitnessCandidate& c : candidates) {
        if (c.value <= kWitnessTol) {
            out.push_back(std::move(c.state));
        }
    }
    require(!out.empty(), ErrorCode::RootFindingDiverged,
            "no superposition root reached the witness tolerance");
    return out;
}

Theorem2Report check_theorem2_vanishing(const HomogeneousPolynomial& p, double scale, int trials,
                                        std::uint64_t rng_seed) {
    require(trials >= 1, ErrorCode::InvalidArgument, "trials must be >= 1");
    const std::size_t d = p.dim();
    RandomStream master(rng_seed);

    Theorem2Report report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        RandomStream rs = master.derive(static_cast<std::uint64_t>(t));
        std::size_t support = 1 + rs.next_below(d - 1);  // proper subset: 1..d-1
        std::vector<std::size_t> order = rs.permutation(d);
        std::vector<cplx> sub = rs.haar_state(support);
        std::vector<cplx> amps(d, 0.0);
        for (std::size_t i = 0; i < support; ++i) {
            amps[order[i]] = sub[i];
        }
        double v = evaluate(p, PureState::validated(std::move(amps)), scale);
        report.max_value = std::max(report.max_value, v);
    }
    report.violation = report.max_value > 1e-8;
    return report;
}

}  // namespace cohkit
