#include "cohkit/roots.hpp"

#include <algorithm>
#include <cmath>

namespace cohkit {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kCorrectionTol = 1e-13;

// p(z) and p'(z) by Horner.
void eval_poly(const std::vector<cplx>& c, cplx z, cplx& p, cplx& dp) {
    p = c.back();
    dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

}  // namespace

std::vector<cplx> aberth_roots(const std::vector<cplx>& coefficients) {
    require(coefficients.size() >= 2, ErrorCode::InvalidArgument, "degree must be >= 1");
    require(std::abs(coefficients.back()) > 0.0, ErrorCode::InvalidArgument,
            "leading coefficient must be nonzero");
    const std::size_t n = coefficients.size() - 1;

    double max_coeff = 0.0;
    for (const cplx& c : coefficients) {
        max_coeff = std::max(max_coeff, std::abs(c));
    }

    if (n == 1) {
        return {-coefficients[0] / coefficients[1]};
    }

    // Cauchy bound: all roots lie within 1 + max|c_k|/|c_n|.
    double lead = std::abs(coefficients.back());
    double ratio = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        ratio = std::max(ratio, std::abs(coefficients[k]) / lead);
    }
    double bound = 1.0 + ratio;

    // Perturbed circle: irrational angle offset plus per-root radius jitter
    // breaks the symmetric stalls of e.g. z^n - a.
    std::vector<cplx> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        double frac = std::fmod(0.6180339887498949 * static_cast<double>(j + 1), 1.0);
        double radius = bound * (0.65 + 0.3 * frac);
        double angle = 2.0 * 3.14159265358979323846 * (static_cast<double>(j) + 0.3531) /
                       static_cast<double>(n);
        z[j] = radius * cplx(std::cos(angle), std::sin(angle));
    }

    std::vector<cplx> w(n);
    bool converged = false;
    for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
        double max_correction = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            cplx p, dp;
            eval_poly(coefficients, z[j], p, dp);
            if (p == cplx(0.0)) {
                w[j] = 0.0;
                continue;
            }
            if (dp == cplx(0.0)) {
                // stationary point: nudge off it
                w[j] = -cplx(1e-3, 1e-3) * std::max(1.0, std::abs(z[j]));
                continue;
            }
            cplx newton = p / dp;
            cplx repulsion = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) {
                    continue;
                }
                cplx diff = z[j] - z[k];
                if (std::abs(diff) < 1e-100) {
                    diff = cplx(1e-12, 1e-12);
                }
                repulsion += 1.0 / diff;
            }
            cplx denom = 1.0 - newton * repulsion;
            w[j] = (std::abs(denom) > 1e-100) ? newton / denom : newton;
        }
        for (std::size_t j = 0; j < n; ++j) {
            z[j] -= w[j];
            max_correction =
                    std::max(max_correction, std::abs(w[j]) / std::max(1.0, std::abs(z[j])));
        }
        converged = max_correction < kCorrectionTol;
    }
    require(converged, ErrorCode::NoConvergence, "Aberth iteration cap reached");

    // final Newton polish
    for (std::size_t j = 0; j < n; ++j) {
        for (int step = 0; step < 2; ++step) {
            cplx p, dp;
            eval_poly(coefficients, z[j], p, dp);
            if (dp == cplx(0.0) || p == cplx(0.0)) {
                break;
            }
            cplx corr = p / dp;
            if (std::abs(corr) > 0.1 * std::max(1.0, std::abs(z[j]))) {
                break;
            }
            z[j] -= corr;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        cplx p, dp;
        eval_poly(coefficients, z[j], p, dp);
        require(std::abs(p) <= 1e-9 * max_coeff, ErrorCode::NoConvergence,
                "root residual exceeds tolerance");
    }

    std::sort(z.begin(), z.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return z;
}

}  // namespace cohkit
