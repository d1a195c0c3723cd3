#include "cohkit/roof.hpp"

#include <algorithm>
#include <cmath>

#include "cohkit/parallel.hpp"
#include "cohkit/random.hpp"

namespace cohkit {

namespace {

constexpr double kDropProbability = 1e-14;
constexpr double kPi = 3.14159265358979323846;

// Unnormalized ensemble rows phi_i = sqrt(p_i) psi_i. Left-multiplying the
// row stack by any unitary preserves sum_i phi_i phi_i^dag, so coordinate
// descent over two-row rotations never leaves the decomposition set.
struct EnsembleRows {
    std::vector<std::vector<cplx>> rows;
    std::size_t dim = 0;
};

// p_i * C(psi_i) expressed through the unnormalized row: homogeneity gives
// p * (scale |P(phi/sqrt(p))|^m) = scale |P(phi)|^m p^{1 - hm/2}.
class Objective {
  public:
    Objective(const HomogeneousPolynomial& p, double scale)
        : poly_(p), scale_(scale),
          weight_exponent_(1.0 - 0.5 * static_cast<double>(p.degree()) * p.power()) {}

    double contribution(const std::vector<cplx>& row) const {
        double n2 = norm_sq(row);
        if (n2 <= 1e-30) {
            return 0.0;
        }
        double mag = std::abs(poly_.raw_eval(row));
        if (mag == 0.0) {
            return 0.0;
        }
        double m = poly_.power();
        double v = scale_ * (m == 1.0 ? mag : std::pow(mag, m));
        if (weight_exponent_ != 0.0) {
            v *= std::pow(n2, weight_exponent_);
        }
        return v;
    }

  private:
    const HomogeneousPolynomial& poly_;
    double scale_;
    double weight_exponent_;
};

template <typename F>
double golden_min(F&& f, double lo, double hi, double tol, double& best_x) {
    const double invphi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < 80 && (b - a) > tol; ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    if (f1 <= f2) {
        best_x = x1;
        return f1;
    }
    best_x = x2;
    return f2;
}

class Refiner {
  public:
    Refiner(EnsembleRows& ens, const Objective& obj, const SolverConfig& cfg)
        : ens_(ens), obj_(obj), cfg_(cfg), u_(ens.dim), v_(ens.dim) {
        contrib_.resize(ens_.rows.size());
        for (std::size_t i = 0; i < ens_.rows.size(); ++i) {
            contrib_[i] = obj_.contribution(ens_.rows[i]);
        }
    }

    double total() const {
        double t = 0.0;
        for (double c : contrib_) {
            t += c;
        }
        return t;
    }

    double run() {
        double current = total();
        for (std::size_t sweep = 0; sweep < cfg_.max_sweeps; ++sweep) {
            double before = current;
            for (std::size_t i = 0; i + 1 < ens_.rows.size(); ++i) {
                for (std::size_t j = i + 1; j < ens_.rows.size(); ++j) {
                    current -= optimize_pair(i, j);
                }
            }
            if (before - current < cfg_.value_tolerance) {
                break;
            }
        }
        return current;
    }

  private:
    double pair_value(std::size_t i, std::size_t j, double theta, double phi) {
        const std::vector<cplx>& ri = ens_.rows[i];
        const std::vector<cplx>& rj = ens_.rows[j];
        double c = std::cos(theta);
        double s = std::sin(theta);
        cplx e = std::polar(1.0, phi);
        cplx se = s * e;
        cplx sec = s * std::conj(e);
        for (std::size_t k = 0; k < ens_.dim; ++k) {
            u_[k] = c * ri[k] + se * rj[k];
            v_[k] = -sec * ri[k] + c * rj[k];
        }
        return obj_.contribution(u_) + obj_.contribution(v_);
    }

    // Returns the achieved decrease (0 when no strict improvement exists).
    double optimize_pair(std::size_t i, std::size_t j) {
        double base = contrib_[i] + contrib_[j];
        constexpr int kThetaGrid = 8;
        constexpr int kPhiGrid = 8;
        double best_val = base;
        double best_theta = 0.0;
        double best_phi = 0.0;
        for (int a = 0; a < kThetaGrid; ++a) {
            double theta = -0.5 * kPi + (a + 0.5) * kPi / kThetaGrid;
            for (int b = 0; b < kPhiGrid; ++b) {
                double phi = 2.0 * kPi * b / kPhiGrid;
                double val = pair_value(i, j, theta, phi);
                if (val < best_val) {
                    best_val = val;
                    best_theta = theta;
                    best_phi = phi;
                }
            }
        }
        if (best_val >= base - 1e-15) {
            return 0.0;
        }
        double step_theta = kPi / kThetaGrid;
        double x = best_theta;
        double refined = golden_min(
                [&](double t) { return pair_value(i, j, t, best_phi); }, best_theta - step_theta,
                best_theta + step_theta, cfg_.step_tolerance, x);
        if (refined < best_val) {
            best_val = refined;
            best_theta = x;
        }
        double step_phi = 2.0 * kPi / kPhiGrid;
        refined = golden_min([&](double t) { return pair_value(i, j, best_theta, t); },
                             best_phi - step_phi, best_phi + step_phi, cfg_.step_tolerance, x);
        if (refined < best_val) {
            best_val = refined;
            best_phi = x;
        }
        if (best_val >= base - 1e-15) {
            return 0.0;
        }
        // commit
        double final_val = pair_value(i, j, best_theta, best_phi);
        ens_.rows[i] = u_;
        ens_.rows[j] = v_;
        contrib_[i] = obj_.contribution(ens_.rows[i]);
        contrib_[j] = obj_.contribution(ens_.rows[j]);
        (void)final_val;
        return base - (contrib_[i] + contrib_[j]);
    }

    EnsembleRows& ens_;
    const Objective& obj_;
    const SolverConfig& cfg_;
    std::vector<double> contrib_;
    std::vector<cplx> u_;
    std::vector<cplx> v_;
};

Decomposition rows_to_decomposition(const EnsembleRows& ens) {
    Decomposition dec;
    for (const std::vector<cplx>& row : ens.rows) {
        double p = norm_sq(row);
        if (p < kDropProbability) {
            continue;
        }
        double inv = 1.0 / std::sqrt(p);
        std::vector<cplx> amps(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            amps[k] = row[k] * inv;
        }
        dec.entries.push_back({p, PureState::validated(std::move(amps))});
    }
    return dec;
}

EnsembleRows rows_from_decomposition(const Decomposition& dec, std::size_t n_rows) {
    require(!dec.entries.empty(), ErrorCode::InvalidArgument, "empty decomposition");
    EnsembleRows ens;
    ens.dim = dec.entries.front().state.dim();
    ens.rows.assign(std::max(n_rows, dec.entries.size()),
                    std::vector<cplx>(ens.dim, cplx(0.0)));
    for (std::size_t i = 0; i < dec.entries.size(); ++i) {
        double sq = std::sqrt(std::max(dec.entries[i].probability, 0.0));
        for (std::size_t k = 0; k < ens.dim; ++k) {
            ens.rows[i][k] = sq * dec.entries[i].state.amp(k);
        }
    }
    return ens;
}

}  // namespace

CMatrix Decomposition::reconstruct(std::size_t dim) const {
    CMatrix m(dim, dim);
    for (const Entry& e : entries) {
        require(e.state.dim() == dim, ErrorCode::DimensionMismatch,
                "decomposition entry dimension mismatch");
        for (std::size_t r = 0; r < dim; ++r) {
            cplx w = e.probability * e.state.amp(r);
            for (std::size_t c = 0; c < dim; ++c) {
                m.at(r, c) += w * std::conj(e.state.amp(c));
            }
        }
    }
    return m;
}

double Decomposition::reconstruction_error(const DensityMatrix& rho) const {
    return max_abs_diff(reconstruct(rho.dim()), rho.entries());
}

Decomposition decomposition_from_isometry(const Spectrum& spectrum, const CMatrix& isometry) {
    const std::size_t d = spectrum.eigenvalues.size();
    const std::size_t r = spectrum.rank(1e-12);
    require(isometry.cols() == r, ErrorCode::InvalidArgument,
            "isometry must have one column per nonzero eigenvalue");
    require(isometry.rows() >= r, ErrorCode::NotAnIsometry,
            "isometry needs at least as many rows as columns");
    CMatrix gram = isometry.adjoint() * isometry;
    require(max_abs_diff(gram, CMatrix::identity(r)) <= 1e-9, ErrorCode::NotAnIsometry,
            "columns are not orthonormal within 1e-9");

    EnsembleRows ens;
    ens.dim = d;
    ens.rows.assign(isometry.rows(), std::vector<cplx>(d, cplx(0.0)));
    for (std::size_t i = 0; i < isometry.rows(); ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            cplx w = isometry.at(i, k) * std::sqrt(spectrum.eigenvalues[k]);
            for (std::size_t c = 0; c < d; ++c) {
                ens.rows[i][c] += w * spectrum.eigenvectors.at(c, k);
            }
        }
    }
    return rows_to_decomposition(ens);
}

double average_measure(const Decomposition& dec, const HomogeneousPolynomial& p, double scale) {
    double total = 0.0;
    for (const Decomposition::Entry& e : dec.entries) {
        total += e.probability * evaluate(p, e.state, scale);
    }
    return total;
}

RoofResult minimize_convex_roof(const DensityMatrix& rho, const HomogeneousPolynomial& p,
                                double scale, const SolverConfig& cfg) {
    require(p.dim() == rho.dim(), ErrorCode::DimensionMismatch,
            "polynomial and state dimensions differ");
    require(cfg.restarts >= 1, ErrorCode::InvalidArgument, "need at least one restart");

    Spectrum spectrum = eig_hermitian(rho);
    const std::size_t d = rho.dim();
    const std::size_t r = spectrum.rank(1e-12);
    const std::size_t n = cfg.decomposition_size == 0 ? r + 2 : cfg.decomposition_size;
    require(n >= r, ErrorCode::RankDeficientSpectrumMismatch,
            "decomposition size is below the rank of the state");

    // columns sqrt(lambda_k) v_k
    std::vector<std::vector<cplx>> basis(r, std::vector<cplx>(d));
    for (std::size_t k = 0; k < r; ++k) {
        double w = std::sqrt(spectrum.eigenvalues[k]);
        for (std::size_t c = 0; c < d; ++c) {
            basis[k][c] = w * spectrum.eigenvectors.at(c, k);
        }
    }

    Objective obj(p, scale);
    struct RestartOutcome {
        double value = 0.0;
        EnsembleRows rows;
    };
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    RandomStream master(cfg.seed);
    parallel_for_index(cfg.restarts, cfg.threads, [&](std::size_t restart) {
        RandomStream rs = master.derive(restart);
        CMatrix isometry = rs.haar_isometry(n, r);
        EnsembleRows ens;
        ens.dim = d;
        ens.rows.assign(n, std::vector<cplx>(d, cplx(0.0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < r; ++k) {
                cplx w = isometry.at(i, k);
                for (std::size_t c = 0; c < d; ++c) {
                    ens.rows[i][c] += w * basis[k][c];
                }
            }
        }
        Refiner refiner(ens, obj, cfg);
        outcomes[restart].value = refiner.run();
        outcomes[restart].rows = std::move(ens);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (outcomes[i].value < outcomes[best].value) {
            best = i;
        }
    }
    Decomposition dec = rows_to_decomposition(outcomes[best].rows);
    return RoofResult{average_measure(dec, p, scale), std::move(dec), best};
}

Decomposition local_refine(const Decomposition& dec, const HomogeneousPolynomial& p, double scale,
                           const SolverConfig& cfg) {
    EnsembleRows ens = rows_from_decomposition(dec, dec.entries.size());
    Objective obj(p, scale);
    Refiner refiner(ens, obj, cfg);
    refiner.run();
    return rows_to_decomposition(ens);
}

}  // namespace cohkit
