#include "cohkit/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cohkit/random.hpp"

namespace cohkit {

namespace {

constexpr std::size_t kExactTwirlMaxDim = 8;

double k_from_p(std::size_t d, double p) {
    double dd = static_cast<double>(d);
    return p * (dd - 1.0) / dd + 1.0 / dd;
}

}  // namespace

PureState max_coherent(std::size_t d) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "maximally coherent state needs d >= 2");
    double a = 1.0 / std::sqrt(static_cast<double>(d));
    return PureState::validated(std::vector<cplx>(d, a));
}

SymmetricState SymmetricState::from_mixing(std::size_t dim, double p) {
    require(dim >= 2, ErrorCode::DimensionTooSmall, "symmetric states need d >= 2");
    require(p >= -1e-12 && p <= 1.0 + 1e-12, ErrorCode::InvalidArgument,
            "mixing probability outside [0, 1]");
    return SymmetricState(dim, std::clamp(p, 0.0, 1.0));
}

SymmetricState SymmetricState::from_overlap(std::size_t dim, double overlap) {
    require(dim >= 2, ErrorCode::DimensionTooSmall, "symmetric states need d >= 2");
    double dd = static_cast<double>(dim);
    require(overlap >= 1.0 / dd - 1e-12 && overlap <= 1.0 + 1e-12, ErrorCode::KOutOfRange,
            "overlap outside [1/d, 1]");
    double p = (dd * overlap - 1.0) / (dd - 1.0);
    return SymmetricState(dim, std::clamp(p, 0.0, 1.0));
}

double SymmetricState::overlap() const {
    return k_from_p(dim_, p_);
}

DensityMatrix SymmetricState::materialize() const {
    double dd = static_cast<double>(dim_);
    double diag = p_ / dd + (1.0 - p_) / dd;
    double off = p_ / dd;
    CMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m.at(i, j) = (i == j) ? diag : off;
        }
    }
    return DensityMatrix::validated(std::move(m));
}

DensityMatrix twirl(const DensityMatrix& rho, TwirlMode mode) {
    const std::size_t d = rho.dim();
    CMatrix acc(d, d);
    if (mode.exact) {
        require(d <= kExactTwirlMaxDim, ErrorCode::DimensionTooLargeForExact,
                "exact twirl is capped at d = 8; use sampled mode");
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t count = 0;
        do {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    acc.at(perm[i], perm[j]) += rho.entry(i, j);
                }
            }
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        acc *= 1.0 / static_cast<double>(count);
    } else {
        require(mode.samples >= 1, ErrorCode::InvalidArgument, "sampled twirl needs n >= 1");
        RandomStream rs(mode.seed);
        for (std::size_t s = 0; s < mode.samples; ++s) {
            std::vector<std::size_t> perm = rs.permutation(d);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    acc.at(perm[i], perm[j]) += rho.entry(i, j);
                }
            }
        }
        acc *= 1.0 / static_cast<double>(mode.samples);
    }
    acc.hermitize();
    return DensityMatrix::validated(std::move(acc));
}

double overlap_K(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    cplx sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            sum += rho.entry(i, j);
        }
    }
    cplx k = sum / static_cast<double>(d);
    require(std::abs(k.imag()) <= 1e-12, ErrorCode::InvalidArgument,
            "overlap has a non-vanishing imaginary part; input is not Hermitian");
    return std::clamp(k.real(), 0.0, 1.0);
}

double cbar_g(std::size_t d, double K) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "cbar_g needs d >= 2");
    require(K >= -1e-12 && K <= 1.0 + 1e-12, ErrorCode::KOutOfRange, "K outside [0, 1]");
    K = std::clamp(K, 0.0, 1.0);
    double dd = static_cast<double>(d);
    if (K <= (dd - 1.0) / dd) {
        return 0.0;
    }
    double sk = std::sqrt(K);
    double s1k = std::sqrt(1.0 - K);
    double sd1 = std::sqrt(dd - 1.0);
    double a = (sk - sd1 * s1k) / std::sqrt(dd);
    double b = (sk + s1k / sd1) / std::sqrt(dd);
    double prod = a * std::pow(b, dd - 1.0);
    if (prod <= 0.0) {
        return 0.0;
    }
    return dd * std::pow(prod, 2.0 / dd);
}

double cg_symmetric(std::size_t d, double K) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "cg_symmetric needs d >= 2");
    double dd = static_cast<double>(d);
    require(K >= 1.0 / dd - 1e-12 && K <= 1.0 + 1e-12, ErrorCode::KOutOfRange,
            "K outside [1/d, 1]");
    return std::max(1.0 - dd * (1.0 - K), 0.0);
}

double cg_lower_bound(const DensityMatrix& rho) {
    double k = overlap_K(rho);
    double dd = static_cast<double>(rho.dim());
    return std::max(1.0 - dd * (1.0 - k), 0.0);
}

double cg_lower_bound_with_pretreatment(const DensityMatrix& rho,
                                        const std::vector<CMatrix>& kraus) {
    const std::size_t d = rho.dim();
    // incoherence: each K_n |i><i| K_n^dag must stay diagonal
    for (std::size_t i = 0; i < d; ++i) {
        CMatrix sigma(d, d);
        for (const CMatrix& k : kraus) {
            require(k.rows() == d && k.cols() == d, ErrorCode::DimensionMismatch,
                    "Kraus operator dimension mismatch");
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    sigma.at(r, c) += k.at(r, i) * std::conj(k.at(c, i));
                }
            }
        }
        require(sigma.off_diagonal_max_abs() <= 1e-9, ErrorCode::ChannelNotIncoherent,
                "channel maps a basis state to a coherent state");
    }
    DensityMatrix treated = apply_channel(kraus, rho);
    return std::max(cg_lower_bound(rho), cg_lower_bound(treated));
}

std::vector<SweepRow> sweep_symmetric_curve(std::size_t d, double k_min, double k_max,
                                            std::size_t n_points) {
    require(d >= 2, ErrorCode::DimensionTooSmall, "sweep needs d >= 2");
    double dd = static_cast<double>(d);
    require(k_min >= 1.0 / dd - 1e-12, ErrorCode::KOutOfRange, "K_min below 1/d");
    require(k_max <= 1.0 + 1e-12, ErrorCode::KOutOfRange, "K_max above 1");
    require(k_min < k_max, ErrorCode::KOutOfRange, "K_min must be below K_max");
    require(n_points >= 2, ErrorCode::InvalidArgument, "need at least two grid points");

    std::vector<SweepRow> rows;
    rows.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n_points - 1);
        double k = k_min + t * (k_max - k_min);
        rows.push_back(SweepRow{k, cbar_g(d, k), cg_symmetric(d, k)});
    }
    return rows;
}

}  // namespace cohkit
