#include "cohkit/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cohkit {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-9;

}  // namespace

PureState PureState::validated(std::vector<cplx> amplitudes) {
    require(!amplitudes.empty(), ErrorCode::ZeroVector, "empty amplitude vector");
    require(amplitudes.size() >= 2, ErrorCode::DimensionTooSmall,
            "pure states need dimension >= 2");
    double n2 = norm_sq(amplitudes);
    require(n2 > 0.0, ErrorCode::ZeroVector, "zero amplitude vector");
    require(std::abs(n2 - 1.0) <= kNormTol, ErrorCode::NotNormalized,
            "squared norm " + std::to_string(n2) + " deviates from 1 beyond 1e-10");
    return PureState(std::move(amplitudes));
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    require(!amplitudes.empty(), ErrorCode::ZeroVector, "empty amplitude vector");
    require(amplitudes.size() >= 2, ErrorCode::DimensionTooSmall,
            "pure states need dimension >= 2");
    double n2 = norm_sq(amplitudes);
    require(n2 > 1e-28, ErrorCode::ZeroVector, "cannot normalize a zero vector");
    double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : amplitudes) {
        a *= inv;
    }
    return PureState(std::move(amplitudes));
}

cplx PureState::overlap(const PureState& other) const {
    require(dim() == other.dim(), ErrorCode::DimensionMismatch, "overlap of unequal dimensions");
    return inner(amplitudes_, other.amplitudes_);
}

DensityMatrix PureState::projector() const {
    return DensityMatrix::validated(outer(amplitudes_, amplitudes_));
}

PureState validate_state(std::vector<cplx> raw) {
    return PureState::validated(std::move(raw));
}

PureState normalize(std::vector<cplx> raw) {
    return PureState::normalized(std::move(raw));
}

namespace detail {

void jacobi_hermitian(CMatrix a, int max_sweeps, std::vector<double>& eigenvalues,
                      CMatrix& eigenvectors) {
    require(a.square(), ErrorCode::InvalidArgument, "jacobi on non-square matrix");
    const std::size_t n = a.rows();
    eigenvectors = CMatrix::identity(n);
    const double scale = std::max(1.0, a.max_abs());
    const double off_tol = 1e-15 * scale;

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx apq = a.at(p, q);
                double absb = std::abs(apq);
                if (absb <= off_tol) {
                    continue;
                }
                converged = false;
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                cplx phase = apq / absb;
                double theta = 0.5 * std::atan2(2.0 * absb, aqq - app);
                double c = std::cos(theta);
                double s = std::sin(theta);
                // 2x2 unitary on the (p, q) plane:
                //   U = [[c, s], [-s e^{-i beta}, c e^{-i beta}]]
                cplx u_qp = -s * std::conj(phase);
                cplx u_qq = c * std::conj(phase);
                // columns: A <- A U
                for (std::size_t r = 0; r < n; ++r) {
                    cplx arp = a.at(r, p);
                    cplx arq = a.at(r, q);
                    a.at(r, p) = c * arp + u_qp * arq;
                    a.at(r, q) = s * arp + u_qq * arq;
                }
                // rows: A <- U^dag A
                for (std::size_t col = 0; col < n; ++col) {
                    cplx apc = a.at(p, col);
                    cplx aqc = a.at(q, col);
                    a.at(p, col) = c * apc + std::conj(u_qp) * aqc;
                    a.at(q, col) = s * apc + std::conj(u_qq) * aqc;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
                a.at(q, q) = cplx(a.at(q, q).real(), 0.0);
                // eigenvectors: V <- V U
                for (std::size_t r = 0; r < n; ++r) {
                    cplx vrp = eigenvectors.at(r, p);
                    cplx vrq = eigenvectors.at(r, q);
                    eigenvectors.at(r, p) = c * vrp + u_qp * vrq;
                    eigenvectors.at(r, q) = s * vrp + u_qq * vrq;
                }
            }
        }
    }
    require(converged, ErrorCode::NoConvergence,
            "Jacobi sweeps exhausted before off-diagonal tolerance");

    eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        eigenvalues[i] = a.at(i, i).real();
    }
}

}  // namespace detail

DensityMatrix DensityMatrix::validated(CMatrix entries) {
    require(entries.square(), ErrorCode::InvalidInput, "density matrix must be square");
    require(entries.rows() >= 2, ErrorCode::DimensionTooSmall,
            "density matrices need dimension >= 2");
    require(entries.hermiticity_defect() <= kHermitianTol, ErrorCode::NotHermitian,
            "Hermiticity defect exceeds 1e-10");
    cplx tr = entries.trace();
    require(std::abs(tr - cplx(1.0)) <= kTraceTol, ErrorCode::TraceNotOne,
            "trace deviates from 1 beyond 1e-10");
    entries.hermitize();

    std::vector<double> evs;
    CMatrix vecs;
    detail::jacobi_hermitian(entries, 128, evs, vecs);
    double min_ev = *std::min_element(evs.begin(), evs.end());
    require(min_ev >= kPsdTol, ErrorCode::NotPositiveSemidefinite,
            "smallest eigenvalue " + std::to_string(min_ev) + " below -1e-9");
    return DensityMatrix(std::move(entries));
}

CMatrix Spectrum::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            cplx vk = eigenvectors.at(r, k) * eigenvalues[k];
            if (vk == cplx(0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                m.at(r, c) += vk * std::conj(eigenvectors.at(c, k));
            }
        }
    }
    return m;
}

std::size_t Spectrum::rank(double tol) const {
    std::size_t r = 0;
    for (double ev : eigenvalues) {
        if (ev > tol) {
            ++r;
        }
    }
    return r;
}

std::vector<cplx> Spectrum::eigenvector(std::size_t k) const {
    std::vector<cplx> v(eigenvalues.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        v[r] = eigenvectors.at(r, k);
    }
    return v;
}

Spectrum eig_hermitian(const DensityMatrix& rho, int max_sweeps) {
    std::vector<double> evs;
    CMatrix vecs;
    detail::jacobi_hermitian(rho.entries(), max_sweeps, evs, vecs);

    const std::size_t n = evs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return evs[x] > evs[y]; });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t src = order[k];
        spec.eigenvalues[k] = evs[src];
        // phase fix: largest-modulus component real-positive, ties to lowest index
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t r = 0; r < n; ++r) {
            double m = std::abs(vecs.at(r, src));
            if (m > best + 1e-15) {
                best = m;
                imax = r;
            }
        }
        cplx ph = vecs.at(imax, src);
        cplx rot = (std::abs(ph) > 0.0) ? std::conj(ph) / std::abs(ph) : cplx(1.0);
        for (std::size_t r = 0; r < n; ++r) {
            spec.eigenvectors.at(r, k) = vecs.at(r, src) * rot;
        }
    }
    return spec;
}

DensityMatrix dephase(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = cplx(rho.entry(i, i).real(), 0.0);
    }
    return DensityMatrix::validated(std::move(m));
}

std::size_t dephased_rank(const PureState& psi, double zero_tol) {
    require(zero_tol > 0.0, ErrorCode::InvalidArgument, "zero_tol must be positive");
    std::size_t r = 0;
    for (const cplx& a : psi.amplitudes()) {
        if (std::norm(a) > zero_tol) {
            ++r;
        }
    }
    return r;
}

CMatrix permutation_unitary(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    require(n >= 1, ErrorCode::NotAPermutation, "empty permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t v : perm) {
        require(v < n && !seen[v], ErrorCode::NotAPermutation,
                "permutation is not a bijection on {0..d-1}");
        seen[v] = true;
    }
    CMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        u.at(perm[k], k) = 1.0;
    }
    return u;
}

DensityMatrix apply_channel(const std::vector<CMatrix>& kraus, const DensityMatrix& rho) {
    require(!kraus.empty(), ErrorCode::InvalidArgument, "empty Kraus list");
    const std::size_t n = rho.dim();
    CMatrix completeness(n, n);
    for (const CMatrix& k : kraus) {
        require(k.rows() == n && k.cols() == n, ErrorCode::DimensionMismatch,
                "Kraus operator dimension mismatch");
        completeness += k.adjoint() * k;
    }
    require(max_abs_diff(completeness, CMatrix::identity(n)) <= 1e-8,
            ErrorCode::KrausNotTracePreserving, "sum K^dag K deviates from identity beyond 1e-8");

    CMatrix out(n, n);
    for (const CMatrix& k : kraus) {
        out += k * rho.entries() * k.adjoint();
    }
    cplx tr = out.trace();
    require(std::abs(tr - cplx(1.0)) <= 1e-9, ErrorCode::KrausNotTracePreserving,
            "channel output trace deviates from 1 beyond 1e-9");
    out.hermitize();
    out *= 1.0 / tr.real();
    return DensityMatrix::validated(std::move(out));
}

}  // namespace cohkit
