#pragma once

#include <cstddef>
#include <vector>

#include "cohkit/matrix.hpp"
#include "cohkit/types.hpp"

namespace cohkit {

class DensityMatrix;

// Normalized pure state in the reference basis. Construction validates; the
// stored amplitudes are exactly what was passed in (no silent normalization).
class PureState {
  public:
    static PureState validated(std::vector<cplx> amplitudes);
    static PureState normalized(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    cplx amp(std::size_t i) const { return amplitudes_[i]; }

    // <this|other>
    cplx overlap(const PureState& other) const;
    DensityMatrix projector() const;

  private:
    explicit PureState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {}
    std::vector<cplx> amplitudes_;
};

// Hermitian, PSD, unit-trace complex matrix. The stored entries are exactly
// Hermitian (validated within tolerance, then symmetrized).
class DensityMatrix {
  public:
    static DensityMatrix validated(CMatrix entries);

    std::size_t dim() const { return entries_.rows(); }
    const CMatrix& entries() const { return entries_; }
    cplx entry(std::size_t i, std::size_t j) const { return entries_.at(i, j); }

  private:
    explicit DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {}
    CMatrix entries_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    CMatrix eigenvectors;             // orthonormal columns, phase-fixed

    CMatrix reconstruct() const;
    std::size_t rank(double tol = 1e-12) const;
    std::vector<cplx> eigenvector(std::size_t k) const;
};

PureState validate_state(std::vector<cplx> raw);
PureState normalize(std::vector<cplx> raw);

// Cyclic Jacobi for complex Hermitian matrices. Deterministic: fixed sweep
// order, descending eigenvalues, each eigenvector's largest-modulus component
// made real-positive.
Spectrum eig_hermitian(const DensityMatrix& rho, int max_sweeps = 64);

DensityMatrix dephase(const DensityMatrix& rho);

std::size_t dephased_rank(const PureState& psi, double zero_tol = 1e-10);

// U_g mapping basis vector k to basis vector perm[k] (0-based).
CMatrix permutation_unitary(const std::vector<std::size_t>& perm);

DensityMatrix apply_channel(const std::vector<CMatrix>& kraus, const DensityMatrix& rho);

namespace detail {
// Raw Jacobi on a Hermitian matrix; returns unsorted eigenvalues and the
// accumulated eigenvector columns. Shared by eig_hermitian and validation.
void jacobi_hermitian(CMatrix a, int max_sweeps, std::vector<double>& eigenvalues,
                      CMatrix& eigenvectors);
}  // namespace detail

}  // namespace cohkit
