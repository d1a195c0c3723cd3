#pragma once

#include <cstddef>
#include <vector>

#include "cohkit/types.hpp"

namespace cohkit {

// Dense row-major complex matrix. Sized for the small dimensions this library
// works at (d up to a few hundred); no sparsity, no expression templates.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double off_diagonal_max_abs() const;
    // max |a(i,j) - conj(a(j,i))|, square only
    double hermiticity_defect() const;
    // a <- (a + a^dag)/2 with real diagonal, square only
    void hermitize();

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
    friend CMatrix operator+(CMatrix x, const CMatrix& y) {
        x += y;
        return x;
    }
    friend CMatrix operator-(CMatrix x, const CMatrix& y) {
        x -= y;
        return x;
    }
    friend CMatrix operator*(CMatrix x, cplx s) {
        x *= s;
        return x;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

double max_abs_diff(const CMatrix& x, const CMatrix& y);

std::vector<cplx> mat_vec(const CMatrix& m, const std::vector<cplx>& v);

// |x><y|
CMatrix outer(const std::vector<cplx>& x, const std::vector<cplx>& y);

// <x|y> = sum_i conj(x_i) y_i
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);

double norm_sq(const std::vector<cplx>& v);

}  // namespace cohkit
