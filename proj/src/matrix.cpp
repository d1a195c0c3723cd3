#include "cohkit/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace cohkit {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m.at(c, r) = std::conj(at(r, c));
        }
    }
    return m;
}

cplx CMatrix::trace() const {
    require(square(), ErrorCode::InvalidArgument, "trace of non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += at(i, i);
    }
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double CMatrix::off_diagonal_max_abs() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c) {
                m = std::max(m, std::abs(at(r, c)));
            }
        }
    }
    return m;
}

double CMatrix::hermiticity_defect() const {
    require(square(), ErrorCode::InvalidArgument, "hermiticity defect of non-square matrix");
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return m;
}

void CMatrix::hermitize() {
    require(square(), ErrorCode::InvalidArgument, "hermitize of non-square matrix");
    for (std::size_t r = 0; r < rows_; ++r) {
        at(r, r) = cplx(at(r, r).real(), 0.0);
        for (std::size_t c = r + 1; c < cols_; ++c) {
            cplx v = 0.5 * (at(r, c) + std::conj(at(c, r)));
            at(r, c) = v;
            at(c, r) = std::conj(v);
        }
    }
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix add");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] += o.a_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix sub");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] -= o.a_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : a_) {
        v *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    require(x.cols_ == y.rows_, ErrorCode::DimensionMismatch, "matrix multiply");
    CMatrix m(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
            cplx xv = x.at(r, k);
            if (xv == cplx(0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < y.cols_; ++c) {
                m.at(r, c) += xv * y.at(k, c);
            }
        }
    }
    return m;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    require(x.rows() == y.rows() && x.cols() == y.cols(), ErrorCode::DimensionMismatch,
            "matrix diff");
    double m = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            m = std::max(m, std::abs(x.at(r, c) - y.at(r, c)));
        }
    }
    return m;
}

std::vector<cplx> mat_vec(const CMatrix& m, const std::vector<cplx>& v) {
    require(m.cols() == v.size(), ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<cplx> out(m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            s += m.at(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

CMatrix outer(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    CMatrix m(x.size(), y.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t c = 0; c < y.size(); ++c) {
            m.at(r, c) = x[r] * std::conj(y[c]);
        }
    }
    return m;
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    require(x.size() == y.size(), ErrorCode::DimensionMismatch, "inner product");
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

double norm_sq(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& a : v) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace cohkit
