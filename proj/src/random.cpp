#include "cohkit/random.hpp"

#include <cmath>

namespace cohkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

RandomStream RandomStream::derive(std::uint64_t stream) const {
    return RandomStream(splitmix64(seed_ ^ splitmix64(stream + 0x51ED2701A9B5D3C7ull)));
}

std::uint64_t RandomStream::next_u64() {
    return gen_();
}

std::uint64_t RandomStream::next_below(std::uint64_t n) {
    require(n > 0, ErrorCode::InvalidArgument, "next_below(0)");
    return next_u64() % n;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

cplx RandomStream::normal_complex() {
    double re = normal();
    double im = normal();
    return cplx(re, im);
}

std::vector<cplx> RandomStream::haar_state(std::size_t dim) {
    require(dim >= 1, ErrorCode::InvalidArgument, "haar_state dimension");
    std::vector<cplx> v(dim);
    double n2 = 0.0;
    while (n2 == 0.0) {
        for (cplx& a : v) {
            a = normal_complex();
        }
        n2 = norm_sq(v);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : v) {
        a *= inv;
    }
    return v;
}

CMatrix RandomStream::haar_isometry(std::size_t rows, std::size_t cols) {
    require(rows >= cols && cols >= 1, ErrorCode::InvalidArgument, "haar_isometry shape");
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = normal_complex();
        }
    }
    // Modified Gram-Schmidt; the positive-real R diagonal makes Q Haar.
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t k = 0; k < c; ++k) {
            cplx proj = 0.0;
            for (std::size_t r = 0; r < rows; ++r) {
                proj += std::conj(m.at(r, k)) * m.at(r, c);
            }
            for (std::size_t r = 0; r < rows; ++r) {
                m.at(r, c) -= proj * m.at(r, k);
            }
        }
        double n2 = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            n2 += std::norm(m.at(r, c));
        }
        require(n2 > 1e-28, ErrorCode::InvalidArgument, "degenerate Gaussian draw");
        double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < rows; ++r) {
            m.at(r, c) *= inv;
        }
    }
    return m;
}

std::vector<std::size_t> RandomStream::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
    }
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = next_below(i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace cohkit
