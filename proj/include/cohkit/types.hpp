#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cohkit {

using cplx = std::complex<double>;

enum class ErrorCode {
    NotNormalized,
    ZeroVector,
    DimensionTooSmall,
    DimensionMismatch,
    NotHermitian,
    TraceNotOne,
    NotPositiveSemidefinite,
    NoConvergence,
    NotAPermutation,
    KrausNotTracePreserving,
    ChannelNotIncoherent,
    StatesParallel,
    RootFindingDiverged,
    ConstantPolynomial,
    KOutOfRange,
    DimensionTooLargeForExact,
    NotAnIsometry,
    RankDeficientSpectrumMismatch,
    LengthMismatch,
    NotTransformable,
    InvalidArgument,
    InvalidInput,
};

constexpr const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::KrausNotTracePreserving: return "KrausNotTracePreserving";
        case ErrorCode::ChannelNotIncoherent: return "ChannelNotIncoherent";
        case ErrorCode::StatesParallel: return "StatesParallel";
        case ErrorCode::RootFindingDiverged: return "RootFindingDiverged";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::DimensionTooLargeForExact: return "DimensionTooLargeForExact";
        case ErrorCode::NotAnIsometry: return "NotAnIsometry";
        case ErrorCode::RankDeficientSpectrumMismatch: return "RankDeficientSpectrumMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotTransformable: return "NotTransformable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "UnknownError";
}

// Single exception type for all library contract violations. `code` identifies
// which contract failed so callers can dispatch without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) {
        fail(code, message);
    }
}

}  // namespace cohkit
