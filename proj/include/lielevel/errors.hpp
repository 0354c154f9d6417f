#pragma once

#include <stdexcept>
#include <string>

namespace lielevel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input data (non-dominant weight, bad label, malformed argument).
struct DomainError : Error {
    using Error::Error;
};

/// Requested operation is outside the supported families or parameter range.
struct Unsupported : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

/// The input is exceptional (E); no level certificate applies.
struct NotApplicable : Error {
    using Error::Error;
};

/// A certificate check evaluated false, or a dispatch table has no route.
struct CertificationFailed : Error {
    using Error::Error;
};

/// A verification replay found a failing inequality.
struct VerificationFailed : Error {
    using Error::Error;
};

/// A configured resource bound (orbit enumeration cap) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace lielevel
