#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cospec {

enum class ErrorCode {
    NotATree,
    BadIndex,
    DuplicateEdge,
    MalformedGraph6,
    SizeMismatch,
    NonPositiveSigma,
    Undecidable,
    NotCospectrallyRooted,
    CertificationFailure,
    UnknownFormat,
    CacheVersionMismatch,
    CorruptRecord,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cospec
