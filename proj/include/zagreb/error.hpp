#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zagreb {

enum class ErrorCode {
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EdgeAbsent,
    EmptyGraph,
    MalformedEncoding,
    UnsupportedSize,
    DomainTooSmall,
    DomainError,
    Disconnected,
    Acyclic,
    InvalidParameters,
    NotABlock,
    SizeLimitExceeded,
    PreconditionViolated,
    DegenerateSite,
    InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the offending clause or value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace zagreb
