#pragma once

#include <stdexcept>
#include <string>

namespace qxpress {

enum class ErrorCode {
    unknown_profile,
    ambiguous_language,
    no_matching_language,
    invalid_profile,
    encoding,
    lexical,
    io,
    manifest_malformed,
    manifest_missing_file,
    manifest_duplicate,
    unknown_metric,
    duplicate_cell,
};

const char* to_string(ErrorCode code);

/// Every failure surfaced by the library. The code lets front ends map
/// failures onto exit statuses without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qxpress
